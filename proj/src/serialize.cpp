/*
   Copyright 2026 The circle-orbit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "circle_orbit/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace circle_orbit {

Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

Json to_json(const RatPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RationalInterval& iv) { return Json::array({to_string(iv.lo), to_string(iv.hi)}); }

Json to_json(const ComplexBox& box) {
  Json j;
  j["re"] = to_json(box.re);
  j["im"] = to_json(box.im);
  return j;
}

Json to_json(const PolyClassification& c) {
  Json j;
  j["tag"] = c.label();
  j["irreducibility_certified"] = c.irreducibility_certified;
  Json real = Json::array();
  for (const auto& iv : c.real_roots) real.push_back(to_json(iv));
  j["real_roots"] = real;
  Json circle = Json::array();
  for (const auto& b : c.circle_roots) circle.push_back(to_json(b));
  j["circle_roots"] = circle;
  return j;
}

Json to_json(const RingElement& e) {
  Json j;
  j["modulus"] = to_json(e.modulus()->polynomial());
  Json coeffs = Json::array();
  for (const auto& c : e.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = coeffs;
  return j;
}

Json to_json(const Orbit& o) {
  Json j;
  if (!o.elements.empty()) j["modulus"] = to_json(o.elements.front().modulus()->polynomial());
  j["m_min"] = o.m_min;
  j["m_max"] = o.m_min + static_cast<long long>(o.elements.size()) - 1;
  j["distinct"] = o.distinct;
  Json elements = Json::array();
  long long m = o.m_min;
  for (const auto& e : o.elements) {
    Json row;
    row["m"] = m++;
    Json coeffs = Json::array();
    for (const auto& c : e.coeffs()) coeffs.push_back(c.get_str());
    row["coeffs"] = coeffs;
    CircleVerdict v = on_unit_circle(e);
    row["on_unit_circle"] = v.on_circle;
    if (!v.exact) row["soundness"] = "sufficient condition only";
    elements.push_back(row);
  }
  j["elements"] = elements;
  return j;
}

Json to_json(const QuadExtScalar& s) {
  return Json::array({to_string(s.rational_part()), to_string(s.surd_part())});
}

Json to_json(const InnerProductTriple& t) {
  Json j;
  j["D"] = t.radicand().get_str();
  j["alpha"] = to_json(t.alpha);
  j["beta"] = to_json(t.beta);
  j["gamma"] = to_json(t.gamma);
  j["n"] = t.n;
  return j;
}

Json to_json(const EgyptianParam& e) {
  Json j;
  j["d"] = e.d.get_str();
  j["r"] = e.r.get_str();
  j["s"] = e.s.get_str();
  j["t"] = e.t.get_str();
  return j;
}

Json to_json(const CasePolynomials& c) {
  Json j;
  j["abc"] = Json::array({c.abc[0].get_str(), c.abc[1].get_str(), c.abc[2].get_str()});
  j["base"] = Json::array({to_string(c.base[0]), to_string(c.base[1]), to_string(c.base[2])});
  j["p1"] = to_json(c.p1);
  j["p2"] = to_json(c.p2);
  j["derivative_identity"] = (Rational(2) * c.p2 + c.p1.derivative()).is_zero();
  return j;
}

Json to_json(const Rank3Report& r) {
  Json j;
  j["triple"] = to_json(r.triple);
  j["n"] = r.triple.n;
  j["regime"] = to_string(r.regime);
  Json schedule = Json::array(), counts = Json::array(), nonzero = Json::array(), cases = Json::array();
  for (const auto& s : r.steps) {
    schedule.push_back(s.bound);
    counts.push_back(s.count);
    nonzero.push_back(s.nonzero_count);
    cases.push_back(to_string(s.span));
  }
  j["schedule"] = schedule;
  j["counts"] = counts;
  j["nonzero_counts"] = nonzero;
  j["cases"] = cases;
  j["case"] = to_string(r.final_case);
  if (r.case1_solution) {
    const auto& s = *r.case1_solution;
    j["case1_solution"] = Json::array({to_string(s[0]), to_string(s[1]), to_string(s[2])});
  }
  if (r.case3) {
    j["abc"] = Json::array({r.case3->abc[0].get_str(), r.case3->abc[1].get_str(), r.case3->abc[2].get_str()});
    j["base"] = Json::array(
        {to_string(r.case3->base[0]), to_string(r.case3->base[1]), to_string(r.case3->base[2])});
    j["p1"] = to_json(r.case3->p1);
    j["p2"] = to_json(r.case3->p2);
    j["double_root"] = r.double_root ? to_string(*r.double_root) : "none";
  } else {
    j["abc"] = Json::array();
    j["p1"] = Json::array();
    j["p2"] = Json::array();
    j["double_root"] = "n/a";
  }
  j["stabilized"] = r.stabilized;
  j["verdict"] = r.verdict;
  return j;
}

namespace {

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InvalidInput("expected an integer, got " + j.dump());
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be a JSON array");
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  IntPolynomial p(std::move(coeffs));
  if (p.is_zero()) throw InvalidInput("zero polynomial");
  return p;
}

IntPolynomial parse_polynomial(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw InvalidInput("empty polynomial");
  if (s.front() == '[') return polynomial_from_json(parse_json(s));
  std::vector<Integer> coeffs;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) coeffs.push_back(parse_integer(trim(item)));
  IntPolynomial p(std::move(coeffs));
  if (p.is_zero()) throw InvalidInput("zero polynomial");
  return p;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected a rational string, got " + j.dump());
}

QuadExtScalar scalar_from_json(const Json& j, const Integer& radicand) {
  if (j.is_array()) {
    if (j.size() != 2) throw InvalidInput("scalar arrays are [rational, surd]");
    Rational a = rational_from_json(j[0]);
    Rational b = rational_from_json(j[1]);
    if (b != 0 && radicand == 0) throw InvalidInput("surd part requires \"D\"");
    return radicand == 0 ? QuadExtScalar(a) : QuadExtScalar(a, b, radicand);
  }
  Rational a = rational_from_json(j);
  return radicand == 0 ? QuadExtScalar(a) : QuadExtScalar(a, 0, radicand);
}

InnerProductTriple triple_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("triple must be a JSON object");
  for (const char* key : {"alpha", "beta", "gamma"})
    if (!j.contains(key)) throw InvalidInput(std::string("triple is missing \"") + key + "\"");
  Integer radicand = j.contains("D") ? integer_from_json(j["D"]) : Integer(0);
  InnerProductTriple t;
  t.alpha = scalar_from_json(j["alpha"], radicand);
  t.beta = scalar_from_json(j["beta"], radicand);
  t.gamma = scalar_from_json(j["gamma"], radicand);
  if (j.contains("n")) {
    Integer n = integer_from_json(j["n"]);
    if (n < 1 || !n.fits_slong_p()) throw InvalidInput("n must be a positive machine integer");
    t.n = n.get_si();
  }
  return t;
}

InnerProductTriple parse_triple(std::string_view text) { return triple_from_json(parse_json(text)); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace circle_orbit
