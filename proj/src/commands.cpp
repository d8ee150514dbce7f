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

#include "circle_orbit/commands.hpp"

#include <sstream>

namespace circle_orbit {

TableFormat parse_table_format(std::string_view name) {
  if (name == "json") return TableFormat::Json;
  if (name == "csv") return TableFormat::Csv;
  throw InvalidInput("format must be json or csv here, got '" + std::string(name) + "'");
}

Rational default_precision() { return Rational(1, 1000000); }

std::string to_decimal(const Rational& x, int digits) {
  if (digits < 0) throw InvalidInput("decimal digits must be nonnegative");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // Round half away from zero.
  Rational scaled = abs(x) * scale;
  Integer q = (2 * scaled.get_num() + scaled.get_den()) / (2 * scaled.get_den());
  std::string s = q.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (x < 0 && q != 0 ? "-" : "") + s;
}

namespace {

template <class F>
Json or_null(F&& f) {
  try {
    return f();
  } catch (const InvalidInput&) {
    return nullptr;
  }
}

Json decimal_interval(const RationalInterval& iv, int digits) {
  return Json::array({to_decimal(iv.lo, digits), to_decimal(iv.hi, digits)});
}

Json irreducible_json(const IntPolynomial& q) {
  switch (irreducibility(q)) {
    case Irreducibility::Irreducible: return true;
    case Irreducibility::Reducible: return false;
    case Irreducibility::Unknown: return "unknown";
  }
  return nullptr;
}

Json optional_index(const std::optional<unsigned>& n) { return n ? Json(*n) : Json("none"); }

Json point_json(const LatticePoint3& p) { return Json::array({p[0], p[1], p[2]}); }

}  // namespace

std::string cmd_analyze(const IntPolynomial& q, const Rational& width, int decimals) {
  if (q.degree() < 1) throw InvalidInput("analyze needs a polynomial of degree >= 1");
  if (width <= 0) throw InvalidInput("precision must be positive");
  Json j;
  j["polynomial"] = to_json(q);
  j["pretty"] = to_pretty_string(q);
  j["degree"] = q.degree();
  j["reciprocal"] = is_reciprocal(q);
  j["irreducible"] = or_null([&] { return irreducible_json(q); });
  j["cyclotomic"] = or_null([&] { return optional_index(cyclotomic_index(q)); });
  j["cyclotomic_divisor"] = or_null([&] { return optional_index(cyclotomic_divisor(q)); });
  std::optional<PolyClassification> c;
  try {
    c = classify(q, width);
  } catch (const InvalidInput&) {
  }
  j["class"] = c ? Json(c->label()) : Json(nullptr);
  j["positive_real_roots"] = real_root_count(q, Rational(0), std::nullopt);
  j["negative_real_roots"] = real_root_count(q, std::nullopt, Rational(0));
  j["p_at_1"] = q.evaluate(Integer(1)).get_str();
  j["descartes_sign_changes"] = descartes_sign_changes(q);
  std::vector<RationalInterval> real = c ? c->real_roots : isolate_real_roots(q, width);
  Json real_json = Json::array();
  for (const auto& iv : real) real_json.push_back(to_json(iv));
  j["real_roots"] = real_json;
  std::optional<std::vector<ComplexBox>> circle;
  if (c) {
    circle = c->circle_roots;
  } else {
    try {
      circle = circle_embedding(q, width);
    } catch (const InvalidInput&) {
    }
  }
  if (circle) {
    Json boxes = Json::array();
    for (const auto& b : *circle) boxes.push_back(to_json(b));
    j["circle_roots"] = boxes;
  } else {
    j["circle_roots"] = nullptr;
  }
  j["w_polynomial"] = or_null([&] { return to_json(w_reduce(q)); });
  if (decimals > 0) {
    Json rd = Json::array();
    for (const auto& iv : real) rd.push_back(decimal_interval(iv, decimals));
    j["real_roots_decimal"] = rd;
    if (circle) {
      Json cd = Json::array();
      for (const auto& b : *circle) {
        Json box;
        box["re"] = decimal_interval(b.re, decimals);
        box["im"] = decimal_interval(b.im, decimals);
        cd.push_back(box);
      }
      j["circle_roots_decimal"] = cd;
    }
  }
  return dump(j);
}

std::string cmd_orbit(const IntPolynomial& q, long long m_min, long long m_max, const EnumerationOptions& options) {
  if (m_min > m_max) throw InvalidInput("m_min must not exceed m_max");
  if (static_cast<unsigned long long>(m_max - m_min) + 1 > options.cap)
    throw ResourceLimit("orbit of " + std::to_string(m_max - m_min + 1) + " powers exceeds cap " +
                        std::to_string(options.cap));
  ModulusPtr modulus = RingModulus::create(q);
  return dump(to_json(orbit(modulus, m_min, m_max)));
}

std::string cmd_graph(const GroupSpec& spec, long long bound, ExportFormat format, const EnumerationOptions& options) {
  return render_graph(build_graph(spec, bound, options), spec, format);
}

std::string cmd_circle_points(const GroupSpec& spec, long long bound, ExportFormat format,
                              const EnumerationOptions& options) {
  return render_points(enumerate_circle_points(spec, bound, options), bound, spec, format);
}

std::string cmd_rank3(const InnerProductTriple& t, const std::vector<long long>& schedule,
                      const EnumerationOptions& options) {
  return dump(to_json(rank3_report(t, schedule, options)));
}

namespace {

struct ScanRow {
  long long a = 0, b = 0;
  IntPolynomial q;
  std::string label;
  std::vector<RationalInterval> real_roots;
  std::size_t circle_pairs = 0;
  bool orbit_distinct = false;
};

constexpr long long kScanOrbitRange = 25;

ScanRow scan_row(long long a, long long b, const Rational& width) {
  ScanRow row;
  row.a = a;
  row.b = b;
  row.q = IntPolynomial{1, a, b, a, 1};
  PolyClassification c = classify(row.q, width);
  row.label = c.label();
  row.real_roots = c.real_roots;
  // Reducible moduli skip the classification's root data; recompute it.
  if (c.tag == ClassTag::Reducible) {
    row.real_roots = isolate_real_roots(row.q, width);
    row.circle_pairs = circle_embedding(row.q, width).size();
  } else {
    row.circle_pairs = c.circle_roots.size();
  }
  row.orbit_distinct = orbit(RingModulus::create(row.q), -kScanOrbitRange, kScanOrbitRange).distinct;
  return row;
}

std::string intervals_cell(const std::vector<RationalInterval>& v) {
  std::string s;
  for (const auto& iv : v) {
    if (!s.empty()) s += " ";
    s += "[" + to_string(iv.lo) + ";" + to_string(iv.hi) + "]";
  }
  return s;
}

}  // namespace

std::string cmd_scan(long long bound, const Rational& width, TableFormat format, const EnumerationOptions& options) {
  if (bound < 0) throw InvalidInput("scan bound must be nonnegative");
  if (width <= 0) throw InvalidInput("precision must be positive");
  check_box_size(bound, 2, options.cap);
  std::vector<ScanRow> rows;
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = -bound; b <= bound; ++b) rows.push_back(scan_row(a, b, width));

  if (format == TableFormat::Csv) {
    std::ostringstream out;
    out << "a,b,polynomial,class,real_roots,real_root_intervals,circle_pairs,orbit_distinct\n";
    for (const auto& r : rows) {
      out << r.a << ',' << r.b << ",\"" << to_pretty_string(r.q) << "\"," << r.label << ',' << r.real_roots.size()
          << ",\"" << intervals_cell(r.real_roots) << "\"," << r.circle_pairs << ','
          << (r.orbit_distinct ? "true" : "false") << '\n';
    }
    return out.str();
  }
  Json j;
  j["bound"] = bound;
  j["orbit_range"] = Json::array({-kScanOrbitRange, kScanOrbitRange});
  Json list = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["a"] = r.a;
    row["b"] = r.b;
    row["polynomial"] = to_json(r.q);
    row["class"] = r.label;
    Json real = Json::array();
    for (const auto& iv : r.real_roots) real.push_back(to_json(iv));
    row["real_roots"] = real;
    row["circle_pairs"] = r.circle_pairs;
    row["orbit_distinct"] = r.orbit_distinct;
    list.push_back(row);
  }
  j["rows"] = list;
  return dump(j);
}

std::string cmd_egyptian(long long bound, TableFormat format, const EnumerationOptions& options) {
  if (bound < 1) throw InvalidInput("egyptian bound must be >= 1");
  check_box_size(bound, 3, options.cap);
  struct Hit {
    LatticePoint3 p;
    EgyptianParam e;
  };
  std::vector<Hit> hits;
  for (long long x = -bound; x <= bound; ++x)
    for (long long y = -bound; y <= bound; ++y)
      for (long long z = -bound; z <= bound; ++z) {
        if (x == 0 || y == 0 || z == 0) continue;
        // 1/x + 1/y + 1/z = 0  <=>  yz + xz + xy = 0
        if (y * z + x * z + x * y != 0) continue;
        hits.push_back({{x, y, z}, egyptian_parametrize(x, y, z)});
      }
  if (format == TableFormat::Csv) {
    std::ostringstream out;
    out << "x,y,z,d,r,s,t\n";
    for (const auto& h : hits)
      out << h.p[0] << ',' << h.p[1] << ',' << h.p[2] << ',' << h.e.d << ',' << h.e.r << ',' << h.e.s << ','
          << h.e.t << '\n';
    return out.str();
  }
  Json j;
  j["bound"] = bound;
  j["count"] = hits.size();
  Json list = Json::array();
  for (const auto& h : hits) {
    Json row;
    row["point"] = point_json(h.p);
    row["param"] = to_json(h.e);
    list.push_back(row);
  }
  j["solutions"] = list;
  return dump(j);
}

std::string cmd_egyptian_point(long long x, long long y, long long z) {
  Json j;
  j["point"] = point_json({x, y, z});
  j["square_identity"] = check_square_identity(x, y, z);
  j["param"] = to_json(egyptian_parametrize(x, y, z));
  return dump(j);
}

std::string cmd_case_polys(const std::array<Integer, 3>& abc, const std::array<Rational, 3>& base) {
  CasePolynomials c = build_case_polynomials(abc, base);
  Json j = to_json(c);
  j["p1_pretty"] = to_pretty_string(c.p1, "lambda");
  j["p2_pretty"] = to_pretty_string(c.p2, "lambda");
  if (c.p1.degree() == 3) {
    auto rho = rational_double_root(c.p1);
    j["double_root"] = rho ? Json(to_string(*rho)) : Json("none");
  } else {
    j["double_root"] = "n/a";
  }
  return dump(j);
}

std::string cmd_case_polys(const InnerProductTriple& t, long long bound, const EnumerationOptions& options) {
  SolutionSet set = enumerate_solutions(t, bound, options);
  SpanClassification span = span_classify(set);
  if (span.dimension != 2)
    throw InvalidInput("solution span has dimension " + std::to_string(span.dimension) +
                       "; case polynomials need dimension 2");
  std::array<Integer, 3> abc = solve_abc(set);
  std::array<Rational, 3> base = case3_base_point(t.n, span.basis_points);
  return cmd_case_polys(abc, base);
}

}  // namespace circle_orbit
