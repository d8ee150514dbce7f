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

#include "circle_orbit/polyclass.hpp"

#include <algorithm>
#include <map>

namespace circle_orbit {

RationalInterval modulus_squared(const ComplexBox& box) {
  return square(box.re) + square(box.im);
}

ComplexBox evaluate(const std::vector<Integer>& coeffs, const ComplexBox& root) {
  ComplexBox acc = ComplexBox::point(0, 0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * root;
    acc.re = acc.re + RationalInterval::point(Rational(*it));
  }
  return acc;
}

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::Cyclotomic: return "Cyclotomic";
    case ClassTag::SalemLike: return "SalemLike";
    case ClassTag::CircleRoot: return "CircleRoot";
    case ClassTag::RealOnly: return "RealOnly";
    case ClassTag::NoCircleRoot: return "NoCircleRoot";
    case ClassTag::Reducible: return "Reducible";
  }
  return "?";
}

std::string PolyClassification::label() const {
  if (tag == ClassTag::Cyclotomic && cyclotomic_index)
    return "Cyclotomic(" + std::to_string(*cyclotomic_index) + ")";
  return to_string(tag);
}

bool is_reciprocal(const IntPolynomial& q) {
  if (q.is_zero()) throw InvalidInput("reciprocity of the zero polynomial");
  const auto& c = q.coeffs();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

bool is_irreducible_quartic(const IntPolynomial& q) {
  if (q.degree() != 4) throw InvalidInput("is_irreducible_quartic expects degree 4");
  if (q.leading() != 1) throw InvalidInput("is_irreducible_quartic expects a monic polynomial");
  if (q.coeff(0) == 0) return false;
  if (!rational_roots(q).empty()) return false;
  Integer bound = 0;
  for (int i = 0; i < 4; ++i) bound = std::max(bound, Integer(abs(q.coeff(static_cast<std::size_t>(i)))));
  bound += 1;
  // z^2 + a z + b with b | q(0); its roots are roots of q, so |a| <= 2R.
  Integer q0 = abs(q.coeff(0));
  for (Integer b = 1; b <= q0; ++b) {
    if (q0 % b != 0) continue;
    for (int s : {-1, 1}) {
      Integer bb = s * b;
      for (Integer a = -2 * bound; a <= 2 * bound; ++a) {
        if (divide_monic(q, IntPolynomial{bb, a, Integer(1)}).remainder.is_zero()) return false;
      }
    }
  }
  return true;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

IntPolynomial cyclotomic_memo(unsigned n, std::map<unsigned, IntPolynomial>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPolynomial acc = IntPolynomial::monomial(Integer(1), n) - IntPolynomial{1};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto division = divide_monic(acc, cyclotomic_memo(d, memo));
    if (!division.remainder.is_zero()) throw InvariantViolation("cyclotomic recursion left a remainder");
    acc = division.quotient;
  }
  memo.emplace(n, acc);
  return acc;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw InvalidInput("cyclotomic index must be positive");
  std::map<unsigned, IntPolynomial> memo;
  return cyclotomic_memo(n, memo);
}

namespace {

// phi(n) >= sqrt(n / 2), so phi(n) <= k forces n <= 2 k^2.
unsigned cyclotomic_search_limit(int degree) {
  return static_cast<unsigned>(2 * degree * degree + 2);
}

}  // namespace

std::optional<unsigned> cyclotomic_divisor(const IntPolynomial& q) {
  if (q.is_zero()) throw InvalidInput("cyclotomic divisor of the zero polynomial");
  if (q.degree() < 1) return std::nullopt;
  std::map<unsigned, IntPolynomial> memo;
  unsigned limit = cyclotomic_search_limit(q.degree());
  for (unsigned n = 1; n <= limit; ++n) {
    if (euler_phi(n) > static_cast<unsigned>(q.degree())) continue;
    if (divide_monic(q, cyclotomic_memo(n, memo)).remainder.is_zero()) return n;
  }
  return std::nullopt;
}

std::optional<unsigned> cyclotomic_index(const IntPolynomial& q) {
  if (q.degree() < 1) return std::nullopt;
  std::map<unsigned, IntPolynomial> memo;
  unsigned limit = cyclotomic_search_limit(q.degree());
  for (unsigned n = 1; n <= limit; ++n) {
    if (euler_phi(n) != static_cast<unsigned>(q.degree())) continue;
    if (cyclotomic_memo(n, memo) == q) return n;
  }
  return std::nullopt;
}

IntPolynomial w_expand(const IntPolynomial& w_poly, int d) {
  if (w_poly.degree() > d) throw InvalidInput("w_expand: deg W exceeds d");
  IntPolynomial result;
  const IntPolynomial z2_plus_1{1, 0, 1};
  IntPolynomial power{1};  // (z^2 + 1)^i
  for (int i = 0; i <= w_poly.degree(); ++i) {
    result = result + w_poly.coeff(static_cast<std::size_t>(i)) *
                          (power * IntPolynomial::monomial(Integer(1), static_cast<std::size_t>(d - i)));
    power = power * z2_plus_1;
  }
  return result;
}

IntPolynomial w_reduce(const IntPolynomial& q) {
  if (!is_reciprocal(q)) throw InvalidInput("w_reduce needs a reciprocal polynomial");
  if (q.degree() % 2 != 0) throw InvalidInput("w_reduce needs even degree");
  int d = q.degree() / 2;
  // z^j + z^-j = T_j(w) with T_0 = 2, T_1 = w, T_j = w T_{j-1} - T_{j-2}.
  const IntPolynomial w{0, 1};
  IntPolynomial t_prev{2};
  IntPolynomial t_cur = w;
  IntPolynomial result{q.coeff(static_cast<std::size_t>(d))};
  for (int j = 1; j <= d; ++j) {
    result = result + q.coeff(static_cast<std::size_t>(d + j)) * t_cur;
    IntPolynomial next = w * t_cur - t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(next);
  }
  if (w_expand(result, d) != q) throw InvariantViolation("w_reduce round trip failed");
  return result;
}

namespace {

enum class Side { Inside, Outside };

// Refines an isolating interval of a W-root until it sits strictly inside
// (-2, 2) or strictly outside [-2, 2]. W(+-2) != 0 is required.
std::pair<Side, RationalInterval> locate_w_root(const IntPolynomial& w_sf, RationalInterval iv) {
  const Rational two = 2;
  for (;;) {
    if (iv.inside(-two, two)) return {Side::Inside, iv};
    if (iv.hi < -two || iv.lo > two) return {Side::Outside, iv};
    iv = refine_root(w_sf, iv, iv.width() / 2);
  }
}

ComplexBox box_from_w_root(const IntPolynomial& w_sf, RationalInterval iv, const Rational& width) {
  Rational target = 2 * width;
  for (;;) {
    iv = refine_root(w_sf, iv, target);
    RationalInterval re = Rational(1, 2) * iv;
    RationalInterval sq = square(re);
    RationalInterval one_minus{1 - sq.hi, 1 - sq.lo};
    RationalInterval im = interval_sqrt(one_minus, width / 4);
    if (re.width() <= width && im.width() <= width) return {re, im};
    target /= 4;
  }
}

}  // namespace

std::vector<ComplexBox> circle_embedding(const IntPolynomial& q, const Rational& width) {
  if (sgn(width) <= 0) throw InvalidInput("embedding width must be positive");
  IntPolynomial w_poly = w_reduce(q);
  std::vector<ComplexBox> boxes;
  if (w_poly.degree() < 1) return boxes;
  IntPolynomial w_sf = squarefree_part(w_poly);
  // Roots w = +-2 give the real roots z = +-1, never circle pairs.
  IntPolynomial w_clean = w_sf;
  for (int s : {-2, 2}) {
    if (w_clean.evaluate(Rational(s)) == 0)
      w_clean = divide_monic(w_clean, IntPolynomial{Integer(-s), Integer(1)}).quotient;
  }
  if (w_clean.degree() < 1) return boxes;
  for (const auto& iv : isolate_real_roots(w_clean, Rational(1))) {
    auto [side, located] = locate_w_root(w_clean, iv);
    if (side == Side::Inside) boxes.push_back(box_from_w_root(w_clean, located, width));
  }
  return boxes;
}

unsigned cyclotomic_unit_degree(unsigned m) {
  if (m == 0) throw InvalidInput("cyclotomic_unit_degree expects m >= 1");
  return m % 2 == 0 ? m : 2 * m;
}

Irreducibility irreducibility(const IntPolynomial& q) {
  if (q.is_zero()) throw InvalidInput("irreducibility of the zero polynomial");
  int deg = q.degree();
  if (deg <= 0) return Irreducibility::Reducible;
  if (deg == 1) return Irreducibility::Irreducible;
  if (!rational_roots(q).empty()) return Irreducibility::Reducible;
  if (deg <= 3) return Irreducibility::Irreducible;
  if (deg == 4 && q.leading() == 1)
    return is_irreducible_quartic(q) ? Irreducibility::Irreducible : Irreducibility::Reducible;
  if (cyclotomic_divisor(q)) return Irreducibility::Reducible;
  if (deg % 2 == 0 && is_reciprocal(q) && !rational_roots(w_reduce(q)).empty())
    return Irreducibility::Reducible;
  return Irreducibility::Unknown;
}

PolyClassification classify(const IntPolynomial& q, const Rational& width) {
  if (q.degree() < 1 || q.degree() > 8) throw InvalidInput("classify expects 1 <= degree <= 8");
  if (q.leading() != 1) throw InvalidInput("classify expects a monic polynomial");
  if (abs(q.coeff(0)) != 1) throw InvalidInput("classify expects |q(0)| = 1");

  PolyClassification out;
  out.real_roots = isolate_real_roots(q, width);
  bool reciprocal_even = is_reciprocal(q) && q.degree() % 2 == 0;
  if (reciprocal_even) out.circle_roots = circle_embedding(q, width);

  if (auto n = cyclotomic_index(q)) {
    out.tag = ClassTag::Cyclotomic;
    out.cyclotomic_index = n;
    return out;
  }
  Irreducibility irr = irreducibility(q);
  if (irr == Irreducibility::Reducible) {
    out.tag = ClassTag::Reducible;
    return out;
  }
  out.irreducibility_certified = irr == Irreducibility::Irreducible;

  std::size_t deg = static_cast<std::size_t>(q.degree());
  std::size_t circle = 2 * out.circle_roots.size();
  if (circle == 0) {
    out.tag = out.real_roots.size() == deg ? ClassTag::RealOnly : ClassTag::NoCircleRoot;
    return out;
  }
  if (circle == deg)
    throw InvariantViolation("irreducible polynomial with all roots on the circle is not cyclotomic");
  if (circle + 2 == deg && out.real_roots.size() == 2 && sgn(out.real_roots[0].lo) > 0) {
    out.tag = ClassTag::SalemLike;
    return out;
  }
  out.tag = ClassTag::CircleRoot;
  return out;
}

}  // namespace circle_orbit
