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

#ifndef CIRCLE_ORBIT_EXACT_HPP
#define CIRCLE_ORBIT_EXACT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circle_orbit/errors.hpp"

namespace circle_orbit {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: gcd(num, den) = 1, den > 0

// long long is not a GMP constructor argument; long is 64-bit on LP64.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

int sign(const Integer& x);
int sign(const Rational& x);

/// "num/den" with den > 0; integers are rendered as "k/1".
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);
/// Accepts "k", "-k", "num/den" and plain decimals such as "1.722".
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Dense univariate polynomial; coeffs()[i] is the coefficient of z^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  Polynomial(std::initializer_list<Coeff> coeffs)
      : coeffs_(coeffs.begin(), coeffs.end()) {
    trim();
  }
  Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial monomial(const Coeff& c, std::size_t exponent) {
    std::vector<Coeff> v(exponent + 1, Coeff(0));
    v[exponent] = c;
    return Polynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  Coeff coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Coeff(0);
  }
  const Coeff& leading() const { return coeffs_.back(); }

  template <class Value>
  Value evaluate(const Value& x) const {
    Value acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += Value(*it);
    }
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Coeff(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// p(-z).
  Polynomial negate_variable() const {
    std::vector<Coeff> v = coeffs_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Polynomial(std::move(v));
  }

  Polynomial operator-() const {
    std::vector<Coeff> v = coeffs_;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& p) {
    std::vector<Coeff> v = p.coeffs_;
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);
/// Clears denominators and removes the content; sign of the leading
/// coefficient is kept.
IntPolynomial primitive_part(const RatPolynomial& p);

/// Human-readable form, highest degree first, variable name configurable.
template <class Coeff>
std::string to_pretty_string(const Polynomial<Coeff>& p, std::string_view var = "z");

struct DivisionResult {
  RatPolynomial quotient;
  RatPolynomial remainder;
};
DivisionResult divide(const RatPolynomial& numerator, const RatPolynomial& denominator);

/// Division by a monic integer polynomial; stays in Z[z].
struct IntDivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
};
IntDivisionResult divide_monic(const IntPolynomial& numerator, const IntPolynomial& monic);

/// Monic gcd over Q. Both zero is an error.
RatPolynomial poly_gcd(const RatPolynomial& a, const RatPolynomial& b);

/// poly / gcd(poly, poly'), primitive over Z.
IntPolynomial squarefree_part(const IntPolynomial& poly);

/// Sign changes of the nonzero coefficients read from the top degree down.
unsigned descartes_sign_changes(const IntPolynomial& poly);

/// Closed interval [lo, hi] with rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational l, Rational h);
  static RationalInterval point(const Rational& x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  /// Strict containment in the open interval (a, b).
  bool inside(const Rational& a, const Rational& b) const { return a < lo && hi < b; }

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const Rational& s, const RationalInterval& a);
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// Tight enclosure of x^2 (lower end is 0 if the interval straddles 0).
RationalInterval square(const RationalInterval& x);
/// Enclosure of sqrt over a nonnegative interval; perfect squares are exact,
/// other endpoints are bracketed by bisection to within `tolerance`.
RationalInterval interval_sqrt(const RationalInterval& x, const Rational& tolerance);

/// Endpoint of an open interval; std::nullopt stands for -inf (as lower) or
/// +inf (as upper).
using Bound = std::optional<Rational>;

/// Number of distinct real roots in the open interval (lo, hi), computed from
/// a Sturm sequence of the squarefree part.
unsigned real_root_count(const IntPolynomial& poly, const Bound& lo, const Bound& hi);

/// Pairwise disjoint closed intervals of width <= width, each holding exactly
/// one real root, sorted ascending. Endpoints are never roots unless the
/// interval is a single point (an exact rational root).
std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& poly, const Rational& width);

/// Shrinks an isolating interval (sign change at the endpoints, or a point)
/// of a squarefree polynomial down to width <= width.
RationalInterval refine_root(const IntPolynomial& squarefree, RationalInterval interval,
                             const Rational& width);

/// For a cubic, the rational double (or triple) root if one exists.
std::optional<Rational> rational_double_root(const RatPolynomial& cubic);

/// Rational roots via the rational root theorem, ascending, without multiplicity.
std::vector<Rational> rational_roots(const IntPolynomial& poly);

/// Cauchy bound 1 + max |c_i / c_n|: every root lies strictly inside.
Rational cauchy_root_bound(const IntPolynomial& poly);

// Dense linear algebra over Q (row-major).
using RationalMatrix = std::vector<std::vector<Rational>>;

std::size_t matrix_rank(RationalMatrix m);
/// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b);
/// Some solution of a consistent system (free variables set to zero).
std::optional<std::vector<Rational>> solve_particular(RationalMatrix a, std::vector<Rational> b);
/// Basis of {x : a x = 0}.
RationalMatrix null_space(RationalMatrix a, std::size_t columns);

}  // namespace circle_orbit

#endif  // CIRCLE_ORBIT_EXACT_HPP
