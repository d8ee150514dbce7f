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

#ifndef CIRCLE_ORBIT_POLYCLASS_HPP
#define CIRCLE_ORBIT_POLYCLASS_HPP

#include <optional>
#include <string>
#include <vector>

#include "circle_orbit/exact.hpp"

namespace circle_orbit {

/// Rectangle in the complex plane with rational corners. Doubles as a
/// complex interval for certified evaluation.
struct ComplexBox {
  RationalInterval re;
  RationalInterval im;

  static ComplexBox point(const Rational& re, const Rational& im) {
    return {RationalInterval::point(re), RationalInterval::point(im)};
  }

  friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexBox operator*(const Rational& s, const ComplexBox& a) {
    return {s * a.re, s * a.im};
  }
};

/// Enclosure of |z|^2 over the box.
RationalInterval modulus_squared(const ComplexBox& box);

/// Certified enclosure of sum coeffs[i] * root^i.
ComplexBox evaluate(const std::vector<Integer>& coeffs, const ComplexBox& root);

enum class ClassTag {
  Cyclotomic,    // q = Phi_n
  SalemLike,     // minimal polynomial of a Salem number
  CircleRoot,    // irreducible with circle roots, but not Salem-shaped
  RealOnly,      // all roots real
  NoCircleRoot,  // some non-real roots, none on the unit circle
  Reducible,
};

std::string to_string(ClassTag tag);

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct PolyClassification {
  ClassTag tag = ClassTag::Reducible;
  std::optional<unsigned> cyclotomic_index;  // set iff tag == Cyclotomic
  std::vector<RationalInterval> real_roots;
  std::vector<ComplexBox> circle_roots;      // one per conjugate pair, im > 0
  /// False when irreducibility rests on the weaker degree > 4 checks.
  bool irreducibility_certified = true;

  /// "Cyclotomic(12)", "SalemLike", ...
  std::string label() const;
};

bool is_reciprocal(const IntPolynomial& q);

/// Monic quartic irreducibility: no integer root and no split into two monic
/// integer quadratics.
bool is_irreducible_quartic(const IntPolynomial& q);

/// Exact for degree <= 4 (monic); above that only rational roots, cyclotomic
/// factors and rational w-roots are ruled out, giving Unknown.
Irreducibility irreducibility(const IntPolynomial& q);

unsigned euler_phi(unsigned n);
/// Phi_n from z^n - 1 = prod_{d | n} Phi_d.
IntPolynomial cyclotomic_polynomial(unsigned n);
/// Smallest n with Phi_n | q among all n with phi(n) <= deg q.
std::optional<unsigned> cyclotomic_divisor(const IntPolynomial& q);
/// n with q == Phi_n, if any.
std::optional<unsigned> cyclotomic_index(const IntPolynomial& q);

/// For reciprocal q of degree 2d, the degree-d W with q(z) = z^d W(z + 1/z).
IntPolynomial w_reduce(const IntPolynomial& q);
/// z^d W(z + 1/z), the inverse of w_reduce.
IntPolynomial w_expand(const IntPolynomial& w_poly, int d);

/// One box per conjugate pair of roots on the unit circle (upper half-plane
/// representative), ordered by ascending real part. Both sides of every
/// box have width <= width.
std::vector<ComplexBox> circle_embedding(const IntPolynomial& q, const Rational& width);

/// Requires q monic, |q(0)| = 1, 1 <= deg q <= 8.
PolyClassification classify(const IntPolynomial& q, const Rational& width = Rational(1, 1000000));

/// Number of roots of unity in Z[zeta_m]: m for even m, 2m for odd m.
unsigned cyclotomic_unit_degree(unsigned m);

}  // namespace circle_orbit

#endif  // CIRCLE_ORBIT_POLYCLASS_HPP
