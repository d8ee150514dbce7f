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

#ifndef CIRCLE_ORBIT_QUARTIC_RING_HPP
#define CIRCLE_ORBIT_QUARTIC_RING_HPP

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "circle_orbit/exact.hpp"
#include "circle_orbit/polyclass.hpp"

namespace circle_orbit {

class RingModulus;
using ModulusPtr = std::shared_ptr<const RingModulus>;

/// The ring Z[z]/(q) for monic q with q(0) = +-1 and 2 <= deg q <= 8.
/// Immutable; shared read-only between elements.
class RingModulus {
 public:
  static constexpr int kMaxDegree = 8;

  /// Throws InvalidModulus when q violates the contract.
  static ModulusPtr create(IntPolynomial q);

  const IntPolynomial& polynomial() const { return q_; }
  int degree() const { return q_.degree(); }
  bool reciprocal() const { return reciprocal_; }
  Irreducibility irreducibility() const { return irreducibility_; }

  /// Coefficients of alpha^-1, integral because q(0) = +-1.
  const std::vector<Integer>& alpha_inverse() const { return alpha_inverse_; }

  /// Reduces a coefficient vector of any length modulo q; result has length k.
  std::vector<Integer> reduce(std::vector<Integer> coeffs) const;

 private:
  explicit RingModulus(IntPolynomial q);

  IntPolynomial q_;
  bool reciprocal_ = false;
  Irreducibility irreducibility_ = Irreducibility::Unknown;
  std::vector<Integer> alpha_inverse_;
};

/// c_0 + c_1 alpha + ... + c_{k-1} alpha^{k-1} in Z[alpha].
class RingElement {
 public:
  RingElement(ModulusPtr modulus, std::vector<Integer> coeffs);

  static RingElement constant(ModulusPtr modulus, const Integer& c);
  static RingElement zero(ModulusPtr modulus) { return constant(std::move(modulus), 0); }
  static RingElement one(ModulusPtr modulus) { return constant(std::move(modulus), 1); }
  /// The residue of z.
  static RingElement alpha(ModulusPtr modulus);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const ModulusPtr& modulus() const { return modulus_; }
  bool is_one() const;
  bool is_zero() const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const Integer& s, const RingElement& a);
  RingElement operator-() const;
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  ModulusPtr modulus_;
  std::vector<Integer> coeffs_;
};

RingElement ring_mul(const RingElement& u, const RingElement& v);

/// x with u x = 1 when u is a unit of Z[alpha]; solved as a k x k rational
/// system, keeping only integral solutions.
std::optional<RingElement> ring_inverse(const RingElement& u);

/// sigma: alpha -> alpha^-1. Needs a reciprocal modulus.
RingElement conjugation(const RingElement& u);

/// u * sigma(u), i.e. |u|^2 under a circle embedding.
RingElement circle_norm(const RingElement& u);

struct CircleVerdict {
  bool on_circle = false;
  /// False when the modulus is not known to be irreducible: a true verdict is
  /// then only a sufficient condition for |u| = 1.
  bool exact = true;
};

CircleVerdict on_unit_circle(const RingElement& u);

/// alpha^m by square-and-multiply; negative m goes through alpha^-1.
RingElement power(const ModulusPtr& modulus, long long m);

struct Orbit {
  long long m_min = 0;
  std::vector<RingElement> elements;  // alpha^m for m = m_min, m_min + 1, ...
  bool distinct = true;
};

Orbit orbit(const ModulusPtr& modulus, long long m_min, long long m_max);

/// Certified complex value of u at the given root box.
ComplexBox embed(const RingElement& u, const ComplexBox& root);

}  // namespace circle_orbit

#endif  // CIRCLE_ORBIT_QUARTIC_RING_HPP
