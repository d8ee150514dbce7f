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

#include "circle_orbit/quartic_ring.hpp"

#include <algorithm>

namespace circle_orbit {

ModulusPtr RingModulus::create(IntPolynomial q) {
  if (q.degree() < 2 || q.degree() > kMaxDegree)
    throw InvalidModulus("ring modulus degree must lie in [2, 8]");
  if (q.leading() != 1) throw InvalidModulus("ring modulus must be monic");
  if (abs(q.coeff(0)) != 1) throw InvalidModulus("ring modulus needs |q(0)| = 1");
  return ModulusPtr(new RingModulus(std::move(q)));
}

RingModulus::RingModulus(IntPolynomial q) : q_(std::move(q)) {
  reciprocal_ = is_reciprocal(q_);
  irreducibility_ = circle_orbit::irreducibility(q_);
  // alpha (alpha^{k-1} + q_{k-1} alpha^{k-2} + ... + q_1) = -q_0, and q_0 = +-1.
  std::size_t k = static_cast<std::size_t>(degree());
  alpha_inverse_.assign(k, Integer(0));
  for (std::size_t i = 0; i < k; ++i) alpha_inverse_[i] = -q_.coeff(0) * q_.coeff(i + 1);
}

std::vector<Integer> RingModulus::reduce(std::vector<Integer> coeffs) const {
  std::size_t k = static_cast<std::size_t>(degree());
  for (std::size_t i = coeffs.size(); i-- > k;) {
    if (coeffs[i] == 0) continue;
    Integer c = coeffs[i];
    for (std::size_t j = 0; j < k; ++j) coeffs[i - k + j] -= c * q_.coeffs()[j];
    coeffs[i] = 0;
  }
  coeffs.resize(k, Integer(0));
  return coeffs;
}

RingElement::RingElement(ModulusPtr modulus, std::vector<Integer> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {
  if (!modulus_) throw InvalidInput("ring element without modulus");
  if (coeffs_.size() != static_cast<std::size_t>(modulus_->degree()))
    throw InvalidInput("ring element needs exactly k coefficients");
}

RingElement RingElement::constant(ModulusPtr modulus, const Integer& c) {
  std::vector<Integer> v(static_cast<std::size_t>(modulus->degree()), Integer(0));
  v[0] = c;
  return RingElement(std::move(modulus), std::move(v));
}

RingElement RingElement::alpha(ModulusPtr modulus) {
  std::vector<Integer> v(static_cast<std::size_t>(modulus->degree()), Integer(0));
  v[1] = 1;
  return RingElement(std::move(modulus), std::move(v));
}

bool RingElement::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Integer& c) { return c == 0; });
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

namespace {

void require_same_modulus(const RingElement& a, const RingElement& b) {
  if (a.modulus() != b.modulus() && a.modulus()->polynomial() != b.modulus()->polynomial())
    throw InvalidInput("ring elements over different moduli");
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_modulus(a, b);
  std::vector<Integer> v = a.coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coeffs_[i];
  return RingElement(a.modulus_, std::move(v));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_modulus(a, b);
  std::vector<Integer> v = a.coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coeffs_[i];
  return RingElement(a.modulus_, std::move(v));
}

RingElement RingElement::operator-() const {
  std::vector<Integer> v = coeffs_;
  for (auto& c : v) c = -c;
  return RingElement(modulus_, std::move(v));
}

RingElement operator*(const Integer& s, const RingElement& a) {
  std::vector<Integer> v = a.coeffs_;
  for (auto& c : v) c *= s;
  return RingElement(a.modulus_, std::move(v));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_modulus(a, b);
  std::size_t k = a.coeffs_.size();
  std::vector<Integer> prod(2 * k - 1, Integer(0));
  for (std::size_t i = 0; i < k; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RingElement(a.modulus_, a.modulus_->reduce(std::move(prod)));
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.modulus_->polynomial() == b.modulus_->polynomial() && a.coeffs_ == b.coeffs_;
}

RingElement ring_mul(const RingElement& u, const RingElement& v) { return u * v; }

std::optional<RingElement> ring_inverse(const RingElement& u) {
  const ModulusPtr& mod = u.modulus();
  std::size_t k = static_cast<std::size_t>(mod->degree());
  // Column j of the multiplication matrix is u * alpha^j.
  RationalMatrix m(k, std::vector<Rational>(k));
  RingElement column = u;
  RingElement a = RingElement::alpha(mod);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) m[i][j] = column.coeffs()[i];
    column = column * a;
  }
  std::vector<Rational> rhs(k, Rational(0));
  rhs[0] = 1;
  auto solution = solve_square(std::move(m), std::move(rhs));
  if (!solution) return std::nullopt;
  std::vector<Integer> coeffs;
  coeffs.reserve(k);
  for (const auto& x : *solution) {
    if (x.get_den() != 1) return std::nullopt;
    coeffs.push_back(x.get_num());
  }
  RingElement inverse(mod, std::move(coeffs));
  if (!(u * inverse).is_one()) throw InvariantViolation("ring inverse does not multiply to 1");
  return inverse;
}

RingElement conjugation(const RingElement& u) {
  const ModulusPtr& mod = u.modulus();
  if (!mod->reciprocal()) throw InvalidModulus("conjugation needs a reciprocal modulus");
  RingElement inv(mod, mod->alpha_inverse());
  // Horner in alpha^-1.
  RingElement acc = RingElement::zero(mod);
  for (auto it = u.coeffs().rbegin(); it != u.coeffs().rend(); ++it)
    acc = acc * inv + RingElement::constant(mod, *it);
  return acc;
}

RingElement circle_norm(const RingElement& u) { return u * conjugation(u); }

CircleVerdict on_unit_circle(const RingElement& u) {
  CircleVerdict v;
  v.on_circle = circle_norm(u).is_one();
  v.exact = u.modulus()->irreducibility() == Irreducibility::Irreducible;
  return v;
}

RingElement power(const ModulusPtr& modulus, long long m) {
  RingElement base = m >= 0 ? RingElement::alpha(modulus)
                            : RingElement(modulus, modulus->alpha_inverse());
  unsigned long long e = m >= 0 ? static_cast<unsigned long long>(m)
                                : static_cast<unsigned long long>(-(m + 1)) + 1;
  RingElement result = RingElement::one(modulus);
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Orbit orbit(const ModulusPtr& modulus, long long m_min, long long m_max) {
  if (m_min > m_max) throw InvalidInput("orbit range is empty");
  Orbit out;
  out.m_min = m_min;
  RingElement current = power(modulus, m_min);
  RingElement a = RingElement::alpha(modulus);
  for (long long m = m_min;; ++m) {
    out.elements.push_back(current);
    if (m == m_max) break;
    current = current * a;
  }
  std::vector<std::vector<Integer>> keys;
  keys.reserve(out.elements.size());
  for (const auto& e : out.elements) keys.push_back(e.coeffs());
  std::sort(keys.begin(), keys.end());
  out.distinct = std::adjacent_find(keys.begin(), keys.end()) == keys.end();
  return out;
}

ComplexBox embed(const RingElement& u, const ComplexBox& root) {
  return evaluate(u.coeffs(), root);
}

}  // namespace circle_orbit
