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

#include "circle_orbit/quad_ext.hpp"

#include <cmath>

namespace circle_orbit {

bool is_squarefree(const Integer& n) {
  if (n < 1) return false;
  Integer m = n;
  for (Integer p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return false;
  }
  return true;
}

QuadExtScalar::QuadExtScalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }

QuadExtScalar::QuadExtScalar(Rational a, Rational b, Integer radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ == 0) {
    if (b_ != 0) throw InvalidInput("surd part given without a radicand");
    return;
  }
  if (d_ < 2 || !is_squarefree(d_)) throw InvalidInput("radicand must be squarefree and >= 2");
}

Integer QuadExtScalar::common_radicand(const QuadExtScalar& x, const QuadExtScalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw InvalidInput("scalars from different quadratic fields");
}

int QuadExtScalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 against b^2 D.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  if (lhs > rhs) return sa;
  return sb;  // equality is impossible: D is not a square
}

double QuadExtScalar::to_double() const {
  if (b_ == 0) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

RationalInterval QuadExtScalar::enclosure(const Rational& width) const {
  if (b_ == 0) return RationalInterval::point(a_);
  Rational scale = b_ < 0 ? Rational(-b_) : b_;
  RationalInterval root = interval_sqrt(RationalInterval::point(Rational(d_)), width / scale);
  return RationalInterval::point(a_) + b_ * root;
}

QuadExtScalar QuadExtScalar::operator-() const {
  QuadExtScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExtScalar operator+(const QuadExtScalar& x, const QuadExtScalar& y) {
  QuadExtScalar r;
  r.d_ = QuadExtScalar::common_radicand(x, y);
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  return r;
}

QuadExtScalar operator-(const QuadExtScalar& x, const QuadExtScalar& y) { return x + (-y); }

QuadExtScalar operator*(const QuadExtScalar& x, const QuadExtScalar& y) {
  QuadExtScalar r;
  r.d_ = QuadExtScalar::common_radicand(x, y);
  r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * Rational(r.d_);
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  return r;
}

QuadExtScalar QuadExtScalar::galois_conjugate() const {
  QuadExtScalar r = *this;
  r.b_ = -r.b_;
  return r;
}

QuadExtScalar QuadExtScalar::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero");
  // 1 / (a + b sqrt D) = (a - b sqrt D) / (a^2 - b^2 D)
  Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
  QuadExtScalar r = galois_conjugate();
  r.a_ /= norm;
  r.b_ /= norm;
  return r;
}

QuadExtScalar operator/(const QuadExtScalar& x, const QuadExtScalar& y) { return x * y.inverse(); }

std::string QuadExtScalar::pretty() const {
  auto rat = [](const Rational& q) { return q.get_str(); };
  if (b_ == 0) return rat(a_);
  std::string surd = "sqrt(" + d_.get_str() + ")";
  std::string bpart = b_ == 1 ? surd : b_ == -1 ? "-" + surd : rat(b_) + "*" + surd;
  if (a_ == 0) return bpart;
  if (b_ < 0) {
    Rational mb = -b_;
    return rat(a_) + " - " + (mb == 1 ? surd : rat(mb) + "*" + surd);
  }
  return rat(a_) + " + " + bpart;
}

}  // namespace circle_orbit
