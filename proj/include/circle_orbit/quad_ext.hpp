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

#ifndef CIRCLE_ORBIT_QUAD_EXT_HPP
#define CIRCLE_ORBIT_QUAD_EXT_HPP

#include <string>

#include "circle_orbit/exact.hpp"

namespace circle_orbit {

bool is_squarefree(const Integer& n);

/// a + b sqrt(D) in Q(sqrt D), D squarefree and >= 2.
///
/// A scalar built from a plain rational carries D = 0 ("no field yet") and
/// adopts the field of whatever it is combined with. Combining two different
/// nonzero D is an error. Equality and ordering are exact.
class QuadExtScalar {
 public:
  QuadExtScalar() = default;
  QuadExtScalar(Rational a);  // NOLINT(google-explicit-constructor)
  QuadExtScalar(long a) : QuadExtScalar(Rational(a)) {}  // NOLINT
  QuadExtScalar(Rational a, Rational b, Integer radicand);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  int sign() const;
  double to_double() const;
  /// Enclosure of the real value with width <= width.
  RationalInterval enclosure(const Rational& width) const;
  QuadExtScalar abs() const { return sign() < 0 ? -*this : *this; }
  QuadExtScalar inverse() const;
  /// a - b sqrt(D).
  QuadExtScalar galois_conjugate() const;

  /// "7/10*sqrt(2)", "3/5", "1/2 + 1/3*sqrt(5)".
  std::string pretty() const;

  QuadExtScalar operator-() const;
  friend QuadExtScalar operator+(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator-(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator*(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator/(const QuadExtScalar& x, const QuadExtScalar& y);
  QuadExtScalar& operator+=(const QuadExtScalar& y) { return *this = *this + y; }
  QuadExtScalar& operator-=(const QuadExtScalar& y) { return *this = *this - y; }
  QuadExtScalar& operator*=(const QuadExtScalar& y) { return *this = *this * y; }

  friend bool operator==(const QuadExtScalar& x, const QuadExtScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const QuadExtScalar& x, const QuadExtScalar& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadExtScalar& x, const QuadExtScalar& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadExtScalar& x, const QuadExtScalar& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadExtScalar& x, const QuadExtScalar& y) { return (x - y).sign() >= 0; }

 private:
  static Integer common_radicand(const QuadExtScalar& x, const QuadExtScalar& y);

  Rational a_ = 0;
  Rational b_ = 0;
  Integer d_ = 0;
};

}  // namespace circle_orbit

#endif  // CIRCLE_ORBIT_QUAD_EXT_HPP
