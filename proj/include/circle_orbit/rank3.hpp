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

// Three unit vectors v1, v2, v3 in the plane, described only through their
// inner products gamma = (v1, v2), alpha = (v2, v3), beta = (v3, v1), and the
// integer points of Q(x, y, z) = |x v1 + y v2 + z v3|^2 = n^2.

#ifndef CIRCLE_ORBIT_RANK3_HPP
#define CIRCLE_ORBIT_RANK3_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circle_orbit/exact.hpp"
#include "circle_orbit/quad_ext.hpp"

namespace circle_orbit {

struct InnerProductTriple {
  QuadExtScalar alpha;  // (v2, v3)
  QuadExtScalar beta;   // (v3, v1)
  QuadExtScalar gamma;  // (v1, v2)
  long long n = 1;

  /// The shared radicand, 0 when every entry is rational.
  Integer radicand() const;
};

using LatticePoint3 = std::array<long long, 3>;

/// Caps and parallelism shared by every box enumeration.
struct EnumerationOptions {
  static constexpr std::uint64_t kDefaultCap = 10'000'000;
  std::uint64_t cap = kDefaultCap;
  unsigned workers = 1;
};

/// Throws ResourceLimit when (2B+1)^dimension exceeds cap.
void check_box_size(long long bound, int dimension, std::uint64_t cap);

QuadExtScalar gram_residual(const QuadExtScalar& alpha, const QuadExtScalar& beta,
                            const QuadExtScalar& gamma);

/// (1/(alpha - beta gamma), 1/(beta - alpha gamma), 1/(gamma - alpha beta)).
/// c1 v1 + c2 v2 + c3 v3 = 0 for coplanar unit vectors.
struct ReciprocalCoefficients {
  QuadExtScalar c1, c2, c3;
};
ReciprocalCoefficients reciprocal_coefficients(const InnerProductTriple& t);

/// v3 = kappa1 v1 + kappa2 v2.
struct Kappa {
  QuadExtScalar kappa1, kappa2;
};
Kappa kappa(const InnerProductTriple& t);

QuadExtScalar q_eval(const InnerProductTriple& t, long long x, long long y, long long z);

/// Exact membership test Q(x, y, z) == n^2, compiled once per triple. Splits
/// the equation into its rational and sqrt(D) parts with integer coefficients
/// and evaluates them in 128-bit arithmetic when the box allows it.
class SolutionTester {
 public:
  SolutionTester(const InnerProductTriple& t, long long max_coordinate);
  bool operator()(long long x, long long y, long long z) const;

 private:
  bool exact_test(long long x, long long y, long long z) const;

  // L (x^2 + y^2 + z^2 - n^2) + 2 (A yz + B zx + C xy) == 0
  Integer scale_;
  std::array<Integer, 3> rational_;
  // A' yz + B' zx + C' xy == 0
  std::array<Integer, 3> surd_;
  Integer n_squared_;
  bool fast_ = false;
  __int128 scale128_ = 0, n2_128_ = 0;
  std::array<__int128, 3> rational128_{}, surd128_{};
};

struct SolutionSet {
  InnerProductTriple triple;
  long long bound = 0;
  std::vector<LatticePoint3> all;           // lexicographic
  std::vector<LatticePoint3> nonzero_part;  // xyz != 0
};

/// Every (x, y, z) in [-B, B]^3 with Q = n^2.
SolutionSet enumerate_solutions(const InnerProductTriple& t, long long bound,
                                const EnumerationOptions& options = {});

/// Row (1/x, 1/y, 1/z) of the reciprocal set.
std::vector<Rational> reciprocal_row(const LatticePoint3& p);
/// Right side (n^2 - x^2 - y^2 - z^2) / (2xyz) of
/// alpha/x + beta/y + gamma/z = (n^2 - x^2 - y^2 - z^2) / (2xyz).
Rational reciprocal_rhs(long long n, const LatticePoint3& p);

enum class SpanCase { Empty, Case1, Case2, Case3 };
std::string to_string(SpanCase c);

struct SpanClassification {
  SpanCase tag = SpanCase::Empty;
  std::size_t dimension = 0;
  /// Points whose reciprocal rows form a basis of the span, in input order.
  std::vector<LatticePoint3> basis_points;
};

SpanClassification span_classify(const std::vector<LatticePoint3>& nonzero_points);
inline SpanClassification span_classify(const SolutionSet& s) { return span_classify(s.nonzero_part); }

/// Primitive (a, b, c), positive leading entry, with a/x + b/y + c/z = 0 on
/// every point. Requires a two-dimensional span.
std::array<Integer, 3> solve_abc(const std::vector<LatticePoint3>& nonzero_points);
inline std::array<Integer, 3> solve_abc(const SolutionSet& s) { return solve_abc(s.nonzero_part); }

/// Solves the 3x3 system rows * (alpha, beta, gamma) = rhs.
std::array<Rational, 3> solve_case1(const RationalMatrix& rows, const std::vector<Rational>& rhs);

/// Particular solution (alpha0, beta0, gamma0) of the two-dimensional case:
/// every solution is lambda (a, b, c) + (alpha0, beta0, gamma0).
std::array<Rational, 3> case3_base_point(long long n, const std::vector<LatticePoint3>& basis_points);

/// x = d s t, y = d r t, z = d r s, r + s + t = 0, all nonzero.
struct EgyptianParam {
  Integer d, r, s, t;
  friend bool operator==(const EgyptianParam&, const EgyptianParam&) = default;
};

/// Canonical choice: smallest |d|, then r > 0.
EgyptianParam egyptian_parametrize(long long x, long long y, long long z);

/// z^2 == (z + x)(z + y).
bool check_square_identity(long long x, long long y, long long z);

/// phi1(r, s) = (kappa1 c - a) r - a s, phi2(r, s) = (kappa2 c - b) s - b r.
struct LinearForm {
  QuadExtScalar r_coeff, s_coeff;
  QuadExtScalar operator()(const Integer& r, const Integer& s) const;
};
struct PhiForms {
  LinearForm phi1, phi2;
};
PhiForms phi_forms(const std::array<Integer, 3>& abc, const InnerProductTriple& t);

/// Substitution check for the scaled parametrisation
///   x = d s t / (b c), y = d r t / (a c), z = d r s / (a b):
/// lhs = |s phi1 v1 + r phi2 v2|^2 must equal (abc)^2 Q(x, y, z) / d^2.
struct BoundCheck {
  QuadExtScalar lhs;
  QuadExtScalar q_value;      // Q(x, y, z) at the rational point
  QuadExtScalar rhs;          // (abc n)^2 / d^2
  bool identity_holds = false;  // lhs == (abc)^2 q_value / d^2
  bool is_solution = false;     // q_value == n^2
  bool within_bound = false;    // lhs <= (abc n)^2
};
BoundCheck bound_check(const std::array<Integer, 3>& abc, const InnerProductTriple& t,
                       const EgyptianParam& p);

/// a (alpha - beta gamma) + b (beta - alpha gamma) + c (gamma - alpha beta).
QuadExtScalar proportionality_residual(const std::array<Integer, 3>& abc, const InnerProductTriple& t);
/// (kappa1 c - a)(kappa2 c - b) - a b.
QuadExtScalar proportionality_dual(const std::array<Integer, 3>& abc, const InnerProductTriple& t);

struct CasePolynomials {
  std::array<Integer, 3> abc;
  std::array<Rational, 3> base;  // alpha0, beta0, gamma0
  RatPolynomial p1;              // 1 + 2 alpha beta gamma - alpha^2 - beta^2 - gamma^2
  RatPolynomial p2;              // a(alpha - beta gamma) + b(...) + c(...)
};

/// Expands p1 and p2 in lambda after alpha = lambda a + alpha0 etc.; asserts
/// 2 p2 + p1' = 0.
CasePolynomials build_case_polynomials(const std::array<Integer, 3>& abc,
                                       const std::array<Rational, 3>& base);

enum class Regime {
  Independent,  // rank 3 over Q
  Dependent,    // a vanishing denominator or |inner product| >= 1
  Rational,     // kappa1, kappa2 both rational: rank < 3 over Q
};
std::string to_string(Regime r);
Regime classify_regime(const InnerProductTriple& t);

struct Rank3Step {
  long long bound = 0;
  std::size_t count = 0;
  std::size_t nonzero_count = 0;
  SpanCase span = SpanCase::Empty;
};

struct Rank3Report {
  InnerProductTriple triple;
  Regime regime = Regime::Independent;
  std::vector<Rank3Step> steps;
  SpanCase final_case = SpanCase::Empty;
  std::optional<std::array<Rational, 3>> case1_solution;
  std::optional<CasePolynomials> case3;
  std::optional<Rational> double_root;
  bool stabilized = false;
  std::string verdict;
};

/// Requires a coplanar triple (Gram residual 0) and an increasing schedule.
Rank3Report rank3_report(const InnerProductTriple& t, const std::vector<long long>& schedule,
                         const EnumerationOptions& options = {});

}  // namespace circle_orbit

#endif  // CIRCLE_ORBIT_RANK3_HPP
