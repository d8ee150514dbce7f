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

#include "circle_orbit/rank3.hpp"

#include <algorithm>
#include <thread>

namespace circle_orbit {

Integer InnerProductTriple::radicand() const {
  for (const auto* s : {&alpha, &beta, &gamma})
    if (s->radicand() != 0) return s->radicand();
  return 0;
}

void check_box_size(long long bound, int dimension, std::uint64_t cap) {
  if (bound < 0) throw InvalidInput("box bound must be nonnegative");
  Integer side = 2 * to_integer(bound) + 1;
  Integer size;
  mpz_pow_ui(size.get_mpz_t(), side.get_mpz_t(), static_cast<unsigned long>(dimension));
  if (size > Integer(std::to_string(cap)))
    throw ResourceLimit("box of " + size.get_str() + " points exceeds the cap of " +
                        std::to_string(cap));
}

QuadExtScalar gram_residual(const QuadExtScalar& alpha, const QuadExtScalar& beta,
                            const QuadExtScalar& gamma) {
  return QuadExtScalar(1) + QuadExtScalar(2) * alpha * beta * gamma - alpha * alpha - beta * beta -
         gamma * gamma;
}

namespace {

struct Denominators {
  QuadExtScalar a, b, c;  // alpha - beta gamma, beta - alpha gamma, gamma - alpha beta
};

Denominators denominators(const InnerProductTriple& t) {
  return {t.alpha - t.beta * t.gamma, t.beta - t.alpha * t.gamma, t.gamma - t.alpha * t.beta};
}

Denominators checked_denominators(const InnerProductTriple& t) {
  Denominators d = denominators(t);
  if (d.a.is_zero()) throw DegenerateConfiguration("alpha = beta*gamma: dependent configuration");
  if (d.b.is_zero()) throw DegenerateConfiguration("beta = alpha*gamma: dependent configuration");
  if (d.c.is_zero()) throw DegenerateConfiguration("gamma = alpha*beta: dependent configuration");
  return d;
}

}  // namespace

ReciprocalCoefficients reciprocal_coefficients(const InnerProductTriple& t) {
  Denominators d = checked_denominators(t);
  return {d.a.inverse(), d.b.inverse(), d.c.inverse()};
}

Kappa kappa(const InnerProductTriple& t) {
  Denominators d = checked_denominators(t);
  return {-d.c / d.a, -d.c / d.b};
}

namespace {

QuadExtScalar q_eval_at(const InnerProductTriple& t, const QuadExtScalar& x, const QuadExtScalar& y,
                        const QuadExtScalar& z) {
  QuadExtScalar two(2);
  return x * x + y * y + z * z + two * t.alpha * y * z + two * t.beta * z * x + two * t.gamma * x * y;
}

}  // namespace

QuadExtScalar q_eval(const InnerProductTriple& t, long long x, long long y, long long z) {
  return q_eval_at(t, QuadExtScalar(to_rational(x)), QuadExtScalar(to_rational(y)), QuadExtScalar(to_rational(z)));
}

namespace {

Integer lcm_of_denominators(std::initializer_list<const Rational*> values) {
  Integer l = 1;
  for (const Rational* v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v->get_den_mpz_t());
  return l;
}

Integer scaled(const Rational& v, const Integer& l) { return v.get_num() * (l / v.get_den()); }

bool fits_bits(const Integer& v, std::size_t bits) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= bits;
}

__int128 to_int128(const Integer& v) {
  Integer mag = abs(v);
  Integer high = mag >> 64;
  Integer low = mag - (high << 64);
  unsigned __int128 h = static_cast<unsigned __int128>(mpz_get_ui(high.get_mpz_t()));
  unsigned __int128 l = static_cast<unsigned __int128>(mpz_get_ui(low.get_mpz_t()));
  auto m = static_cast<__int128>((h << 64) | l);
  return sgn(v) < 0 ? -m : m;
}

}  // namespace

SolutionTester::SolutionTester(const InnerProductTriple& t, long long max_coordinate) {
  scale_ = lcm_of_denominators({&t.alpha.rational_part(), &t.beta.rational_part(), &t.gamma.rational_part()});
  rational_ = {scaled(t.alpha.rational_part(), scale_), scaled(t.beta.rational_part(), scale_),
               scaled(t.gamma.rational_part(), scale_)};
  Integer surd_scale =
      lcm_of_denominators({&t.alpha.surd_part(), &t.beta.surd_part(), &t.gamma.surd_part()});
  surd_ = {scaled(t.alpha.surd_part(), surd_scale), scaled(t.beta.surd_part(), surd_scale),
           scaled(t.gamma.surd_part(), surd_scale)};
  n_squared_ = to_integer(t.n) * to_integer(t.n);

  // Worst-case magnitudes over the box; 120 bits leaves headroom in int128.
  Integer m2 = to_integer(max_coordinate) * to_integer(max_coordinate);
  Integer rational_bound = scale_ * (3 * m2 + n_squared_) +
                           2 * (abs(rational_[0]) + abs(rational_[1]) + abs(rational_[2])) * m2;
  Integer surd_bound = (abs(surd_[0]) + abs(surd_[1]) + abs(surd_[2])) * m2;
  fast_ = fits_bits(rational_bound, 120) && fits_bits(surd_bound, 120);
  if (fast_) {
    scale128_ = to_int128(scale_);
    n2_128_ = to_int128(n_squared_);
    for (std::size_t i = 0; i < 3; ++i) {
      rational128_[i] = to_int128(rational_[i]);
      surd128_[i] = to_int128(surd_[i]);
    }
  }
}

bool SolutionTester::operator()(long long x, long long y, long long z) const {
  if (!fast_) return exact_test(x, y, z);
  __int128 X = x, Y = y, Z = z;
  __int128 yz = Y * Z, zx = Z * X, xy = X * Y;
  __int128 surd = surd128_[0] * yz + surd128_[1] * zx + surd128_[2] * xy;
  if (surd != 0) return false;
  __int128 rational =
      scale128_ * (X * X + Y * Y + Z * Z - n2_128_) + 2 * (rational128_[0] * yz + rational128_[1] * zx + rational128_[2] * xy);
  return rational == 0;
}

bool SolutionTester::exact_test(long long x, long long y, long long z) const {
  Integer X = to_integer(x), Y = to_integer(y), Z = to_integer(z);
  Integer yz = Y * Z, zx = Z * X, xy = X * Y;
  if (surd_[0] * yz + surd_[1] * zx + surd_[2] * xy != 0) return false;
  Integer rational = scale_ * (X * X + Y * Y + Z * Z - n_squared_) +
                     2 * (rational_[0] * yz + rational_[1] * zx + rational_[2] * xy);
  return rational == 0;
}

SolutionSet enumerate_solutions(const InnerProductTriple& t, long long bound,
                                const EnumerationOptions& options) {
  if (bound < 1) throw InvalidInput("enumeration bound must be >= 1");
  if (t.n < 1) throw InvalidInput("n must be positive");
  check_box_size(bound, 3, options.cap);
  SolutionTester is_solution(t, bound);

  unsigned workers = std::max(1U, options.workers);
  long long span = 2 * bound + 1;
  std::vector<std::vector<LatticePoint3>> partial(workers);
  auto scan = [&](unsigned w) {
    long long first = -bound + span * w / workers;
    long long last = -bound + span * (w + 1) / workers;  // exclusive
    for (long long x = first; x < last; ++x)
      for (long long y = -bound; y <= bound; ++y)
        for (long long z = -bound; z <= bound; ++z)
          if (is_solution(x, y, z)) partial[w].push_back({x, y, z});
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }

  SolutionSet out;
  out.triple = t;
  out.bound = bound;
  for (auto& chunk : partial) out.all.insert(out.all.end(), chunk.begin(), chunk.end());
  for (const auto& p : out.all)
    if (p[0] != 0 && p[1] != 0 && p[2] != 0) out.nonzero_part.push_back(p);
  return out;
}

std::vector<Rational> reciprocal_row(const LatticePoint3& p) {
  if (p[0] == 0 || p[1] == 0 || p[2] == 0) throw InvalidInput("reciprocal row needs xyz != 0");
  return {Rational(1, 1) / to_rational(p[0]), Rational(1, 1) / to_rational(p[1]), Rational(1, 1) / to_rational(p[2])};
}

Rational reciprocal_rhs(long long n, const LatticePoint3& p) {
  Integer x = to_integer(p[0]), y = to_integer(p[1]), z = to_integer(p[2]);
  Rational r(Integer(to_integer(n) * to_integer(n) - x * x - y * y - z * z), Integer(2 * x * y * z));
  r.canonicalize();
  return r;
}

std::string to_string(SpanCase c) {
  switch (c) {
    case SpanCase::Empty: return "Empty";
    case SpanCase::Case1: return "Case1";
    case SpanCase::Case2: return "Case2";
    case SpanCase::Case3: return "Case3";
  }
  return "?";
}

SpanClassification span_classify(const std::vector<LatticePoint3>& nonzero_points) {
  SpanClassification out;
  RationalMatrix rows;
  for (const auto& p : nonzero_points) {
    if (out.dimension == 3) break;
    rows.push_back(reciprocal_row(p));
    std::size_t r = matrix_rank(rows);
    if (r > out.dimension) {
      out.dimension = r;
      out.basis_points.push_back(p);
    } else {
      rows.pop_back();
    }
  }
  static constexpr SpanCase kByDimension[] = {SpanCase::Empty, SpanCase::Case2, SpanCase::Case3,
                                              SpanCase::Case1};
  out.tag = kByDimension[out.dimension];
  return out;
}

std::array<Integer, 3> solve_abc(const std::vector<LatticePoint3>& nonzero_points) {
  SpanClassification span = span_classify(nonzero_points);
  if (span.dimension != 2)
    throw InvalidInput("solve_abc needs a two-dimensional span, got dimension " +
                       std::to_string(span.dimension));
  RationalMatrix rows;
  for (const auto& p : span.basis_points) rows.push_back(reciprocal_row(p));
  RationalMatrix kernel = null_space(std::move(rows), 3);
  if (kernel.size() != 1) throw InvariantViolation("null space of a rank-2 3-column matrix is not a line");
  const auto& v = kernel.front();
  Integer l = lcm_of_denominators({&v[0], &v[1], &v[2]});
  std::array<Integer, 3> abc{scaled(v[0], l), scaled(v[1], l), scaled(v[2], l)};
  Integer g = 0;
  for (const auto& c : abc) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& c : abc) c /= g;
  auto lead = std::find_if(abc.begin(), abc.end(), [](const Integer& c) { return c != 0; });
  if (*lead < 0)
    for (auto& c : abc) c = -c;
  return abc;
}

std::array<Rational, 3> solve_case1(const RationalMatrix& rows, const std::vector<Rational>& rhs) {
  if (rows.size() != 3 || rhs.size() != 3) throw InvalidInput("solve_case1 expects a 3x3 system");
  auto solution = solve_square(rows, rhs);
  if (!solution) throw InvalidInput("solve_case1: rows are linearly dependent");
  return {(*solution)[0], (*solution)[1], (*solution)[2]};
}

std::array<Rational, 3> case3_base_point(long long n, const std::vector<LatticePoint3>& basis_points) {
  if (basis_points.size() != 2) throw InvalidInput("case3_base_point expects two basis points");
  RationalMatrix rows;
  std::vector<Rational> rhs;
  for (const auto& p : basis_points) {
    rows.push_back(reciprocal_row(p));
    rhs.push_back(reciprocal_rhs(n, p));
  }
  auto solution = solve_particular(std::move(rows), std::move(rhs));
  if (!solution) throw InvariantViolation("rank-2 system reported inconsistent");
  return {(*solution)[0], (*solution)[1], (*solution)[2]};
}

EgyptianParam egyptian_parametrize(long long x, long long y, long long z) {
  if (x == 0 || y == 0 || z == 0) throw InvalidInput("egyptian_parametrize needs nonzero x, y, z");
  Integer X = to_integer(x), Y = to_integer(y), Z = to_integer(z);
  // 1/x + 1/y + 1/z = 0  <=>  xy + yz + zx = 0
  if (X * Y + Y * Z + Z * X != 0) throw InvalidInput("1/x + 1/y + 1/z != 0");
  Integer product = X * Y * Z;  // = d^3 (rst)^2
  int d_sign = sgn(product);
  Integer limit = std::min({abs(X), abs(Y), abs(Z)});
  for (Integer m = 1; m <= limit; ++m) {
    Integer d = d_sign * m;
    if (X % d != 0 || Y % d != 0 || Z % d != 0) continue;
    Integer d3 = d * d * d;
    if (product % d3 != 0) continue;
    Integer p2 = product / d3;
    if (mpz_perfect_square_p(p2.get_mpz_t()) == 0) continue;
    Integer rst;
    mpz_sqrt(rst.get_mpz_t(), p2.get_mpz_t());
    Integer st = X / d, rt = Y / d, rs = Z / d;
    if (rst % st != 0 || rst % rt != 0 || rst % rs != 0) continue;
    EgyptianParam e{d, rst / st, rst / rt, rst / rs};
    if (e.r < 0) {
      e.r = -e.r;
      e.s = -e.s;
      e.t = -e.t;
    }
    if (e.r + e.s + e.t != 0) throw InvariantViolation("egyptian parameters do not sum to zero");
    if (d * e.s * e.t != X || d * e.r * e.t != Y || d * e.r * e.s != Z)
      throw InvariantViolation("egyptian parameters do not reproduce the point");
    return e;
  }
  throw InvariantViolation("no egyptian parametrisation found");
}

bool check_square_identity(long long x, long long y, long long z) {
  Integer X = to_integer(x), Y = to_integer(y), Z = to_integer(z);
  return Z * Z == (Z + X) * (Z + Y);
}

QuadExtScalar LinearForm::operator()(const Integer& r, const Integer& s) const {
  return r_coeff * QuadExtScalar(Rational(r)) + s_coeff * QuadExtScalar(Rational(s));
}

PhiForms phi_forms(const std::array<Integer, 3>& abc, const InnerProductTriple& t) {
  Kappa k = kappa(t);
  QuadExtScalar a{Rational(abc[0])}, b{Rational(abc[1])}, c{Rational(abc[2])};
  return {LinearForm{k.kappa1 * c - a, -a}, LinearForm{-b, k.kappa2 * c - b}};
}

BoundCheck bound_check(const std::array<Integer, 3>& abc, const InnerProductTriple& t,
                       const EgyptianParam& p) {
  if (abc[0] == 0 || abc[1] == 0 || abc[2] == 0) throw InvalidInput("bound_check needs abc != 0");
  if (p.d == 0 || p.r == 0 || p.s == 0 || p.t == 0 || p.r + p.s + p.t != 0)
    throw InvalidInput("bound_check needs nonzero d, r, s, t with r + s + t = 0");
  const Integer &a = abc[0], &b = abc[1], &c = abc[2];
  PhiForms phi = phi_forms(abc, t);
  QuadExtScalar u = QuadExtScalar(Rational(p.s)) * phi.phi1(p.r, p.s);
  QuadExtScalar w = QuadExtScalar(Rational(p.r)) * phi.phi2(p.r, p.s);

  BoundCheck out;
  // |u v1 + w v2|^2 with |v1| = |v2| = 1 and (v1, v2) = gamma.
  out.lhs = u * u + w * w + QuadExtScalar(2) * t.gamma * u * w;
  Rational x(Integer(p.d * p.s * p.t), Integer(b * c));
  Rational y(Integer(p.d * p.r * p.t), Integer(a * c));
  Rational z(Integer(p.d * p.r * p.s), Integer(a * b));
  x.canonicalize();
  y.canonicalize();
  z.canonicalize();
  out.q_value = q_eval_at(t, x, y, z);
  Rational abc2 = Rational(a * b * c) * Rational(a * b * c);
  Rational d2 = Rational(p.d * p.d);
  Rational n2 = Rational(to_integer(t.n) * to_integer(t.n));
  out.rhs = QuadExtScalar(abc2 * n2 / d2);
  out.identity_holds = out.lhs == QuadExtScalar(abc2 / d2) * out.q_value;
  out.is_solution = out.q_value == QuadExtScalar(n2);
  out.within_bound = out.lhs <= QuadExtScalar(abc2 * n2);
  return out;
}

QuadExtScalar proportionality_residual(const std::array<Integer, 3>& abc, const InnerProductTriple& t) {
  Denominators d = denominators(t);
  return QuadExtScalar(Rational(abc[0])) * d.a + QuadExtScalar(Rational(abc[1])) * d.b +
         QuadExtScalar(Rational(abc[2])) * d.c;
}

QuadExtScalar proportionality_dual(const std::array<Integer, 3>& abc, const InnerProductTriple& t) {
  Kappa k = kappa(t);
  QuadExtScalar a{Rational(abc[0])}, b{Rational(abc[1])}, c{Rational(abc[2])};
  return (k.kappa1 * c - a) * (k.kappa2 * c - b) - a * b;
}

CasePolynomials build_case_polynomials(const std::array<Integer, 3>& abc,
                                       const std::array<Rational, 3>& base) {
  if (abc[0] == 0 && abc[1] == 0 && abc[2] == 0) throw InvalidInput("(a, b, c) must be nonzero");
  RatPolynomial alpha{base[0], Rational(abc[0])};
  RatPolynomial beta{base[1], Rational(abc[1])};
  RatPolynomial gamma{base[2], Rational(abc[2])};
  RatPolynomial one{Rational(1)};
  RatPolynomial two{Rational(2)};

  CasePolynomials out;
  out.abc = abc;
  out.base = base;
  out.p1 = one + two * alpha * beta * gamma - alpha * alpha - beta * beta - gamma * gamma;
  out.p2 = Rational(abc[0]) * (alpha - beta * gamma) + Rational(abc[1]) * (beta - alpha * gamma) +
           Rational(abc[2]) * (gamma - alpha * beta);
  if (!(Rational(2) * out.p2 + out.p1.derivative()).is_zero())
    throw InvariantViolation("2 p2 + p1' is not the zero polynomial");
  return out;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Independent: return "independent";
    case Regime::Dependent: return "dependent";
    case Regime::Rational: return "rational";
  }
  return "?";
}

Regime classify_regime(const InnerProductTriple& t) {
  QuadExtScalar one(1);
  for (const auto* s : {&t.alpha, &t.beta, &t.gamma})
    if (s->abs() >= one) return Regime::Dependent;
  Denominators d = denominators(t);
  if (d.a.is_zero() || d.b.is_zero() || d.c.is_zero()) return Regime::Dependent;
  Kappa k = kappa(t);
  if (k.kappa1.is_rational() && k.kappa2.is_rational()) return Regime::Rational;
  return Regime::Independent;
}

Rank3Report rank3_report(const InnerProductTriple& t, const std::vector<long long>& schedule,
                         const EnumerationOptions& options) {
  if (schedule.empty()) throw InvalidInput("rank3 schedule is empty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 1) throw InvalidInput("rank3 schedule bounds must be >= 1");
    if (i > 0 && schedule[i] <= schedule[i - 1]) throw InvalidInput("rank3 schedule must increase");
  }
  if (!gram_residual(t.alpha, t.beta, t.gamma).is_zero())
    throw InvalidInput("Gram residual is nonzero: the inner products are not realised in the plane");

  Rank3Report report;
  report.triple = t;
  report.regime = classify_regime(t);

  SolutionSet largest = enumerate_solutions(t, schedule.back(), options);
  std::vector<LatticePoint3> nonzero;
  for (long long bound : schedule) {
    Rank3Step step;
    step.bound = bound;
    nonzero.clear();
    for (const auto& p : largest.all) {
      if (std::max({std::llabs(p[0]), std::llabs(p[1]), std::llabs(p[2])}) > bound) continue;
      ++step.count;
      if (p[0] != 0 && p[1] != 0 && p[2] != 0) nonzero.push_back(p);
    }
    step.nonzero_count = nonzero.size();
    step.span = span_classify(nonzero).tag;
    report.steps.push_back(step);
  }

  SpanClassification final_span = span_classify(largest.nonzero_part);
  report.final_case = final_span.tag;
  if (final_span.tag == SpanCase::Case1) {
    RationalMatrix rows;
    std::vector<Rational> rhs;
    for (const auto& p : final_span.basis_points) {
      rows.push_back(reciprocal_row(p));
      rhs.push_back(reciprocal_rhs(t.n, p));
    }
    report.case1_solution = solve_case1(rows, rhs);
  } else if (final_span.tag == SpanCase::Case3) {
    auto abc = solve_abc(largest.nonzero_part);
    auto base = case3_base_point(t.n, final_span.basis_points);
    report.case3 = build_case_polynomials(abc, base);
    if (report.case3->p1.degree() == 3) report.double_root = rational_double_root(report.case3->p1);
  }

  const auto& steps = report.steps;
  report.stabilized = steps.size() >= 2 && steps[steps.size() - 1].count == steps[steps.size() - 2].count;
  report.verdict = report.stabilized ? "stabilized finite" : "not stabilized";
  if (report.regime == Regime::Dependent) report.verdict += " (dependent configuration)";
  if (report.regime == Regime::Rational) report.verdict += " (rational/degenerate, rank < 3)";
  return report;
}

}  // namespace circle_orbit
