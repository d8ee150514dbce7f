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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "circle_orbit/errors.hpp"
#include "circle_orbit/rank3.hpp"

namespace circle_orbit {
namespace {

struct Vec2 {
  QuadExtScalar x, y;
};
Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator*(const QuadExtScalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }
QuadExtScalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }

// Rotations with entries in Q(sqrt D); (c, s) with c^2 + s^2 = 1.
struct Rotation {
  QuadExtScalar c, s;
};
Vec2 rotate(const Rotation& r, const Vec2& v) { return {r.c * v.x - r.s * v.y, r.s * v.x + r.c * v.y}; }

std::vector<Rotation> rotations(long radicand) {
  std::vector<Rotation> out = {{Rational(3, 5), Rational(4, 5)},
                               {Rational(5, 13), Rational(12, 13)},
                               {Rational(8, 17), Rational(15, 17)}};
  if (radicand == 2) {
    QuadExtScalar h(Rational(0), Rational(1, 2), Integer(2));
    out.push_back({h, h});
  } else if (radicand == 5) {
    out.push_back({QuadExtScalar(Rational(0), Rational(1, 3), Integer(5)), QuadExtScalar(Rational(2, 3))});
  }
  return out;
}

// A random exact unit vector: e1 turned by a random word in the rotations.
Vec2 random_unit(std::mt19937& rng, long radicand) {
  auto rots = rotations(radicand);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(rots.size()) - 1), len(0, 4);
  Vec2 v{QuadExtScalar(1), QuadExtScalar(0)};
  int n = len(rng);
  for (int i = 0; i < n; ++i) v = rotate(rots[static_cast<std::size_t>(pick(rng))], v);
  return v;
}

InnerProductTriple triple_of(const Vec2& v1, const Vec2& v2, const Vec2& v3, long long n = 1) {
  return {dot(v2, v3), dot(v3, v1), dot(v1, v2), n};
}

QuadExtScalar sqrt2(long num, long den) { return QuadExtScalar(Rational(0), Rational(num, den), Integer(2)); }

InnerProductTriple hand_triple() { return {sqrt2(7, 10), sqrt2(1, 2), QuadExtScalar(Rational(3, 5)), 1}; }
InnerProductTriple dependent_triple() {
  return {QuadExtScalar(1), QuadExtScalar(Rational(3, 5)), QuadExtScalar(Rational(3, 5)), 1};
}

TEST(Gram, RandomPlanarTriplesVanish) {
  std::mt19937 rng(51);
  for (long d : {2L, 5L}) {
    for (int trial = 0; trial < 300; ++trial) {
      Vec2 v1 = random_unit(rng, d), v2 = random_unit(rng, d), v3 = random_unit(rng, d);
      InnerProductTriple t = triple_of(v1, v2, v3);
      EXPECT_TRUE(gram_residual(t.alpha, t.beta, t.gamma).is_zero());
    }
  }
}

TEST(Gram, HandTriple) {
  InnerProductTriple t = hand_triple();
  EXPECT_TRUE(gram_residual(t.alpha, t.beta, t.gamma).is_zero());
  Kappa k = kappa(t);
  EXPECT_EQ(k.kappa1, sqrt2(1, 8));
  EXPECT_EQ(k.kappa2, sqrt2(5, 8));
  EXPECT_FALSE(gram_residual(QuadExtScalar(Rational(1, 2)), QuadExtScalar(Rational(1, 2)),
                             QuadExtScalar(Rational(1, 2)))
                   .is_zero());
}

TEST(Gram, KappaAndReciprocalRelationOnRealisations) {
  std::mt19937 rng(52);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    long d = trial % 2 == 0 ? 2 : 5;
    Vec2 v1 = random_unit(rng, d), v2 = random_unit(rng, d), v3 = random_unit(rng, d);
    InnerProductTriple t = triple_of(v1, v2, v3);
    Kappa k;
    ReciprocalCoefficients c;
    try {
      k = kappa(t);
      c = reciprocal_coefficients(t);
    } catch (const DegenerateConfiguration&) {
      continue;
    }
    ++checked;
    EXPECT_EQ(k.kappa1 * v1 + k.kappa2 * v2, v3);
    Vec2 sum = c.c1 * v1 + c.c2 * v2 + c.c3 * v3;
    EXPECT_TRUE(sum.x.is_zero() && sum.y.is_zero());
  }
  EXPECT_GT(checked, 100);
}

TEST(QForm, MatchesSquaredLengthOfRealisation) {
  std::mt19937 rng(53);
  std::uniform_int_distribution<long long> coord(-40, 40);
  for (int trial = 0; trial < 300; ++trial) {
    long d = trial % 2 == 0 ? 2 : 5;
    Vec2 v1 = random_unit(rng, d), v2 = random_unit(rng, d), v3 = random_unit(rng, d);
    InnerProductTriple t = triple_of(v1, v2, v3);
    long long x = coord(rng), y = coord(rng), z = coord(rng);
    Vec2 w = QuadExtScalar(Rational(static_cast<long>(x))) * v1 + QuadExtScalar(Rational(static_cast<long>(y))) * v2 +
             QuadExtScalar(Rational(static_cast<long>(z))) * v3;
    EXPECT_EQ(q_eval(t, x, y, z), dot(w, w));
  }
}

TEST(QForm, ReciprocalRelationOnSolutions) {
  InnerProductTriple t = dependent_triple();
  for (const auto& p : enumerate_solutions(t, 12).nonzero_part) {
    auto row = reciprocal_row(p);
    Rational lhs = row[0] * t.alpha.rational_part() + row[1] * t.beta.rational_part() +
                   row[2] * t.gamma.rational_part();
    EXPECT_EQ(lhs, reciprocal_rhs(t.n, p));
  }
}

// Brute force with q_eval against the compiled tester.
TEST(Enumeration, MatchesBruteForce) {
  std::vector<InnerProductTriple> triples = {hand_triple(), dependent_triple()};
  triples.push_back({QuadExtScalar(Rational(-7, 25)), QuadExtScalar(Rational(3, 5)), QuadExtScalar(Rational(3, 5)), 1});
  InnerProductTriple big_n = dependent_triple();
  big_n.n = 5;
  triples.push_back(big_n);
  for (const auto& t : triples) {
    ASSERT_TRUE(gram_residual(t.alpha, t.beta, t.gamma).is_zero());
    const long long b = 7;
    std::vector<LatticePoint3> expected;
    for (long long x = -b; x <= b; ++x)
      for (long long y = -b; y <= b; ++y)
        for (long long z = -b; z <= b; ++z)
          if (q_eval(t, x, y, z) == QuadExtScalar(Rational(static_cast<long>(t.n * t.n)))) expected.push_back({x, y, z});
    SolutionSet s = enumerate_solutions(t, b);
    EXPECT_EQ(s.all, expected);
    EnumerationOptions threaded;
    threaded.workers = 3;
    EXPECT_EQ(enumerate_solutions(t, b, threaded).all, expected);
    for (const auto& p : s.nonzero_part) EXPECT_TRUE(p[0] != 0 && p[1] != 0 && p[2] != 0);
  }
}

TEST(Enumeration, TesterAgreesFarFromOrigin) {
  InnerProductTriple t = hand_triple();
  SolutionTester tester(t, 3'000'000'000LL);
  std::mt19937_64 rng(54);
  std::uniform_int_distribution<long long> coord(-3'000'000'000LL, 3'000'000'000LL);
  for (int trial = 0; trial < 200; ++trial) {
    long long x = coord(rng), y = coord(rng), z = coord(rng);
    EXPECT_EQ(tester(x, y, z), q_eval(t, x, y, z) == QuadExtScalar(1));
  }
  EXPECT_TRUE(tester(1, 0, 0));
  EXPECT_TRUE(tester(0, 0, -1));
}

TEST(Enumeration, CapIsEnforced) {
  EnumerationOptions o;
  o.cap = 1000;
  EXPECT_THROW(enumerate_solutions(hand_triple(), 5, o), ResourceLimit);
  EXPECT_NO_THROW(enumerate_solutions(hand_triple(), 4, o));
}

TEST(Span, CasesOnDependentTriple) {
  SolutionSet s = enumerate_solutions(dependent_triple(), 10);
  SpanClassification span = span_classify(s);
  EXPECT_EQ(span.tag, SpanCase::Case3);
  EXPECT_EQ(span.dimension, 2U);
  // Nonzero solutions are (+-1, y, -y), so (a, b, c) = (0, 1, 1).
  auto abc = solve_abc(s);
  EXPECT_EQ(abc, (std::array<Integer, 3>{0, 1, 1}));
  for (const auto& p : s.nonzero_part) {
    Rational r = Rational(abc[0]) / to_rational(p[0]) + Rational(abc[1]) / to_rational(p[1]) +
                 Rational(abc[2]) / to_rational(p[2]);
    EXPECT_EQ(r, 0);
  }
  // The true inner products lie on the line base + lambda (a, b, c).
  auto base = case3_base_point(1, span.basis_points);
  std::array<Rational, 3> truth = {Rational(1), Rational(3, 5), Rational(3, 5)};
  RationalMatrix m = {{truth[0] - base[0], truth[1] - base[1], truth[2] - base[2]},
                      {Rational(abc[0]), Rational(abc[1]), Rational(abc[2])}};
  EXPECT_EQ(matrix_rank(m), 1U);
  EXPECT_EQ(span_classify(std::vector<LatticePoint3>{}).tag, SpanCase::Empty);
}

TEST(Span, CaseOneRecoversInnerProducts) {
  // Three independent reciprocal rows pin (alpha, beta, gamma) down.
  std::array<Rational, 3> truth = {Rational(-7, 25), Rational(3, 5), Rational(3, 5)};
  std::vector<LatticePoint3> pts = {{1, 2, 3}, {2, -1, 5}, {-3, 4, 1}};
  RationalMatrix rows;
  std::vector<Rational> rhs;
  for (const auto& p : pts) {
    auto row = reciprocal_row(p);
    rows.push_back(row);
    rhs.push_back(row[0] * truth[0] + row[1] * truth[1] + row[2] * truth[2]);
  }
  EXPECT_EQ(solve_case1(rows, rhs), truth);
  EXPECT_EQ(span_classify(pts).tag, SpanCase::Case1);
  EXPECT_EQ(span_classify(std::vector<LatticePoint3>{{1, 2, 3}, {2, 4, 6}}).tag, SpanCase::Case2);
}

TEST(Egyptian, SpotValues) {
  EXPECT_EQ(egyptian_parametrize(3, 6, -2), (EgyptianParam{-1, 2, 1, -3}));
  EXPECT_EQ(egyptian_parametrize(2, 2, -1), (EgyptianParam{-1, 1, 1, -2}));
  EXPECT_THROW(egyptian_parametrize(1, 1, 1), InvalidInput);
  EXPECT_THROW(egyptian_parametrize(0, 1, 1), InvalidInput);
}

TEST(Egyptian, BruteForceBox) {
  const long long b = 15;
  std::size_t found = 0;
  for (long long x = -b; x <= b; ++x)
    for (long long y = -b; y <= b; ++y)
      for (long long z = -b; z <= b; ++z) {
        if (x == 0 || y == 0 || z == 0) continue;
        Rational sum = Rational(1) / to_rational(x) + Rational(1) / to_rational(y) + Rational(1) / to_rational(z);
        EXPECT_EQ(check_square_identity(x, y, z), sum == 0);
        if (sum != 0) continue;
        ++found;
        EgyptianParam e = egyptian_parametrize(x, y, z);
        EXPECT_EQ(Integer(e.r + e.s + e.t), 0);
        EXPECT_GT(e.r, 0);
        EXPECT_EQ(Integer(e.d * e.s * e.t), to_integer(x));
        EXPECT_EQ(Integer(e.d * e.r * e.t), to_integer(y));
        EXPECT_EQ(Integer(e.d * e.r * e.s), to_integer(z));
      }
  EXPECT_GT(found, 0U);
}

// a/x + b/y + c/z = 0 scales to 1/X + 1/Y + 1/Z = 0 with X = xbc etc., so
// x = dst/(bc), y = drt/(ac), z = drs/(ab) for the parameters of (X, Y, Z).
Rational frac(const Integer& n, long long d) {
  Rational r(n, to_integer(d));
  r.canonicalize();
  return r;
}

TEST(Egyptian, ScaledRepresentationOnBruteForce) {
  std::size_t checked = 0;
  for (long long a : {1, 2, -3, 5})
    for (long long b : {1, -2, 3})
      for (long long c : {1, 2, -1, 4})
        for (long long x = -12; x <= 12; ++x)
          for (long long y = -12; y <= 12; ++y)
            for (long long z = -12; z <= 12; ++z) {
              if (x == 0 || y == 0 || z == 0) continue;
              if (a * y * z + b * x * z + c * x * y != 0) continue;
              EgyptianParam e = egyptian_parametrize(x * b * c, y * a * c, z * a * b);
              EXPECT_EQ(frac(Integer(e.d * e.s * e.t), b * c), to_rational(x));
              EXPECT_EQ(frac(Integer(e.d * e.r * e.t), a * c), to_rational(y));
              EXPECT_EQ(frac(Integer(e.d * e.r * e.s), a * b), to_rational(z));
              ++checked;
            }
  EXPECT_GT(checked, 1000U);
}

TEST(BoundCheck, IdentityHoldsForRandomParameters) {
  std::mt19937 rng(55);
  std::uniform_int_distribution<long> small(-6, 6);
  InnerProductTriple t = hand_triple();
  int checked = 0;
  while (checked < 200) {
    std::array<Integer, 3> abc = {small(rng), small(rng), small(rng)};
    long r = small(rng), s = small(rng), d = small(rng);
    long tt = -r - s;
    if (abc[0] == 0 || abc[1] == 0 || abc[2] == 0 || r == 0 || s == 0 || tt == 0 || d == 0) continue;
    BoundCheck c = bound_check(abc, t, EgyptianParam{d, r, s, tt});
    EXPECT_TRUE(c.identity_holds);
    EXPECT_EQ(c.is_solution, c.q_value == QuadExtScalar(1));
    ++checked;
  }
}

TEST(Proportionality, MatchesDefinition) {
  InnerProductTriple t = hand_triple();
  std::array<Integer, 3> abc = {2, -3, 5};
  QuadExtScalar expected = QuadExtScalar(2) * (t.alpha - t.beta * t.gamma) +
                           QuadExtScalar(-3) * (t.beta - t.alpha * t.gamma) +
                           QuadExtScalar(5) * (t.gamma - t.alpha * t.beta);
  EXPECT_EQ(proportionality_residual(abc, t), expected);
  Kappa k = kappa(t);
  QuadExtScalar dual = (k.kappa1 * QuadExtScalar(5) - QuadExtScalar(2)) * (k.kappa2 * QuadExtScalar(5) - QuadExtScalar(-3)) -
                       QuadExtScalar(2) * QuadExtScalar(-3);
  EXPECT_EQ(proportionality_dual(abc, t), dual);
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

TEST(CasePolynomials, SpotInstance) {
  CasePolynomials c = build_case_polynomials({1, 1, 1}, {Rational(0), Rational(0), Rational(0)});
  EXPECT_EQ(c.p1, (RatPolynomial{1, 0, -3, 2}));
  EXPECT_EQ(c.p2, (RatPolynomial{0, 3, -3}));
}

TEST(CasePolynomials, DerivativeIdentityAndDirectSubstitution) {
  std::mt19937 rng(56);
  std::uniform_int_distribution<long> small(-7, 7);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<Integer, 3> abc = {small(rng), small(rng), small(rng)};
    if (abc[0] == 0 && abc[1] == 0 && abc[2] == 0) abc[0] = 1;
    std::array<Rational, 3> base = {random_rational(rng), random_rational(rng), random_rational(rng)};
    CasePolynomials c = build_case_polynomials(abc, base);
    EXPECT_TRUE((Rational(2) * c.p2 + c.p1.derivative()).is_zero());
    for (int k = 0; k < 10; ++k) {
      Rational lambda = random_rational(rng);
      Rational al = lambda * abc[0] + base[0], be = lambda * abc[1] + base[1], ga = lambda * abc[2] + base[2];
      EXPECT_EQ(c.p1.evaluate(lambda), 1 + 2 * al * be * ga - al * al - be * be - ga * ga);
      Rational p2 = abc[0] * (al - be * ga) + abc[1] * (be - al * ga) + abc[2] * (ga - al * be);
      EXPECT_EQ(c.p2.evaluate(lambda), p2);
    }
  }
}

TEST(Regime, Classification) {
  EXPECT_EQ(classify_regime(hand_triple()), Regime::Independent);
  EXPECT_EQ(classify_regime(dependent_triple()), Regime::Dependent);
  InnerProductTriple rational{QuadExtScalar(Rational(-7, 25)), QuadExtScalar(Rational(3, 5)),
                              QuadExtScalar(Rational(3, 5)), 1};
  EXPECT_EQ(classify_regime(rational), Regime::Rational);
}

TEST(Report, HandTripleStabilises) {
  Rank3Report r = rank3_report(hand_triple(), {10, 20, 30});
  EXPECT_TRUE(r.stabilized);
  EXPECT_EQ(r.verdict, "stabilized finite");
  for (const auto& s : r.steps) EXPECT_EQ(s.count, 6U);
}

TEST(Report, RejectsBadInput) {
  EXPECT_THROW(rank3_report(hand_triple(), {}), InvalidInput);
  EXPECT_THROW(rank3_report(hand_triple(), {10, 10}), InvalidInput);
  EXPECT_THROW(rank3_report(hand_triple(), {0, 3}), InvalidInput);
  InnerProductTriple bad{QuadExtScalar(Rational(1, 2)), QuadExtScalar(Rational(1, 2)), QuadExtScalar(Rational(1, 2)), 1};
  EXPECT_THROW(rank3_report(bad, {5}), InvalidInput);
}

}  // namespace
}  // namespace circle_orbit
