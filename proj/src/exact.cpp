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

#include "circle_orbit/exact.hpp"

#include <algorithm>
#include <sstream>

namespace circle_orbit {

int sign(const Integer& x) { return sgn(x); }
int sign(const Rational& x) { return sgn(x); }

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidInput("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw InvalidInput("not an integer: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string frac = s.substr(dot + 1);
    std::string whole = s.substr(0, dot);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    Integer w = parse_integer(whole);
    if (frac.empty()) return Rational(w);
    Integer f = parse_integer(frac);
    if (frac[0] == '-' || frac[0] == '+') throw InvalidInput("bad decimal: '" + s + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(f, scale);
    r.canonicalize();
    return negative ? Rational(Rational(w) - r) : Rational(Rational(w) + r);
  }
  return Rational(parse_integer(s));
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  Integer lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer scaled = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    v.push_back(scaled);
  }
  for (auto& c : v) c /= content;
  return IntPolynomial(std::move(v));
}

template <class Coeff>
std::string to_pretty_string(const Polynomial<Coeff>& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Coeff c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    bool negative = sgn(c) < 0;
    Coeff magnitude = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = magnitude == 1;
    if (!unit || i == 0) out << magnitude.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

template std::string to_pretty_string(const Polynomial<Integer>&, std::string_view);
template std::string to_pretty_string(const Polynomial<Rational>&, std::string_view);

DivisionResult divide(const RatPolynomial& numerator, const RatPolynomial& denominator) {
  if (denominator.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rational> rem = numerator.coeffs();
  int dn = denominator.degree();
  int nn = numerator.degree();
  if (nn < dn) return {RatPolynomial{}, numerator};
  std::vector<Rational> quot(static_cast<std::size_t>(nn - dn + 1), Rational(0));
  const Rational& lead = denominator.leading();
  for (int i = nn - dn; i >= 0; --i) {
    Rational factor = rem[static_cast<std::size_t>(i + dn)] / lead;
    quot[static_cast<std::size_t>(i)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dn; ++j)
      rem[static_cast<std::size_t>(i + j)] -= factor * denominator.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

IntDivisionResult divide_monic(const IntPolynomial& numerator, const IntPolynomial& monic) {
  if (monic.is_zero() || monic.leading() != 1) throw InvalidInput("divisor must be monic");
  std::vector<Integer> rem = numerator.coeffs();
  int dn = monic.degree();
  int nn = numerator.degree();
  if (nn < dn) return {IntPolynomial{}, numerator};
  std::vector<Integer> quot(static_cast<std::size_t>(nn - dn + 1), Integer(0));
  for (int i = nn - dn; i >= 0; --i) {
    Integer factor = rem[static_cast<std::size_t>(i + dn)];
    quot[static_cast<std::size_t>(i)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dn; ++j)
      rem[static_cast<std::size_t>(i + j)] -= factor * monic.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

namespace {

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return Rational(1) / p.leading() * p;
}

}  // namespace

RatPolynomial poly_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  RatPolynomial x = a;
  RatPolynomial y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

IntPolynomial squarefree_part(const IntPolynomial& poly) {
  if (poly.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  RatPolynomial p = to_rational(poly);
  if (poly.degree() == 0) return IntPolynomial{1};
  RatPolynomial g = poly_gcd(p, p.derivative());
  return primitive_part(divide(p, g).quotient);
}

unsigned descartes_sign_changes(const IntPolynomial& poly) {
  if (poly.is_zero()) throw InvalidInput("Descartes rule on the zero polynomial");
  unsigned changes = 0;
  int last = 0;
  for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it) {
    int s = sgn(*it);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RationalInterval::RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw InvalidInput("interval with lo > hi");
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RationalInterval operator*(const Rational& s, const RationalInterval& a) {
  Rational x = s * a.lo, y = s * a.hi;
  return x <= y ? RationalInterval{x, y} : RationalInterval{y, x};
}

RationalInterval square(const RationalInterval& x) {
  Rational l2 = x.lo * x.lo, h2 = x.hi * x.hi;
  Rational top = std::max(l2, h2);
  if (x.lo <= 0 && x.hi >= 0) return {Rational(0), top};
  return {std::min(l2, h2), top};
}

namespace {

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 || mpz_perfect_square_p(x.get_den_mpz_t()) == 0)
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return Rational(n, d);
}

// lo^2 <= x <= hi^2 with hi - lo <= tolerance.
RationalInterval sqrt_bracket(const Rational& x, const Rational& tolerance) {
  if (auto r = exact_sqrt(x)) return RationalInterval::point(*r);
  Rational lo = 0;
  Rational hi = x > 1 ? x : Rational(1);
  while (hi - lo > tolerance) {
    Rational mid = (lo + hi) / 2;
    if (mid * mid <= x) lo = mid; else hi = mid;
  }
  return {lo, hi};
}

}  // namespace

RationalInterval interval_sqrt(const RationalInterval& x, const Rational& tolerance) {
  if (sgn(x.lo) < 0) throw InvalidInput("square root of an interval with negative part");
  return {sqrt_bracket(x.lo, tolerance).lo, sqrt_bracket(x.hi, tolerance).hi};
}

namespace {

std::vector<RatPolynomial> sturm_sequence(const IntPolynomial& squarefree) {
  std::vector<RatPolynomial> seq;
  seq.push_back(to_rational(squarefree));
  seq.push_back(seq.back().derivative());
  while (!seq.back().is_zero()) {
    RatPolynomial r = divide(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    // Positive rescaling keeps the signs and the numbers small.
    Rational scale = abs(r.leading());
    seq.push_back(Rational(-1) / scale * r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

unsigned count_variations(const std::vector<int>& signs) {
  unsigned v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Variations at a finite point or at -inf / +inf.
unsigned variations_at(const std::vector<RatPolynomial>& seq, const Bound& at, bool at_minus_infinity) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) {
    if (at) {
      signs.push_back(sgn(p.evaluate(*at)));
    } else {
      int s = sgn(p.leading());
      if (at_minus_infinity && p.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
  }
  return count_variations(signs);
}

class SturmCounter {
 public:
  explicit SturmCounter(const IntPolynomial& squarefree)
      : poly_(squarefree), seq_(sturm_sequence(squarefree)) {}

  // Roots in the open interval (lo, hi).
  unsigned count(const Bound& lo, const Bound& hi) const {
    if (lo && hi && *lo >= *hi) return 0;
    unsigned vlo = variations_at(seq_, lo, true);
    unsigned vhi = variations_at(seq_, hi, false);
    // Sturm counts (lo, hi]; drop hi itself when it is a root.
    unsigned n = vlo - vhi;
    if (hi && sgn(poly_.evaluate(Rational(*hi))) == 0) --n;
    return n;
  }

  bool is_root(const Rational& x) const { return sgn(poly_.evaluate(x)) == 0; }

 private:
  IntPolynomial poly_;
  std::vector<RatPolynomial> seq_;
};

}  // namespace

unsigned real_root_count(const IntPolynomial& poly, const Bound& lo, const Bound& hi) {
  if (poly.is_zero()) throw InvalidInput("root count of the zero polynomial");
  if (poly.degree() == 0) return 0;
  SturmCounter counter(squarefree_part(poly));
  return counter.count(lo, hi);
}

Rational cauchy_root_bound(const IntPolynomial& poly) {
  if (poly.degree() < 1) return 1;
  Rational best = 0;
  for (int i = 0; i < poly.degree(); ++i) {
    Rational r(abs(poly.coeff(static_cast<std::size_t>(i))), abs(poly.leading()));
    r.canonicalize();
    best = std::max(best, r);
  }
  return best + 1;
}

namespace {

struct Isolator {
  const SturmCounter& counter;
  const Rational& width;
  std::vector<RationalInterval>& out;

  // (lo, hi) holds n roots; neither endpoint is a root.
  void run(const Rational& lo, const Rational& hi, unsigned n) {
    if (n == 0) return;
    if (n == 1 && hi - lo <= width) {
      out.emplace_back(lo, hi);
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (!counter.is_root(mid)) {
      run(lo, mid, counter.count(lo, mid));
      run(mid, hi, counter.count(mid, hi));
      return;
    }
    // Exact rational root at the split point: emit it, then pull the inner
    // endpoints away from it until they are roots-free neighbours.
    Rational left = pull_away(lo, mid);
    Rational right = pull_away(hi, mid);
    run(lo, left, counter.count(lo, left));
    out.push_back(RationalInterval::point(mid));
    run(right, hi, counter.count(right, hi));
  }

  Rational pull_away(const Rational& outer, const Rational& root) const {
    Rational step = (root - outer) / 2;
    for (;;) {
      Rational candidate = root - step;
      Bound a = std::min(candidate, root), b = std::max(candidate, root);
      if (!counter.is_root(candidate) && counter.count(a, b) == 0) return candidate;
      step /= 2;
    }
  }
};

}  // namespace

std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& poly, const Rational& width) {
  if (sgn(width) <= 0) throw InvalidInput("isolation width must be positive");
  if (poly.is_zero()) throw InvalidInput("root isolation of the zero polynomial");
  std::vector<RationalInterval> out;
  if (poly.degree() == 0) return out;
  IntPolynomial sf = squarefree_part(poly);
  SturmCounter counter(sf);
  Rational bound = cauchy_root_bound(sf);
  Rational lo = -bound, hi = bound;
  Isolator{counter, width, out}.run(lo, hi, counter.count(lo, hi));
  return out;
}

RationalInterval refine_root(const IntPolynomial& squarefree, RationalInterval interval,
                             const Rational& width) {
  if (interval.lo == interval.hi) return interval;
  int slo = sgn(squarefree.evaluate(interval.lo));
  int shi = sgn(squarefree.evaluate(interval.hi));
  if (slo == 0) return RationalInterval::point(interval.lo);
  if (shi == 0) return RationalInterval::point(interval.hi);
  if (slo == shi) throw InvalidInput("refine_root needs a sign change at the endpoints");
  while (interval.width() > width) {
    Rational mid = interval.midpoint();
    int sm = sgn(squarefree.evaluate(mid));
    if (sm == 0) return RationalInterval::point(mid);
    if (sm == slo) interval.lo = mid; else interval.hi = mid;
  }
  return interval;
}

std::optional<Rational> rational_double_root(const RatPolynomial& cubic) {
  if (cubic.degree() != 3) throw InvalidInput("rational_double_root expects a cubic");
  RatPolynomial g = poly_gcd(cubic, cubic.derivative());
  switch (g.degree()) {
    case 0:
      return std::nullopt;
    case 1:
      return Rational(-g.coeff(0));
    default:
      // (x - r)^2 = x^2 - 2r x + r^2
      return Rational(-g.coeff(1) / 2);
  }
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const IntPolynomial& poly) {
  if (poly.is_zero()) throw InvalidInput("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  std::vector<Integer> c = poly.coeffs();
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  IntPolynomial reduced(std::vector<Integer>(c.begin() + static_cast<long>(shift), c.end()));
  if (reduced.degree() >= 1) {
    for (const Integer& p : positive_divisors(reduced.coeff(0))) {
      for (const Integer& q : positive_divisors(reduced.leading())) {
        for (int s : {-1, 1}) {
          Rational candidate(Integer(s * p), q);
          candidate.canonicalize();
          if (reduced.evaluate(candidate) == 0 &&
              std::find(roots.begin(), roots.end(), candidate) == roots.end())
            roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

struct Echelon {
  RationalMatrix rows;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Reduced row echelon form of [a | extra columns already appended].
Echelon reduce(RationalMatrix m, std::size_t columns) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col] == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rows = std::move(m);
  return e;
}

}  // namespace

std::size_t matrix_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  std::size_t cols = m.front().size();
  return reduce(std::move(m), cols).pivots.size();
}

std::optional<std::vector<Rational>> solve_particular(RationalMatrix a, std::vector<Rational> b) {
  if (a.size() != b.size()) throw InvalidInput("solve: row count mismatch");
  if (a.empty()) return std::vector<Rational>{};
  std::size_t cols = a.front().size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != cols) throw InvalidInput("solve: ragged matrix");
    a[i].push_back(b[i]);
  }
  Echelon e = reduce(std::move(a), cols);
  for (std::size_t r = e.pivots.size(); r < e.rows.size(); ++r)
    if (e.rows[r][cols] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rows[r][cols];
  return x;
}

std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw InvalidInput("solve_square: matrix is not square");
  if (matrix_rank(a) != n) return std::nullopt;
  return solve_particular(std::move(a), std::move(b));
}

RationalMatrix null_space(RationalMatrix a, std::size_t columns) {
  for (const auto& row : a)
    if (row.size() != columns) throw InvalidInput("null_space: ragged matrix");
  Echelon e = reduce(std::move(a), columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace circle_orbit
