// Copyright 2026 The cfspectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfspectra/algebraic.hpp"

#include <algorithm>
#include <utility>

namespace cfspectra {
namespace {

// Upper bound on the number of real roots of p in the open interval (lo, hi)
// by Descartes' rule of signs after mapping (lo, hi) onto (0, +inf).
// Exact when the result is 0 or 1.
int descartes_count(const IntPolynomial& p, const Dyadic& lo, const Dyadic& hi) {
  const Dyadic width = hi - lo;
  const long e = std::min(lo.exponent(), width.exponent());
  const Int start = lo.scaled(-e).floor();
  const Int step = width.scaled(-e).floor();
  // r(y) = (scale) * p(2^e y), integer coefficients
  IntPolynomial r;
  if (e < 0) {
    r = p.scaled_argument(static_cast<unsigned long>(-e));
  } else {
    std::vector<Int> c(p.coeffs().begin(), p.coeffs().end());
    for (std::size_t i = 1; i < c.size(); ++i) mpz_mul_2exp(c[i].get_mpz_t(), c[i].get_mpz_t(), e * i);
    r = IntPolynomial(std::move(c));
  }
  IntPolynomial shifted = r.taylor_shift(start);
  std::vector<Int> c(shifted.coeffs().begin(), shifted.coeffs().end());
  Int wpow = 1;
  for (Int& x : c) {
    x *= wpow;
    wpow *= step;
  }
  IntPolynomial on_unit(std::move(c));
  return on_unit.reversed().taylor_shift(Int(1)).sign_variations();
}

// Shrinks an open interval holding exactly one root until neither endpoint
// is a root, so the endpoints bracket a sign change.
Interval separate_endpoints(const IntPolynomial& p, Dyadic lo, Dyadic hi) {
  while (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) {
    Dyadic mid = Dyadic::midpoint(lo, hi);
    if (p.sign_at(mid) == 0) return Interval(mid);
    if (descartes_count(p, lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return Interval(lo, hi);
}

// Rational with the smallest denominator in [lo, hi] for 0 < lo <= hi.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
  Int fl = floor_of(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational frac_lo = lo - fl;
  Rational frac_hi = hi - fl;
  Rational inner = simplest_positive(1 / frac_hi, 1 / frac_lo);
  Rational out = fl + 1 / inner;
  out.canonicalize();
  return out;
}

// Exact comparison of x against a rational.
int compare_rational(const AlgebraicNumber& x, const Rational& r) {
  const Interval& iv = x.isolating();
  if (iv.is_point()) {
    int c = cmp(iv.lo().to_rational(), r);
    return (c > 0) - (c < 0);
  }
  if (compare(iv.hi(), r) < 0) return -1;
  if (compare(iv.lo(), r) > 0) return 1;
  int s = x.minpoly().sign_at(r);
  if (s == 0) return 0;
  return s == x.sign_at_lo() ? 1 : -1;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(IntPolynomial poly, Interval isolating)
    : minpoly_(std::move(poly)), isolating_(std::move(isolating)) {
  if (minpoly_.degree() < 1) throw DomainError("degenerate input: constant polynomial");
  if (isolating_.is_point()) {
    if (minpoly_.sign_at(isolating_.lo()) != 0) throw DomainError("point interval is not a root");
    sign_lo_ = 0;
    return;
  }
  sign_lo_ = minpoly_.sign_at(isolating_.lo());
  const int sign_hi = minpoly_.sign_at(isolating_.hi());
  if (sign_lo_ == 0 || sign_hi == 0 || sign_lo_ == sign_hi) {
    throw DomainError("interval does not bracket a sign change of the polynomial");
  }
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
  IntPolynomial p = IntPolynomial::linear_root(r);
  const Int& den = r.get_den();
  if (mpz_popcount(den.get_mpz_t()) == 1) {
    long k = static_cast<long>(bit_length(den)) - 1;
    return AlgebraicNumber(p, Interval(Dyadic(r.get_num(), -k)));
  }
  long bits = 2 * static_cast<long>(bit_length(den)) + 2;
  return AlgebraicNumber(p, Interval::from_rational(r, bits));
}

void AlgebraicNumber::bisect_once() {
  Dyadic mid = isolating_.mid();
  int s = minpoly_.sign_at(mid);
  if (s == 0) {
    isolating_ = Interval(mid);
    sign_lo_ = 0;
  } else if (s == sign_lo_) {
    isolating_ = Interval(mid, isolating_.hi());
  } else {
    isolating_ = Interval(isolating_.lo(), mid);
  }
}

const Interval& AlgebraicNumber::refine_to(long bits) {
  if (minpoly_.degree() == 1 && !isolating_.is_point()) {
    // Linear: jump straight to the grid around -c0/c1.
    Rational root(-minpoly_[0], minpoly_[1]);
    root.canonicalize();
    Interval grid = Interval::from_rational(root, bits + 1);
    Interval fine(std::max(grid.lo(), isolating_.lo()), std::min(grid.hi(), isolating_.hi()));
    if (fine.is_point()) {
      isolating_ = fine;
      sign_lo_ = 0;
    } else if (fine.width_log2() < isolating_.width_log2()) {
      isolating_ = fine;
      sign_lo_ = minpoly_.sign_at(fine.lo());
    }
  }
  while (!isolating_.is_point() && isolating_.width_log2() > -bits) bisect_once();
  return isolating_;
}

Interval AlgebraicNumber::enclosure(long bits) const {
  AlgebraicNumber copy = *this;
  return copy.refine_to(bits);
}

std::optional<Rational> AlgebraicNumber::as_rational() const {
  if (isolating_.is_point()) return isolating_.lo().to_rational();
  if (minpoly_.degree() == 1) {
    Rational r(-minpoly_[0], minpoly_[1]);
    r.canonicalize();
    return r;
  }
  // A rational root u/v of a primitive polynomial has v | lc. Two distinct
  // fractions with denominators <= |lc| are at least 1/lc^2 apart, so once
  // the interval is narrower than that the simplest fraction inside is the
  // only candidate.
  Int lc = abs(minpoly_.leading());
  Interval iv = enclosure(2 * static_cast<long>(bit_length(lc)) + 1);
  if (iv.is_point()) return iv.lo().to_rational();
  Rational s = simplest_rational(iv.lo().to_rational(), iv.hi().to_rational());
  if (s.get_den() <= lc && minpoly_.sign_at(s) == 0) return s;
  return std::nullopt;
}

IntPolynomial AlgebraicNumber::reduced_minpoly() const {
  if (auto r = as_rational()) return IntPolynomial::linear_root(*r);
  IntPolynomial p = minpoly_;
  for (const AlgebraicNumber& root : isolate_real_roots(minpoly_)) {
    if (auto r = root.as_rational()) p = divide_exact(p, IntPolynomial::linear_root(*r));
  }
  return p.primitive_part();
}

int AlgebraicNumber::degree() const { return reduced_minpoly().degree(); }

std::vector<AlgebraicNumber> isolate_real_roots(const IntPolynomial& input) {
  if (input.is_zero()) throw DomainError("degenerate input: zero polynomial");
  if (input.degree() < 1) throw DomainError("degenerate input: constant polynomial");
  const IntPolynomial p = squarefree_part(input);
  const long k = static_cast<long>(p.root_bound_log2());
  std::vector<AlgebraicNumber> roots;
  // Depth-first, left half first, so roots come out ascending.
  std::vector<std::pair<Dyadic, Dyadic>> stack{{Dyadic(-1, k), Dyadic(1, k)}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (lo == hi) {
      roots.emplace_back(p, Interval(lo));
      continue;
    }
    int count = descartes_count(p, lo, hi);
    if (count == 0) continue;
    if (count == 1) {
      roots.emplace_back(p, separate_endpoints(p, lo, hi));
      continue;
    }
    Dyadic mid = Dyadic::midpoint(lo, hi);
    stack.emplace_back(mid, hi);
    if (p.sign_at(mid) == 0) stack.emplace_back(mid, mid);
    stack.emplace_back(lo, mid);
  }
  // Neighbours can share a bisection point; shrink until the intervals are disjoint.
  for (std::size_t i = 1; i < roots.size(); ++i) {
    while (roots[i - 1].isolating().hi() >= roots[i].isolating().lo()) {
      for (AlgebraicNumber* r : {&roots[i - 1], &roots[i]}) {
        if (!r->isolating().is_point()) r->refine_to(1 - r->isolating().width_log2());
      }
    }
  }
  return roots;
}

Interval refine_to(AlgebraicNumber& x, long bits) {
  if (bits < 1) throw DomainError("refine_to requires bits >= 1");
  return x.refine_to(bits);
}

Int floor_of(const AlgebraicNumber& x) {
  const Interval& iv = x.isolating();
  if (iv.is_point()) return iv.lo().floor();
  Int lo_int = iv.lo().ceil();
  Int hi_int = iv.hi().floor();
  if (lo_int > hi_int) return iv.lo().floor();
  // Largest integer t in [lo_int, hi_int] with root > t; P(t) != 0 there
  // unless t is the root itself.
  Int best = lo_int - 1;
  Int left = lo_int, right = hi_int;
  while (left <= right) {
    Int mid = floor_div(left + right, Int(2));
    int s = x.minpoly().sign_at(mid);
    if (s == 0) return mid;
    if (s == x.sign_at_lo()) {
      best = mid;
      left = mid + 1;
    } else {
      right = mid - 1;
    }
  }
  return best;
}

int sign_of_affine(const Int& c, const Int& d, const AlgebraicNumber& x) {
  if (c == 0) return sgn(d);
  Rational pole(-d, c);
  pole.canonicalize();
  return sgn(c) * compare_rational(x, pole);
}

AlgebraicNumber moebius_apply(const Mat2& m, const AlgebraicNumber& x) {
  if (m.det() == 0) throw DomainError("singular matrix in Moebius action");
  if (sign_of_affine(m.c, m.d, x) == 0) throw DomainError("pole: c*x + d == 0");
  if (auto r = x.as_rational()) {
    Rational y = (m.a * *r + m.b) / (m.c * *r + m.d);
    y.canonicalize();
    return AlgebraicNumber::from_rational(y);
  }
  // x = (d y - b) / (-c y + a)
  IntPolynomial q = x.minpoly().moebius_substitute(m.d, -m.b, -m.c, m.a);
  std::vector<AlgebraicNumber> candidates = isolate_real_roots(q);
  AlgebraicNumber src = x;
  auto image = [&m](const Dyadic& t) {
    Rational v = t.to_rational();
    Rational y = (m.a * v + m.b) / (m.c * v + m.d);
    y.canonicalize();
    return y;
  };
  long bits = 8;
  for (;;) {
    const Interval& iv = src.isolating();
    Rational lo_den = m.c * iv.lo().to_rational() + m.d;
    Rational hi_den = m.c * iv.hi().to_rational() + m.d;
    if (sgn(lo_den) != 0 && sgn(lo_den) == sgn(hi_den)) {
      Rational y0 = image(iv.lo()), y1 = image(iv.hi());
      if (y1 < y0) std::swap(y0, y1);
      std::vector<std::size_t> hits;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Interval& ci = candidates[i].isolating();
        if (compare(ci.hi(), y0) >= 0 && compare(ci.lo(), y1) <= 0) hits.push_back(i);
      }
      if (hits.size() == 1) return candidates[hits.front()];
      for (std::size_t i : hits) candidates[i].refine_to(bits);
    }
    bits *= 2;
    src.refine_to(bits);
  }
}

AlgebraicNumber quadratic_conjugate(const AlgebraicNumber& x) {
  IntPolynomial q = x.reduced_minpoly();
  if (q.degree() != 2) throw DomainError("conjugate defined only for quadratics");
  std::vector<AlgebraicNumber> roots = isolate_real_roots(q);
  if (roots.size() != 2) throw DomainError("quadratic without two real roots");
  Rational axis(-q[1], 2 * q[2]);
  axis.canonicalize();
  return compare_rational(x, axis) > 0 ? roots[0] : roots[1];
}

bool same_number(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  if (auto r = x.as_rational()) return compare_rational(y, *r) == 0;
  if (auto r = y.as_rational()) return compare_rational(x, *r) == 0;
  IntPolynomial g = gcd(x.minpoly(), y.minpoly());
  if (g.degree() < 1) return false;
  auto is_root_of_g = [&g](const AlgebraicNumber& v) {
    return g.sign_at(v.isolating().lo()) * g.sign_at(v.isolating().hi()) < 0;
  };
  if (!is_root_of_g(x) || !is_root_of_g(y)) return false;
  std::vector<AlgebraicNumber> groots = isolate_real_roots(g);
  AlgebraicNumber u = x, v = y;
  long bits = 4;
  for (;;) {
    if (!u.isolating().overlaps(v.isolating())) return false;
    for (const AlgebraicNumber& r : groots) {
      if (r.isolating().contains(u.isolating()) && r.isolating().contains(v.isolating())) return true;
    }
    bits *= 2;
    u.refine_to(bits);
    v.refine_to(bits);
  }
}

int compare(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  if (auto r = y.as_rational()) return compare_rational(x, *r);
  if (auto r = x.as_rational()) return -compare_rational(y, *r);
  if (same_number(x, y)) return 0;
  AlgebraicNumber u = x, v = y;
  long bits = 4;
  while (u.isolating().overlaps(v.isolating())) {
    bits *= 2;
    u.refine_to(bits);
    v.refine_to(bits);
  }
  return u.isolating().hi() < v.isolating().lo() ? -1 : 1;
}

Rational simplest_rational(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw DomainError("simplest_rational: empty interval");
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_positive(-hi, -lo);
  return simplest_positive(lo, hi);
}

AlgebraicNumber real_root(const IntPolynomial& p, int index) {
  std::vector<AlgebraicNumber> roots = isolate_real_roots(p);
  const int n = static_cast<int>(roots.size());
  int i = index < 0 ? n + index : index;
  if (i < 0 || i >= n) {
    throw DomainError("polynomial " + p.to_text() + " has " + std::to_string(n) + " real roots; index " +
                      std::to_string(index) + " is out of range");
  }
  return roots[static_cast<std::size_t>(i)];
}

}  // namespace cfspectra
