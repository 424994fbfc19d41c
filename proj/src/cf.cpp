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

#include "cfspectra/cf.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "cfspectra/enclosure.hpp"

namespace cfspectra {

std::vector<Int> CFExpansion::full_word() const {
  std::vector<Int> w;
  w.reserve(quotients.size() + 1);
  w.push_back(a0);
  w.insert(w.end(), quotients.begin(), quotients.end());
  return w;
}

CFExpansion CFExpansion::from_word(Int a0, std::vector<Int> quotients, bool terminated) {
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (quotients[i] < 1) {
      throw DomainError("partial quotient a_" + std::to_string(i + 1) + " = " + quotients[i].get_str() +
                        " is not positive");
    }
  }
  CFExpansion cf;
  cf.a0 = std::move(a0);
  cf.quotients = std::move(quotients);
  cf.terminated = terminated;
  return cf;
}

ConvergentTable::ConvergentTable(const CFExpansion& cf) {
  std::size_t n = cf.depth() + 1;
  p_.reserve(n + 2);
  q_.reserve(n + 2);
  p_ = {0, 1};
  q_ = {1, 0};
  for (std::size_t i = 0; i < n; ++i) {
    const Int& a = cf.at(i);
    p_.push_back(a * p_[i + 1] + p_[i]);
    q_.push_back(a * q_[i + 1] + q_[i]);
  }
}

namespace {

// Search state for the next partial quotient: the current complete quotient
// is the unique root of `poly` in (lo, hi); hi empty means +infinity.
struct QuotientState {
  IntPolynomial poly;
  Rational lo;
  std::optional<Rational> hi;
};

struct FloorResult {
  Int value;
  bool exact = false;  // the complete quotient equals `value`
};

// Position of the root relative to t: +1 above, -1 below, 0 equal. Sign
// tests are only meaningful inside the isolating interval.
int root_versus(const QuotientState& s, int sign_lo, const Int& t) {
  if (t <= s.lo) return 1;
  if (s.hi && t >= *s.hi) return -1;
  int sg = s.poly.sign_at(t);
  if (sg == 0) return 0;
  return sg == sign_lo ? 1 : -1;
}

FloorResult certified_floor(const QuotientState& s, const ExpandOptions& options) {
  int sign_lo = s.poly.sign_at(s.lo);
  // Invariant: below < root < above.
  Int below = floor_of(s.lo);
  Int above = s.hi ? ceil_of(*s.hi) : pow2(s.poly.root_bound_log2()) + 1;
  if (above - below == 1) return {below, false};
  std::size_t budget = options.bit_budget;
  Int step = 1;
  while (true) {
    Int t = below + step;
    if (t >= above) break;
    int r = root_versus(s, sign_lo, t);
    if (r == 0) return {t, true};
    if (r < 0) {
      above = t;
      break;
    }
    below = t;
    step *= 2;
    while (bit_length(step) > budget) {
      budget *= 2;
      if (budget > options.hard_cap) {
        throw UndecidedError("partial quotient exceeds the certification cap of " +
                             std::to_string(options.hard_cap) + " bits");
      }
    }
  }
  while (above - below > 1) {
    Int mid = (above + below) / 2;
    int r = root_versus(s, sign_lo, mid);
    if (r == 0) return {mid, true};
    if (r > 0) {
      below = mid;
    } else {
      above = mid;
    }
  }
  return {below, false};
}

}  // namespace

CFExpansion expand(const AlgebraicNumber& x, std::size_t depth, const ExpandOptions& options) {
  if (auto r = x.as_rational()) {
    CFExpansion cf = expand_rational(*r);
    if (cf.quotients.size() > depth) {
      cf.quotients.resize(depth);
      cf.terminated = false;
    }
    cf.source = x;
    return cf;
  }
  CFExpansion cf;
  cf.source = x;
  QuotientState s{x.reduced_minpoly(), x.isolating().lo().to_rational(), x.isolating().hi().to_rational()};
  for (std::size_t n = 0; n <= depth; ++n) {
    FloorResult f = certified_floor(s, options);
    if (n == 0) {
      cf.a0 = f.value;
    } else {
      cf.quotients.push_back(f.value);
    }
    if (f.exact) {
      cf.terminated = true;
      break;
    }
    if (n == depth) break;
    const Int& a = f.value;
    Rational lo = std::max(s.lo, Rational(a));
    Rational hi = s.hi ? std::min(*s.hi, Rational(a + 1)) : Rational(a + 1);
    // y = 1 / (x - a) maps (lo, hi) onto (1/(hi-a), 1/(lo-a)).
    s.poly = s.poly.taylor_shift(a).reversed().primitive_part();
    Rational new_lo = 1 / Rational(hi - a);
    std::optional<Rational> new_hi;
    if (lo != a) new_hi = 1 / Rational(lo - a);
    s.lo = new_lo;
    s.hi = new_hi;
    if (s.poly.sign_at(s.lo) == 0) {
      throw DomainError("internal: complete quotient collided with its bound");
    }
  }
  return cf;
}

CFExpansion expand_rational(const Rational& r) {
  CFExpansion cf;
  cf.terminated = true;
  Int num = r.get_num();
  Int den = r.get_den();
  cf.a0 = floor_div(num, den);
  Int rem = num - cf.a0 * den;
  while (rem != 0) {
    num = den;
    den = rem;
    Int a = floor_div(num, den);
    rem = num - a * den;
    cf.quotients.push_back(a);
  }
  // [...; a, 1] is the same value as [...; a + 1]; keep the canonical short form.
  if (!cf.quotients.empty() && cf.quotients.back() == 1) {
    cf.quotients.pop_back();
    if (cf.quotients.empty()) {
      cf.a0 += 1;
    } else {
      cf.quotients.back() += 1;
    }
  }
  return cf;
}

std::vector<Convergent> convergents(const CFExpansion& cf) {
  ConvergentTable t(cf);
  std::vector<Convergent> out;
  out.reserve(cf.depth() + 1);
  for (long n = 0; n <= t.last(); ++n) out.push_back({t.p(n), t.q(n)});
  return out;
}

Mat2 convergent_matrix(std::span<const Int> word) {
  Mat2 m;
  for (const Int& b : word) {
    // m * [[b, 1], [1, 0]]
    Int a = m.a * b + m.b;
    Int c = m.c * b + m.d;
    m.b = std::exchange(m.a, std::move(a));
    m.d = std::exchange(m.c, std::move(c));
  }
  return m;
}

Mat2 word_matrix(std::span<const Int> word) {
  if (word.empty()) throw DomainError("word_matrix needs a nonempty word");
  return convergent_matrix(word);
}

Rational finite_cf_value(std::span<const Int> word) {
  if (word.empty()) throw DomainError("empty continued fraction");
  Mat2 m = convergent_matrix(word);
  if (m.c == 0) throw DomainError("continued fraction has a zero denominator");
  Rational v(m.a, m.c);
  v.canonicalize();
  return v;
}

bool IdentityReport::all_pass() const { return failures() == 0; }

std::size_t IdentityReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

std::size_t IdentityReport::count(const std::string& identity) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.identity == identity; }));
}

namespace {

// Decides |x - p/q| < 1/(q q_next) with enclosures of x at increasing precision.
// Returns +1 (holds), -1 (violated), 0 (undecided at max_bits).
int approximation_holds(const AlgebraicNumber& x, Interval& cached, const Int& p, const Int& q, const Int& q_next,
                        long start_bits, long max_bits) {
  Rational target(p, q);
  target.canonicalize();
  Rational bound(1, q * q_next);
  bound.canonicalize();
  long bits = std::max<long>(start_bits, 2 * static_cast<long>(bit_length(q_next)) + 2 * static_cast<long>(bit_length(q)) + 16);
  while (true) {
    if (cached.width_log2() > -bits) cached = x.enclosure(bits);
    Rational lo = cached.lo().to_rational() - target;
    Rational hi = cached.hi().to_rational() - target;
    Rational abs_lo = (lo > 0) ? lo : (hi < 0 ? Rational(-hi) : Rational(0));
    Rational abs_hi = std::max(abs(lo), abs(hi));
    if (abs_hi < bound) return 1;
    if (abs_lo >= bound) return -1;
    if (bits >= max_bits) return 0;
    bits = std::min(max_bits, bits * 2);
  }
}

}  // namespace

IdentityReport verify_cf_identities(const CFExpansion& cf, std::size_t depth, const VerifyOptions& options) {
  IdentityReport report;
  long last = std::min<long>(static_cast<long>(depth), static_cast<long>(cf.depth()));
  ConvergentTable t(cf);
  std::vector<Int> word = cf.full_word();

  for (long n = -1; n <= last; ++n) {
    Int lhs = t.p(n) * t.q(n - 1) - t.p(n - 1) * t.q(n);
    Int rhs = ((n + 1) % 2 == 0) ? 1 : -1;
    IdentityCheck c{"determinant", n, 0, lhs == rhs, {}};
    if (!c.pass) c.detail = "got " + lhs.get_str() + ", expected " + rhs.get_str();
    report.checks.push_back(std::move(c));
  }

  for (long n = 1; n <= last; ++n) {
    // [a_n; a_{n-1}, ..., a_1]
    std::vector<Int> rev(word.begin() + 1, word.begin() + n + 1);
    std::reverse(rev.begin(), rev.end());
    Rational lhs(t.q(n), t.q(n - 1));
    lhs.canonicalize();
    Rational rhs = finite_cf_value(rev);
    IdentityCheck c{"mirror_ratio", n, 0, lhs == rhs, {}};
    if (!c.pass) c.detail = "q_n/q_{n-1} = " + lhs.get_str() + ", reversed value " + rhs.get_str();
    report.checks.push_back(std::move(c));
  }

  for (long n = 0; n <= last; ++n) {
    Mat2 m = word_matrix(std::span<const Int>(word.data(), static_cast<std::size_t>(n + 1)));
    IdentityCheck c{"word_matrix", n, 0, m == t.matrix(n), {}};
    if (!c.pass) c.detail = m.to_string() + " vs " + t.matrix(n).to_string();
    report.checks.push_back(std::move(c));
  }

  for (long n = 1; n < last; ++n) {
    for (long m = 1; m <= options.max_m && m + n <= last; ++m) {
      // q_{m+n}^2 >= 2^(m-1) q_n^2
      Int lhs = t.q(m + n) * t.q(m + n);
      Int rhs = pow2(static_cast<unsigned long>(m - 1)) * t.q(n) * t.q(n);
      report.checks.push_back({"growth", n, m, lhs >= rhs, lhs >= rhs ? "" : "q_{m+n} below bound"});
    }
  }

  if (cf.source && !cf.source->as_rational()) {
    report.approximation_checked = true;
    Interval cached = cf.source->isolating();
    for (long n = 0; n < last; ++n) {
      int r = approximation_holds(*cf.source, cached, t.p(n), t.q(n), t.q(n + 1), options.start_bits, options.max_bits);
      IdentityCheck c{"approximation", n, 0, r > 0, {}};
      if (r < 0) c.detail = "bound violated";
      if (r == 0) c.detail = "undecided at " + std::to_string(options.max_bits) + " bits";
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

std::vector<Int> minimal_period(std::span<const Int> cycle) {
  std::size_t n = cycle.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = cycle[i] == cycle[i - d];
    if (ok) return {cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(d)};
  }
  return {cycle.begin(), cycle.end()};
}

PeriodicForm detect_period(const AlgebraicNumber& x) {
  if (x.degree() != 2) throw DomainError("period detection needs a quadratic irrational");
  IntPolynomial f = x.reduced_minpoly().primitive_part();
  const Int& A = f[2];
  const Int& B = f[1];
  const Int& C = f[0];
  Int D = B * B - 4 * A * C;
  AlgebraicNumber conj = quadratic_conjugate(x);
  bool larger = compare(x, conj) > 0;
  // x = (P + sqrt D) / Q with Q | D - P^2.
  Int P = larger ? Int(-B) : B;
  Int Q = larger ? Int(2 * A) : Int(-2 * A);
  Int s = isqrt(D);

  std::map<std::pair<Int, Int>, std::size_t> seen;
  std::vector<Int> quotients;
  while (true) {
    auto key = std::make_pair(P, Q);
    if (auto it = seen.find(key); it != seen.end()) {
      std::size_t start = it->second;
      PeriodicForm form;
      form.preperiod.assign(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(start));
      std::span<const Int> cycle(quotients.data() + start, quotients.size() - start);
      form.period = minimal_period(cycle);
      return form;
    }
    seen.emplace(std::move(key), quotients.size());
    Int a = Q > 0 ? floor_div(P + s, Q) : floor_div(P + s + 1, Q);
    quotients.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
}

GrowthReport growth_metrics(const CFExpansion& cf, const CFExpansion* other, long bits) {
  if (cf.depth() < 1 || (other && other->depth() < 1)) {
    throw DomainError("growth metrics need at least one partial quotient");
  }
  ConvergentTable t(cf);
  std::optional<ConvergentTable> t2;
  long last = t.last();
  if (other) {
    t2.emplace(*other);
    last = std::min(last, t2->last());
  }
  GrowthReport report;
  for (long n = 1; n <= last; ++n) {
    Int prod = other ? Int(t.q(n) * t2->q(n)) : t.q(n);
    Interval v = enclose::nth_root(Interval::from_int(prod), static_cast<unsigned long>(n), bits);
    if (report.values.empty()) {
      report.max_value = v;
    } else {
      report.max_value = Interval(std::max(report.max_value.lo(), v.lo()), std::max(report.max_value.hi(), v.hi()));
    }
    report.values.push_back(std::move(v));
  }
  return report;
}

Interval value_enclosure(const CFExpansion& cf, long bits) {
  if (cf.source) return cf.source->enclosure(bits);
  ConvergentTable t(cf);
  long n = t.last();
  Rational last(t.p(n), t.q(n));
  last.canonicalize();
  if (cf.terminated) return Interval::from_rational(last, bits);
  // Any continuation lies between p_n/q_n and (p_n + p_{n-1})/(q_n + q_{n-1}).
  Rational mediant(t.p(n) + t.p(n - 1), t.q(n) + t.q(n - 1));
  mediant.canonicalize();
  return Interval::hull(Interval::from_rational(last, bits), Interval::from_rational(mediant, bits));
}

}  // namespace cfspectra
