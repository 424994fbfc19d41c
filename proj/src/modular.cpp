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


#include "cfspectra/modular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <thread>
#include <tuple>

#include "cfspectra/enclosure.hpp"

namespace cfspectra {
namespace {

using i64 = std::int64_t;

// Enumeration works in machine integers; entries stay far below 2^62.
constexpr long kMaxHeight = 1L << 20;

// s x + t y = gcd(x, y) for x, y >= 0.
struct Bezout {
  i64 g, s, t;
};

Bezout ext_gcd(i64 x, i64 y) {
  i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (y != 0) {
    const i64 q = x / y;
    x = std::exchange(y, x - q * y);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  return {x, s0, t0};
}

// (a0, b0) with a0 d - b0 c = 1, for coprime (c, d), c >= 0.
std::pair<i64, i64> complete_row(i64 c, i64 d) {
  const Bezout e = ext_gcd(d < 0 ? -d : d, c);
  return {d < 0 ? -e.s : e.s, -e.t};
}

i64 floor_to_i64(double x) { return static_cast<i64>(std::floor(x)); }

struct Candidate {
  i64 a = 0, b = 0, c = 0, d = 0;
  double distance = std::numeric_limits<double>::infinity();

  // Entries break ties so the outcome does not depend on the worker split.
  bool before(const Candidate& o) const {
    return std::tie(distance, c, d, a, b) < std::tie(o.distance, o.c, o.d, o.a, o.b);
  }
};

// The few nearest candidates sharing one norm key; doubles only rank them,
// every decision is re-made with certified enclosures.
struct Slot {
  static constexpr std::size_t kKeep = 3;
  std::array<Candidate, kKeep> best{};
  std::size_t size = 0;

  void offer(const Candidate& cand) {
    if (size == kKeep && !cand.before(best[kKeep - 1])) return;
    std::size_t pos = std::min(size, kKeep - 1);
    while (pos > 0 && cand.before(best[pos - 1])) {
      best[pos] = best[pos - 1];
      --pos;
    }
    best[pos] = cand;
    size = std::min(size + 1, kKeep);
  }
};

struct QuadraticData {
  i64 lead = 0, mid = 0, constant = 0;  // A x^2 + B x + C
  Int disc;
};

QuadraticData quadratic_data(const AlgebraicNumber& alpha) {
  if (alpha.degree() != 2) throw DomainError("quadratic norm needs an algebraic number of degree 2");
  const IntPolynomial p = alpha.reduced_minpoly();
  QuadraticData q;
  q.disc = p[1] * p[1] - 4 * p[2] * p[0];
  for (const Int* v : {&p[0], &p[1], &p[2]}) {
    if (bit_length(*v) > 20) throw DomainError("quadratic scan supports coefficients below 2^20");
  }
  q.constant = to_int64(p[0]);
  q.mid = to_int64(p[1]);
  q.lead = to_int64(p[2]);
  return q;
}

// c^2 C - c d B + d^2 A; the quadratic norm is |this| / sqrt(D).
Int quadratic_numerator(const Int& c, const Int& d, const IntPolynomial& p) {
  return c * c * p[0] - c * d * p[1] + d * d * p[2];
}

enum class Kind { rationals, classic, quadratic };

class OrbitScanner {
 public:
  OrbitScanner(const CFExpansion& xi, const std::optional<AlgebraicNumber>& alpha, long height,
               const OrbitOptions& opts)
      : xi_(xi), alpha_(alpha), height_(height), opts_(opts) {
    if (height < 1 || height > kMaxHeight) throw DomainError("height must lie in [1, 2^20]");
    if (!alpha) {
      kind_ = Kind::rationals;
    } else if (opts.mode == NormMode::quadratic) {
      kind_ = Kind::quadratic;
      quad_ = quadratic_data(*alpha);
    } else {
      kind_ = Kind::classic;
    }
    if (alpha_ && alpha_->as_rational()) throw DomainError("orbit base point must be irrational");
    window_ = opts.translate_window < 0 ? height : opts.translate_window;
    xi_d_ = value_enclosure(xi_, 64).mid().to_double();
    if (alpha_) alpha_d_ = alpha_->enclosure(64).mid().to_double();
    if (kind_ == Kind::quadratic) {
      sqrt_disc_d_ = std::sqrt(quad_.disc.get_d());
      key_limit_ = to_int64(isqrt(Int(height) * height * quad_.disc));
    } else {
      key_limit_ = height;
    }
  }

  OrbitScan run() {
    std::vector<Slot> slots = enumerate();
    OrbitScan out;
    out.candidates = candidates_;
    double best_estimate = -std::numeric_limits<double>::infinity();
    std::optional<Dyadic> best_lo;
    for (i64 key = 1; key <= key_limit_; ++key) {
      const Slot& slot = slots[static_cast<std::size_t>(key)];
      if (slot.size == 0 || below_min_norm(key)) continue;
      const double norm_d = norm_estimate(key);
      if (norm_d <= 1.0) continue;
      // Nothing in this slot can set a record unless its double estimate is close.
      const double top = exponent_estimate(slot.best[0].distance, norm_d);
      if (top < best_estimate - 1e-3) continue;
      std::optional<std::pair<Candidate, Interval>> winner;
      for (std::size_t i = 0; i < slot.size; ++i) {
        const Candidate& cand = slot.best[i];
        std::optional<Interval> dist = certified_distance(cand);
        if (!dist) {
          out.xi_in_orbit = true;
          continue;
        }
        if (!winner || dist->hi() < winner->second.hi()) winner.emplace(cand, *dist);
      }
      if (!winner) continue;
      const Interval norm = norm_enclosure(key);
      if (norm.lo() <= Dyadic(1)) continue;
      const long bits = opts_.bits;
      const Interval exponent =
          Interval::divide(-enclose::log(winner->second, bits), enclose::log(norm, bits), bits);
      if (best_lo && exponent.lo() <= *best_lo) continue;
      best_lo = exponent.lo();
      best_estimate = std::max(best_estimate, exponent.lo().to_double());
      ApproxRecord rec{UnimodularMatrix::normalize(to_mat(winner->first)), norm, winner->second, exponent};
      rec.exceeds_one = compare(exponent.lo(), Rational(1) + opts_.epsilon) > 0;
      rec.exceeds_two = compare(exponent.lo(), Rational(2) + opts_.epsilon) > 0;
      out.records.push_back(std::move(rec));
    }
    if (kind_ == Kind::quadratic) out.trend_constant = trend(out.records);
    return out;
  }

 private:
  static Mat2 to_mat(const Candidate& c) { return {Int(c.a), Int(c.b), Int(c.c), Int(c.d)}; }

  bool below_min_norm(i64 key) const {
    if (kind_ != Kind::quadratic) return key < opts_.min_norm;
    return Int(key) * key < Int(opts_.min_norm) * opts_.min_norm * quad_.disc;
  }

  double norm_estimate(i64 key) const {
    return kind_ == Kind::quadratic ? static_cast<double>(key) / sqrt_disc_d_ : static_cast<double>(key);
  }

  static double exponent_estimate(double distance, double norm) {
    if (distance <= 0) return std::numeric_limits<double>::infinity();
    return -std::log(distance) / std::log(norm);
  }

  Interval norm_enclosure(i64 key) const {
    if (kind_ != Kind::quadratic) return Interval::from_int(Int(key));
    const long bits = opts_.bits + 8;
    return Interval::divide(Interval::from_int(Int(key)), enclose::sqrt(Interval::from_int(quad_.disc), bits), bits);
  }

  // Per worker, bottom rows with c = worker, worker + stride, ...
  void scan_rows(i64 first_c, i64 stride, std::vector<Slot>& slots, std::size_t& count) const {
    const i64 h = height_;
    for (i64 c = first_c; c <= h; c += stride) {
      if (kind_ == Kind::rationals) {
        if (c == 0) continue;
        const i64 base = floor_to_i64(xi_d_ * static_cast<double>(c));
        for (i64 a : {base, base + 1}) {
          if (std::gcd(a < 0 ? -a : a, c) != 1) continue;
          ++count;
          // a d - b c = 1 with 0 <= d < c keeps the norm at c.
          i64 d = 0, b = -1;
          if (c > 1) {
            const Bezout e = ext_gcd(((a % c) + c) % c, c);
            d = ((e.s % c) + c) % c;
            b = (a * d - 1) / c;
          }
          const double dist = std::fabs(xi_d_ - static_cast<double>(a) / static_cast<double>(c));
          slots[static_cast<std::size_t>(c)].offer({a, b, c, d, dist});
        }
        continue;
      }
      const i64 d_lo = c == 0 ? 1 : -h;
      const i64 d_hi = c == 0 ? 1 : h;
      for (i64 d = d_lo; d <= d_hi; ++d) {
        if (std::gcd(c, d < 0 ? -d : d) != 1) continue;
        i64 key;
        if (kind_ == Kind::classic) {
          key = std::max(c, d < 0 ? -d : d);
        } else {
          const i64 n = c * c * quad_.constant - c * d * quad_.mid + d * d * quad_.lead;
          key = n < 0 ? -n : n;
          if (key > key_limit_) continue;
        }
        const auto [a0, b0] = complete_row(c, d);
        const double denom = static_cast<double>(c) * alpha_d_ + static_cast<double>(d);
        const double gamma = (static_cast<double>(a0) * alpha_d_ + static_cast<double>(b0)) / denom;
        for (int s : {1, -1}) {
          count += static_cast<std::size_t>(2 * window_ + 1);
          const double y = xi_d_ - s * gamma;
          const i64 t0 = floor_to_i64(y);
          for (i64 t : {t0, t0 + 1}) {
            t = std::clamp<i64>(t, -window_, window_);
            const double dist = std::fabs(y - static_cast<double>(t));
            slots[static_cast<std::size_t>(key)].offer({s * a0 + t * c, s * b0 + t * d, c, d, dist});
          }
        }
      }
    }
  }

  std::vector<Slot> enumerate() {
    const unsigned workers = std::max(1u, opts_.workers);
    const std::size_t n_slots = static_cast<std::size_t>(key_limit_) + 1;
    std::vector<std::vector<Slot>> local(workers, std::vector<Slot>(n_slots));
    std::vector<std::size_t> counts(workers, 0);
    const i64 first = kind_ == Kind::rationals ? 1 : 0;
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 1; w < workers; ++w) {
        pool.emplace_back([&, w] { scan_rows(first + w, workers, local[w], counts[w]); });
      }
      scan_rows(first, workers, local[0], counts[0]);
    }
    std::vector<Slot> merged = std::move(local[0]);
    for (unsigned w = 1; w < workers; ++w) {
      for (std::size_t k = 0; k < n_slots; ++k) {
        for (std::size_t i = 0; i < local[w][k].size; ++i) merged[k].offer(local[w][k].best[i]);
      }
    }
    candidates_ = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    return merged;
  }

  // Certified |xi - beta|, or nothing when beta equals xi exactly.
  std::optional<Interval> certified_distance(const Candidate& cand) const {
    const Mat2 m = to_mat(cand);
    for (long bits = 128; bits <= 4096; bits *= 2) {
      Interval beta;
      if (kind_ == Kind::rationals) {
        beta = Interval::from_rational(Rational(m.a, m.c), bits + 8);
      } else {
        const Interval x = alpha_->enclosure(bits + 2 * static_cast<long>(bit_length(m.c) + bit_length(m.d)) + 8);
        const Interval num = Interval::from_int(m.a) * x + Interval::from_int(m.b);
        const Interval den = Interval::from_int(m.c) * x + Interval::from_int(m.d);
        if (den.contains_zero()) continue;
        beta = Interval::divide(num, den, bits + 8);
      }
      const Interval dist = (value_enclosure(xi_, bits + 8) - beta).abs();
      if (dist.certain_sign() > 0) return dist;
    }
    std::optional<AlgebraicNumber> exact_xi = xi_.source;
    if (!exact_xi && xi_.terminated) exact_xi = AlgebraicNumber::from_rational(finite_cf_value(xi_.full_word()));
    if (!exact_xi) throw UndecidedError("orbit element indistinguishable from xi at 4096 bits");
    const AlgebraicNumber beta =
        kind_ == Kind::rationals ? AlgebraicNumber::from_rational(Rational(m.a, m.c)) : moebius_apply(m, *alpha_);
    if (same_number(beta, *exact_xi)) return std::nullopt;
    throw UndecidedError("orbit element indistinguishable from xi at 4096 bits");
  }

  std::optional<Interval> trend(const std::vector<ApproxRecord>& records) const {
    std::optional<Interval> best;
    for (const ApproxRecord& r : records) {
      const Int cd = abs(r.matrix.c() * r.matrix.d());
      if (cd == 0) continue;
      Interval v = Interval::divide(r.norm, Interval::from_int(cd), opts_.bits);
      if (!best || v.lo() < best->lo()) best = v;
    }
    return best;
  }

  const CFExpansion& xi_;
  const std::optional<AlgebraicNumber>& alpha_;
  long height_;
  OrbitOptions opts_;
  Kind kind_ = Kind::classic;
  QuadraticData quad_;
  i64 window_ = 0;
  i64 key_limit_ = 0;
  double xi_d_ = 0, alpha_d_ = 0, sqrt_disc_d_ = 1;
  std::size_t candidates_ = 0;
};

}  // namespace

UnimodularMatrix UnimodularMatrix::normalize(const Mat2& m) {
  const Int det = m.det();
  if (det != 1 && det != -1) throw DomainError("matrix determinant must be +1 or -1, got " + det.get_str());
  if (m.c < 0 || (m.c == 0 && m.d < 0)) return UnimodularMatrix(m.negated());
  return UnimodularMatrix(m);
}

Int norm_of(const UnimodularMatrix& m) {
  return std::max(Int(abs(m.c())), Int(abs(m.d())));
}

Interval quadratic_norm(const UnimodularMatrix& m, const AlgebraicNumber& alpha, long bits) {
  if (alpha.degree() != 2) throw DomainError("quadratic norm needs an algebraic number of degree 2");
  const IntPolynomial p = alpha.reduced_minpoly();
  const Int num = abs(quadratic_numerator(m.c(), m.d(), p));
  if (num == 0) throw DomainError("c alpha + d vanishes");
  const Int disc = p[1] * p[1] - 4 * p[2] * p[0];
  const long work = bits + static_cast<long>(bit_length(num)) + 8;
  return Interval::divide(Interval::from_int(num), enclose::sqrt(Interval::from_int(disc), work), bits);
}

std::vector<UnimodularMatrix> enumerate_orbit_matrices(long height, long window) {
  if (height < 1 || height > kMaxHeight || window < 0) throw DomainError("bad enumeration bounds");
  std::vector<UnimodularMatrix> out;
  for (i64 c = 0; c <= height; ++c) {
    for (i64 d = c == 0 ? 1 : -height; d <= (c == 0 ? 1 : height); ++d) {
      if (std::gcd(c, d < 0 ? -d : d) != 1) continue;
      const auto [a0, b0] = complete_row(c, d);
      for (int s : {1, -1}) {
        for (i64 t = -window; t <= window; ++t) {
          out.push_back(UnimodularMatrix::normalize({Int(s * a0 + t * c), Int(s * b0 + t * d), Int(c), Int(d)}));
        }
      }
    }
  }
  return out;
}

OrbitScan orbit_best_approximations(const CFExpansion& xi, const std::optional<AlgebraicNumber>& alpha,
                                    long height, const OrbitOptions& options) {
  if (options.epsilon <= 0) throw DomainError("epsilon must be positive");
  return OrbitScanner(xi, alpha, height, options).run();
}

SeparationResult separation_bound(const CFExpansion& alpha, const CFExpansion& beta, long bits) {
  const std::size_t common = std::min(alpha.depth(), beta.depth());
  std::optional<std::size_t> n;
  for (std::size_t i = 0; i <= common; ++i) {
    if (alpha.at(i) != beta.at(i)) {
      n = i;
      break;
    }
  }
  if (!n) throw DomainError("no divergence found");
  if (beta.depth() < *n + 2) throw DomainError("beta needs partial quotients through index n+2");
  SeparationResult r;
  r.n = static_cast<long>(*n);
  const ConvergentTable table(beta);
  const Int& q = table.q(r.n);
  r.bound = Rational(Int(1), Int(72 * q * q * beta.at(*n + 1) * beta.at(*n + 2)));
  r.distance = (value_enclosure(alpha, bits) - value_enclosure(beta, bits)).abs();
  r.consistent = compare(r.distance.lo(), r.bound) >= 0;
  return r;
}

std::vector<long> growth_gap_scan(const CFExpansion& cf, long k, const Rational& eps) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (eps <= 0) throw DomainError("eps must be positive");
  const ConvergentTable table(cf);
  const unsigned long u = eps.get_num().get_ui();
  const unsigned long v = eps.get_den().get_ui();
  if (!eps.get_num().fits_ulong_p() || !eps.get_den().fits_ulong_p()) throw DomainError("eps is too large");
  std::vector<long> out;
  for (long n = 1; n + k <= table.last(); ++n) {
    if (ipow(table.q(n + k), v) > ipow(table.q(n), u + v)) out.push_back(n);
  }
  return out;
}

NormRatioRange norm_equivalence_estimate(const Mat2& a0, long height) {
  const Int det = a0.det();
  if (det != 1 && det != -1) throw DomainError("A0 must have determinant +1 or -1");
  if (height < 1 || height > kMaxHeight) throw DomainError("height must lie in [1, 2^20]");
  const Mat2 inv = a0.adjugate();
  NormRatioRange out;
  for (i64 c = 0; c <= height; ++c) {
    for (i64 d = c == 0 ? 1 : -height; d <= (c == 0 ? 1 : height); ++d) {
      if (std::gcd(c, d < 0 ? -d : d) != 1) continue;
      const Int n = std::max(c, d < 0 ? -d : d);
      // Bottom row of A * A0^-1; its norm is the norm of beta seen from A0 alpha.
      const Int c2 = Int(c) * inv.a + Int(d) * inv.c;
      const Int d2 = Int(c) * inv.b + Int(d) * inv.d;
      const Rational ratio(n, std::max(Int(abs(c2)), Int(abs(d2))));
      if (out.samples == 0 || ratio < out.min_ratio) out.min_ratio = ratio;
      if (out.samples == 0 || ratio > out.max_ratio) out.max_ratio = ratio;
      ++out.samples;
    }
  }
  return out;
}

}  // namespace cfspectra
