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


#include "cfspectra/harness.hpp"

#include <algorithm>

#include "cfspectra/enclosure.hpp"

namespace cfspectra {

PairContext::PairContext(CFExpansion cf, CFExpansion cf_prime)
    : cf_(std::move(cf)), cf_prime_(std::move(cf_prime)), table_(cf_), table_prime_(cf_prime_) {}

PairContext PairContext::from_numbers(const AlgebraicNumber& alpha, const AlgebraicNumber& alpha_prime,
                                      std::size_t depth) {
  return PairContext(expand(alpha, depth), expand(alpha_prime, depth));
}

void PairContext::require(long n, long n_prime) const {
  if (n < -1 || n > table_.last() || n_prime < -1 || n_prime > table_prime_.last()) {
    throw DomainError("convergent index out of range: need " + std::to_string(n) + " and " +
                      std::to_string(n_prime) + ", have " + std::to_string(table_.last()) + " and " +
                      std::to_string(table_prime_.last()));
  }
}

IntVector4 phi_vector(const PairContext& ctx, long k, long l) {
  ctx.require(k, l);
  const ConvergentTable& t = ctx.table();
  const ConvergentTable& u = ctx.table_prime();
  return {t.q(k) * u.q(l - 1) - t.q(k - 1) * u.q(l), t.q(k) * u.p(l - 1) - t.q(k - 1) * u.p(l),
          t.p(k) * u.q(l - 1) - t.p(k - 1) * u.q(l), t.p(k) * u.p(l - 1) - t.p(k - 1) * u.p(l)};
}

MirrorQuadruple mirror_quadruple(const PairContext& ctx, long k, long l, long m) {
  ctx.require(k, l + m);
  const ConvergentTable& t = ctx.table();
  const ConvergentTable& u = ctx.table_prime();
  const long j = l + m;
  MirrorQuadruple out;
  out.v = {t.q(k) * u.q(j) + t.q(k - 1) * u.q(j - 1), t.q(k) * u.p(j) + t.q(k - 1) * u.p(j - 1),
           t.p(k) * u.q(j) + t.p(k - 1) * u.q(j - 1), t.p(k) * u.p(j) + t.p(k - 1) * u.p(j - 1)};
  out.max_abs = 0;
  for (const Int& x : out.v) out.max_abs = std::max(out.max_abs, Int(abs(x)));
  return out;
}

namespace {

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

}  // namespace

TransportCheck check_transport_identity(const Word& prefix, const Word& prefix_prime, const Word& block,
                                        bool mirror) {
  if (block.empty()) throw DomainError("transport identity needs a nonempty block");
  TransportCheck out;
  if (!mirror) {
    out.before = convergent_matrix(prefix) * convergent_matrix(prefix_prime).adjugate();
    out.after = convergent_matrix(concat(prefix, block)) * convergent_matrix(concat(prefix_prime, block)).adjugate();
    out.sign = block.size() % 2 == 0 ? 1 : -1;
    out.holds = out.after == (out.sign > 0 ? out.before : out.before.negated());
  } else {
    Word reversed(block.rbegin(), block.rend());
    out.before = convergent_matrix(prefix) * convergent_matrix(concat(prefix_prime, reversed)).transposed();
    out.after = convergent_matrix(concat(prefix, block)) * convergent_matrix(prefix_prime).transposed();
    out.holds = out.after == out.before;
  }
  return out;
}

namespace {

long enclosure_margin(const PairContext& ctx, const IntVector4& v) {
  std::size_t widest = 0;
  for (const Int& x : v) widest = std::max(widest, bit_length(x));
  return static_cast<long>(widest + bit_length(ctx.cf().a0) + bit_length(ctx.cf_prime().a0)) + 8;
}

Interval affine(const Interval& x, const Int& q, const Int& p) {
  return x * Interval::from_int(q) - Interval::from_int(p);
}

}  // namespace

std::array<Interval, 4> eval_linear_forms(const PairContext& ctx, const IntVector4& v, long bits) {
  if (bits < 32) throw DomainError("linear forms need at least 32 bits");
  long prec = bits + enclosure_margin(ctx, v);
  Interval a = ctx.alpha(prec);
  Interval ap = ctx.alpha_prime(prec);
  Interval x1 = Interval::from_int(v[0]), x2 = Interval::from_int(v[1]);
  Interval x3 = Interval::from_int(v[2]), x4 = Interval::from_int(v[3]);
  return {a * ap * x1 - a * x2 - ap * x3 + x4, ap * x1 - x2, a * x1 - x3, x1};
}

const char* to_string(Decision d) {
  switch (d) {
    case Decision::holds:
      return "holds";
    case Decision::violated:
      return "violated";
    case Decision::undecided:
      break;
  }
  return "undecided";
}

SmallnessResult check_L1_smallness(const PairContext& ctx, const SharedBlockWitness& wt, long max_bits,
                                   long start_bits) {
  if (wt.mirror) throw DomainError("L1 smallness applies to plain witnesses");
  if (wt.m < 1) throw DomainError("witness block is empty");
  const long k = static_cast<long>(wt.k), l = static_cast<long>(wt.l), m = static_cast<long>(wt.m);
  ctx.require(k + m, l + m);
  const ConvergentTable& t = ctx.table();
  const ConvergentTable& u = ctx.table_prime();

  SmallnessResult out;
  out.premise_ok = validate(wt, ctx.word(), ctx.word_prime());
  out.bound = Rational(2, t.q(k + m) * u.q(l + m));
  out.bound.canonicalize();
  IntVector4 phi = phi_vector(ctx, k, l);

  for (long bits = std::max<long>(start_bits, 32);; bits = std::min(max_bits, 2 * bits)) {
    out.bits = bits;
    out.direct = eval_linear_forms(ctx, phi, bits)[0].abs();
    long prec = bits + enclosure_margin(ctx, phi);
    Interval a = ctx.alpha(prec), ap = ctx.alpha_prime(prec);
    Interval e1 = affine(a, t.q(k + m), t.p(k + m)), e2 = affine(ap, u.q(l + m - 1), u.p(l + m - 1));
    Interval e3 = affine(a, t.q(k + m - 1), t.p(k + m - 1)), e4 = affine(ap, u.q(l + m), u.p(l + m));
    out.factored = (e1 * e2 - e3 * e4).abs();
    out.routes_agree = out.direct.overlaps(out.factored);
    if (compare(out.direct.hi(), out.bound) < 0) {
      out.decision = Decision::holds;
      return out;
    }
    if (compare(out.direct.lo(), out.bound) >= 0) {
      out.decision = Decision::violated;
      return out;
    }
    if (bits >= max_bits) {
      out.decision = Decision::undecided;
      return out;
    }
  }
}

bool check_growth_condition(const PairContext& ctx, const SharedBlockWitness& wt, const Rational& delta,
                            const Rational& L) {
  if (delta < 0) throw DomainError("delta must be nonnegative");
  if (L <= 0) throw DomainError("L must be positive");
  const long k = static_cast<long>(wt.k), l = static_cast<long>(wt.l), m = static_cast<long>(wt.m);
  ctx.require(k + m, l + m);
  Int base = ctx.table().q(k) * ctx.table_prime().q(l);
  Int grown = ctx.table().q(k + m) * ctx.table_prime().q(l + m);
  // delta = u/v, L = s/t: base^(u+v) t^v < s^v grown^v.
  const Int& u = delta.get_num();
  const Int& v = delta.get_den();
  Int e = u + v;
  double cost = e.get_d() * static_cast<double>(bit_length(base)) + v.get_d() * static_cast<double>(bit_length(grown));
  if (!e.fits_ulong_p() || cost > 1e9) throw DomainError("exponent too large for an exact comparison");
  unsigned long ev = e.get_ui(), vv = v.get_ui();
  return ipow(base, ev) * ipow(L.get_den(), vv) < ipow(L.get_num(), vv) * ipow(grown, vv);
}

Interval delta_from_L(const Interval& M, const Rational& L, long bits) {
  if (L <= 0) throw DomainError("L must be positive");
  if (compare(M.lo(), Rational(1)) <= 0) throw DomainError("M must exceed 1 for log M to be positive");
  long prec = bits + 16;
  Interval log_m = enclose::log(M, prec);
  Interval two_l = Interval::from_rational(Rational(2 * L), prec);
  return Interval::divide(enclose::log2_const(prec), two_l * log_m, bits);
}

}  // namespace cfspectra
