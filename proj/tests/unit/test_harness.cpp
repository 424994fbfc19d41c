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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cfspectra/harness.hpp"
#include "gauss_map.hpp"
#include "splice.hpp"

namespace cfspectra {
namespace {

AlgebraicNumber root_of(std::initializer_list<long> c, int index = -1) { return real_root(IntPolynomial{c}, index); }

AlgebraicNumber sqrt2() { return root_of({-2, 0, 1}); }
AlgebraicNumber sqrt3() { return root_of({-3, 0, 1}); }
AlgebraicNumber golden() { return root_of({-1, -1, 1}); }
AlgebraicNumber cbrt2() { return root_of({-2, 0, 0, 1}); }

Word random_word(std::mt19937& rng, std::size_t max_len, bool allow_empty) {
  std::size_t len = rng() % (max_len + 1);
  if (!allow_empty && len == 0) len = 1;
  Word w(len);
  for (auto& x : w) x = 1 + rng() % 9;
  return w;
}

TEST(Splice, SharesTheTail) {
  AlgebraicNumber beta = fixtures::splice_tail(cbrt2(), {0, 4, 4, 4}, 6);
  CFExpansion cf = expand(beta, 40);
  CFExpansion base = expand(cbrt2(), 43);
  EXPECT_EQ(cf.a0, 0);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(cf.quotients[i], 4);
  for (std::size_t i = 3; i < 40; ++i) EXPECT_EQ(cf.quotients[i], base.quotients[i + 3]) << i;
}

TEST(Phi, SeedCase) {
  PairContext ctx = PairContext::from_numbers(sqrt2(), golden(), 10);
  IntVector4 phi = phi_vector(ctx, 0, 0);
  // q_{-1} = 0, p_{-1} = 1, q_0 = 1, p_0 = a0.
  EXPECT_EQ(phi, (IntVector4{0, 1, -1, ctx.table().p(0) - ctx.table_prime().p(0)}));
}

TEST(Phi, IdenticalExpansionsHaveZeroFirstSlot) {
  PairContext ctx = PairContext::from_numbers(cbrt2(), cbrt2(), 20);
  for (long k = 0; k <= 20; ++k) EXPECT_EQ(phi_vector(ctx, k, k)[0], 0);
}

TEST(Phi, MatchesMatrixProduct) {
  PairContext ctx = PairContext::from_numbers(sqrt2(), golden(), 10);
  Mat2 prod = ctx.table().matrix(3) * ctx.table_prime().matrix(3).adjugate();
  IntVector4 phi = phi_vector(ctx, 3, 3);
  // P_k adj(P'_l) = [[x3, -x4], [x1, -x2]]
  EXPECT_EQ(prod, (Mat2{phi[2], -phi[3], phi[0], -phi[1]}));
  EXPECT_THROW(phi_vector(ctx, 11, 3), DomainError);
}

TEST(MirrorQuadruple, MatchesMatrixProduct) {
  PairContext ctx = PairContext::from_numbers(sqrt3(), cbrt2(), 20);
  for (long k = 0; k < 6; ++k) {
    for (long l = 0; l < 6; ++l) {
      for (long m = 1; m < 6; ++m) {
        MirrorQuadruple q = mirror_quadruple(ctx, k, l, m);
        Mat2 prod = ctx.table().matrix(k) * ctx.table_prime().matrix(l + m).transposed();
        EXPECT_EQ(prod, (Mat2{q.v[3], q.v[2], q.v[1], q.v[0]}));
        EXPECT_EQ(abs(prod.det()), 1);
      }
    }
  }
  MirrorQuadruple seed = mirror_quadruple(ctx, 0, 0, 1);
  EXPECT_EQ(seed.v[0], ctx.table_prime().q(1));
}

TEST(Transport, RandomTriples) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    Word a = random_word(rng, 6, true), ap = random_word(rng, 6, true), b = random_word(rng, 6, false);
    for (bool mirror : {false, true}) {
      TransportCheck c = check_transport_identity(a, ap, b, mirror);
      ASSERT_TRUE(c.holds) << trial << (mirror ? " mirror" : " plain");
      EXPECT_EQ(abs(c.before.det()), 1);
    }
  }
}

TEST(Transport, SingleLetterAndPalindrome) {
  Word a{3, 1}, ap{2};
  for (Word b : {Word{5}, Word{1, 2, 1}}) {
    TransportCheck plain = check_transport_identity(a, ap, b, false);
    TransportCheck mirror = check_transport_identity(a, ap, b, true);
    EXPECT_TRUE(plain.holds);
    EXPECT_TRUE(mirror.holds);
    Word rb(b.rbegin(), b.rend());
    EXPECT_EQ(word_matrix(b), word_matrix(b).transposed());
    EXPECT_EQ(rb, b);
  }
  EXPECT_THROW(check_transport_identity(a, ap, {}, false), DomainError);
}

TEST(Transport, SignFollowsBlockLength) {
  TransportCheck odd = check_transport_identity({1, 2}, {3}, {4, 5, 6}, false);
  EXPECT_EQ(odd.sign, -1);
  EXPECT_EQ(odd.after, odd.before.negated());
  TransportCheck even = check_transport_identity({1, 2}, {3}, {4, 5}, false);
  EXPECT_EQ(even.after, even.before);
}

TEST(LinearForms, Basics) {
  PairContext ctx = PairContext::from_numbers(sqrt2(), sqrt3(), 20);
  auto forms = eval_linear_forms(ctx, {7, -3, 2, 5}, 64);
  EXPECT_EQ(forms[3], Interval::from_int(7));
  auto unit = eval_linear_forms(ctx, {0, 0, 0, 1}, 64);
  EXPECT_EQ(unit[0], Interval::from_int(1));
  EXPECT_THROW(eval_linear_forms(ctx, {0, 0, 0, 1}, 16), DomainError);
}

TEST(LinearForms, AgreeWithRationalOracle) {
  // alpha, alpha' enclosed by plain rational bisection, forms evaluated in mpq.
  PairContext ctx = PairContext::from_numbers(sqrt2(), cbrt2(), 30);
  mpq_class alo(1), ahi(2), blo(1), bhi(2);
  oracle::bisect_root({-2, 0, 1}, alo, ahi, 400);
  oracle::bisect_root({-2, 0, 0, 1}, blo, bhi, 400);
  for (long k : {3L, 10L, 20L}) {
    IntVector4 phi = phi_vector(ctx, k, k + 2);
    auto forms = eval_linear_forms(ctx, phi, 128);
    mpq_class x1 = phi[0], x2 = phi[1], x3 = phi[2], x4 = phi[3];
    // x1 has sign; evaluate at the four corners and take min/max.
    std::vector<mpq_class> vals;
    for (const mpq_class& a : {alo, ahi}) {
      for (const mpq_class& b : {blo, bhi}) vals.push_back(a * b * x1 - a * x2 - b * x3 + x4);
    }
    mpq_class lo = *std::min_element(vals.begin(), vals.end()), hi = *std::max_element(vals.begin(), vals.end());
    EXPECT_TRUE(forms[0].lo().to_rational() <= hi && lo <= forms[0].hi().to_rational()) << k;
    EXPECT_LE(forms[0].width_log2(), -100);
  }
}

TEST(LinearForms, WidthHalvesWithBits) {
  PairContext ctx = PairContext::from_numbers(sqrt2(), golden(), 40);
  IntVector4 phi = phi_vector(ctx, 20, 25);
  long prev = eval_linear_forms(ctx, phi, 64)[0].width_log2();
  for (long bits = 128; bits <= 1024; bits *= 2) {
    long w = eval_linear_forms(ctx, phi, bits)[0].width_log2();
    EXPECT_LE(w, prev - 1);
    prev = w;
  }
}

TEST(Smallness, SyntheticSharedBlock) {
  AlgebraicNumber beta = fixtures::splice_tail(sqrt3(), {0, 2, 5, 1}, 2);
  PairContext ctx = PairContext::from_numbers(sqrt3(), beta, 40);
  SharedBlockWitness wt{2, 3, 10, false};
  ASSERT_TRUE(validate(wt, ctx.word(), ctx.word_prime()));
  SmallnessResult r = check_L1_smallness(ctx, wt, 512);
  EXPECT_EQ(r.decision, Decision::holds);
  EXPECT_TRUE(r.premise_ok);
  EXPECT_TRUE(r.routes_agree);
}

TEST(Smallness, IdenticalNumbers) {
  PairContext ctx = PairContext::from_numbers(cbrt2(), cbrt2(), 30);
  SmallnessResult r = check_L1_smallness(ctx, {0, 0, 20, false});
  EXPECT_EQ(r.decision, Decision::holds);
  EXPECT_TRUE(r.direct.contains(Dyadic(0)));
}

TEST(Smallness, CorruptedWitnessIsFlagged) {
  PairContext ctx = PairContext::from_numbers(sqrt2(), cbrt2(), 40);
  SharedBlockWitness wt{3, 4, 12, false};
  SmallnessResult r = check_L1_smallness(ctx, wt, 1024);
  EXPECT_FALSE(r.premise_ok);
  EXPECT_EQ(r.decision, Decision::violated);
}

TEST(Smallness, SplicedPairsAllHold) {
  std::mt19937 rng(8);
  std::vector<AlgebraicNumber> pool{sqrt2(), sqrt3(), golden(), cbrt2()};
  for (int trial = 0; trial < 12; ++trial) {
    const AlgebraicNumber& alpha = pool[rng() % pool.size()];
    std::size_t k = 1 + rng() % 8;
    std::vector<Int> head{0};
    for (std::size_t i = 0, n = 1 + rng() % 6; i < n; ++i) head.push_back(1 + rng() % 5);
    AlgebraicNumber beta = fixtures::splice_tail(alpha, head, k);
    PairContext ctx = PairContext::from_numbers(alpha, beta, 60);
    SharedBlockWitness wt{k, head.size() - 1, 10 + rng() % 30, false};
    SmallnessResult r = check_L1_smallness(ctx, wt, 1024);
    EXPECT_TRUE(r.premise_ok);
    EXPECT_EQ(r.decision, Decision::holds) << trial;
    EXPECT_TRUE(r.routes_agree);
  }
}

TEST(Growth, Examples) {
  PairContext ctx = PairContext::from_numbers(golden(), golden(), 40);
  EXPECT_TRUE(check_growth_condition(ctx, {3, 4, 1, false}, 0, 1));
  EXPECT_TRUE(check_growth_condition(ctx, {5, 5, 10, false}, Rational(1, 10), 1));
  EXPECT_FALSE(check_growth_condition(ctx, {30, 30, 1, false}, 1, 1));
  EXPECT_THROW(check_growth_condition(ctx, {5, 5, 10, false}, -1, 1), DomainError);
  EXPECT_THROW(check_growth_condition(ctx, {35, 5, 10, false}, 1, 1), DomainError);
}

TEST(Growth, AgreesWithFloatingPointAwayFromTies) {
  PairContext ctx = PairContext::from_numbers(sqrt2(), cbrt2(), 60);
  for (std::size_t k = 1; k < 20; k += 3) {
    for (std::size_t m = 1; m < 20; m += 4) {
      Rational delta(1, 3), L(3, 2);
      double lhs = 4.0 / 3 * std::log(ctx.table().q(k).get_d() * ctx.table_prime().q(k).get_d());
      double rhs = std::log(1.5) + std::log(ctx.table().q(k + m).get_d() * ctx.table_prime().q(k + m).get_d());
      if (std::abs(lhs - rhs) < 1e-6) continue;
      EXPECT_EQ(check_growth_condition(ctx, {k, k, m, false}, delta, L), lhs < rhs) << k << " " << m;
    }
  }
}

TEST(Delta, Examples) {
  EXPECT_TRUE(delta_from_L(Interval::from_int(2), Rational(1, 2)).contains(Dyadic(1)));
  EXPECT_TRUE(delta_from_L(Interval::from_int(4), Rational(1)).contains(Rational(1, 4)));
  EXPECT_THROW(delta_from_L(Interval::from_int(1), Rational(1)), DomainError);
  EXPECT_THROW(delta_from_L(Interval(Dyadic(1, -1), Dyadic(3)), Rational(1)), DomainError);
  CFExpansion g = expand(golden(), 60);
  GrowthReport report = growth_metrics(g, &g);
  Interval d = delta_from_L(report.max_value, Rational(2));
  EXPECT_EQ(d.certain_sign(), 1);
  EXPECT_LE(d.width_log2(), -40);
}

}  // namespace
}  // namespace cfspectra
