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
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "cfspectra/enclosure.hpp"
#include "cfspectra/modular.hpp"
#include "gauss_map.hpp"

namespace cfspectra {
namespace {

AlgebraicNumber root_of(std::initializer_list<long> c, int index = -1) { return real_root(IntPolynomial{c}, index); }

AlgebraicNumber sqrt2() { return root_of({-2, 0, 1}); }
AlgebraicNumber golden() { return root_of({-1, -1, 1}); }
AlgebraicNumber cbrt2() { return root_of({-2, 0, 0, 1}); }

CFExpansion target(const AlgebraicNumber& x) {
  CFExpansion cf;
  cf.a0 = floor_of(x);
  cf.source = x;
  return cf;
}

bool encloses(const Interval& iv, double v, double tol = 1e-12) {
  return iv.lo().to_double() <= v + tol && v - tol <= iv.hi().to_double();
}

std::tuple<Int, Int, Int, Int> entries(const UnimodularMatrix& m) { return {m.a(), m.b(), m.c(), m.d()}; }

TEST(Normalize, FlipsNegatedRepresentative) {
  UnimodularMatrix m = UnimodularMatrix::normalize({-2, -1, -1, -1});
  EXPECT_EQ(entries(m), std::make_tuple(Int(2), Int(1), Int(1), Int(1)));
  EXPECT_EQ(UnimodularMatrix::normalize(Mat2::identity()).matrix(), Mat2::identity());
  EXPECT_EQ(UnimodularMatrix::normalize({0, -1, 1, 0}).matrix(), (Mat2{0, -1, 1, 0}));
  // c = 0 with d < 0 flips too.
  EXPECT_EQ(UnimodularMatrix::normalize({-1, 3, 0, -1}).matrix(), (Mat2{1, -3, 0, 1}));
}

TEST(Normalize, RejectsNonUnimodular) {
  EXPECT_THROW(UnimodularMatrix::normalize({2, 0, 0, 1}), DomainError);
  EXPECT_THROW(UnimodularMatrix::normalize({0, 0, 0, 0}), DomainError);
}

TEST(Normalize, IdempotentAndProjective) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    std::vector<Int> w;
    for (int k = 0, n = 1 + static_cast<int>(rng() % 6); k < n; ++k) w.emplace_back(1 + rng() % 7);
    Mat2 m = convergent_matrix(w);
    if (rng() % 2) m = m.negated();
    UnimodularMatrix u = UnimodularMatrix::normalize(m);
    EXPECT_EQ(UnimodularMatrix::normalize(u.matrix()), u);
    EXPECT_TRUE(u.matrix() == m || u.matrix() == m.negated());
    EXPECT_TRUE(u.c() > 0 || (u.c() == 0 && u.d() > 0));
    EXPECT_EQ(u.det(), m.det() > 0 ? 1 : -1);
  }
}

TEST(Norm, Examples) {
  EXPECT_EQ(norm_of(UnimodularMatrix::normalize(Mat2::identity())), 1);
  EXPECT_EQ(norm_of(UnimodularMatrix::normalize({1, 0, 5, 1})), 5);
  std::vector<Int> w{0, 1, 2, 3};
  EXPECT_EQ(norm_of(UnimodularMatrix::normalize(convergent_matrix(w))), 10);
}

TEST(Norm, ConvergentMatrixNormIsDenominator) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    std::vector<Int> w{0};
    for (int k = 0, n = 1 + static_cast<int>(rng() % 12); k < n; ++k) w.emplace_back(1 + rng() % 20);
    CFExpansion cf = CFExpansion::from_word(w[0], {w.begin() + 1, w.end()});
    ConvergentTable t(cf);
    EXPECT_EQ(norm_of(UnimodularMatrix::normalize(convergent_matrix(w))), t.q(t.last()));
  }
}

TEST(QuadraticNorm, Examples) {
  const double s8 = std::sqrt(8.0);
  Interval id = quadratic_norm(UnimodularMatrix::normalize(Mat2::identity()), sqrt2(), 64);
  EXPECT_TRUE(encloses(id, 1 / s8));
  EXPECT_LT(id.width_log2(), -60);
  EXPECT_EQ(quadratic_norm(UnimodularMatrix::normalize({1, 1, 0, 1}), sqrt2(), 64), id);
  EXPECT_TRUE(encloses(quadratic_norm(UnimodularMatrix::normalize({0, -1, 1, 0}), sqrt2(), 64), 2 / s8));
  EXPECT_THROW(quadratic_norm(UnimodularMatrix::normalize(Mat2::identity()), cbrt2(), 64), DomainError);
  EXPECT_THROW(quadratic_norm(UnimodularMatrix::normalize(Mat2::identity()), AlgebraicNumber::from_int(3), 64),
               DomainError);
}

TEST(QuadraticNorm, MatchesConjugateDifference) {
  // |1/(beta - beta^s)| computed from the images of alpha and its conjugate.
  const AlgebraicNumber a = golden();
  const AlgebraicNumber a_conj = quadratic_conjugate(a);
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<Int> w;
    for (int k = 0, n = 1 + static_cast<int>(rng() % 5); k < n; ++k) w.emplace_back(1 + rng() % 9);
    Mat2 m = convergent_matrix(w);
    const double x = a.enclosure(80).mid().to_double();
    const double y = a_conj.enclosure(80).mid().to_double();
    const auto mob = [&](double t) { return (m.a.get_d() * t + m.b.get_d()) / (m.c.get_d() * t + m.d.get_d()); };
    const double expected = std::fabs(1 / (mob(x) - mob(y)));
    const Interval got = quadratic_norm(UnimodularMatrix::normalize(m), a, 64);
    // The double reference loses digits to cancellation in beta - beta^s.
    EXPECT_NEAR(got.mid().to_double(), expected, 1e-6 * expected);
  }
}

std::size_t coprime_rows(long h) {
  std::size_t n = 0;
  for (long c = 0; c <= h; ++c) {
    for (long d = -h; d <= h; ++d) {
      if (std::gcd(c, std::labs(d)) != 1) continue;
      if (c > 0 || d > 0) ++n;
    }
  }
  return n;
}

TEST(Enumeration, DistinctAndCountMatchesCoprimeRows) {
  for (long h : {1L, 2L, 5L, 9L}) {
    for (long w : {0L, 1L, 3L}) {
      std::vector<UnimodularMatrix> all = enumerate_orbit_matrices(h, w);
      std::set<std::tuple<Int, Int, Int, Int>> seen;
      for (const auto& m : all) {
        EXPECT_TRUE(seen.insert(entries(m)).second);
        EXPECT_LE(norm_of(m), h);
        EXPECT_TRUE(m.c() > 0 || (m.c() == 0 && m.d() > 0));
      }
      EXPECT_EQ(all.size(), coprime_rows(h) * 2 * static_cast<std::size_t>(2 * w + 1));
    }
  }
}

TEST(Enumeration, CompleteUpToTranslation) {
  // Every normalized unimodular matrix with small entries shares its bottom
  // row and determinant with some enumerated one; translates fill the rest.
  const long h = 6;
  std::set<std::tuple<Int, Int, int>> rows;
  for (const auto& m : enumerate_orbit_matrices(h, 0)) rows.insert({m.c(), m.d(), m.det()});
  for (long a = -8; a <= 8; ++a) {
    for (long b = -8; b <= 8; ++b) {
      for (long c = -h; c <= h; ++c) {
        for (long d = -h; d <= h; ++d) {
          const long det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          UnimodularMatrix m = UnimodularMatrix::normalize({a, b, c, d});
          EXPECT_TRUE(rows.count({m.c(), m.d(), m.det()})) << a << " " << b << " " << c << " " << d;
        }
      }
    }
  }
}

TEST(Orbit, XiInOrbitIsSkippedAndFlagged) {
  OrbitScan s = orbit_best_approximations(target(sqrt2()), sqrt2(), 20);
  EXPECT_TRUE(s.xi_in_orbit);
  for (const auto& r : s.records) EXPECT_GT(r.distance.certain_sign(), 0);
  OrbitScan t = orbit_best_approximations(target(golden()), cbrt2(), 20);
  EXPECT_FALSE(t.xi_in_orbit);
}

void expect_record_invariants(const OrbitScan& s, NormMode mode, const Rational& eps) {
  std::optional<Dyadic> prev_norm, prev_exp;
  for (const auto& r : s.records) {
    EXPECT_GT(r.distance.certain_sign(), 0);
    EXPECT_GE(r.norm.lo(), Dyadic(1));
    ASSERT_TRUE(r.exponent.has_value());
    if (prev_norm) {
      EXPECT_GT(r.norm.lo(), *prev_norm);
      EXPECT_GT(r.exponent->lo(), *prev_exp);
    }
    prev_norm = r.norm.lo();
    prev_exp = r.exponent->lo();
    if (mode == NormMode::classic) EXPECT_EQ(r.norm, Interval::from_int(norm_of(r.matrix)));
    EXPECT_EQ(r.exceeds_one, compare(r.exponent->lo(), 1 + eps) > 0);
    EXPECT_EQ(r.exceeds_two, compare(r.exponent->lo(), 2 + eps) > 0);
  }
}

// Independent record computation at small height: naive Bezout completion,
// the best integer translate, distances in exact rationals against
// bisection enclosures of xi and alpha.
struct OracleRecord {
  long norm;
  Mat2 m;
};

std::vector<OracleRecord> oracle_records(const std::vector<mpz_class>& xi_poly, long xi_lo, long xi_hi,
                                         const std::vector<mpz_class>& al_poly, long al_lo, long al_hi, long h) {
  mpq_class xl(xi_lo), xh(xi_hi), al(al_lo), ah(al_hi);
  oracle::bisect_root(xi_poly, xl, xh, 300);
  oracle::bisect_root(al_poly, al, ah, 300);
  const mpq_class xi = xl, alpha = al;
  std::map<long, std::pair<mpq_class, Mat2>> best;
  for (long c = 0; c <= h; ++c) {
    for (long d = -h; d <= h; ++d) {
      if (std::gcd(c, std::labs(d)) != 1 || (c == 0 && d != 1)) continue;
      for (long s : {1L, -1L}) {
        long a = 0, b = 0;
        if (c == 0) {
          a = s;
        } else {
          for (a = 0; a < c; ++a) {
            if (((a * d - s) % c) == 0) break;
          }
          b = (a * d - s) / c;
        }
        const mpq_class beta = (a * alpha + b) / (c * alpha + d);
        const mpz_class t = oracle::floor_q(xi - beta);
        for (const mpz_class& tt : {t, mpz_class(t + 1)}) {
          mpq_class dist = abs(xi - beta - tt);
          const long norm = std::max(c, std::labs(d));
          Mat2 m{Int(a) + tt * c, Int(b) + tt * d, c, d};
          auto it = best.find(norm);
          if (it == best.end() || dist < it->second.first) best[norm] = {dist, m};
        }
      }
    }
  }
  std::vector<OracleRecord> out;
  double running = -1e300;
  for (auto& [norm, v] : best) {
    if (norm < 2) continue;
    const double e = -std::log(v.first.get_d()) / std::log(static_cast<double>(norm));
    if (e > running) {
      running = e;
      out.push_back({norm, UnimodularMatrix::normalize(v.second).matrix()});
    }
  }
  return out;
}

TEST(Orbit, ClassicRecordsMatchOracle) {
  const long h = 40;
  struct Case {
    std::vector<mpz_class> xp;
    long xl, xh;
    AlgebraicNumber xi;
    std::vector<mpz_class> ap;
    long al, ah;
    AlgebraicNumber alpha;
  };
  std::vector<Case> cases{
      {{-1, -1, 1}, 1, 2, golden(), {-2, 0, 0, 1}, 1, 2, cbrt2()},
      {{-2, 0, 0, 1}, 1, 2, cbrt2(), {-2, 0, 1}, 1, 2, sqrt2()},
      {{-3, 0, 0, 1}, 1, 2, root_of({-3, 0, 0, 1}), {-1, -1, 1}, 1, 2, golden()},
  };
  for (const auto& cs : cases) {
    OrbitScan s = orbit_best_approximations(target(cs.xi), cs.alpha, h);
    expect_record_invariants(s, NormMode::classic, Rational(1, 10));
    auto expected = oracle_records(cs.xp, cs.xl, cs.xh, cs.ap, cs.al, cs.ah, h);
    ASSERT_EQ(s.records.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(norm_of(s.records[i].matrix), expected[i].norm);
      // Matrices may differ by a stabilizer of a quadratic alpha; the orbit point may not.
      EXPECT_TRUE(same_number(moebius_apply(s.records[i].matrix.matrix(), cs.alpha), moebius_apply(expected[i].m, cs.alpha)))
          << s.records[i].matrix.matrix().to_string() << " vs " << expected[i].m.to_string();
    }
  }
}

TEST(Orbit, DistancesAreCertified) {
  OrbitOptions o;
  o.min_norm = 3;
  const AlgebraicNumber xi = cbrt2();
  const AlgebraicNumber alpha = golden();
  OrbitScan s = orbit_best_approximations(target(xi), alpha, 200, o);
  ASSERT_FALSE(s.records.empty());
  for (const auto& r : s.records) {
    const AlgebraicNumber beta = moebius_apply(r.matrix.matrix(), alpha);
    const Interval exact = (xi.enclosure(200) - beta.enclosure(200)).abs();
    EXPECT_TRUE(r.distance.contains(exact)) << r.matrix.matrix().to_string();
    EXPECT_GE(norm_of(r.matrix), 3);
  }
}

TEST(Orbit, WorkersDoNotChangeRecords) {
  for (NormMode mode : {NormMode::classic, NormMode::quadratic}) {
    OrbitOptions one;
    one.mode = mode;
    OrbitOptions four = one;
    four.workers = 4;
    const AlgebraicNumber alpha = mode == NormMode::quadratic ? sqrt2() : cbrt2();
    OrbitScan a = orbit_best_approximations(target(golden()), alpha, 150, one);
    OrbitScan b = orbit_best_approximations(target(golden()), alpha, 150, four);
    ASSERT_EQ(a.records.size(), b.records.size());
    EXPECT_EQ(a.candidates, b.candidates);
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      EXPECT_EQ(a.records[i].matrix, b.records[i].matrix);
      EXPECT_EQ(a.records[i].distance, b.records[i].distance);
    }
  }
}

TEST(Orbit, RationalsFirstRecordIsThreeHalves) {
  OrbitScan s = orbit_best_approximations(target(sqrt2()), std::nullopt, 100);
  ASSERT_FALSE(s.records.empty());
  const auto& r = s.records.front();
  EXPECT_EQ(r.matrix.a(), 3);
  EXPECT_EQ(r.matrix.c(), 2);
  // -log(3/2 - sqrt 2) / log 2
  EXPECT_TRUE(encloses(*r.exponent, -std::log(1.5 - std::sqrt(2.0)) / std::log(2.0), 1e-9));
  EXPECT_TRUE(r.exceeds_two);
}

TEST(Orbit, RothBaselineBeyondBurnIn) {
  OrbitOptions o;
  o.min_norm = 100;
  o.epsilon = Rational(1, 2);
  OrbitScan s = orbit_best_approximations(target(sqrt2()), std::nullopt, 10000, o);
  ASSERT_FALSE(s.records.empty());
  expect_record_invariants(s, NormMode::classic, o.epsilon);
  for (const auto& r : s.records) {
    EXPECT_FALSE(r.exceeds_two) << r.matrix.matrix().to_string();
    // Every record is a convergent-type fraction a/c of sqrt 2.
    EXPECT_EQ(r.matrix.d() * r.matrix.a() - r.matrix.b() * r.matrix.c(), r.matrix.det());
  }
}

TEST(Orbit, RationalRecordsMatchDirectSearch) {
  // Records against a/c by a plain loop over denominators in doubles.
  OrbitOptions o;
  o.min_norm = 2;
  OrbitScan s = orbit_best_approximations(target(cbrt2()), std::nullopt, 3000, o);
  const double x = std::cbrt(2.0);
  std::vector<long> expected;
  double running = -1e300;
  for (long c = 2; c <= 3000; ++c) {
    double best = 1e300;
    for (long a : {static_cast<long>(std::floor(x * c)), static_cast<long>(std::floor(x * c)) + 1}) {
      if (std::gcd(a, c) == 1) best = std::min(best, std::fabs(x - static_cast<double>(a) / c));
    }
    const double e = -std::log(best) / std::log(static_cast<double>(c));
    if (e > running) {
      running = e;
      expected.push_back(c);
    }
  }
  ASSERT_EQ(s.records.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(s.records[i].matrix.c(), expected[i]);
}

TEST(Orbit, NegativeControlStaysNearTwo) {
  OrbitOptions o;
  o.min_norm = 100;
  o.workers = 2;
  OrbitScan s = orbit_best_approximations(target(golden()), cbrt2(), 1000, o);
  ASSERT_FALSE(s.records.empty());
  expect_record_invariants(s, NormMode::classic, o.epsilon);
  EXPECT_LT(s.records.back().exponent->hi(), Dyadic(3));
}

TEST(Orbit, SplicedTailGivesLargeExponent) {
  // xi = [0; 2, 3, a_20, a_21, ...] of the cube root of 2, as an exact word.
  const AlgebraicNumber alpha = cbrt2();
  CFExpansion cf = expand(alpha, 60);
  std::vector<Int> q{2, 3};
  for (std::size_t i = 20; i <= 50; ++i) q.push_back(cf.at(i));
  CFExpansion xi = CFExpansion::from_word(0, q);
  OrbitOptions o;
  o.min_norm = 2;
  OrbitScan s = orbit_best_approximations(xi, alpha, 300, o);
  ASSERT_FALSE(s.records.empty());
  EXPECT_TRUE(s.records.back().exceeds_two);
  EXPECT_FALSE(s.xi_in_orbit);
}

TEST(Orbit, QuadraticModeNormsAndTrend) {
  OrbitOptions o;
  o.mode = NormMode::quadratic;
  const AlgebraicNumber alpha = sqrt2();
  OrbitScan s = orbit_best_approximations(target(golden()), alpha, 60, o);
  ASSERT_FALSE(s.records.empty());
  expect_record_invariants(s, NormMode::quadratic, o.epsilon);
  for (const auto& r : s.records) {
    EXPECT_TRUE(r.norm.overlaps(quadratic_norm(r.matrix, alpha, 64)));
    EXPECT_LE(r.norm.lo(), Dyadic(60));
    EXPECT_GT(r.norm.lo(), Dyadic(1));
  }
  EXPECT_TRUE(s.trend_constant.has_value() || s.records.size() == 1);
  EXPECT_THROW(orbit_best_approximations(target(golden()), cbrt2(), 10, o), DomainError);
}

TEST(Orbit, RejectsBadInput) {
  EXPECT_THROW(orbit_best_approximations(target(golden()), cbrt2(), 0), DomainError);
  OrbitOptions o;
  o.epsilon = 0;
  EXPECT_THROW(orbit_best_approximations(target(golden()), cbrt2(), 10, o), DomainError);
  EXPECT_THROW(orbit_best_approximations(target(golden()), AlgebraicNumber::from_int(2), 10), DomainError);
}

CFExpansion word(std::vector<long> w) {
  std::vector<Int> q(w.begin() + 1, w.end());
  return CFExpansion::from_word(w[0], q);
}

TEST(Separation, FirstDivergenceAtThree) {
  SeparationResult r = separation_bound(word({0, 1, 2, 3, 5, 7, 2}), word({0, 1, 2, 4, 6, 3, 2}));
  EXPECT_EQ(r.n, 3);
  // beta's q_3 = 1*... for [0;1,2,4]: q = 1, 1, 3, 13; b_4 = 6, b_5 = 3.
  EXPECT_EQ(r.bound, Rational(1, 72 * 13 * 13 * 6 * 3));
  EXPECT_TRUE(r.consistent);
}

TEST(Separation, SeedCaseAndErrors) {
  SeparationResult r = separation_bound(word({0, 2, 5, 3}), word({0, 3, 1, 4, 2}));
  EXPECT_EQ(r.n, 1);
  EXPECT_EQ(r.bound, Rational(1, 72 * 3 * 3 * 1 * 4));  // q_1 = 3, b_2 = 1, b_3 = 4
  EXPECT_TRUE(r.consistent);
  try {
    separation_bound(word({0, 1, 2, 3}), word({0, 1, 2, 3}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "no divergence found");
  }
  EXPECT_THROW(separation_bound(word({0, 1, 2, 3}), word({0, 1, 2, 4})), DomainError);
}

TEST(Separation, RandomPairsRespectBound) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 25;
    std::vector<long> a{0}, b{0};
    for (std::size_t k = 1; k < n; ++k) {
      const long v = 1 + static_cast<long>(rng() % (rng() % 4 == 0 ? 50 : 4));
      a.push_back(v);
      b.push_back(v);
    }
    const long an = 1 + static_cast<long>(rng() % 6);
    long bn = 1 + static_cast<long>(rng() % 6);
    if (bn == an) ++bn;
    a.push_back(an);
    b.push_back(bn);
    for (auto* w : {&a, &b}) {
      for (int k = 0, extra = 2 + static_cast<int>(rng() % 8); k < extra; ++k) {
        w->push_back(1 + static_cast<long>(rng() % 9));
      }
      if (w->back() == 1) w->back() = 2;  // canonical terminated form
    }
    SeparationResult r = separation_bound(word(a), word(b));
    EXPECT_EQ(r.n, static_cast<long>(n));
    EXPECT_TRUE(r.consistent) << i;
    // Interval subtraction of exact values agrees with the rational difference.
    const Rational diff = abs(finite_cf_value(word(a).full_word()) - finite_cf_value(word(b).full_word()));
    EXPECT_TRUE(r.distance.contains(diff));
    EXPECT_GE(diff, r.bound);
  }
}

TEST(Separation, AlgebraicPair) {
  CFExpansion x = expand(cbrt2(), 40);
  CFExpansion y = expand(root_of({-3, 0, 0, 1}), 40);
  SeparationResult r = separation_bound(x, y);
  EXPECT_EQ(r.n, 1);
  EXPECT_TRUE(r.consistent);
}

TEST(GrowthGap, Fibonacci) {
  CFExpansion ones = CFExpansion::from_word(1, std::vector<Int>(40, Int(1)), false);
  EXPECT_EQ(growth_gap_scan(ones, 1, Rational(1, 2)), (std::vector<long>{1, 2}));
}

TEST(GrowthGap, Spike) {
  std::vector<Int> q{1, 2, 1, 1000000, 1, 1, 1};
  CFExpansion cf = CFExpansion::from_word(0, q);
  std::vector<long> hits = growth_gap_scan(cf, 1, Rational(1));
  // q_3 = 5 and q_4 = 1000000 * 5 + 3 > 25.
  EXPECT_NE(std::find(hits.begin(), hits.end(), 3L), hits.end());
  EXPECT_THROW(growth_gap_scan(cf, 1, Rational(0)), DomainError);
  EXPECT_THROW(growth_gap_scan(cf, 0, Rational(1)), DomainError);
}

TEST(GrowthGap, AgreesWithLogComparison) {
  std::mt19937 rng(8);
  for (int i = 0; i < 100; ++i) {
    std::vector<Int> q;
    for (int k = 0; k < 30; ++k) q.emplace_back(1 + rng() % (rng() % 5 == 0 ? 500 : 5));
    CFExpansion cf = CFExpansion::from_word(0, q);
    ConvergentTable t(cf);
    const long k = 1 + static_cast<long>(rng() % 3);
    const Rational eps(1 + rng() % 4, 1 + rng() % 4);
    std::vector<long> expected;
    for (long n = 1; n + k <= t.last(); ++n) {
      const double lhs = std::log(t.q(n + k).get_d());
      const double rhs = (1 + eps.get_d()) * std::log(t.q(n).get_d());
      if (std::fabs(lhs - rhs) < 1e-9) GTEST_SKIP() << "near tie";
      if (lhs > rhs) expected.push_back(n);
    }
    EXPECT_EQ(growth_gap_scan(cf, k, eps), expected);
  }
}

TEST(NormEquivalence, Examples) {
  NormRatioRange same = norm_equivalence_estimate(Mat2::identity(), 50);
  EXPECT_EQ(same.min_ratio, 1);
  EXPECT_EQ(same.max_ratio, 1);
  NormRatioRange shift = norm_equivalence_estimate({1, 1, 0, 1}, 100);
  EXPECT_EQ(shift.min_ratio, Rational(1, 2));
  EXPECT_EQ(shift.max_ratio, 2);
  EXPECT_EQ(shift.samples, coprime_rows(100));
  NormRatioRange inv = norm_equivalence_estimate({0, -1, 1, 0}, 100);
  EXPECT_EQ(inv.min_ratio, 1);
  EXPECT_EQ(inv.max_ratio, 1);
  EXPECT_THROW(norm_equivalence_estimate({2, 0, 0, 1}, 10), DomainError);
}

TEST(NormEquivalence, BoundedForConvergentMatrices) {
  // With A0 fixed the ratio range stays inside [1/|A0|_1, |A0|_1].
  std::mt19937 rng(21);
  for (int i = 0; i < 20; ++i) {
    std::vector<Int> w;
    for (int k = 0, n = 1 + static_cast<int>(rng() % 4); k < n; ++k) w.emplace_back(1 + rng() % 4);
    Mat2 a0 = convergent_matrix(w);
    NormRatioRange r = norm_equivalence_estimate(a0, 60);
    const Int bound = abs(a0.a) + abs(a0.b) + abs(a0.c) + abs(a0.d);
    EXPECT_GT(r.min_ratio, 0);
    EXPECT_GE(r.min_ratio, Rational(Int(1), bound));
    EXPECT_LE(r.max_ratio, Rational(bound));
  }
}

}  // namespace
}  // namespace cfspectra
