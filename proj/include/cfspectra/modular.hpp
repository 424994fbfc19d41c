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


#pragma once

// The modular group acting on reals: normalized matrices, the two norms,
// best-approximation scans over an orbit, and the separation and growth-gap
// checks on pairs of expansions.

#include <optional>
#include <vector>

#include "cfspectra/algebraic.hpp"
#include "cfspectra/cf.hpp"
#include "cfspectra/mat2.hpp"

namespace cfspectra {

/// Integer matrix of determinant +-1, normalized so that c > 0, or c = 0 and d > 0.
class UnimodularMatrix {
 public:
  /// Throws DomainError unless det(m) = +-1.
  static UnimodularMatrix normalize(const Mat2& m);

  const Mat2& matrix() const { return m_; }
  const Int& a() const { return m_.a; }
  const Int& b() const { return m_.b; }
  const Int& c() const { return m_.c; }
  const Int& d() const { return m_.d; }
  int det() const { return m_.det() > 0 ? 1 : -1; }

  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

 private:
  explicit UnimodularMatrix(Mat2 m) : m_(std::move(m)) {}
  Mat2 m_;
};

/// max(|c|, |d|).
Int norm_of(const UnimodularMatrix& m);

/// |(c a + d)(c a^s + d) / (a - a^s)| for quadratic a with conjugate a^s.
/// Throws DomainError if alpha is not quadratic.
Interval quadratic_norm(const UnimodularMatrix& m, const AlgebraicNumber& alpha, long bits = 64);

enum class NormMode { classic, quadratic };

struct ApproxRecord {
  UnimodularMatrix matrix;
  Interval norm;                    // exact integer in classic mode
  Interval distance;                // |xi - beta|
  std::optional<Interval> exponent; // -log distance / log norm; absent when norm <= 1
  bool exceeds_one = false;         // exponent certainly above 1 + epsilon
  bool exceeds_two = false;         // exponent certainly above 2 + epsilon
};

struct OrbitOptions {
  NormMode mode = NormMode::classic;
  Rational epsilon{1, 10};
  /// Translates beta + t are searched for |t| <= window; negative means the height.
  long translate_window = -1;
  /// Records below this norm are not reported (and do not seed the running best).
  long min_norm = 1;
  long bits = 64;
  unsigned workers = 1;
};

struct OrbitScan {
  std::vector<ApproxRecord> records;
  bool xi_in_orbit = false;
  std::size_t candidates = 0;
  /// Quadratic mode: min over records of norm / (|c| |d|), c d != 0. Empirical.
  std::optional<Interval> trend_constant;
};

/// Every normalized matrix with norm <= height: coprime bottom rows, both
/// determinant signs, and translates a += t c, b += t d for |t| <= window.
/// Meant for small heights; the scan below does not materialize this list.
std::vector<UnimodularMatrix> enumerate_orbit_matrices(long height, long window);

/// Scans beta = A alpha over normalized A with norm <= height and reports
/// records that improve the best exponent so far, in order of norm. An
/// empty alpha means infinity, so beta runs over the rationals a/c.
OrbitScan orbit_best_approximations(const CFExpansion& xi, const std::optional<AlgebraicNumber>& alpha,
                                    long height, const OrbitOptions& options = {});

struct SeparationResult {
  long n = 0;                // first index (a_0 counts as index 0) where the expansions differ
  Rational bound;            // 1 / (72 q_n^2 b_{n+1} b_{n+2}), q and b taken from beta
  Interval distance;         // |alpha - beta|
  bool consistent = false;   // distance certainly >= bound
};

/// Throws DomainError("no divergence found") when the expansions agree over
/// the common depth, or if beta lacks quotients n+1, n+2.
SeparationResult separation_bound(const CFExpansion& alpha, const CFExpansion& beta, long bits = 256);

/// Every n >= 1 with q_{n+k} > q_n^(1+eps), compared exactly.
std::vector<long> growth_gap_scan(const CFExpansion& cf, long k, const Rational& eps);

struct NormRatioRange {
  Rational min_ratio;
  Rational max_ratio;
  std::size_t samples = 0;
};

/// Range of ||beta||_alpha / ||beta||_{A0 alpha} over orbit elements whose
/// alpha-norm is at most height. Empirical evidence only.
NormRatioRange norm_equivalence_estimate(const Mat2& a0, long height);

}  // namespace cfspectra
