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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfspectra/algebraic.hpp"
#include "cfspectra/mat2.hpp"

namespace cfspectra {

/// [a0; a1, a2, ..., aN]. `terminated` means the expansion is complete and
/// its value is exactly the finite continued fraction; otherwise it is a
/// prefix of an infinite expansion (of `source`, when present).
struct CFExpansion {
  Int a0 = 0;
  std::vector<Int> quotients;
  bool terminated = false;
  std::optional<AlgebraicNumber> source;

  std::size_t depth() const { return quotients.size(); }
  /// a_n for n = 0..depth().
  const Int& at(std::size_t n) const { return n == 0 ? a0 : quotients[n - 1]; }
  /// a0 followed by the quotients.
  std::vector<Int> full_word() const;

  /// Builds an explicit expansion; throws DomainError if some a_i < 1.
  static CFExpansion from_word(Int a0, std::vector<Int> quotients, bool terminated = true);
};

/// p_n, q_n for n = -2 .. depth, stored with an offset of 2.
class ConvergentTable {
 public:
  explicit ConvergentTable(const CFExpansion& cf);

  /// Largest valid index n.
  long last() const { return static_cast<long>(p_.size()) - 3; }
  const Int& p(long n) const { return p_.at(static_cast<std::size_t>(n + 2)); }
  const Int& q(long n) const { return q_.at(static_cast<std::size_t>(n + 2)); }
  /// [[p_n, p_{n-1}], [q_n, q_{n-1}]] for n >= -1.
  Mat2 matrix(long n) const { return {p(n), p(n - 1), q(n), q(n - 1)}; }

 private:
  std::vector<Int> p_, q_;
};

struct Convergent {
  Int p;
  Int q;
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

struct ExpandOptions {
  /// Certification effort per quotient: the search for a single partial
  /// quotient may use this many bits before escalating.
  std::size_t bit_budget = 4096;
  /// Escalation (doubling) stops here with UndecidedError.
  std::size_t hard_cap = std::size_t{1} << 22;
};

/// First `depth` partial quotients of x (a0 plus up to depth more), each
/// certified by exact sign tests. A rational x yields a shorter, terminated
/// expansion.
CFExpansion expand(const AlgebraicNumber& x, std::size_t depth, const ExpandOptions& options = {});

/// Continued fraction of a rational number (always terminated).
CFExpansion expand_rational(const Rational& r);

/// (p_n, q_n) for n = 0..depth.
std::vector<Convergent> convergents(const CFExpansion& cf);

/// Product of [[b_i, 1], [1, 0]]. Throws DomainError on an empty word.
Mat2 word_matrix(std::span<const Int> word);
/// As word_matrix, but the empty word maps to the identity.
Mat2 convergent_matrix(std::span<const Int> word);

/// Exact value of a finite continued fraction [w0; w1, ..., wk].
Rational finite_cf_value(std::span<const Int> word);

struct IdentityCheck {
  std::string identity;  // "determinant", "mirror_ratio", "word_matrix", "approximation", "growth"
  long n = 0;
  long m = 0;            // used by "growth" only
  bool pass = false;
  std::string detail;    // empty on success
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool approximation_checked = false;

  bool all_pass() const;
  std::size_t failures() const;
  std::size_t count(const std::string& identity) const;
};

struct VerifyOptions {
  long max_m = 50;
  long start_bits = 256;
  long max_bits = 65536;
};

/// Checks, for n <= depth: the determinant alternation, q_n/q_{n-1} equal to
/// the reversed continued fraction, word_matrix against the convergent
/// matrix, q_{m+n} >= 2^((m-1)/2) q_n, and (when cf has a source)
/// |x - p_n/q_n| < 1/(q_n q_{n+1}) via certified enclosures.
IdentityReport verify_cf_identities(const CFExpansion& cf, std::size_t depth, const VerifyOptions& options = {});

/// Eventually periodic form of a quadratic irrational. The preperiod starts
/// with a0, so (1+sqrt 5)/2 has an empty preperiod and period (1).
struct PeriodicForm {
  std::vector<Int> preperiod;
  std::vector<Int> period;
  friend bool operator==(const PeriodicForm&, const PeriodicForm&) = default;
};

PeriodicForm detect_period(const AlgebraicNumber& x);

/// Shortest block whose repetition gives `cycle` (checks every divisor).
std::vector<Int> minimal_period(std::span<const Int> cycle);

struct GrowthReport {
  /// values[i] encloses (q_n q'_n)^(1/n) for n = i + 1.
  std::vector<Interval> values;
  /// Running maximum over the computed range.
  Interval max_value;
};

/// Enclosures of (q_n q'_n)^(1/n) for n >= 1; without `other`, q'_n = 1.
GrowthReport growth_metrics(const CFExpansion& cf, const CFExpansion* other = nullptr, long bits = 64);

/// Enclosure of the real number the expansion describes: the source's
/// enclosure, the exact value when terminated, otherwise the interval
/// between the last convergent and the last mediant.
Interval value_enclosure(const CFExpansion& cf, long bits);

}  // namespace cfspectra
