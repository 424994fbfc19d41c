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

// Exact integer vectors built from two convergent sequences, the four linear
// forms evaluated on them with certified enclosures, and the smallness and
// growth inequalities that a shared block implies.

#include <array>
#include <optional>

#include "cfspectra/cf.hpp"
#include "cfspectra/words.hpp"

namespace cfspectra {

/// Two expansions alpha, alpha' with their convergent tables. The words of
/// the pair are the quotient sequences a_1 a_2 ... (a_0 excluded).
class PairContext {
 public:
  PairContext(CFExpansion cf, CFExpansion cf_prime);
  static PairContext from_numbers(const AlgebraicNumber& alpha, const AlgebraicNumber& alpha_prime, std::size_t depth);

  const CFExpansion& cf() const { return cf_; }
  const CFExpansion& cf_prime() const { return cf_prime_; }
  const ConvergentTable& table() const { return table_; }
  const ConvergentTable& table_prime() const { return table_prime_; }
  const Word& word() const { return cf_.quotients; }
  const Word& word_prime() const { return cf_prime_.quotients; }

  /// Enclosures of alpha and alpha' of width <= 2^-bits.
  Interval alpha(long bits) const { return value_enclosure(cf_, bits); }
  Interval alpha_prime(long bits) const { return value_enclosure(cf_prime_, bits); }

  /// Throws DomainError unless index n is available on the given side.
  void require(long n, long n_prime) const;

 private:
  CFExpansion cf_, cf_prime_;
  ConvergentTable table_, table_prime_;
};

/// (x1, x2, x3, x4), the slots of the linear forms.
using IntVector4 = std::array<Int, 4>;

/// Minors of P_k adj(P'_l):
/// (q_k q'_{l-1} - q_{k-1} q'_l, q_k p'_{l-1} - q_{k-1} p'_l,
///  p_k q'_{l-1} - p_{k-1} q'_l, p_k p'_{l-1} - p_{k-1} p'_l).
IntVector4 phi_vector(const PairContext& ctx, long k, long l);

struct MirrorQuadruple {
  IntVector4 v;  // (a, b, c, d)
  Int max_abs;   // max(|a|, |b|, |c|, |d|)
};

/// Entries of P_k (P'_{l+m})^T = [[d, c], [b, a]].
MirrorQuadruple mirror_quadruple(const PairContext& ctx, long k, long l, long m);

struct TransportCheck {
  bool holds = false;
  Mat2 before;  // built from the prefixes alone
  Mat2 after;   // built from the prefixes extended by the block
  int sign = 1; // after = sign * before
};

/// Plain: M(A) adj(M(A')) against M(AB) adj(M(A'B)); these agree up to the
/// factor det M(B) = (-1)^|B|. Mirror: M(A) M(A' rev B)^T against
/// M(AB) M(A')^T, which agree exactly. Throws DomainError on an empty B.
TransportCheck check_transport_identity(const Word& prefix, const Word& prefix_prime, const Word& block, bool mirror);

/// L1 = a a' X1 - a X2 - a' X3 + X4, L2 = a' X1 - X2, L3 = a X1 - X3, L4 = X1.
std::array<Interval, 4> eval_linear_forms(const PairContext& ctx, const IntVector4& v, long bits);

enum class Decision { holds, violated, undecided };
const char* to_string(Decision d);

struct SmallnessResult {
  Decision decision = Decision::undecided;
  bool premise_ok = false;   // the block really is shared
  bool routes_agree = false; // direct and factored enclosures overlap
  Interval direct;           // |L1(phi)| evaluated on the vector
  Interval factored;         // via the product of two convergent errors
  Rational bound;            // 2 / (q_{k+m} q'_{l+m})
  long bits = 0;             // precision of the final attempt
};

/// |L1(phi_{k,l})| < 2 / (q_{k+m} q'_{l+m}) for a plain shared-block witness.
/// Precision starts at start_bits and doubles up to max_bits.
SmallnessResult check_L1_smallness(const PairContext& ctx, const SharedBlockWitness& wt, long max_bits = 65536,
                                   long start_bits = 256);

/// (q_k q'_l)^(1+delta) < L q_{k+m} q'_{l+m}, decided in exact integers.
/// delta >= 0, L > 0.
bool check_growth_condition(const PairContext& ctx, const SharedBlockWitness& wt, const Rational& delta,
                            const Rational& L);

/// log 2 / (2 L log M). Throws DomainError unless M > 1 certainly and L > 0.
Interval delta_from_L(const Interval& M, const Rational& L, long bits = 64);

}  // namespace cfspectra
