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

// Combinatorics on finite prefixes of partial-quotient words: repetitions
// A B A' B, mirror repetitions A B A' rev(B), blocks shared between two
// words, tails, cyclic mirror symmetry and subword complexity.
//
// Offsets are lengths: a witness (k, l, m) means |A| = k, |A'| = l, |B| = m.

#include <optional>
#include <utility>
#include <vector>

#include "cfspectra/bigint.hpp"

namespace cfspectra {

using Word = std::vector<Int>;

struct RepetitionWitness {
  std::size_t k = 0;  // |A|
  std::size_t l = 0;  // |A'|
  std::size_t m = 0;  // |B|
  bool mirror = false;

  Rational ratio() const;
  friend bool operator==(const RepetitionWitness&, const RepetitionWitness&) = default;
};

struct SharedBlockWitness {
  std::size_t k = 0;  // offset in the first word
  std::size_t l = 0;  // offset in the second word
  std::size_t m = 0;  // block length
  bool mirror = false;

  Rational ratio() const;
  friend bool operator==(const SharedBlockWitness&, const SharedBlockWitness&) = default;
};

struct DetectOptions {
  Rational L = 1;
  std::size_t min_block = 1;
  /// Both A-parts must be nonempty.
  bool require_nonempty_a = true;
};

/// Distinct factors of length n in w. Throws DomainError unless 1 <= n <= |w|.
std::size_t subword_complexity(const Word& w, std::size_t n);

/// Every (k, l, m) with A B A' B a prefix of w, m >= min_block and
/// (k + l)/m <= L. Sorted by m, then k, then l.
std::vector<RepetitionWitness> find_repetitions(const Word& w, const DetectOptions& options);

/// As find_repetitions with the second B reversed.
std::vector<RepetitionWitness> find_mirror_repetitions(const Word& w, const DetectOptions& options);

/// For each offset pair (k, l), the longest m with a[k..k+m) equal to
/// b[l..l+m) (or to its reversal when mirror), kept if m >= min_block and
/// (k + l)/m <= L. Sorted by m, then k, then l.
std::vector<SharedBlockWitness> find_shared_blocks(const Word& a, const Word& b, const DetectOptions& options,
                                                   bool mirror);

/// One witness per block length, in increasing order of m.
template <typename W>
std::vector<W> strictly_increasing_subsequence(const std::vector<W>& sorted_by_m) {
  std::vector<W> out;
  for (const W& w : sorted_by_m) {
    if (out.empty() || w.m > out.back().m) out.push_back(w);
  }
  return out;
}

/// Smallest 1-based i with reverse(b) equal to the rotation of a starting
/// at i. Throws DomainError on a length mismatch or empty words.
std::optional<std::size_t> cycle_mirror_shift(const Word& a, const Word& b);

/// Lexicographically smallest 1-based (i, j) such that the suffixes a[i..]
/// and b[j..] agree up to the end of the shorter one, over at least
/// min_tail letters. Evidence on finite prefixes only.
std::optional<std::pair<std::size_t, std::size_t>> same_tail_offset(const Word& a, const Word& b,
                                                                    std::size_t min_tail);

struct NormalizedWitness {
  SharedBlockWitness witness;
  std::size_t steps = 0;
  /// min(k, l) >= 3 held for the input witness.
  bool threshold_met = false;
};

/// Moves a common last letter of the two A-parts into the front of B until
/// the last letters differ or an A-part is empty. Plain witnesses only.
NormalizedWitness normalize_witness(const SharedBlockWitness& wt, const Word& a, const Word& b);

/// True when the witness's blocks really match (plain or mirrored).
bool validate(const SharedBlockWitness& wt, const Word& a, const Word& b);
bool validate(const RepetitionWitness& wt, const Word& w);

}  // namespace cfspectra
