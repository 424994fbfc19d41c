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

// Longest-common-extension queries over an integer text: suffix array by
// prefix doubling, Kasai LCP, sparse-table range minimum.

#include <cstdint>
#include <span>
#include <vector>

namespace cfspectra {

class LceIndex {
 public:
  explicit LceIndex(std::vector<std::uint32_t> text);

  std::size_t size() const { return text_.size(); }
  /// Length of the longest common prefix of the suffixes at i and j.
  std::size_t lce(std::size_t i, std::size_t j) const;

  std::span<const std::uint32_t> suffix_array() const { return sa_; }
  /// lcp[r] = LCP of the suffixes at ranks r-1 and r (lcp[0] = 0).
  std::span<const std::uint32_t> lcp() const { return lcp_; }

 private:
  std::uint32_t range_min(std::size_t lo, std::size_t hi) const;  // min lcp_[lo..hi]

  std::vector<std::uint32_t> text_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> lcp_;
  std::vector<std::vector<std::uint32_t>> sparse_;
};

}  // namespace cfspectra
