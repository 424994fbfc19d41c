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


#include "cfspectra/lce.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cfspectra {

LceIndex::LceIndex(std::vector<std::uint32_t> text) : text_(std::move(text)) {
  const std::size_t n = text_.size();
  sa_.resize(n);
  rank_.resize(n);
  lcp_.assign(n, 0);
  if (n == 0) return;
  std::iota(sa_.begin(), sa_.end(), 0u);
  std::vector<std::uint32_t> key(text_.begin(), text_.end());
  std::vector<std::uint32_t> tmp(n);
  // Prefix doubling: ranks by the first 2^h letters, sorted on (rank[i], rank[i + 2^h]).
  for (std::size_t h = 1;; h <<= 1) {
    auto second = [&](std::uint32_t i) -> std::int64_t { return i + h < n ? std::int64_t{key[i + h]} : -1; };
    auto less = [&](std::uint32_t x, std::uint32_t y) {
      if (key[x] != key[y]) return key[x] < key[y];
      return second(x) < second(y);
    };
    std::sort(sa_.begin(), sa_.end(), less);
    tmp[sa_[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) tmp[sa_[r]] = tmp[sa_[r - 1]] + (less(sa_[r - 1], sa_[r]) ? 1 : 0);
    key.swap(tmp);
    if (key[sa_[n - 1]] == n - 1 || h >= n) break;
  }
  for (std::size_t r = 0; r < n; ++r) rank_[sa_[r]] = static_cast<std::uint32_t>(r);

  // Kasai.
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank_[i] == 0) {
      h = 0;
      continue;
    }
    std::size_t j = sa_[rank_[i] - 1];
    while (i + h < n && j + h < n && text_[i + h] == text_[j + h]) ++h;
    lcp_[rank_[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }

  sparse_.push_back(lcp_);
  for (std::size_t w = 1; 2 * w <= n; w <<= 1) {
    const auto& prev = sparse_.back();
    std::vector<std::uint32_t> next(n - 2 * w + 1);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = std::min(prev[i], prev[i + w]);
    sparse_.push_back(std::move(next));
  }
}

std::uint32_t LceIndex::range_min(std::size_t lo, std::size_t hi) const {
  std::size_t len = hi - lo + 1;
  std::size_t level = static_cast<std::size_t>(std::bit_width(len)) - 1;
  return std::min(sparse_[level][lo], sparse_[level][hi + 1 - (std::size_t{1} << level)]);
}

std::size_t LceIndex::lce(std::size_t i, std::size_t j) const {
  const std::size_t n = text_.size();
  if (i >= n || j >= n) return 0;
  if (i == j) return n - i;
  std::size_t ri = rank_[i], rj = rank_[j];
  if (ri > rj) std::swap(ri, rj);
  return range_min(ri + 1, rj);
}

}  // namespace cfspectra
