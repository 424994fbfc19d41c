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


#include "cfspectra/words.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "cfspectra/lce.hpp"

namespace cfspectra {

Rational RepetitionWitness::ratio() const {
  Rational r(static_cast<unsigned long>(k + l), static_cast<unsigned long>(m));
  r.canonicalize();
  return r;
}

Rational SharedBlockWitness::ratio() const {
  Rational r(static_cast<unsigned long>(k + l), static_cast<unsigned long>(m));
  r.canonicalize();
  return r;
}

namespace {

// Letters mapped to dense ranks 1..R; separators get fresh values above R so
// no common extension can run across a segment boundary.
class Alphabet {
 public:
  explicit Alphabet(std::initializer_list<const Word*> words) {
    for (const Word* w : words) letters_.insert(letters_.end(), w->begin(), w->end());
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
  }

  std::uint32_t rank(const Int& x) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), x);
    return static_cast<std::uint32_t>(it - letters_.begin()) + 1;
  }

  void append(std::vector<std::uint32_t>& text, const Word& w, bool reversed = false) const {
    if (reversed) {
      for (auto it = w.rbegin(); it != w.rend(); ++it) text.push_back(rank(*it));
    } else {
      for (const Int& x : w) text.push_back(rank(x));
    }
  }

  void separator(std::vector<std::uint32_t>& text) {
    text.push_back(static_cast<std::uint32_t>(letters_.size()) + 1 + next_sep_++);
  }

 private:
  std::vector<Int> letters_;
  std::uint32_t next_sep_ = 0;
};

// m * (num + den * extra) >= total * den, i.e. total / m <= L + extra for L = num/den.
bool ratio_ok(std::size_t total, std::size_t m, const Rational& L) {
  return Int(static_cast<unsigned long>(total)) * L.get_den() <= Int(static_cast<unsigned long>(m)) * L.get_num();
}

// Smallest m with (e - extra*m)/m <= L, i.e. e <= (L + extra) m.
std::size_t min_block_for(std::size_t e, unsigned extra, const Rational& L) {
  Int num = Int(static_cast<unsigned long>(e)) * L.get_den();
  Int den = L.get_num() + extra * L.get_den();
  Int m = ceil_div(num, den);
  return static_cast<std::size_t>(m.get_ui());
}

template <typename W>
void sort_witnesses(std::vector<W>& v) {
  std::sort(v.begin(), v.end(), [](const W& x, const W& y) { return std::tie(x.m, x.k, x.l) < std::tie(y.m, y.k, y.l); });
}

void check_options(const DetectOptions& options) {
  if (options.L <= 0) throw DomainError("L must be positive");
  if (options.min_block < 1) throw DomainError("minimum block length must be at least 1");
}

}  // namespace

std::size_t subword_complexity(const Word& w, std::size_t n) {
  if (n < 1 || n > w.size()) {
    throw DomainError("factor length " + std::to_string(n) + " outside 1.." + std::to_string(w.size()));
  }
  Alphabet alpha({&w});
  std::vector<std::uint32_t> text;
  alpha.append(text, w);
  LceIndex index(std::move(text));
  auto sa = index.suffix_array();
  auto lcp = index.lcp();
  std::size_t count = 0;
  for (std::size_t r = 0; r < sa.size(); ++r) {
    if (w.size() - sa[r] < n) continue;
    if (r == 0 || lcp[r] < n) ++count;
  }
  return count;
}

std::vector<RepetitionWitness> find_repetitions(const Word& w, const DetectOptions& options) {
  check_options(options);
  const std::size_t n = w.size();
  const std::size_t lmin = options.require_nonempty_a ? 1 : 0;
  Alphabet alpha({&w});
  std::vector<std::uint32_t> text;
  alpha.append(text, w);
  LceIndex index(std::move(text));
  std::vector<RepetitionWitness> out;
  for (std::size_t k = lmin; k < n; ++k) {
    for (std::size_t j = k + 1 + lmin; j < n; ++j) {
      // Second B starts at j = k + m + l.
      std::size_t hi = std::min(index.lce(k, j), j - k - lmin);
      std::size_t lo = std::max(options.min_block, min_block_for(j, 1, options.L));
      for (std::size_t m = lo; m <= hi; ++m) out.push_back({k, j - k - m, m, false});
    }
  }
  sort_witnesses(out);
  return out;
}

std::vector<RepetitionWitness> find_mirror_repetitions(const Word& w, const DetectOptions& options) {
  check_options(options);
  const std::size_t n = w.size();
  const std::size_t lmin = options.require_nonempty_a ? 1 : 0;
  Alphabet alpha({&w});
  std::vector<std::uint32_t> text;
  alpha.append(text, w);
  alpha.separator(text);
  alpha.append(text, w, true);
  LceIndex index(std::move(text));
  std::vector<RepetitionWitness> out;
  for (std::size_t k = lmin; k < n; ++k) {
    for (std::size_t e = k + 2 + lmin; e <= n; ++e) {
      // Second (reversed) B ends just before e; w[e-1-i] sits at n+1+(n-e)+i in the text.
      std::size_t hi = std::min(index.lce(k, n + 1 + (n - e)), (e - k - lmin) / 2);
      std::size_t lo = std::max(options.min_block, min_block_for(e, 2, options.L));
      for (std::size_t m = lo; m <= hi; ++m) out.push_back({k, e - k - 2 * m, m, true});
    }
  }
  sort_witnesses(out);
  return out;
}

std::vector<SharedBlockWitness> find_shared_blocks(const Word& a, const Word& b, const DetectOptions& options,
                                                   bool mirror) {
  check_options(options);
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t lmin = options.require_nonempty_a ? 1 : 0;
  Alphabet alpha({&a, &b});
  std::vector<std::uint32_t> text;
  alpha.append(text, a);
  alpha.separator(text);
  alpha.append(text, b, mirror);
  LceIndex index(std::move(text));
  std::vector<SharedBlockWitness> out;
  auto keep = [&](std::size_t k, std::size_t l, std::size_t m) {
    if (l < lmin || m < options.min_block || !ratio_ok(k + l, m, options.L)) return;
    out.push_back({k, l, m, mirror});
  };
  if (!mirror) {
    for (std::size_t k = lmin; k < na; ++k) {
      for (std::size_t l = lmin; l < nb; ++l) keep(k, l, index.lce(k, na + 1 + l));
    }
  } else {
    // For a block of b ending at e, t = lce(a@k, reversed b from e-1) admits
    // every l in [e - t, e - 1] with m = e - l. Scanning e downward, the first
    // e to reach a given l gives its longest block.
    std::vector<std::size_t> best(nb), next(nb + 1);
    auto find = [&](std::size_t x) {
      std::size_t root = x;
      while (next[root] != root) root = next[root];
      while (next[x] != root) x = std::exchange(next[x], root);
      return root;
    };
    for (std::size_t k = lmin; k < na; ++k) {
      std::fill(best.begin(), best.end(), 0);
      std::iota(next.begin(), next.end(), std::size_t{0});
      for (std::size_t e = nb; e >= 1; --e) {
        std::size_t t = std::min(index.lce(k, na + 1 + (nb - e)), e);
        for (std::size_t l = find(e - t); l < e; l = find(l)) {
          best[l] = e - l;
          next[l] = l + 1;
        }
      }
      for (std::size_t l = lmin; l < nb; ++l) {
        if (best[l] > 0) keep(k, l, best[l]);
      }
    }
  }
  sort_witnesses(out);
  return out;
}

std::optional<std::size_t> cycle_mirror_shift(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw DomainError("cycle mirror shift needs words of equal length");
  if (a.empty()) throw DomainError("cycle mirror shift needs nonempty words");
  const std::size_t n = a.size();
  Alphabet alpha({&a, &b});
  std::vector<std::uint32_t> text;
  alpha.append(text, b, true);
  alpha.separator(text);
  alpha.append(text, a);
  alpha.append(text, a);
  LceIndex index(std::move(text));
  for (std::size_t i = 0; i < n; ++i) {
    if (index.lce(0, n + 1 + i) >= n) return i + 1;
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> same_tail_offset(const Word& a, const Word& b,
                                                                    std::size_t min_tail) {
  if (min_tail < 1) throw DomainError("minimum tail length must be at least 1");
  const std::size_t na = a.size(), nb = b.size();
  Alphabet alpha({&a, &b});
  std::vector<std::uint32_t> text;
  alpha.append(text, a);
  alpha.separator(text);
  alpha.append(text, b);
  LceIndex index(std::move(text));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      std::size_t common = std::min(na - i, nb - j);
      if (common >= min_tail && index.lce(i, na + 1 + j) >= common) return std::make_pair(i + 1, j + 1);
    }
  }
  return std::nullopt;
}

NormalizedWitness normalize_witness(const SharedBlockWitness& wt, const Word& a, const Word& b) {
  if (wt.mirror) throw DomainError("normalization applies to plain witnesses only");
  NormalizedWitness out{wt, 0, std::min(wt.k, wt.l) >= 3};
  SharedBlockWitness& w = out.witness;
  while (w.k > 0 && w.l > 0 && a[w.k - 1] == b[w.l - 1]) {
    --w.k;
    --w.l;
    ++w.m;
    ++out.steps;
  }
  return out;
}

bool validate(const SharedBlockWitness& wt, const Word& a, const Word& b) {
  if (wt.m == 0 || wt.k + wt.m > a.size() || wt.l + wt.m > b.size()) return false;
  for (std::size_t i = 0; i < wt.m; ++i) {
    const Int& y = wt.mirror ? b[wt.l + wt.m - 1 - i] : b[wt.l + i];
    if (a[wt.k + i] != y) return false;
  }
  return true;
}

bool validate(const RepetitionWitness& wt, const Word& w) {
  std::size_t j = wt.k + wt.m + wt.l;
  if (wt.m == 0 || j + wt.m > w.size()) return false;
  for (std::size_t i = 0; i < wt.m; ++i) {
    const Int& y = wt.mirror ? w[j + wt.m - 1 - i] : w[j + i];
    if (w[wt.k + i] != y) return false;
  }
  return true;
}

}  // namespace cfspectra
