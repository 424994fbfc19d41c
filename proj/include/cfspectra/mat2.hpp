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

#include <string>

#include "cfspectra/bigint.hpp"

namespace cfspectra {

/// 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
  Int a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  /// [[q, 1], [1, 0]], the factor contributed by one partial quotient.
  static Mat2 quotient_step(const Int& q) { return {q, 1, 1, 0}; }

  Int det() const { return a * d - b * c; }
  Mat2 transposed() const { return {a, c, b, d}; }
  /// [[d, -b], [-c, a]]; M * adj(M) = det(M) * I.
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  Mat2 negated() const { return {-a, -b, -c, -d}; }
  Mat2 scaled(const Int& k) const { return {a * k, b * k, c * k, d * k}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) = default;

  std::string to_string() const {
    return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
  }
};

}  // namespace cfspectra
