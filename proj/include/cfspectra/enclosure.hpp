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

// Transcendental functions on intervals. Each endpoint is evaluated with
// MPFR under directed rounding, so the result always contains the exact image.

#include <string>

#include "cfspectra/dyadic.hpp"

namespace cfspectra::enclose {

/// Enclosure of log(x); x must be certainly positive.
Interval log(const Interval& x, long bits);

/// Enclosure of log(2).
Interval log2_const(long bits);

/// Enclosure of x^(1/n) for x >= 0, n >= 1.
Interval nth_root(const Interval& x, unsigned long n, long bits);

/// Enclosure of sqrt(x) for x >= 0.
Interval sqrt(const Interval& x, long bits);

/// Decimal rendering of an endpoint, rounded down (or up) to `digits`
/// significant digits so that the printed interval still encloses.
std::string decimal_down(const Dyadic& x, int digits = 30);
std::string decimal_up(const Dyadic& x, int digits = 30);

/// Nearest-rounded decimal, for human-facing summaries only.
std::string decimal_nearest(const Dyadic& x, int digits = 17);

}  // namespace cfspectra::enclose
