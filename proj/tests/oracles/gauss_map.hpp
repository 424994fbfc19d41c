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

// Reference continued-fraction expansion that shares no code with the
// library: plain rational bisection for the root, then the Gauss map
// x -> 1/(x - floor x) on a rational interval. A quotient is emitted only
// when both endpoints agree on the floor.

#include <gmpxx.h>

#include <vector>

namespace oracle {

inline mpq_class poly_eval(const std::vector<mpz_class>& c, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline int sgn_q(const mpq_class& v) { return sgn(v); }

/// Bisects [lo, hi] (sign change required) down to width 2^-bits.
inline void bisect_root(const std::vector<mpz_class>& c, mpq_class& lo, mpq_class& hi, unsigned bits) {
  mpq_class eps(1);
  eps /= mpq_class(mpz_class(1) << bits);
  int s_lo = sgn_q(poly_eval(c, lo));
  while (hi - lo > eps) {
    mpq_class mid = (lo + hi) / 2;
    int s = sgn_q(poly_eval(c, mid));
    if (s == 0) {
      lo = hi = mid;
      return;
    }
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

inline mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Up to `count` quotients a0, a1, ... of the root of c in (lo, hi); stops
/// early once the interval no longer determines the floor.
inline std::vector<mpz_class> gauss_quotients(const std::vector<mpz_class>& c, mpq_class lo, mpq_class hi,
                                              unsigned bits, std::size_t count) {
  bisect_root(c, lo, hi, bits);
  std::vector<mpz_class> out;
  while (out.size() < count) {
    mpz_class f = floor_q(lo);
    if (floor_q(hi) != f) break;
    out.push_back(f);
    if (lo == hi && lo == mpq_class(f)) break;
    mpq_class new_lo = 1 / (hi - f);
    mpq_class new_hi = 1 / (lo - f);
    lo = new_lo;
    hi = new_hi;
  }
  return out;
}

inline std::vector<mpz_class> gauss_quotients(std::initializer_list<long> coeffs, long lo, long hi, unsigned bits,
                                              std::size_t count) {
  std::vector<mpz_class> c;
  for (long v : coeffs) c.emplace_back(v);
  return gauss_quotients(c, mpq_class(lo), mpq_class(hi), bits, count);
}

}  // namespace oracle
