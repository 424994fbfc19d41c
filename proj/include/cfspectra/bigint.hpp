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

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cfspectra {

using Int = mpz_class;
using Rational = mpq_class;

/// Malformed user input (bad polynomial text, bad word file, bad flag value).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certified computation could not be decided within its precision cap.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated on a mathematically meaningful input
/// (zero polynomial, pole of a Moebius map, wrong degree, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

/// Number of bits in |x|; zero has bit length 0.
inline std::size_t bit_length(const Int& x) {
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int pow2(unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
  return r;
}

/// x * 2^k for k of either sign; negative k truncates toward -inf.
inline Int shift(const Int& x, long k) {
  Int r;
  if (k >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return r;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_of(const Rational& r) { return floor_div(r.get_num(), r.get_den()); }
inline Int ceil_of(const Rational& r) { return ceil_div(r.get_num(), r.get_den()); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int isqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& a) {
  return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses an optionally signed decimal integer; surrounding blanks allowed.
Int parse_int(std::string_view text);

/// Parses "p/q", an integer, or a finite decimal such as "-0.125".
Rational parse_rational(std::string_view text);

/// True iff x fits in a signed 64-bit integer.
inline bool fits_int64(const Int& x) {
  return mpz_sizeinbase(x.get_mpz_t(), 2) <= 63;
}

inline std::int64_t to_int64(const Int& x) {
  if (!fits_int64(x)) throw std::overflow_error("integer does not fit in 64 bits");
  // mpz_get_si covers long, which is 64-bit on the supported platforms.
  return static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
}

}  // namespace cfspectra
