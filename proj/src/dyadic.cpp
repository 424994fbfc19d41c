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

#include "cfspectra/dyadic.hpp"

#include <algorithm>
#include <cmath>

namespace cfspectra {

Dyadic::Dyadic(const Int& mantissa, long exponent)
    : mantissa_(mantissa), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  mp_bitcnt_t tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
    exponent_ += static_cast<long>(tz);
  }
}

Rational Dyadic::to_rational() const {
  Rational r;
  if (exponent_ >= 0) {
    r = Rational(shift(mantissa_, exponent_));
  } else {
    r = Rational(mantissa_, pow2(static_cast<unsigned long>(-exponent_)));
    r.canonicalize();
  }
  return r;
}

double Dyadic::to_double() const {
  return std::ldexp(mantissa_.get_d(), static_cast<int>(
                                           std::clamp(exponent_, -100000L, 100000L)));
}

Int Dyadic::floor() const { return shift(mantissa_, exponent_); }

Int Dyadic::ceil() const {
  if (exponent_ >= 0) return shift(mantissa_, exponent_);
  return -shift(-mantissa_, exponent_);
}

Dyadic Dyadic::round_down(long bits) const {
  long excess = static_cast<long>(bit_length(mantissa_)) - bits;
  if (excess <= 0) return *this;
  return Dyadic(shift(mantissa_, -excess), exponent_ + excess);
}

Dyadic Dyadic::round_up(long bits) const {
  long excess = static_cast<long>(bit_length(mantissa_)) - bits;
  if (excess <= 0) return *this;
  return Dyadic(-shift(-mantissa_, -excess), exponent_ + excess);
}

Dyadic Dyadic::floor_at(const Rational& r, long bits) {
  Int scaled = r.get_num();
  Int den = r.get_den();
  if (bits >= 0) {
    scaled = shift(scaled, bits);
  } else {
    den = shift(den, -bits);
  }
  return Dyadic(floor_div(scaled, den), -bits);
}

Dyadic Dyadic::ceil_at(const Rational& r, long bits) {
  return -floor_at(-r, bits);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long e = std::min(a.exponent_, b.exponent_);
  return Dyadic(shift(a.mantissa_, a.exponent_ - e) + shift(b.mantissa_, b.exponent_ - e), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

Dyadic Dyadic::midpoint(const Dyadic& a, const Dyadic& b) {
  return (a + b).scaled(-1);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
  if (exponent_ >= 0) return shift(mantissa_, exponent_).get_str();
  return mantissa_.get_str() + "/2^" + std::to_string(-exponent_);
}

int compare(const Dyadic& a, const Rational& r) {
  int c = cmp(a.to_rational(), r);
  return (c > 0) - (c < 0);
}

Interval::Interval(const Dyadic& lo, const Dyadic& hi) : lo_(lo), hi_(hi) {
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
}

Interval Interval::from_rational(const Rational& r, long bits) {
  return Interval(Dyadic::floor_at(r, bits), Dyadic::ceil_at(r, bits));
}

bool Interval::contains(const Rational& x) const {
  return compare(lo_, x) <= 0 && compare(hi_, x) >= 0;
}

int Interval::certain_sign() const {
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  return 0;
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_point() && b.is_point()) return Interval(a.lo_ * b.lo_);
  Dyadic c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return Interval(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
}

Interval Interval::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  return Interval(Dyadic(0), std::max(-lo_, hi_));
}

Interval Interval::divide(const Interval& a, const Interval& b, long bits) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  Rational c[4] = {a.lo_.to_rational() / b.lo_.to_rational(), a.lo_.to_rational() / b.hi_.to_rational(),
                   a.hi_.to_rational() / b.lo_.to_rational(), a.hi_.to_rational() / b.hi_.to_rational()};
  const Rational& mn = *std::min_element(c, c + 4);
  const Rational& mx = *std::max_element(c, c + 4);
  // Relative precision: place the grid `bits` bits below the leading bit.
  auto grid = [bits](const Rational& v) {
    long mag = static_cast<long>(bit_length(v.get_num())) - static_cast<long>(bit_length(v.get_den()));
    return bits - mag + 1;
  };
  return Interval(Dyadic::floor_at(mn, grid(mn)), Dyadic::ceil_at(mx, grid(mx)));
}

Interval Interval::rounded(long bits) const {
  return Interval(lo_.round_down(bits), hi_.round_up(bits));
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

long Interval::width_log2() const {
  Dyadic w = width();
  if (w.is_zero()) return -(1L << 40);
  return static_cast<long>(bit_length(w.mantissa())) + w.exponent();
}

}  // namespace cfspectra
