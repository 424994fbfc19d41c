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

#include <compare>
#include <string>

#include "cfspectra/bigint.hpp"

namespace cfspectra {

/// Exact dyadic rational mantissa * 2^exponent. Normalized so the mantissa is
/// odd (or the value is zero with exponent 0), which makes equality structural.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(const Int& mantissa, long exponent = 0);  // NOLINT(runtime/explicit)
  Dyadic(long v) : Dyadic(Int(v)) {}              // NOLINT(runtime/explicit)

  const Int& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_ == 0; }
  int sign() const { return sgn(mantissa_); }
  bool is_integer() const { return exponent_ >= 0; }

  Rational to_rational() const;
  double to_double() const;

  /// Largest integer <= value, smallest integer >= value.
  Int floor() const;
  Int ceil() const;

  /// Rounds to at most `bits` significant bits, toward -inf / +inf.
  Dyadic round_down(long bits) const;
  Dyadic round_up(long bits) const;

  /// Largest (smallest) multiple of 2^-bits that is <= (>=) r.
  static Dyadic floor_at(const Rational& r, long bits);
  static Dyadic ceil_at(const Rational& r, long bits);

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const { return Dyadic(-mantissa_, exponent_); }

  /// Exact midpoint (a+b)/2.
  static Dyadic midpoint(const Dyadic& a, const Dyadic& b);

  /// value * 2^k
  Dyadic scaled(long k) const { return Dyadic(mantissa_, exponent_ + k); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  std::string to_string() const;

 private:
  void normalize();

  Int mantissa_ = 0;
  long exponent_ = 0;
};

int compare(const Dyadic& a, const Rational& r);

/// Closed interval with dyadic endpoints, lo <= hi. Arithmetic is exact
/// except where a precision argument asks for outward rounding.
class Interval {
 public:
  Interval() = default;
  explicit Interval(const Dyadic& point) : lo_(point), hi_(point) {}
  Interval(const Dyadic& lo, const Dyadic& hi);

  static Interval from_int(const Int& v) { return Interval(Dyadic(v)); }
  /// Outward enclosure of r with endpoints on the grid 2^-bits.
  static Interval from_rational(const Rational& r, long bits);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }

  Dyadic width() const { return hi_ - lo_; }
  Dyadic mid() const { return Dyadic::midpoint(lo_, hi_); }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Rational& x) const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool overlaps(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
  /// -1 if entirely negative, +1 if entirely positive, 0 if it contains zero.
  int certain_sign() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  Interval operator-() const { return Interval(-hi_, -lo_); }

  Interval abs() const;
  /// Outward-rounded quotient; throws DomainError if b contains zero.
  static Interval divide(const Interval& a, const Interval& b, long bits);
  /// Outward rounding of both endpoints to `bits` significant bits.
  Interval rounded(long bits) const;
  static Interval hull(const Interval& a, const Interval& b);

  /// Upper bound of the width's base-2 logarithm (exponent of the
  /// enclosing power of two); very negative for narrow intervals.
  long width_log2() const;

  friend bool operator==(const Interval& a, const Interval& b) = default;

 private:
  Dyadic lo_;
  Dyadic hi_;
};

}  // namespace cfspectra
