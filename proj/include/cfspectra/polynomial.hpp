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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfspectra/bigint.hpp"
#include "cfspectra/dyadic.hpp"

namespace cfspectra {

/// Dense univariate polynomial over Z, coefficients lowest degree first.
/// Trailing zero coefficients are stripped, so the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  /// Parses "c0,c1,...,cd" (lowest degree first). Throws InputError.
  static IntPolynomial parse(std::string_view text);
  std::string to_text() const;

  /// x - r scaled to integers: den*x - num.
  static IntPolynomial linear_root(const Rational& r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Int& operator[](std::size_t i) const { return coeffs_[i]; }
  const Int& leading() const { return coeffs_.back(); }
  std::span<const Int> coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;
  Rational eval(const Rational& x) const;
  Interval eval(const Interval& x) const;

  /// Exact sign of P at x.
  int sign_at(const Int& x) const;
  int sign_at(const Dyadic& x) const;
  int sign_at(const Rational& x) const;
  /// Sign of P(x) as x -> +inf (or -inf).
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  IntPolynomial derivative() const;
  Int content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;

  /// P(x + a).
  IntPolynomial taylor_shift(const Int& a) const;
  /// x^deg P(1/x).
  IntPolynomial reversed() const;
  /// P(-x).
  IntPolynomial negated_argument() const;
  /// 2^(k*deg) P(x / 2^k) for k >= 0.
  IntPolynomial scaled_argument(unsigned long k) const;
  /// (c y + d)^deg P((a y + b)/(c y + d)).
  IntPolynomial moebius_substitute(const Int& a, const Int& b, const Int& c, const Int& d) const;

  /// Number of sign changes in the coefficient sequence (zeros skipped).
  int sign_variations() const;

  /// Upper bound 2^k on the absolute value of every complex root.
  unsigned long root_bound_log2() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator*(const Int& k) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  void trim();

  std::vector<Int> coeffs_;
};

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b; throws DomainError if b does not divide a over Z.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd over Z[x] with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive squarefree part p / gcd(p, p').
IntPolynomial squarefree_part(const IntPolynomial& p);

}  // namespace cfspectra
