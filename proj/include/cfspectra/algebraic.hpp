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

// Real algebraic numbers: a squarefree integer polynomial plus a dyadic
// isolating interval. Every decision (floor, ordering, equality) is made by
// exact sign evaluation, never by floating point.

#include <optional>
#include <vector>

#include "cfspectra/dyadic.hpp"
#include "cfspectra/mat2.hpp"
#include "cfspectra/polynomial.hpp"

namespace cfspectra {

class AlgebraicNumber {
 public:
  /// Wraps an interval already known to isolate a single root of the
  /// squarefree polynomial `poly`. Throws DomainError if the interval does
  /// not bracket a sign change (and is not an exact root).
  AlgebraicNumber(IntPolynomial poly, Interval isolating);

  static AlgebraicNumber from_rational(const Rational& r);
  static AlgebraicNumber from_int(const Int& v) { return from_rational(Rational(v)); }

  const IntPolynomial& minpoly() const { return minpoly_; }
  const Interval& isolating() const { return isolating_; }

  /// Degree of the number: 1 for rationals, otherwise the degree of the
  /// minimal polynomial after linear factors with rational roots are removed.
  int degree() const;

  /// The defining polynomial with every rational-root linear factor removed
  /// (or the linear polynomial of the root itself when it is rational).
  IntPolynomial reduced_minpoly() const;

  /// Exact value when the number is rational.
  std::optional<Rational> as_rational() const;

  /// Shrinks the stored interval to width <= 2^-bits and returns it.
  const Interval& refine_to(long bits);
  /// Enclosure of width <= 2^-bits without touching this value.
  Interval enclosure(long bits) const;

  /// Sign of poly at the lower endpoint (nonzero unless the interval is a point).
  int sign_at_lo() const { return sign_lo_; }

 private:
  void bisect_once();

  IntPolynomial minpoly_;
  Interval isolating_;
  int sign_lo_ = 0;
};

/// All real roots of p, ascending, each with its own isolating interval.
/// Throws DomainError("degenerate input") for the zero polynomial.
std::vector<AlgebraicNumber> isolate_real_roots(const IntPolynomial& p);

/// Refines x in place; see AlgebraicNumber::refine_to.
Interval refine_to(AlgebraicNumber& x, long bits);

/// Exact floor.
Int floor_of(const AlgebraicNumber& x);

/// (a x + b) / (c x + d). Throws DomainError at a pole (c x + d == 0).
AlgebraicNumber moebius_apply(const Mat2& m, const AlgebraicNumber& x);

/// The other root of a quadratic's minimal polynomial.
AlgebraicNumber quadratic_conjugate(const AlgebraicNumber& x);

/// Exact equality of two algebraic numbers.
bool same_number(const AlgebraicNumber& x, const AlgebraicNumber& y);

/// Exact three-way comparison.
int compare(const AlgebraicNumber& x, const AlgebraicNumber& y);

/// Sign of (c x + d); exact.
int sign_of_affine(const Int& c, const Int& d, const AlgebraicNumber& x);

/// The rational with the smallest denominator in [lo, hi] (lo <= hi).
Rational simplest_rational(const Rational& lo, const Rational& hi);

/// Convenience: the real root of p selected by ascending index (negative
/// indices count from the largest root, -1 = largest).
AlgebraicNumber real_root(const IntPolynomial& p, int index = -1);

}  // namespace cfspectra
