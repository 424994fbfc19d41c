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

#include "cfspectra/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cfspectra {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<Int> coeffs;
  std::size_t start = 0;
  int field = 1;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                 : comma - start);
    try {
      coeffs.push_back(parse_int(piece));
    } catch (const InputError&) {
      throw InputError("polynomial coefficient " + std::to_string(field) + " is not an integer: '" +
                       std::string(piece) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
    ++field;
  }
  return IntPolynomial(std::move(coeffs));
}

std::string IntPolynomial::to_text() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ',';
    out << coeffs_[i].get_str();
  }
  return out.str();
}

IntPolynomial IntPolynomial::linear_root(const Rational& r) {
  return IntPolynomial(std::vector<Int>{-r.get_num(), r.get_den()});
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval IntPolynomial::eval(const Interval& x) const {
  if (x.is_point()) {
    Dyadic v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x.lo() + Dyadic(*it);
    return Interval(v);
  }
  Interval acc = Interval::from_int(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Interval::from_int(*it);
  return acc;
}

int IntPolynomial::sign_at(const Int& x) const { return sgn(eval(x)); }

int IntPolynomial::sign_at(const Dyadic& x) const {
  if (x.exponent() >= 0) return sign_at(x.floor());
  // 2^(k*d) P(m / 2^k) = sum c_i m^i 2^(k(d-i)), evaluated by Horner.
  const auto k = static_cast<mp_bitcnt_t>(-x.exponent());
  const Int& m = x.mantissa();
  Int acc = 0;
  Int term;
  mp_bitcnt_t scale = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= m;
    mpz_mul_2exp(term.get_mpz_t(), it->get_mpz_t(), scale);
    acc += term;
    scale += k;
  }
  return sgn(acc);
}

int IntPolynomial::sign_at(const Rational& x) const {
  const Int& n = x.get_num();
  const Int& q = x.get_den();
  Int acc = 0;
  Int qpow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * n + *it * qpow;
    qpow *= q;
  }
  return sgn(acc);
}

int IntPolynomial::sign_at_pos_inf() const { return coeffs_.empty() ? 0 : sgn(leading()); }

int IntPolynomial::sign_at_neg_inf() const {
  if (coeffs_.empty()) return 0;
  return (degree() % 2 == 0) ? sgn(leading()) : -sgn(leading());
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Int> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(d));
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const Int& c : coeffs_) g = cfspectra::gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (coeffs_.empty()) return {};
  Int g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<Int> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::taylor_shift(const Int& a) const {
  std::vector<Int> c = coeffs_;
  if (a == 0 || c.size() <= 1) return IntPolynomial(std::move(c));
  const std::size_t n = c.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n; j-- > i;) mpz_addmul(c[j].get_mpz_t(), a.get_mpz_t(), c[j + 1].get_mpz_t());
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Int> c(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::negated_argument() const {
  std::vector<Int> c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::scaled_argument(unsigned long k) const {
  std::vector<Int> c = coeffs_;
  if (c.empty()) return {};
  const std::size_t d = c.size() - 1;
  for (std::size_t i = 0; i < d; ++i) mpz_mul_2exp(c[i].get_mpz_t(), c[i].get_mpz_t(), k * (d - i));
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::moebius_substitute(const Int& a, const Int& b, const Int& c, const Int& d) const {
  if (coeffs_.empty()) return {};
  const int n = degree();
  const IntPolynomial num(std::vector<Int>{b, a});
  const IntPolynomial den(std::vector<Int>{d, c});
  // num_pow[i] = (a y + b)^i, den_pow[i] = (c y + d)^i
  std::vector<IntPolynomial> num_pow{IntPolynomial({1})}, den_pow{IntPolynomial({1})};
  for (int i = 1; i <= n; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  IntPolynomial out;
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    out = out + (num_pow[i] * den_pow[n - i]) * coeffs_[i];
  }
  return out;
}

int IntPolynomial::sign_variations() const {
  int changes = 0;
  int last = 0;
  for (const Int& c : coeffs_) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

unsigned long IntPolynomial::root_bound_log2() const {
  if (coeffs_.size() <= 1) return 1;
  std::size_t max_bits = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) max_bits = std::max(max_bits, bit_length(coeffs_[i]));
  long k = static_cast<long>(max_bits) - static_cast<long>(bit_length(leading())) + 2;
  return static_cast<unsigned long>(std::max(1L, k));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + b * Int(-1); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const Int& k) const {
  std::vector<Int> c = coeffs_;
  for (Int& x : c) x *= k;
  return IntPolynomial(std::move(c));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  std::vector<Int> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Int& lb = b.leading();
  int dr = static_cast<int>(r.size()) - 1;
  int steps = std::max(0, a.degree() - db + 1);
  while (dr >= db && dr >= 0) {
    Int lr = r[dr];
    for (Int& x : r) x *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b[i];
    --steps;
    while (dr >= 0 && r[dr] == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  // Scale to the textbook normalization lc(b)^(deg a - deg b + 1).
  Int fix = ipow(lb, static_cast<unsigned long>(std::max(0, steps)));
  for (Int& x : r) x *= fix;
  return IntPolynomial(std::move(r));
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Int> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) {
    if (a.is_zero()) return {};
    throw DomainError("polynomial division is not exact");
  }
  std::vector<Int> q(static_cast<std::size_t>(da - db + 1));
  for (int i = da; i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.leading().get_mpz_t())) {
      throw DomainError("polynomial division is not exact over Z");
    }
    Int t;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), b.leading().get_mpz_t());
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  for (const Int& x : r) {
    if (x != 0) throw DomainError("polynomial division is not exact");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("degenerate input: zero polynomial");
  IntPolynomial pp = p.primitive_part();
  if (pp.degree() <= 1) return pp;
  IntPolynomial g = gcd(pp, pp.derivative());
  if (g.degree() <= 0) return pp;
  return divide_exact(pp, g).primitive_part();
}

}  // namespace cfspectra
