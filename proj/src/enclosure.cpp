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

#include "cfspectra/enclosure.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <memory>

namespace cfspectra::enclose {
namespace {

// RAII wrapper for a single mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(long prec) { mpfr_init2(v_, std::max<long>(prec, MPFR_PREC_MIN)); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

void load(Mpfr& dst, const Dyadic& x, mpfr_rnd_t rnd) {
  mpfr_set_z_2exp(dst.get(), x.mantissa().get_mpz_t(), x.exponent(), rnd);
}

Dyadic store(const Mpfr& src) {
  if (!mpfr_number_p(src.get())) throw UndecidedError("non-finite value in enclosure arithmetic");
  if (mpfr_zero_p(src.get())) return Dyadic(0);
  Int m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), src.get());
  return Dyadic(m, e);
}

// Working precision: enough to hold the endpoint exactly when that is cheap,
// never less than the requested result precision.
long working_prec(const Dyadic& x, long bits) {
  return std::max<long>(bits, std::min<long>(static_cast<long>(bit_length(x.mantissa())), 4 * bits)) + 8;
}

template <typename Fn>
Interval monotone_increasing(const Interval& x, long bits, Fn fn) {
  Mpfr lo_in(working_prec(x.lo(), bits)), hi_in(working_prec(x.hi(), bits));
  load(lo_in, x.lo(), MPFR_RNDD);
  load(hi_in, x.hi(), MPFR_RNDU);
  Mpfr lo_out(bits + 8), hi_out(bits + 8);
  fn(lo_out.get(), lo_in.get(), MPFR_RNDD);
  fn(hi_out.get(), hi_in.get(), MPFR_RNDU);
  return Interval(store(lo_out), store(hi_out));
}

std::string render(const Dyadic& x, int digits, mpfr_rnd_t rnd) {
  if (x.is_zero()) return "0";
  Mpfr v(working_prec(x, digits * 4 + 16));
  load(v, x, rnd);
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v.get(), rnd);
  std::unique_ptr<char, void (*)(char*)> guard(raw, mpfr_free_str);
  std::string s(raw);
  bool negative = !s.empty() && s.front() == '-';
  if (negative) s.erase(0, 1);
  // mantissa string d1 d2 ... with value 0.d1d2... * 10^exp10
  std::string out = negative ? "-" : "";
  out += s.substr(0, 1);
  if (s.size() > 1) {
    std::string tail = s.substr(1);
    while (!tail.empty() && tail.back() == '0') tail.pop_back();
    if (!tail.empty()) out += "." + tail;
  }
  long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

}  // namespace

Interval log(const Interval& x, long bits) {
  if (x.certain_sign() <= 0) throw DomainError("log of an interval that is not certainly positive");
  return monotone_increasing(x, bits, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) { mpfr_log(r, a, rnd); });
}

Interval log2_const(long bits) {
  Mpfr lo(bits + 8), hi(bits + 8);
  mpfr_const_log2(lo.get(), MPFR_RNDD);
  mpfr_const_log2(hi.get(), MPFR_RNDU);
  return Interval(store(lo), store(hi));
}

Interval nth_root(const Interval& x, unsigned long n, long bits) {
  if (n == 0) throw DomainError("zeroth root");
  if (x.lo().sign() < 0) throw DomainError("root of a possibly negative interval");
  return monotone_increasing(x, bits, [n](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) {
    mpfr_rootn_ui(r, a, n, rnd);
  });
}

Interval sqrt(const Interval& x, long bits) { return nth_root(x, 2, bits); }

std::string decimal_down(const Dyadic& x, int digits) { return render(x, digits, MPFR_RNDD); }
std::string decimal_up(const Dyadic& x, int digits) { return render(x, digits, MPFR_RNDU); }
std::string decimal_nearest(const Dyadic& x, int digits) { return render(x, digits, MPFR_RNDN); }

}  // namespace cfspectra::enclose
