#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "cuspwatch/ratlin/rational.hpp"

namespace cuspwatch {

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

/// Closed interval [lo, hi] with outward-rounded endpoints.
struct Interval {
  BigFloat lo;
  BigFloat hi;

  explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {
    mpfr_set_zero(lo.get(), 1);
    mpfr_set_zero(hi.get(), 1);
  }

  static Interval of(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  /// Encloses log(q) for q > 0.
  static Interval log_of(const Rational& q, mpfr_prec_t prec) {
    require(sgn(q) > 0, "logarithm of a non-positive number");
    Interval r = of(q, prec);
    mpfr_log(r.lo.get(), r.lo.get(), MPFR_RNDD);
    mpfr_log(r.hi.get(), r.hi.get(), MPFR_RNDU);
    return r;
  }

  Interval& operator+=(const Interval& o) {
    mpfr_add(lo.get(), lo.get(), o.lo.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), o.hi.get(), MPFR_RNDU);
    return *this;
  }

  Interval& scale(const Rational& c) {
    if (sgn(c) >= 0) {
      mpfr_mul_q(lo.get(), lo.get(), c.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(hi.get(), hi.get(), c.get_mpq_t(), MPFR_RNDU);
    } else {
      BigFloat nlo(lo.precision());
      mpfr_mul_q(nlo.get(), hi.get(), c.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(hi.get(), lo.get(), c.get_mpq_t(), MPFR_RNDU);
      lo = std::move(nlo);
    }
    return *this;
  }

  /// +1 / -1 when the interval excludes zero, 0 when it straddles it.
  int certain_sign() const {
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
    return 0;
  }

  double mid() const { return 0.5 * (lo.to_double() + hi.to_double()); }
};

/// Decimal string of x rounded to nearest with `digits` significant digits,
/// written in positional notation.
inline std::string decimal_string(const BigFloat& x, int digits) {
  if (mpfr_zero_p(x.get())) return "0";
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), x.get(), MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  // value = 0.m * 10^e
  std::string out;
  if (e <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + m;
  } else if (static_cast<std::size_t>(e) < m.size()) {
    out = m.substr(0, static_cast<std::size_t>(e)) + "." + m.substr(static_cast<std::size_t>(e));
  } else {
    out = m + std::string(static_cast<std::size_t>(e) - m.size(), '0');
  }
  return sign + out;
}

}  // namespace cuspwatch
