#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <utility>

#include "cuspwatch/ratlin/rational.hpp"

namespace oracle {

using cuspwatch::Rational;

/// Enclosure [lo, hi] of log(n) for a positive rational n, with directed
/// rounding; refined on demand. Decides the sign of log(n) + r exactly:
/// for n != 1 the sum is transcendental, hence never zero.
class LogBound {
 public:
  explicit LogBound(const Rational& n, mpfr_prec_t prec = 192) : n_(n) {
    if (sgn(n) <= 0) throw std::invalid_argument("log of a nonpositive number");
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    compute(prec);
  }
  LogBound(LogBound&& o) noexcept : n_(o.n_), prec_(o.prec_) {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  LogBound(const LogBound&) = delete;
  LogBound& operator=(const LogBound&) = delete;
  LogBound& operator=(LogBound&&) = delete;
  ~LogBound() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  int sign_plus(const Rational& r) {
    if (n_ == 1) return sgn(r);
    while (true) {
      mpfr_t a, b;
      mpfr_init2(a, prec_);
      mpfr_init2(b, prec_);
      mpfr_set_q(a, r.get_mpq_t(), MPFR_RNDD);
      mpfr_set_q(b, r.get_mpq_t(), MPFR_RNDU);
      mpfr_add(a, a, lo_, MPFR_RNDD);
      mpfr_add(b, b, hi_, MPFR_RNDU);
      int s = mpfr_sgn(a) > 0 ? 1 : (mpfr_sgn(b) < 0 ? -1 : 0);
      mpfr_clear(a);
      mpfr_clear(b);
      if (s != 0) return s;
      if (prec_ > (1 << 18)) throw std::runtime_error("log comparison undecided");
      compute(prec_ * 4);
    }
  }

 private:
  void compute(mpfr_prec_t prec) {
    prec_ = prec;
    mpfr_set_prec(lo_, prec);
    mpfr_set_prec(hi_, prec);
    mpfr_t q;
    mpfr_init2(q, prec);
    mpfr_set_q(q, n_.get_mpq_t(), MPFR_RNDD);
    mpfr_log(lo_, q, MPFR_RNDD);
    mpfr_set_q(q, n_.get_mpq_t(), MPFR_RNDU);
    mpfr_log(hi_, q, MPFR_RNDU);
    mpfr_clear(q);
  }

  Rational n_;
  mpfr_prec_t prec_ = 0;
  mpfr_t lo_, hi_;
};

}  // namespace oracle
