#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "cuspwatch/numeric/big_float.hpp"

namespace cuspwatch {

/// Exact real number q + sum_b c_b log(b), with rational q and c_b and
/// pairwise coprime integers b > 1.
///
/// Keeping the bases coprime makes the representation canonical: pairwise
/// coprime integers are multiplicatively independent, so the log part
/// vanishes only when every c_b does, and a nonzero log part cannot cancel a
/// nonzero rational (e^q is transcendental for rational q != 0). Zero tests
/// and equality are therefore structural; only the sign of a nonzero value
/// needs interval refinement, and it always terminates.
class LogValue {
 public:
  LogValue() = default;
  LogValue(long q) : q_(q) {}  // NOLINT(google-explicit-constructor)
  LogValue(const Rational& q) : q_(q) {}  // NOLINT(google-explicit-constructor)

  /// c * log(x) for a positive rational x.
  static LogValue log_of(const Rational& x, const Rational& c = Rational(1)) {
    require(sgn(x) > 0, "logarithm of a non-positive number");
    LogValue v;
    if (sgn(c) == 0) return v;
    v.add_log_integer(x.get_num(), c);
    v.add_log_integer(x.get_den(), Rational(-c));
    v.normalize();
    return v;
  }

  const Rational& rational_part() const { return q_; }
  const std::map<Integer, Rational>& log_terms() const { return terms_; }
  bool is_rational() const { return terms_.empty(); }
  bool is_zero_value() const { return sgn(q_) == 0 && terms_.empty(); }

  LogValue& operator+=(const LogValue& o) {
    q_ += o.q_;
    for (const auto& [b, c] : o.terms_) add_log_integer(b, c);
    normalize();
    return *this;
  }
  LogValue& operator-=(const LogValue& o) {
    LogValue n = o;
    n *= Rational(-1);
    return *this += n;
  }
  LogValue& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      q_ = 0;
      terms_.clear();
      return *this;
    }
    q_ *= s;
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }
  LogValue& operator/=(const Rational& s) {
    require(sgn(s) != 0, "division of a log value by zero");
    return *this *= Rational(1 / s);
  }

  friend LogValue operator+(LogValue a, const LogValue& b) { return a += b; }
  friend LogValue operator-(LogValue a, const LogValue& b) { return a -= b; }
  friend LogValue operator-(LogValue a) { return a *= Rational(-1); }
  friend LogValue operator*(LogValue a, const Rational& s) { return a *= s; }
  friend LogValue operator*(const Rational& s, LogValue a) { return a *= s; }
  friend LogValue operator/(LogValue a, const Rational& s) { return a /= s; }

  friend bool operator==(const LogValue& a, const LogValue& b) { return (a - b).is_zero_value(); }
  friend bool operator!=(const LogValue& a, const LogValue& b) { return !(a == b); }
  friend bool operator<(const LogValue& a, const LogValue& b) { return (a - b).sign() < 0; }
  friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }
  friend bool operator<=(const LogValue& a, const LogValue& b) { return !(b < a); }
  friend bool operator>=(const LogValue& a, const LogValue& b) { return !(a < b); }

  /// Enclosure at the given binary precision.
  Interval enclose(mpfr_prec_t prec) const {
    Interval acc = Interval::of(q_, prec);
    for (const auto& [b, c] : terms_) {
      Interval t = Interval::log_of(Rational(b), prec);
      t.scale(c);
      acc += t;
    }
    return acc;
  }

  /// Exact sign.
  int sign() const {
    if (terms_.empty()) return sgn(q_);
    for (mpfr_prec_t prec = 64;; prec *= 2) {
      int s = enclose(prec).certain_sign();
      if (s != 0) return s;
      if (prec > (1 << 22)) throw InternalError("sign refinement did not converge");
    }
  }

  double approx() const { return enclose(64).mid(); }

  /// Correctly rounded decimal with `digits` significant digits.
  std::string decimal(int digits = 50) const {
    require(digits >= 1 && digits <= 10000, "decimal precision out of range");
    if (is_zero_value()) return "0";
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 32;
    for (;; prec *= 2) {
      Interval iv = enclose(prec);
      std::string lo = decimal_string(iv.lo, digits);
      std::string hi = decimal_string(iv.hi, digits);
      if (lo == hi) return lo;
      if (prec > (1 << 24)) throw InternalError("decimal rounding did not converge");
    }
  }

  std::string symbolic() const {
    std::string s = q_.get_str();
    for (const auto& [b, c] : terms_) s += " + (" + c.get_str() + ")*log(" + b.get_str() + ")";
    return s;
  }

 private:
  void add_log_integer(const Integer& b, const Rational& c) {
    if (b == 1 || sgn(c) == 0) return;
    require(b > 1, "log base must be a positive integer");
    auto [it, fresh] = terms_.try_emplace(b, Rational(0));
    it->second += c;
  }

  /// Refines the bases into a pairwise coprime family and drops zero terms.
  void normalize() {
    std::vector<std::pair<Integer, Rational>> work(terms_.begin(), terms_.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < work.size() && !changed; ++i)
        for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
          Integer g;
          mpz_gcd(g.get_mpz_t(), work[i].first.get_mpz_t(), work[j].first.get_mpz_t());
          if (g == 1) continue;
          changed = true;
          if (work[i].first == work[j].first) {
            work[i].second += work[j].second;
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
            continue;
          }
          // b_i = g * (b_i/g), b_j = g * (b_j/g)
          Integer bi = work[i].first / g, bj = work[j].first / g;
          Rational ci = work[i].second, cj = work[j].second;
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
          work.emplace_back(g, Rational(ci + cj));
          if (bi != 1) work.emplace_back(bi, ci);
          if (bj != 1) work.emplace_back(bj, cj);
        }
    }
    terms_.clear();
    for (auto& [b, c] : work) {
      if (sgn(c) == 0) continue;
      auto [it, fresh] = terms_.try_emplace(b, Rational(0));
      it->second += c;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (sgn(it->second) == 0)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  Rational q_{0};
  std::map<Integer, Rational> terms_;
};

inline int sign_of(const LogValue& v) { return v.sign(); }
inline bool is_zero(const LogValue& v) { return v.is_zero_value(); }

/// Decimal precision for log outputs: CUSPWATCH_PRECISION or 50.
inline int output_digits() {
  if (const char* env = std::getenv("CUSPWATCH_PRECISION")) {
    try {
      int d = std::stoi(env);
      if (d >= 1 && d <= 10000) return d;
    } catch (const std::exception&) {
    }
    throw PreconditionError("CUSPWATCH_PRECISION must be an integer in [1, 10000]");
  }
  return 50;
}

}  // namespace cuspwatch
