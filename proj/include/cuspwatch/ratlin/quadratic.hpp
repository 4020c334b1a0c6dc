#pragma once

#include <string>

#include "cuspwatch/ratlin/rational.hpp"

namespace cuspwatch {

/// Exact element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)).
/// D must be a positive squarefree integer other than 1; it is fixed by the
/// type so that mixing fields is a compile error.
template <long D>
class QuadScalar {
  static_assert(D > 1, "radicand must be a squarefree integer > 1");

 public:
  static constexpr long radicand = D;

  QuadScalar() = default;
  QuadScalar(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadScalar sqrt_d() { return QuadScalar(Rational(0), Rational(1)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_rational() const { return sgn(b_) == 0; }

  QuadScalar conjugate() const { return QuadScalar(a_, Rational(-b_)); }

  /// Field norm a^2 - D b^2.
  Rational norm() const { return Rational(a_ * a_ - D * b_ * b_); }

  /// Exact sign of the real number a + b*sqrt(D).
  int sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Rational a2 = a_ * a_;
    Rational db2 = D * b_ * b_;
    return a2 > db2 ? sa : sb;
  }

  QuadScalar& operator+=(const QuadScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadScalar& operator-=(const QuadScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadScalar& operator*=(const QuadScalar& o) {
    Rational a = a_ * o.a_ + D * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadScalar& operator/=(const QuadScalar& o) {
    Rational n = o.norm();
    require(sgn(n) != 0, "division by zero in Q(sqrt d)");
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }
  friend QuadScalar operator-(const QuadScalar& x) { return QuadScalar(Rational(-x.a_), Rational(-x.b_)); }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator<(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() < 0; }

  std::string str() const {
    if (sgn(b_) == 0) return a_.get_str();
    std::string out;
    if (sgn(a_) != 0) out = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
    return out + b_.get_str() + "*sqrt(" + std::to_string(D) + ")";
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

template <long D>
inline bool is_zero(const QuadScalar<D>& x) {
  return sgn(x.a()) == 0 && sgn(x.b()) == 0;
}

template <long D>
inline int sign_of(const QuadScalar<D>& x) {
  return x.sign();
}

template <long D>
inline std::string scalar_str(const QuadScalar<D>& x) {
  return x.str();
}

using Quad3 = QuadScalar<3>;

}  // namespace cuspwatch
