#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cuspwatch/core/error.hpp"

namespace cuspwatch {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  require(first != std::string::npos, "empty rational literal");
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw PreconditionError("malformed rational literal: " + std::string(text));
  require(r.get_den() != 0, "zero denominator in rational literal: " + std::string(text));
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string scalar_str(const Rational& r) { return r.get_str(); }

inline int sign_of(const Rational& r) { return sgn(r); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational abs_value(const Rational& r) { return Rational(abs(r)); }

/// max(|num|, den): the naive height of a rational.
inline Integer height(const Rational& r) {
  Integer n = abs(r.get_num());
  return n > r.get_den() ? n : Integer(r.get_den());
}

inline Rational power(const Rational& base, long exponent) {
  Rational result(1);
  Rational b = base;
  if (exponent < 0) {
    require(sgn(b) != 0, "zero raised to a negative power");
    b = 1 / b;
    exponent = -exponent;
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  result = Rational(num, den);
  result.canonicalize();
  return result;
}

inline Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }

}  // namespace cuspwatch
