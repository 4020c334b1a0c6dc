#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cuspwatch/ratlin/wedge.hpp"

namespace cuspwatch {

/// Integral functional on the diagonal of sl_n, stored modulo the all-ones
/// vector with the last coefficient normalized to 0.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<std::int64_t> c) : c_(std::move(c)) { canonicalize(); }

  static Character zero(std::size_t n) { return Character(std::vector<std::int64_t>(n, 0)); }
  static Character unit(std::size_t n, std::size_t i) {
    std::vector<std::int64_t> c(n, 0);
    c[i] = 1;
    return Character(std::move(c));
  }
  /// e_a - e_b
  static Character root(std::size_t n, std::size_t a, std::size_t b) {
    std::vector<std::int64_t> c(n, 0);
    c[a] += 1;
    c[b] -= 1;
    return Character(std::move(c));
  }

  std::size_t n() const { return c_.size(); }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const {
    for (auto x : c_)
      if (x != 0) return false;
    return true;
  }

  /// Value on a trace-zero diagonal direction (well defined modulo all-ones).
  Rational operator()(const QVec& diag) const {
    require<DimensionMismatchError>(diag.size() == c_.size(), "character evaluated on wrong dimension");
    Rational s(0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) s += Rational(static_cast<long>(c_[i])) * diag[i];
    return s;
  }

  QVec as_qvec() const {
    QVec v;
    for (auto x : c_) v.emplace_back(static_cast<long>(x));
    return v;
  }

  Character& operator+=(const Character& o) {
    require<DimensionMismatchError>(n() == o.n(), "character dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    canonicalize();
    return *this;
  }
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a) {
    for (auto& x : a.c_) x = -x;
    a.canonicalize();
    return a;
  }
  friend Character operator-(Character a, const Character& b) { return a += -b; }
  friend Character operator*(std::int64_t s, Character a) {
    for (auto& x : a.c_) x *= s;
    return a;
  }
  friend bool operator==(const Character& a, const Character& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Character& a, const Character& b) { return a.c_ != b.c_; }
  friend bool operator<(const Character& a, const Character& b) { return a.c_ < b.c_; }

  /// "2s1-s2" style; coefficients refer to the canonical representative.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (c_[i] > 0 && !s.empty()) s += "+";
      if (c_[i] == -1)
        s += "-";
      else if (c_[i] != 1)
        s += std::to_string(c_[i]);
      s += "s" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void canonicalize() {
    if (c_.empty()) return;
    std::int64_t last = c_.back();
    if (last == 0) return;
    for (auto& x : c_) x -= last;
  }

  std::vector<std::int64_t> c_;
};

/// Basis of sl_n: E_ab at off-diagonal (a,b), H_i = E_ii - E_{i+1,i+1} at
/// (i,i) for i < n-1, all in row-major order. This is a Z-basis of sl_n(Z).
class SlBasis {
 public:
  explicit SlBasis(std::size_t n) : n_(n) {
    require(n >= 2, "sl_n needs n >= 2");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b && a == n - 1) continue;
        pos_.emplace_back(a, b);
      }
  }

  std::size_t n() const { return n_; }
  std::size_t dim() const { return pos_.size(); }
  const std::pair<std::size_t, std::size_t>& position(std::size_t k) const { return pos_[k]; }
  bool is_cartan(std::size_t k) const { return pos_[k].first == pos_[k].second; }

  /// Index of E_ab (a != b) or H_a (a == b).
  std::size_t index(std::size_t a, std::size_t b) const {
    for (std::size_t k = 0; k < pos_.size(); ++k)
      if (pos_[k] == std::make_pair(a, b)) return k;
    throw PreconditionError("no sl_n basis element at that position");
  }

  Character weight(std::size_t k) const {
    const auto& [a, b] = pos_[k];
    return a == b ? Character::zero(n_) : Character::root(n_, a, b);
  }

  Character weight(const Tuple& t) const {
    Character c = Character::zero(n_);
    for (auto k : t) c += weight(k);
    return c;
  }

  QMat element(std::size_t k) const {
    QMat m(n_, n_);
    const auto& [a, b] = pos_[k];
    if (a == b) {
      m(a, a) = 1;
      m(a + 1, a + 1) = -1;
    } else {
      m(a, b) = 1;
    }
    return m;
  }

  /// Coordinates of a trace-zero matrix; Cartan part by partial sums.
  QVec coords(const QMat& m) const {
    require<DimensionMismatchError>(m.rows() == n_ && m.cols() == n_, "matrix is not n x n");
    Rational tr(0);
    for (std::size_t i = 0; i < n_; ++i) tr += m(i, i);
    require(sgn(tr) == 0, "matrix is not trace-free");
    QVec c(pos_.size());
    Rational partial(0);
    for (std::size_t k = 0; k < pos_.size(); ++k) {
      const auto& [a, b] = pos_[k];
      if (a == b) {
        partial += m(a, a);
        c[k] = partial;
      } else {
        c[k] = m(a, b);
      }
    }
    return c;
  }

  QMat matrix(const QVec& c) const {
    require<DimensionMismatchError>(c.size() == pos_.size(), "coordinate length mismatch");
    QMat m(n_, n_);
    for (std::size_t k = 0; k < pos_.size(); ++k) {
      if (sgn(c[k]) == 0) continue;
      const auto& [a, b] = pos_[k];
      if (a == b) {
        m(a, a) += c[k];
        m(a + 1, a + 1) -= c[k];
      } else {
        m(a, b) += c[k];
      }
    }
    return m;
  }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> pos_;
};

/// Weight of a coordinate tuple of the j-th exterior power of the standard
/// representation: sum of e_i over the tuple.
inline Character std_weight(std::size_t n, const Tuple& t) {
  std::vector<std::int64_t> c(n, 0);
  for (auto i : t) c[i] += 1;
  return Character(std::move(c));
}

/// Trace-zero diagonal of a diagonal matrix.
inline QVec diagonal_of(const QMat& m) {
  QVec d;
  for (std::size_t i = 0; i < m.rows(); ++i) d.push_back(m(i, i));
  return d;
}

}  // namespace cuspwatch
