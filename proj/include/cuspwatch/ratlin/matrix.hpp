#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cuspwatch/ratlin/rational.hpp"

namespace cuspwatch {

template <class S>
using Vec = std::vector<S>;

using QVec = Vec<Rational>;

/// Dense row-major matrix over an exact scalar type.
template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
  Mat(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      require<DimensionMismatchError>(row.size() == cols_, "ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Mat diagonal(const Vec<S>& d) {
    Mat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static Mat from_rows(const std::vector<Vec<S>>& rows) {
    Mat m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
      require<DimensionMismatchError>(r.size() == m.cols_, "ragged matrix rows");
      m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
  }

  static Mat from_columns(const std::vector<Vec<S>>& cols) {
    return from_rows(cols).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<S> row(std::size_t i) const {
    return Vec<S>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vec<S> col(std::size_t j) const {
    Vec<S> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Mat& operator+=(const Mat& o) {
    require<DimensionMismatchError>(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    require<DimensionMismatchError>(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(const S& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const S& s) { return a *= s; }
  friend Mat operator*(const S& s, Mat a) { return a *= s; }
  friend Mat operator-(Mat a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    require<DimensionMismatchError>(a.cols_ == b.rows_, "matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vec<S> operator*(const Mat& a, const Vec<S>& v) {
    require<DimensionMismatchError>(a.cols_ == v.size(), "matrix-vector shape mismatch");
    Vec<S> out(a.rows_, S(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  const std::vector<S>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

using QMat = Mat<Rational>;

template <class S>
Vec<S> unit_vector(std::size_t n, std::size_t i) {
  Vec<S> v(n, S(0));
  v[i] = S(1);
  return v;
}

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  require<DimensionMismatchError>(a.size() == b.size(), "dot product length mismatch");
  S s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Sup norm of a rational vector.
inline Rational max_abs(const QVec& v) {
  Rational m(0);
  for (const auto& x : v) {
    Rational a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

inline QVec to_qvec(const std::vector<long>& v) {
  QVec out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

inline QMat qmat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<QVec> r;
  for (const auto& row : rows) r.push_back(to_qvec(std::vector<long>(row)));
  return QMat::from_rows(r);
}

}  // namespace cuspwatch
