#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "cuspwatch/ratlin/matrix.hpp"

namespace cuspwatch {

template <class S>
struct RowEchelon {
  Mat<S> reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  S det_factor{1};                 // product of pivots and swap signs
};

/// Gauss-Jordan elimination over an exact field.
template <class S>
RowEchelon<S> rref(Mat<S> m) {
  RowEchelon<S> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      out.det_factor = -out.det_factor;
    }
    S inv = S(1) / m(r, c);
    out.det_factor *= m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class S>
std::size_t rank(const Mat<S>& m) {
  return rref(m).pivots.size();
}

template <class S>
std::size_t rank_of_vectors(const std::vector<Vec<S>>& vs) {
  if (vs.empty()) return 0;
  return rank(Mat<S>::from_rows(vs));
}

template <class S>
S det(const Mat<S>& m) {
  require<DimensionMismatchError>(m.is_square(), "determinant of a non-square matrix");
  if (m.rows() == 0) return S(1);
  auto e = rref(m);
  if (e.pivots.size() < m.rows()) return S(0);
  return e.det_factor;
}

template <class S>
Mat<S> inverse(const Mat<S>& m) {
  require<DimensionMismatchError>(m.is_square(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = S(1);
  }
  auto e = rref(aug);
  require(e.pivots.size() == n && (n == 0 || e.pivots.back() == n - 1), "matrix is singular");
  Mat<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
template <class S>
std::vector<Vec<S>> nullspace(const Mat<S>& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec<S>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<S> v(m.cols(), S(0));
    v[f] = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of m x = b, or nullopt when inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& b) {
  require<DimensionMismatchError>(b.size() == m.rows(), "right-hand side length mismatch");
  Mat<S> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec<S> x(m.cols(), S(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

/// Rows of the reduced echelon form: a canonical basis of the row space.
template <class S>
std::vector<Vec<S>> row_space_basis(const std::vector<Vec<S>>& vs) {
  std::vector<Vec<S>> out;
  if (vs.empty()) return out;
  auto e = rref(Mat<S>::from_rows(vs));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

// ---- integer helpers -------------------------------------------------------

using ZVec = std::vector<Integer>;

inline Integer gcd_of(const ZVec& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

/// Scales a nonzero rational vector to coprime integers, preserving direction.
inline ZVec primitive_integer(const QVec& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Integer(x.get_num() * (l / x.get_den())));
  Integer g = gcd_of(out);
  require(g != 0, "zero vector has no primitive form");
  for (auto& x : out) x /= g;
  return out;
}

/// Primitive integer form with the first nonzero entry positive.
inline ZVec primitive_integer_signed(const QVec& v) {
  ZVec out = primitive_integer(v);
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

inline QVec to_qvec(const ZVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

/// A Z-basis of {x in Z^n : m x = 0} for an integer-valued matrix m.
/// Column operations with extended gcd keep a unimodular transform U with
/// m U lower echelon; the columns of U past the rank span the kernel lattice.
inline std::vector<ZVec> integer_kernel(const QMat& m) {
  const std::size_t rows = m.rows(), n = m.cols();
  std::vector<ZVec> a(rows, ZVec(n));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      require(is_integer(m(i, j)), "integer_kernel needs an integer matrix");
      a[i][j] = m(i, j).get_num();
    }
  std::vector<ZVec> u(n, ZVec(n, 0));  // u[col][coord]
  for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;
  auto col_combine = [&](std::size_t c1, std::size_t c2, const Integer& p, const Integer& q, const Integer& r,
                         const Integer& s) {
    // (c1, c2) <- (p c1 + q c2, r c1 + s c2), with ps - qr = +-1
    for (std::size_t i = 0; i < rows; ++i) {
      Integer x = a[i][c1], y = a[i][c2];
      a[i][c1] = p * x + q * y;
      a[i][c2] = r * x + s * y;
    }
    for (std::size_t k = 0; k < n; ++k) {
      Integer x = u[c1][k], y = u[c2][k];
      u[c1][k] = p * x + q * y;
      u[c2][k] = r * x + s * y;
    }
  };
  std::size_t lead = 0;
  for (std::size_t i = 0; i < rows && lead < n; ++i) {
    for (std::size_t c = lead + 1; c < n; ++c) {
      if (a[i][c] == 0) continue;
      Integer x = a[i][lead], y = a[i][c];
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      // new lead = s*lead + t*c (entry g); new c = (-y/g)*lead + (x/g)*c (entry 0)
      Integer yg = y / g, xg = x / g;
      col_combine(lead, c, s, t, Integer(-yg), xg);
    }
    if (a[i][lead] != 0) ++lead;
  }
  std::vector<ZVec> basis;
  for (std::size_t c = lead; c < n; ++c) basis.push_back(u[c]);
  return basis;
}

/// A Z-basis of V cap Z^n, where V is spanned by the given rational vectors.
inline std::vector<ZVec> saturate(const std::vector<QVec>& spanning, std::size_t n) {
  std::vector<QVec> vs;
  for (const auto& v : spanning) {
    require<DimensionMismatchError>(v.size() == n, "vector length mismatch");
    vs.push_back(v);
  }
  QMat basis = vs.empty() ? QMat(0, n) : QMat::from_rows(vs);
  auto perp = nullspace(basis);  // V^perp
  if (perp.empty()) {
    std::vector<ZVec> out;
    for (std::size_t i = 0; i < n; ++i) {
      ZVec e(n, 0);
      e[i] = 1;
      out.push_back(e);
    }
    return out;
  }
  std::vector<QVec> rows;
  for (const auto& p : perp) rows.push_back(to_qvec(primitive_integer(p)));
  return integer_kernel(QMat::from_rows(rows));
}

/// Orthogonal complement of span(vs) in Q^n.
inline std::vector<QVec> orthogonal_complement(const std::vector<QVec>& vs, std::size_t n) {
  if (vs.empty()) {
    std::vector<QVec> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector<Rational>(n, i));
    return out;
  }
  return nullspace(QMat::from_rows(vs));
}

}  // namespace cuspwatch
