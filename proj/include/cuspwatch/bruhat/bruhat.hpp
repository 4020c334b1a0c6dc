#pragma once

#include <vector>

#include "cuspwatch/ratlin/wedge.hpp"

namespace cuspwatch {

/// Weyl group element of SL_n with a signed permutation representative.
/// perm[i] = k means rep maps e_i to +-e_k.
struct WeylElement {
  std::vector<std::size_t> perm;
  QMat rep;

  std::size_t n() const { return perm.size(); }

  /// Image of a 0-based index set, sorted.
  Tuple apply(const Tuple& t) const {
    Tuple out;
    for (auto i : t) out.push_back(perm[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != i) return false;
    return true;
  }
};

inline std::vector<std::size_t> permutation_of(const QMat& rep) {
  std::vector<std::size_t> perm(rep.cols());
  for (std::size_t c = 0; c < rep.cols(); ++c) {
    std::size_t hits = 0;
    for (std::size_t r = 0; r < rep.rows(); ++r)
      if (sgn(rep(r, c)) != 0) {
        perm[c] = r;
        ++hits;
      }
    if (hits != 1) throw InternalError("not a monomial matrix");
  }
  return perm;
}

inline WeylElement weyl_from_rep(QMat rep) {
  WeylElement w;
  w.perm = permutation_of(rep);
  w.rep = std::move(rep);
  return w;
}

/// Signed permutation matrix for perm with determinant +1.
inline WeylElement weyl_from_perm(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  QMat rep(n, n);
  for (std::size_t i = 0; i < n; ++i) rep(perm[i], i) = 1;
  if (det(rep) < 0) rep(perm[0], 0) = -1;
  return weyl_from_rep(std::move(rep));
}

/// Longest element: the order-reversing permutation.
inline WeylElement longest_element(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
  return weyl_from_perm(perm);
}

struct BruhatFactorization {
  WeylElement w;
  QMat n;  // upper unipotent
  QMat w0;  // representative of the longest element
  QMat b;  // upper triangular, positive diagonal
  Rational bound;  // max |strict upper entry of n|

  QMat product() const { return w.rep * n * w0 * b; }
};

/// g = w n w0 b from LU with partial pivoting (largest |pivot|, ties to the
/// smallest row). Every strict upper entry of n is an elimination multiplier,
/// hence of absolute value at most 1.
inline BruhatFactorization bruhat_factor(const QMat& g) {
  require<DimensionMismatchError>(g.is_square() && g.rows() >= 1, "bruhat_factor needs a square matrix");
  require(det(g) == 1, "bruhat_factor needs det(g) = 1");
  const std::size_t n = g.rows();
  QMat u = g;
  QMat l = QMat::identity(n);
  std::vector<std::size_t> row_of(n);  // u row i came from g row row_of[i]
  for (std::size_t i = 0; i < n; ++i) row_of[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    Rational best = abs(u(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational a = abs(u(i, k));
      if (a > best) {
        best = a;
        p = i;
      }
    }
    if (p != k) {
      u.swap_rows(p, k);
      std::swap(row_of[p], row_of[k]);
      for (std::size_t j = 0; j < k; ++j) std::swap(l(p, j), l(k, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(u(i, k)) == 0) continue;
      Rational f = u(i, k) / u(k, k);
      l(i, k) = f;
      for (std::size_t j = k; j < n; ++j) u(i, j) -= f * u(k, j);
    }
  }
  // g = P l u with P e_i = e_{row_of[i]}
  QMat p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(row_of[i], i) = 1;

  WeylElement w0 = longest_element(n);
  QMat w0inv = inverse(w0.rep);
  QMat wbar = p * w0inv;
  QMat nn = w0.rep * l * w0inv;
  // sign normalization: b gets a positive diagonal, w stays in SL_n
  QMat s2 = QMat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(u(i, i)) < 0) s2(i, i) = -1;
  QMat s1 = w0.rep * s2 * w0inv;
  BruhatFactorization f;
  f.w = weyl_from_rep(wbar * s1);
  f.n = s1 * nn * s1;
  f.w0 = w0.rep;
  f.b = s2 * u;
  f.bound = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational a = abs(f.n(i, j));
      if (a > f.bound) f.bound = a;
    }
  if (det(f.w.rep) != 1 || f.product() != g) throw InternalError("Bruhat factorization failed to reconstruct");
  return f;
}

/// The permutation sigma with g in N sigma B (N upper unipotent, B upper
/// triangular): its Bruhat cell. Elimination uses the lowest nonzero entry
/// of each column as pivot, which only needs row operations from N and
/// column operations from B.
inline WeylElement bruhat_cell(const QMat& g) {
  require<DimensionMismatchError>(g.is_square(), "bruhat_cell needs a square matrix");
  require(sgn(det(g)) != 0, "bruhat_cell needs an invertible matrix");
  const std::size_t n = g.rows();
  QMat a = g;
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t r = n;
    for (std::size_t i = n; i-- > 0;)
      if (sgn(a(i, j)) != 0) {
        r = i;
        break;
      }
    if (r == n) throw InternalError("singular column during cell elimination");
    perm[j] = r;
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(a(i, j)) == 0) continue;
      Rational f = a(i, j) / a(r, j);
      for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(r, c);
    }
    for (std::size_t c = j + 1; c < n; ++c) {
      if (sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c) / a(r, j);
      for (std::size_t i = 0; i < n; ++i) a(i, c) -= f * a(i, j);
    }
  }
  return weyl_from_perm(perm);
}

struct WeightBoundReport {
  WeylElement w_prime;        // controlling element w * w0
  Tuple controlling;          // w'({1..j}) as 0-based indices
  Tuple stated_form;          // w({1..j}), the alternative reading
  Rational c;                 // uniform constant C(n,j) * j!
  Rational c_cell;            // operator norm of the wedge power of this n
  Rational norm;              // ||wedge^j(h) v|| (max over weight components)
  Rational component;         // |coefficient at the controlling weight|
  bool holds = false;
  bool stated_form_holds = false;
};

/// Checks ||wedge^j(h) v|| <= c |phi_{w'(chi)}(wedge^j(h) v)| for a highest
/// weight vector v of wedge^j(std); each weight space is one coordinate.
inline WeightBoundReport weight_bound_check(const QMat& h, std::size_t j, const QWedge& v) {
  const std::size_t n = h.rows();
  require(j >= 1 && j < n, "exterior degree out of range");
  require<DimensionMismatchError>(v.m == n && v.k == j, "vector is not in the j-th exterior power");
  Tuple top(j);
  for (std::size_t i = 0; i < j; ++i) top[i] = i;
  require(v.coeffs.size() == 1 && v.coeffs.begin()->first == top, "v is not a multiple of the highest weight vector");

  BruhatFactorization f = bruhat_factor(h);
  WeylElement w0 = longest_element(n);
  WeightBoundReport r;
  r.w_prime = weyl_from_rep(f.w.rep * w0.rep);
  r.controlling = r.w_prime.apply(top);
  r.stated_form = f.w.apply(top);

  Rational fact(1);
  for (std::size_t i = 2; i <= j; ++i) fact *= static_cast<long>(i);
  r.c = Rational(static_cast<long>(binomial(n, j))) * fact;
  QMat wn = wedge_power(f.n, j);
  r.c_cell = 0;
  for (std::size_t a = 0; a < wn.rows(); ++a) {
    Rational s(0);
    for (std::size_t b = 0; b < wn.cols(); ++b) s += abs(wn(a, b));
    if (s > r.c_cell) r.c_cell = s;
  }
  QWedge image = apply(h, v);
  r.norm = max_abs(image);
  r.component = abs(image.coeff(r.controlling));
  r.holds = sgn(r.component) != 0 && r.norm <= r.c * r.component;
  Rational alt = abs(image.coeff(r.stated_form));
  r.stated_form_holds = sgn(alt) != 0 && r.norm <= r.c * alt;
  return r;
}

}  // namespace cuspwatch
