#pragma once

#include <map>
#include <string>
#include <vector>

#include "cuspwatch/ratlin/linalg.hpp"

namespace cuspwatch {

/// Strictly increasing 0-based index tuple.
using Tuple = std::vector<std::size_t>;

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<Tuple> combinations(std::size_t n, std::size_t k) {
  std::vector<Tuple> out;
  if (k > n) return out;
  Tuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// 1-based text form "(1,2)".
inline std::string tuple_str(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
  return s + ")";
}

/// Componentwise partial order on tuples of equal length.
inline bool tuple_leq(const Tuple& a, const Tuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

template <class S>
S minor(const Mat<S>& m, const Tuple& rows, const Tuple& cols) {
  const std::size_t k = rows.size();
  Mat<S> sub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
  return det(sub);
}

/// Element of the k-th exterior power of an m-dimensional space; only nonzero
/// coefficients are stored, keyed by lexicographically ordered tuples.
template <class S>
struct WedgeVector {
  std::size_t m = 0;
  std::size_t k = 0;
  std::map<Tuple, S> coeffs;

  bool is_zero_vector() const { return coeffs.empty(); }

  S coeff(const Tuple& t) const {
    auto it = coeffs.find(t);
    return it == coeffs.end() ? S(0) : it->second;
  }

  void set(const Tuple& t, const S& v) {
    if (is_zero(v))
      coeffs.erase(t);
    else
      coeffs[t] = v;
  }

  /// Dense coordinates in the lexicographic basis.
  Vec<S> dense() const {
    Vec<S> out;
    for (const auto& t : combinations(m, k)) out.push_back(coeff(t));
    return out;
  }

  static WedgeVector from_dense(std::size_t m, std::size_t k, const Vec<S>& v) {
    WedgeVector w{m, k, {}};
    auto ts = combinations(m, k);
    require<DimensionMismatchError>(ts.size() == v.size(), "dense wedge length mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) w.set(ts[i], v[i]);
    return w;
  }

  static WedgeVector basis(std::size_t m, const Tuple& t) {
    WedgeVector w{m, t.size(), {}};
    w.coeffs[t] = S(1);
    return w;
  }

  WedgeVector& operator*=(const S& s) {
    if (is_zero(s)) {
      coeffs.clear();
      return *this;
    }
    for (auto& [t, c] : coeffs) c *= s;
    return *this;
  }
  WedgeVector& operator+=(const WedgeVector& o) {
    require<DimensionMismatchError>(m == o.m && k == o.k, "wedge shape mismatch");
    for (const auto& [t, c] : o.coeffs) set(t, coeff(t) + c);
    return *this;
  }
  friend WedgeVector operator+(WedgeVector a, const WedgeVector& b) { return a += b; }
  friend WedgeVector operator-(WedgeVector a) {
    for (auto& [t, c] : a.coeffs) c = -c;
    return a;
  }
  friend bool operator==(const WedgeVector& a, const WedgeVector& b) {
    return a.m == b.m && a.k == b.k && a.coeffs == b.coeffs;
  }
};

using QWedge = WedgeVector<Rational>;

/// Matrix of the k-th exterior power in the lexicographic basis: entry (I, J)
/// is the minor of m on rows I and columns J.
template <class S>
Mat<S> wedge_power(const Mat<S>& m, std::size_t k) {
  require<DimensionMismatchError>(m.is_square(), "wedge_power needs a square matrix");
  require(k >= 1 && k <= m.rows(), "exterior degree out of range");
  auto ts = combinations(m.rows(), k);
  Mat<S> out(ts.size(), ts.size());
  for (std::size_t a = 0; a < ts.size(); ++a)
    for (std::size_t b = 0; b < ts.size(); ++b) out(a, b) = minor(m, ts[a], ts[b]);
  return out;
}

/// v_1 ^ ... ^ v_k as the k x k minors of the k x m matrix of rows.
/// Minors are read off an echelon form: the row matrix equals T R with R
/// reduced, so every minor is det(T) times the matching (sparse) minor of R.
template <class S>
WedgeVector<S> wedge(const std::vector<Vec<S>>& vs, std::size_t m) {
  const std::size_t k = vs.size();
  WedgeVector<S> w{m, k, {}};
  if (k == 0) {
    w.coeffs[Tuple{}] = S(1);
    return w;
  }
  for (const auto& v : vs) require<DimensionMismatchError>(v.size() == m, "vector length mismatch");
  require(k <= m, "more vectors than the ambient dimension");
  Mat<S> a = Mat<S>::from_rows(vs);
  auto e = rref(a);
  if (e.pivots.size() < k) return w;
  S scale = e.det_factor;
  // Columns of R that are not identically zero.
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t r = 0; r < k; ++r)
      if (!is_zero(e.reduced(r, c))) {
        support.push_back(c);
        break;
      }
  }
  Tuple all_rows(k);
  for (std::size_t i = 0; i < k; ++i) all_rows[i] = i;
  for (const auto& sub : combinations(support.size(), k)) {
    Tuple cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = support[sub[i]];
    S d = minor(e.reduced, all_rows, cols);
    if (!is_zero(d)) w.coeffs[cols] = d * scale;
  }
  return w;
}

/// Coprime integer coefficients with the lexicographically first one positive.
inline QWedge primitive(const QWedge& w) {
  require(!w.is_zero_vector(), "zero wedge vector has no primitive form");
  QVec vals;
  for (const auto& [t, c] : w.coeffs) vals.push_back(c);
  ZVec z = primitive_integer_signed(vals);
  QWedge out{w.m, w.k, {}};
  std::size_t i = 0;
  for (const auto& [t, c] : w.coeffs) out.coeffs[t] = Rational(z[i++]);
  return out;
}

/// Primitive Pluecker vector of span(vs).
inline QWedge plucker(const std::vector<QVec>& vs, std::size_t m) {
  require<DimensionMismatchError>(vs.size() <= m, "more vectors than the ambient dimension");
  QWedge w = wedge(vs, m);
  require<DependentInputError>(!w.is_zero_vector(), "linearly dependent input vectors");
  return primitive(w);
}

inline QWedge plucker(const std::vector<QVec>& vs) {
  require(!vs.empty(), "plucker needs at least one vector");
  return plucker(vs, vs.front().size());
}

/// Image of w under the k-th exterior power of m, without forming the power.
template <class S>
WedgeVector<S> apply(const Mat<S>& m, const WedgeVector<S>& w) {
  require<DimensionMismatchError>(m.cols() == w.m, "wedge apply shape mismatch");
  WedgeVector<S> out{m.rows(), w.k, {}};
  auto rows = combinations(m.rows(), w.k);
  std::map<Tuple, S> acc;
  for (const auto& [cols, c] : w.coeffs)
    for (const auto& r : rows) {
      S d = minor(m, r, cols);
      if (is_zero(d)) continue;
      auto [it, fresh] = acc.try_emplace(r, S(0));
      it->second += c * d;
    }
  for (auto& [t, c] : acc) out.set(t, c);
  return out;
}

/// Sup norm over coefficients.
inline Rational max_abs(const QWedge& w) {
  Rational m(0);
  for (const auto& [t, c] : w.coeffs) {
    Rational a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

/// The componentwise-maximum tuple of the support. A pure wedge always has
/// one; its absence certifies that w is not decomposable.
template <class S>
Tuple leading_tuple(const WedgeVector<S>& w) {
  require(!w.is_zero_vector(), "leading tuple of the zero vector");
  const Tuple* best = nullptr;
  for (const auto& [t, c] : w.coeffs) {
    if (best == nullptr || tuple_leq(*best, t)) best = &t;
  }
  for (const auto& [t, c] : w.coeffs)
    if (!tuple_leq(t, *best)) throw NotDecomposableError("no unique maximal tuple: input is not a pure wedge");
  return *best;
}

template <class S>
std::string to_string(const WedgeVector<S>& w) {
  if (w.coeffs.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : w.coeffs) {
    if (!first) s += " + ";
    first = false;
    std::string idx;
    for (std::size_t i = 0; i < t.size(); ++i) idx += (i ? "^e" : "e") + std::to_string(t[i] + 1);
    s += "(" + scalar_str(c) + ")" + idx;
  }
  return s;
}

}  // namespace cuspwatch
