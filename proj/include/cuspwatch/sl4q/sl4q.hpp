#pragma once

#include <utility>

#include "cuspwatch/divergence/divergence.hpp"
#include "cuspwatch/sl4q/quaternion.hpp"

namespace cuspwatch {

/// The matrix m with m e1 = e1, m e2 = e3, m e3 = -e2, m e4 = e4.
inline QuadMat periodicity_m() {
  QuadMat m(4, 4);
  m(0, 0) = 1;
  m(1, 2) = -1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

struct PeriodicityReport {
  bool ok = false;
  QuadMat conjugated;                 // m^-1 diag(u,u,1/u,1/u) m
  bool diagonal_matches = false;      // equals diag(u,1/u,u,1/u)
  std::optional<QuatMat2> preimage;   // iota2^-1 of the conjugate
  bool in_gamma = false;
};

/// Exact check in Q(sqrt 3) that m^-1 g_{log u} m = diag(u,1/u,u,1/u) lies in
/// Gamma, which makes the orbit S m g_s Gamma periodic.
inline PeriodicityReport verify_periodicity(const Quad3& u = Quad3(2, 1), const QuadMat& m = periodicity_m()) {
  PeriodicityReport rep;
  if (u.norm() == 0 || det(m) == Quad3(0)) return rep;
  Quad3 ui = Quad3(1) / u;
  QuadMat gt = QuadMat::diagonal({u, u, ui, ui});
  rep.conjugated = inverse(m) * gt * m;
  rep.diagonal_matches = rep.conjugated == QuadMat::diagonal({u, ui, u, ui});
  rep.preimage = iota2_inverse(rep.conjugated);
  rep.in_gamma = in_gamma(rep.conjugated);
  rep.ok = rep.diagonal_matches && rep.in_gamma;
  return rep;
}

/// 1-based index pair.
using IndexPair = std::pair<int, int>;

inline bool trianglelefteq(const IndexPair& a, const IndexPair& b) { return a.first <= b.first && a.second <= b.second; }

namespace detail {

inline void check_alpha(const QVec& alpha) {
  require<DimensionMismatchError>(alpha.size() == 4, "alpha needs four entries");
  Rational s(0);
  for (const auto& x : alpha) s += x;
  require(sgn(s) == 0, "alpha must sum to zero");
  for (std::size_t i = 0; i + 1 < 4; ++i) require(alpha[i] < alpha[i + 1], "alpha must be strictly increasing");
}

}  // namespace detail

struct GrPlus {
  std::vector<IndexPair> i_plus;  // pairs with alpha_i + alpha_j < 0
  IndexPair max;
  int dim = 0;
};

inline GrPlus gr_plus(const QVec& alpha) {
  detail::check_alpha(alpha);
  GrPlus g;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      if (sgn(alpha[i - 1] + alpha[j - 1]) < 0) g.i_plus.emplace_back(i, j);
  for (const auto& c : g.i_plus)
    if (std::all_of(g.i_plus.begin(), g.i_plus.end(), [&](const IndexPair& o) { return trianglelefteq(o, c); })) {
      g.max = c;
      g.dim = c.first + c.second - 3;
      return g;
    }
  throw InternalError("I_+ has no maximum");
}

/// Minimal (i, j) with V in X_{i,j}: the leading Pluecker tuple.
inline IndexPair x_membership(const std::vector<QVec>& basis) {
  require<DimensionMismatchError>(basis.size() == 2 && basis[0].size() == 4 && basis[1].size() == 4,
                                  "x_membership needs two vectors in Q^4");
  Tuple t = leading_tuple(plucker(basis, 4));
  return {static_cast<int>(t[0]) + 1, static_cast<int>(t[1]) + 1};
}

/// Does a_s (v wedge w) -> 0 as s -> +inf (forward) or -inf? Decided by the
/// signs of alpha_i + alpha_j on the nonzero Pluecker coordinates.
inline bool wedge_shrinks(const QVec& alpha, const std::vector<QVec>& basis, bool forward) {
  QWedge p = plucker(basis, 4);
  for (const auto& [t, c] : p.coeffs) {
    int s = sgn(alpha[t[0]] + alpha[t[1]]);
    if (forward ? s >= 0 : s <= 0) return false;
  }
  return true;
}

/// Dimension of the Lie algebra of the stabilizer in SL_n of each subspace.
inline std::size_t stabilizer_dim(const std::vector<std::vector<QVec>>& subspaces, std::size_t n) {
  SlBasis sl(n);
  std::vector<QVec> rows;
  for (const auto& vs : subspaces) {
    auto perp = orthogonal_complement(vs, n);
    for (const auto& v : vs)
      for (const auto& w : perp) {
        QVec row(sl.dim());
        for (std::size_t k = 0; k < sl.dim(); ++k) {
          QMat x = sl.matrix(unit_vector<Rational>(sl.dim(), k));
          row[k] = dot(w, x * v);
        }
        rows.push_back(row);
      }
  }
  return sl.dim() - rank_of_vectors(rows);
}

struct VgReport {
  int dim_vg = 0;
  std::size_t stabilizer = 0;
  int dim_gr_plus = 0;
  int dim_gr_minus = 0;
};

inline VgReport v_g_check(const QVec& alpha) {
  detail::check_alpha(alpha);
  VgReport r;
  r.dim_gr_plus = gr_plus(alpha).dim;
  QVec reversed{-alpha[3], -alpha[2], -alpha[1], -alpha[0]};  // inverse flow, coordinates reversed
  r.dim_gr_minus = gr_plus(reversed).dim;
  r.stabilizer = stabilizer_dim({{unit_vector<Rational>(4, 0), unit_vector<Rational>(4, 1)},
                                 {unit_vector<Rational>(4, 2), unit_vector<Rational>(4, 3)}},
                                4);
  r.dim_vg = static_cast<int>(r.stabilizer) + r.dim_gr_plus + r.dim_gr_minus;
  return r;
}

struct Sl4Demo {
  SubgroupSpec a;
  std::vector<WitnessVector> witnesses;  // conjugated p_n, p_n-
  DivergenceCertificate certificate;
};

/// The two-witness certificate for the trajectory A pi(g_Q) (g_X = I).
inline Sl4Demo sl4_divergence_demo(const QVec& alpha, const QMat& g_q) {
  detail::check_alpha(alpha);
  require<DimensionMismatchError>(g_q.rows() == 4 && g_q.cols() == 4, "g_Q must be 4x4");
  require(det(g_q) == 1, "g_Q must have determinant one");
  std::vector<QVec> v12{unit_vector<Rational>(4, 0), unit_vector<Rational>(4, 1)};
  std::vector<QVec> v34{unit_vector<Rational>(4, 2), unit_vector<Rational>(4, 3)};
  require(wedge_shrinks(alpha, v12, true) && wedge_shrinks(alpha, v34, false),
          "the identity is not in V_G for this alpha");
  Sl4Demo d{SubgroupSpec(4, {alpha}), {}, {}};
  QMat ad_inv = ad_matrix(inverse(g_q));
  for (const auto& r : {standard_radical(4, 2), radical_from_subspace(v34)})
    d.witnesses.push_back(make_witness(g_q, apply(ad_inv, r.p_ad)));
  d.certificate = check_certificate(d.a, d.witnesses);
  return d;
}

}  // namespace cuspwatch
