#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cuspwatch/cover/cover.hpp"

namespace cuspwatch {

/// A rational vector v in wedge^d sl_n together with the weight components
/// of wedge^d Ad(g) v.
struct WitnessVector {
  std::size_t n = 0;
  QWedge v;
  std::vector<std::pair<Character, Rational>> components;
  std::optional<RadicalWitness> radical;  // set when v = p_ad of a radical
};

/// Matrix of Ad(g) in the sl_n basis.
inline QMat ad_matrix(const QMat& g) {
  const std::size_t n = g.rows();
  SlBasis sl(n);
  QMat gi = inverse(g);
  QMat out(sl.dim(), sl.dim());
  for (std::size_t k = 0; k < sl.dim(); ++k) {
    QVec c = sl.coords(g * sl.matrix(unit_vector<Rational>(sl.dim(), k)) * gi);
    for (std::size_t r = 0; r < sl.dim(); ++r) out(r, k) = c[r];
  }
  return out;
}

inline WitnessVector make_witness(const QMat& g, const QWedge& v) {
  const std::size_t n = g.rows();
  SlBasis sl(n);
  require<DimensionMismatchError>(v.m == sl.dim(), "witness does not live in a wedge power of sl_n");
  require(!v.coeffs.empty(), "zero witness");
  WitnessVector w;
  w.n = n;
  w.v = v;
  for (auto& [lam, size] : weight_components(apply(ad_matrix(g), v), n)) w.components.emplace_back(lam, size);
  return w;
}

inline WitnessVector make_witness(const QMat& g, const RadicalWitness& r) {
  WitnessVector w;
  w.n = r.n;
  w.v = r.p_ad;
  for (auto& [lam, size] : weight_components(ad_image(r, g), r.n)) w.components.emplace_back(lam, size);
  w.radical = r;
  return w;
}

/// Open cone {d in Lie(A) : lambda(d) < 0 for every present lambda}, as the
/// functionals -lambda restricted to A (all must be positive on d).
struct ShrinkCone {
  std::vector<QVec> positive;
  bool empty = true;
  QVec interior;  // a direction in the cone when nonempty
};

inline ShrinkCone ray_shrink_set(const WitnessVector& w, const SubgroupSpec& a) {
  require(!w.components.empty(), "zero witness");
  require<DimensionMismatchError>(w.n == a.n, "witness and A disagree on n");
  ShrinkCone c;
  for (const auto& [lam, size] : w.components) c.positive.push_back(a.restrict(-lam));
  std::vector<BorderedSet> parts;
  for (const auto& p : c.positive) {
    if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return sgn(x) == 0; })) return c;
    parts.emplace_back(a.l(), std::vector<QVec>{p}, std::vector<Rational>{0});
  }
  auto r = intersect_nonempty(parts);
  c.empty = !r.nonempty;
  if (r.nonempty) c.interior = to_qvec(primitive_integer(r.witness));
  return c;
}

/// log ||wedge Ad(exp(t d) g) v|| in the max-over-weights norm.
inline LogValue witness_log_norm(const WitnessVector& w, const SubgroupSpec& a, const QVec& dir, const Rational& t) {
  QVec diag = a.direction(dir);
  std::optional<LogValue> best;
  for (const auto& [lam, size] : w.components) {
    LogValue v = LogValue(t * lam(diag)) + LogValue::log_of(size);
    if (!best || v > *best) best = v;
  }
  return *best;
}

struct FanFace {
  std::vector<int> signs;  // sign of each arrangement functional on the face
  QVec interior;           // primitive integer direction in the relative interior
  std::optional<std::size_t> witness;
};

struct DivergenceCertificate {
  bool certified = false;
  std::optional<QVec> uncovered;
  std::vector<QVec> arrangement;  // primitive functionals on A
  std::vector<FanFace> fan;
};

namespace detail {

/// Relative-interior point of {d : sign(h_i(d)) = s_i}, |d|_inf <= 1, or
/// nullopt when that face is {0} or empty.
inline std::optional<QVec> face_point(const std::vector<QVec>& hs, const std::vector<int>& signs, std::size_t l) {
  bool all_zero = std::all_of(signs.begin(), signs.end(), [](int s) { return s == 0; });
  if (all_zero) {
    auto ker = hs.empty() ? std::vector<QVec>{} : nullspace(QMat::from_rows(hs));
    if (hs.empty())
      for (std::size_t i = 0; i < l; ++i) ker.push_back(unit_vector<Rational>(l, i));
    if (ker.empty()) return std::nullopt;
    return ker.front();
  }
  LinearProgram<Rational> lp(l + 1);
  for (std::size_t i = 0; i < signs.size(); ++i) {
    QVec row = hs[i];
    if (signs[i] == 0) {
      row.push_back(0);
      lp.add(row, Relation::Equal, 0);
      continue;
    }
    for (auto& x : row) x *= signs[i];
    row.push_back(-1);
    lp.add(row, Relation::GreaterEq, 0);
  }
  for (std::size_t k = 0; k < l; ++k) {
    QVec row(l + 1, Rational(0));
    row[k] = 1;
    lp.add(row, Relation::LessEq, 1);
    lp.add(row, Relation::GreaterEq, -1);
  }
  QVec obj(l + 1, Rational(0));
  obj[l] = 1;
  lp.add(obj, Relation::LessEq, 1);
  lp.set_objective(obj, true);
  auto r = solve(lp);
  if (r.status != LpStatus::Optimal || sgn(r.value) <= 0) return std::nullopt;
  return QVec(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(l));
}

/// Are the partial sign conditions simultaneously satisfiable by some d != 0?
inline bool prefix_feasible(const std::vector<QVec>& hs, const std::vector<int>& signs, std::size_t l) {
  std::vector<QVec> used(hs.begin(), hs.begin() + static_cast<std::ptrdiff_t>(signs.size()));
  return face_point(used, signs, l).has_value();
}

}  // namespace detail

/// Exact coverage of the unit sphere of Lie(A) by the shrink cones: every
/// face of the arrangement of all component characters is checked.
inline DivergenceCertificate check_certificate(const SubgroupSpec& a, const std::vector<WitnessVector>& ws) {
  const std::size_t l = a.l();
  DivergenceCertificate cert;
  std::vector<ShrinkCone> cones;
  for (const auto& w : ws) {
    cones.push_back(ray_shrink_set(w, a));
    for (const auto& p : cones.back().positive) {
      if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return sgn(x) == 0; })) continue;
      QVec h = to_qvec(primitive_integer_signed(p));
      if (std::find(cert.arrangement.begin(), cert.arrangement.end(), h) == cert.arrangement.end())
        cert.arrangement.push_back(h);
    }
  }
  std::sort(cert.arrangement.begin(), cert.arrangement.end(), [](const QVec& x, const QVec& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  const auto& hs = cert.arrangement;
  std::vector<int> signs;
  std::function<void()> dfs = [&]() {
    if (signs.size() == hs.size()) {
      auto p = detail::face_point(hs, signs, l);
      if (!p) return;
      FanFace face{signs, to_qvec(primitive_integer(*p)), std::nullopt};
      for (std::size_t i = 0; i < ws.size() && !face.witness; ++i) {
        if (cones[i].empty) continue;
        bool inside = true;
        for (const auto& f : cones[i].positive)
          if (sgn(dot(f, face.interior)) <= 0) inside = false;
        if (inside) face.witness = i;
      }
      if (!face.witness && !cert.uncovered) cert.uncovered = face.interior;
      cert.fan.push_back(std::move(face));
      return;
    }
    for (int s : {1, -1, 0}) {
      signs.push_back(s);
      if (detail::prefix_feasible(hs, signs, l)) dfs();
      signs.pop_back();
    }
  };
  dfs();
  cert.certified = !cert.uncovered;
  return cert;
}

/// Radical Pluecker vectors of height <= H whose shrink cone is nonempty.
inline std::vector<WitnessVector> search_witnesses(const QMat& g, const SubgroupSpec& a, long height) {
  require<DimensionMismatchError>(g.rows() == a.n && g.cols() == a.n, "g and A disagree on n");
  std::vector<WitnessVector> out;
  if (height <= 0) return out;
  for (const auto& r : enumerate_radicals(a.n, height)) {
    WitnessVector w = make_witness(g, r);
    if (!ray_shrink_set(w, a).empty) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace cuspwatch
