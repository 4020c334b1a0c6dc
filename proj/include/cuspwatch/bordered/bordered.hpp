#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cuspwatch/lp/simplex.hpp"
#include "cuspwatch/ratlin/wedge.hpp"

namespace cuspwatch {

/// Linear functional on R^l, given by its coefficient vector.
using Functional = QVec;

/// Nondecreasing gauge f : [0, inf) -> [0, inf).
class Gauge {
 public:
  enum class Kind { Zero, Linear, Tabulated };

  static Gauge zero() { return Gauge(); }

  static Gauge linear(const Rational& slope) {
    require(sgn(slope) >= 0, "gauge slope must be nonnegative");
    Gauge g;
    g.kind_ = sgn(slope) == 0 ? Kind::Zero : Kind::Linear;
    g.slope_ = slope;
    return g;
  }

  /// Piecewise linear through (r_i, f_i), r_0 = 0, extended past the last
  /// breakpoint with the last slope.
  static Gauge tabulated(std::vector<std::pair<Rational, Rational>> table) {
    require(table.size() >= 2, "tabulated gauge needs at least two breakpoints");
    require(sgn(table.front().first) == 0, "tabulated gauge must start at r = 0");
    require(sgn(table.front().second) >= 0, "gauge values must be nonnegative");
    for (std::size_t i = 1; i < table.size(); ++i) {
      require(table[i].first > table[i - 1].first, "gauge breakpoints must increase");
      require(table[i].second >= table[i - 1].second, "gauge must be nondecreasing");
    }
    Gauge g;
    g.kind_ = Kind::Tabulated;
    g.table_ = std::move(table);
    return g;
  }

  Kind kind() const { return kind_; }
  const Rational& slope() const { return slope_; }
  const std::vector<std::pair<Rational, Rational>>& table() const { return table_; }

  Rational operator()(const Rational& r) const {
    switch (kind_) {
      case Kind::Zero:
        return Rational(0);
      case Kind::Linear:
        return slope_ * r;
      case Kind::Tabulated:
        break;
    }
    std::size_t i = 1;
    while (i + 1 < table_.size() && r > table_[i].first) ++i;
    const auto& [r0, f0] = table_[i - 1];
    const auto& [r1, f1] = table_[i];
    return f0 + (f1 - f0) / (r1 - r0) * (r - r0);
  }

  Rational lipschitz() const {
    if (kind_ == Kind::Linear) return slope_;
    Rational m(0);
    for (std::size_t i = 1; i < table_.size(); ++i) {
      Rational s = (table_[i].second - table_[i - 1].second) / (table_[i].first - table_[i - 1].first);
      if (s > m) m = s;
    }
    return m;
  }

  Rational last_slope() const {
    if (kind_ != Kind::Tabulated) return slope_;
    const auto& a = table_[table_.size() - 2];
    const auto& b = table_.back();
    return (b.second - a.second) / (b.first - a.first);
  }

  bool divergent() const { return sgn(last_slope()) > 0; }
  bool constant() const { return sgn(lipschitz()) == 0; }

  friend bool operator==(const Gauge& a, const Gauge& b) {
    return a.kind_ == b.kind_ && a.slope_ == b.slope_ && a.table_ == b.table_;
  }

 private:
  Kind kind_ = Kind::Zero;
  Rational slope_{0};
  std::vector<std::pair<Rational, Rational>> table_;
};

/// {x in R^l : phi(x) > C_phi + f(||x||_inf) for all phi}.
struct BorderedSet {
  std::size_t l = 0;
  std::vector<Functional> phi;
  std::vector<Rational> c;
  Gauge gauge;

  BorderedSet() = default;
  BorderedSet(std::size_t dim, std::vector<Functional> functionals, std::vector<Rational> constants,
              Gauge f = Gauge::zero())
      : l(dim), phi(std::move(functionals)), c(std::move(constants)), gauge(std::move(f)) {
    require(l >= 1, "bordered set needs dimension >= 1");
    require(!phi.empty(), "bordered set needs a nonempty functional set");
    require<DimensionMismatchError>(phi.size() == c.size(), "one constant per functional");
    for (const auto& p : phi) {
      require<DimensionMismatchError>(p.size() == l, "functional has the wrong dimension");
      require(!std::all_of(p.begin(), p.end(), [](const Rational& x) { return sgn(x) == 0; }),
              "zero functional in a bordered set");
    }
  }

  /// min_phi (phi(x) - C_phi)
  Rational rho0(const QVec& x) const {
    Rational m = dot(phi[0], x) - c[0];
    for (std::size_t i = 1; i < phi.size(); ++i) {
      Rational v = dot(phi[i], x) - c[i];
      if (v < m) m = v;
    }
    return m;
  }

  Rational rho(const QVec& x) const { return rho0(x) - gauge(max_abs(x)); }

  bool contains(const QVec& x) const { return sgn(rho(x)) > 0; }
  bool contains_closure_point(const QVec& x) const { return sgn(rho(x)) >= 0; }

  /// Finite intersections of bordered sets are bordered (same gauge).
  static BorderedSet conjunction(const std::vector<BorderedSet>& sets) {
    require(!sets.empty(), "conjunction of no sets");
    BorderedSet out = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i) {
      require<DimensionMismatchError>(sets[i].l == out.l, "bordered sets live in different dimensions");
      require(sets[i].gauge == out.gauge, "bordered sets with different gauges");
      out.phi.insert(out.phi.end(), sets[i].phi.begin(), sets[i].phi.end());
      out.c.insert(out.c.end(), sets[i].c.begin(), sets[i].c.end());
    }
    return out;
  }
};

/// V-representation conv(points) + cone(directions); its interior is the
/// open convex set it stands for.
struct ConvexSpec {
  std::size_t l = 0;
  std::vector<QVec> points;
  std::vector<QVec> directions;
};

// ---- positive nontriviality ------------------------------------------------

struct NontrivialityResult {
  bool nontrivial = false;
  QVec witness;  // phi(witness) > 0 for all phi, when nontrivial
  ZVec lambda;   // lambda >= 0, nonzero, sum lambda_phi phi = 0, otherwise
};

namespace detail {

inline void check_functionals(const std::vector<Functional>& phis) {
  require(!phis.empty(), "empty functional set");
  const std::size_t l = phis.front().size();
  for (const auto& p : phis) {
    require<DimensionMismatchError>(p.size() == l, "functionals of different dimensions");
    require(!std::all_of(p.begin(), p.end(), [](const Rational& x) { return sgn(x) == 0; }),
            "zero functional in the input");
  }
}

}  // namespace detail

/// Gordan alternative decided by two exact LPs.
inline NontrivialityResult positively_nontrivial(const std::vector<Functional>& phis) {
  detail::check_functionals(phis);
  const std::size_t l = phis.front().size(), m = phis.size();
  NontrivialityResult out;
  LinearProgram<Rational> lp(l);
  for (const auto& p : phis) lp.add(p, Relation::GreaterEq, 1);
  auto r = solve(lp);
  if (r.feasible()) {
    out.nontrivial = true;
    out.witness = r.x;
    return out;
  }
  LinearProgram<Rational> dual(m, true);
  for (std::size_t k = 0; k < l; ++k) {
    QVec row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = phis[i][k];
    dual.add(row, Relation::Equal, 0);
  }
  dual.add(QVec(m, Rational(1)), Relation::Equal, 1);
  auto d = solve(dual);
  if (!d.feasible()) throw InternalError("Gordan alternative failed: neither system is feasible");
  out.lambda = primitive_integer(d.x);
  return out;
}

// ---- epsilon bound -----------------------------------------------------------

struct EpsilonBound {
  Rational raw;        // computed minimum (pre-halving)
  Rational certified;  // raw / 2
};

namespace detail {

/// min over x = sum beta_phi phi (beta <= 0), ||x||_inf = 1 of max_phi -phi(x).
inline std::optional<Rational> orthant_minimum(const std::vector<Functional>& sub) {
  const std::size_t l = sub.front().size(), k = sub.size();
  // variables: s, x (l), beta (k)
  const std::size_t nv = 1 + l + k;
  std::optional<Rational> best;
  for (std::size_t i = 0; i < l; ++i)
    for (int sigma : {1, -1}) {
      LinearProgram<Rational> lp(nv);
      for (std::size_t b = 0; b < k; ++b) {
        QVec row(nv, Rational(0));
        row[1 + l + b] = 1;
        lp.add(row, Relation::LessEq, 0);
      }
      for (std::size_t t = 0; t < l; ++t) {  // x_t = sum beta_b phi_b[t]
        QVec row(nv, Rational(0));
        row[1 + t] = 1;
        for (std::size_t b = 0; b < k; ++b) row[1 + l + b] = -sub[b][t];
        lp.add(row, Relation::Equal, 0);
        QVec up(nv, Rational(0));
        up[1 + t] = 1;
        lp.add(up, Relation::LessEq, 1);
        lp.add(up, Relation::GreaterEq, -1);
      }
      QVec fix(nv, Rational(0));
      fix[1 + i] = sigma;
      lp.add(fix, Relation::Equal, 1);
      for (const auto& p : sub) {  // s + phi(x) >= 0
        QVec row(nv, Rational(0));
        row[0] = 1;
        for (std::size_t t = 0; t < l; ++t) row[1 + t] = p[t];
        lp.add(row, Relation::GreaterEq, 0);
      }
      QVec obj(nv, Rational(0));
      obj[0] = 1;
      lp.set_objective(obj, false);
      auto r = solve(lp);
      if (r.status != LpStatus::Optimal) continue;
      if (!best || r.value < *best) best = r.value;
    }
  return best;
}

/// max over ||v||_inf <= 1 of min_phi phi(v).
inline Rational escape_rate(const std::vector<Functional>& sub) {
  const std::size_t l = sub.front().size();
  LinearProgram<Rational> lp(1 + l);
  for (const auto& p : sub) {  // phi(v) - s >= 0
    QVec row(1 + l, Rational(0));
    row[0] = -1;
    for (std::size_t t = 0; t < l; ++t) row[1 + t] = p[t];
    lp.add(row, Relation::GreaterEq, 0);
  }
  for (std::size_t t = 0; t < l; ++t) {
    QVec row(1 + l, Rational(0));
    row[1 + t] = 1;
    lp.add(row, Relation::LessEq, 1);
    lp.add(row, Relation::GreaterEq, -1);
  }
  QVec obj(1 + l, Rational(0));
  obj[0] = 1;
  lp.set_objective(obj, true);
  auto r = solve(lp);
  if (r.status != LpStatus::Optimal) throw InternalError("escape-rate LP is bounded and feasible by construction");
  return r.value;
}

/// Positive sets {phi : phi(v) > 0} of the full-dimensional cells of the
/// central arrangement, by depth-first search over strict sign vectors.
inline std::vector<std::vector<Functional>> cell_positive_sets(const std::vector<Functional>& phis) {
  const std::size_t l = phis.front().size();
  std::vector<std::vector<Functional>> out;
  std::vector<int> signs;
  std::function<void()> dfs = [&] {
    if (signs.size() == phis.size()) {
      std::vector<Functional> pos;
      for (std::size_t i = 0; i < phis.size(); ++i)
        if (signs[i] > 0) pos.push_back(phis[i]);
      if (!pos.empty()) out.push_back(std::move(pos));
      return;
    }
    for (int s : {1, -1}) {
      signs.push_back(s);
      LinearProgram<Rational> lp(l);
      for (std::size_t i = 0; i < signs.size(); ++i) {
        QVec row = phis[i];
        for (auto& x : row) x *= signs[i];
        lp.add(row, Relation::GreaterEq, 1);
      }
      if (solve(lp).feasible()) dfs();
      signs.pop_back();
    }
  };
  dfs();
  return out;
}

}  // namespace detail

/// A valid epsilon for the contraction lemma and the unbounded case, in the
/// sup norm: the minimum over independent subsets of the orthant LP optima,
/// and over positively nontrivial subsets of their escape rates; halved.
/// Escape rates shrink as functionals are added, so only the maximal
/// positively nontrivial subsets (positive sets of arrangement cells) matter.
inline EpsilonBound epsilon_bound(const std::vector<Functional>& phis) {
  detail::check_functionals(phis);
  const std::size_t m = phis.size(), l = phis.front().size();
  std::optional<Rational> best;
  auto take = [&](const Rational& v) {
    if (!best || v < *best) best = v;
  };
  for (std::size_t k = 1; k <= std::min(l, m); ++k)
    for (const auto& idx : combinations(m, k)) {
      std::vector<Functional> sub;
      for (auto i : idx) sub.push_back(phis[i]);
      if (rank_of_vectors(sub) != k) continue;
      if (auto v = detail::orthant_minimum(sub)) take(*v);
    }
  for (const auto& pos : detail::cell_positive_sets(phis)) take(detail::escape_rate(pos));
  if (!best || sgn(*best) <= 0) throw InternalError("epsilon bound must be positive");
  return EpsilonBound{*best, *best / 2};
}

// ---- emptiness, boundedness --------------------------------------------------

enum class Closure { Strict, Closed };

struct IntersectResult {
  bool nonempty = false;
  QVec witness;
};

/// Nonemptiness of the zero-gauge relaxation {phi(x) > C} (Strict) or
/// {phi(x) >= C} (Closed) of the conjunction of all sets.
inline IntersectResult intersect_nonempty(const std::vector<BorderedSet>& sets, Closure mode = Closure::Strict) {
  require(!sets.empty(), "no sets to intersect");
  const std::size_t l = sets.front().l;
  for (const auto& s : sets) require<DimensionMismatchError>(s.l == l, "sets live in different dimensions");
  IntersectResult out;
  if (mode == Closure::Closed) {
    LinearProgram<Rational> lp(l);
    for (const auto& s : sets)
      for (std::size_t i = 0; i < s.phi.size(); ++i) lp.add(s.phi[i], Relation::GreaterEq, s.c[i]);
    auto r = solve(lp);
    out.nonempty = r.feasible();
    if (out.nonempty) out.witness = r.x;
    return out;
  }
  // maximize delta <= 1 subject to phi(x) - delta >= C
  LinearProgram<Rational> lp(l + 1);
  for (const auto& s : sets)
    for (std::size_t i = 0; i < s.phi.size(); ++i) {
      QVec row = s.phi[i];
      row.push_back(-1);
      lp.add(row, Relation::GreaterEq, s.c[i]);
    }
  QVec cap(l + 1, Rational(0));
  cap[l] = 1;
  lp.add(cap, Relation::LessEq, 1);
  lp.set_objective(cap, true);
  auto r = solve(lp);
  if (r.status == LpStatus::Optimal && sgn(r.value) > 0) {
    out.nonempty = true;
    out.witness.assign(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(l));
  }
  return out;
}

namespace detail {

/// Is there d != 0 with phi(d) >= 0 for all phi?
inline bool has_recession_direction(const std::vector<Functional>& phis, std::size_t l) {
  for (std::size_t i = 0; i < l; ++i)
    for (int sigma : {1, -1}) {
      LinearProgram<Rational> lp(l);
      for (const auto& p : phis) lp.add(p, Relation::GreaterEq, 0);
      for (std::size_t t = 0; t < l; ++t) {
        QVec row = unit_vector<Rational>(l, t);
        lp.add(row, Relation::LessEq, 1);
        lp.add(row, Relation::GreaterEq, -1);
      }
      QVec fix = unit_vector<Rational>(l, i);
      fix[i] = sigma;
      lp.add(fix, Relation::Equal, 1);
      if (solve(lp).feasible()) return true;
    }
  return false;
}

}  // namespace detail

/// Boundedness. For a divergent gauge with Lipschitz constant below the
/// certified epsilon bound this is "not positively nontrivial". A constant
/// gauge gives a plain open polyhedron, decided through its recession cone.
inline bool is_bounded(const BorderedSet& u) {
  const Gauge& f = u.gauge;
  if (f.constant()) {
    BorderedSet shifted = u;
    Rational f0 = f(Rational(0));
    for (auto& x : shifted.c) x += f0;
    if (!intersect_nonempty({shifted}).nonempty) return true;
    return !detail::has_recession_direction(u.phi, u.l);
  }
  require(f.divergent(), "is_bounded needs a divergent or a constant gauge");
  EpsilonBound eb = epsilon_bound(u.phi);
  require<GaugeTooSteepError>(f.lipschitz() < eb.certified,
                              "gauge Lipschitz constant " + f.lipschitz().get_str() +
                                  " is not below the epsilon bound " + eb.certified.get_str());
  return !positively_nontrivial(u.phi).nontrivial;
}

// ---- invariance dimension, k-triviality -----------------------------------

/// Integer dimension, or nullopt for -infinity (the empty set).
using InvDim = std::optional<long>;

inline InvDim invdim(const BorderedSet& u) {
  require(u.gauge.constant(), "invdim of a bordered set needs a constant gauge");
  BorderedSet shifted = u;
  Rational f0 = u.gauge(Rational(0));
  for (auto& x : shifted.c) x += f0;
  if (!intersect_nonempty({shifted}).nonempty) return std::nullopt;
  return static_cast<long>(u.l - rank_of_vectors(u.phi));
}

namespace detail {

/// Is r in cone(gens)?
inline bool in_cone(const QVec& r, const std::vector<QVec>& gens) {
  const std::size_t l = r.size();
  if (gens.empty()) return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
  LinearProgram<Rational> lp(gens.size(), true);
  for (std::size_t t = 0; t < l; ++t) {
    QVec row;
    for (const auto& g : gens) row.push_back(g[t]);
    lp.add(row, Relation::Equal, r[t]);
  }
  return solve(lp).feasible();
}

inline bool interior_nonempty(const ConvexSpec& s) {
  if (s.points.empty()) return false;
  std::vector<QVec> span = s.directions;
  for (std::size_t i = 1; i < s.points.size(); ++i) {
    QVec d = s.points[i];
    for (std::size_t t = 0; t < d.size(); ++t) d[t] -= s.points[0][t];
    span.push_back(d);
  }
  return rank_of_vectors(span) == s.l;
}

inline std::vector<QVec> lineality_generators(const ConvexSpec& s) {
  std::vector<QVec> out;
  for (const auto& r : s.directions) {
    QVec neg = r;
    for (auto& x : neg) x = -x;
    if (in_cone(neg, s.directions)) out.push_back(r);
  }
  return out;
}

inline void check_spec(const ConvexSpec& s) {
  require(s.l >= 1, "convex set needs dimension >= 1");
  for (const auto& p : s.points) require<DimensionMismatchError>(p.size() == s.l, "point of wrong dimension");
  for (const auto& d : s.directions) require<DimensionMismatchError>(d.size() == s.l, "direction of wrong dimension");
}

}  // namespace detail

/// Dimension of the translation stabilizer of the interior: the lineality
/// space of the recession cone. -infinity for an empty interior.
inline InvDim invdim(const ConvexSpec& s) {
  detail::check_spec(s);
  if (!detail::interior_nonempty(s)) return std::nullopt;
  return static_cast<long>(rank_of_vectors(detail::lineality_generators(s)));
}

/// An open convex set is not k-trivial exactly when k = invdim and the
/// quotient by the stabilizer is bounded (recession cone = lineality space).
inline bool is_k_trivial(const ConvexSpec& s, long k) {
  detail::check_spec(s);
  require(k >= 1 && k <= static_cast<long>(s.l), "k out of range 1..l");
  InvDim d = invdim(s);
  if (!d || *d != k) return true;
  auto lin = detail::lineality_generators(s);
  return lin.size() != s.directions.size();
}

// ---- contraction -------------------------------------------------------------

struct ContractionData {
  Rational max_rho0;      // M = max rho0
  std::vector<QVec> v_rows;  // V = {phi(x) >= C_phi + M}
  std::vector<Rational> v_rhs;
  QVec u;  // sup-norm minimizer of V
};

namespace detail {

/// Euclidean projection of x onto {y : a_i . y >= b_i} by active-set
/// enumeration of the KKT conditions (independent active normals suffice).
inline QVec euclidean_projection(const std::vector<QVec>& a, const std::vector<Rational>& b, const QVec& x) {
  auto feasible = [&](const QVec& y) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (dot(a[i], y) < b[i]) return false;
    return true;
  };
  if (feasible(x)) return x;
  const std::size_t m = a.size(), l = x.size();
  for (std::size_t size = 1; size <= std::min(m, l); ++size)
    for (const auto& s : combinations(m, size)) {
      std::vector<QVec> normals;
      for (auto i : s) normals.push_back(a[i]);
      if (rank_of_vectors(normals) < size) continue;
      QMat gram(size, size);
      QVec rhs(size);
      for (std::size_t p = 0; p < size; ++p) {
        for (std::size_t q = 0; q < size; ++q) gram(p, q) = dot(normals[p], normals[q]);
        rhs[p] = b[s[p]] - dot(normals[p], x);
      }
      QVec mu = *solve(gram, rhs);
      if (std::any_of(mu.begin(), mu.end(), [](const Rational& v) { return sgn(v) < 0; })) continue;
      QVec y = x;
      for (std::size_t p = 0; p < size; ++p)
        for (std::size_t t = 0; t < l; ++t) y[t] += mu[p] * normals[p][t];
      if (feasible(y)) return y;
    }
  throw InternalError("projection onto a nonempty polyhedron not found");
}

}  // namespace detail

inline ContractionData contraction_data(const BorderedSet& u) {
  require(!positively_nontrivial(u.phi).nontrivial, "contraction needs a bounded bordered set (case (a))");
  if (!u.gauge.constant()) {
    EpsilonBound eb = epsilon_bound(u.phi);
    require<GaugeTooSteepError>(u.gauge.lipschitz() < eb.certified, "gauge Lipschitz constant is not below the epsilon bound");
  }
  const std::size_t l = u.l;
  // M = max m s.t. phi(x) - m >= C
  LinearProgram<Rational> lp(l + 1);
  for (std::size_t i = 0; i < u.phi.size(); ++i) {
    QVec row = u.phi[i];
    row.push_back(-1);
    lp.add(row, Relation::GreaterEq, u.c[i]);
  }
  QVec obj(l + 1, Rational(0));
  obj[l] = 1;
  lp.set_objective(obj, true);
  auto r = solve(lp);
  if (r.status != LpStatus::Optimal) throw InternalError("rho0 is bounded above in case (a)");
  ContractionData d;
  d.max_rho0 = r.value;
  for (std::size_t i = 0; i < u.phi.size(); ++i) {
    d.v_rows.push_back(u.phi[i]);
    d.v_rhs.push_back(u.c[i] + d.max_rho0);
  }
  // u = argmin ||v||_inf over V: min s, -s <= v_t <= s
  LinearProgram<Rational> nl(l + 1);
  for (std::size_t i = 0; i < d.v_rows.size(); ++i) {
    QVec row = d.v_rows[i];
    row.push_back(0);
    nl.add(row, Relation::GreaterEq, d.v_rhs[i]);
  }
  for (std::size_t t = 0; t < l; ++t) {
    QVec up(l + 1, Rational(0)), lo(l + 1, Rational(0));
    up[t] = -1;
    up[l] = 1;
    lo[t] = 1;
    lo[l] = 1;
    nl.add(up, Relation::GreaterEq, 0);
    nl.add(lo, Relation::GreaterEq, 0);
  }
  nl.set_objective(obj, false);
  auto s = solve(nl);
  if (s.status != LpStatus::Optimal) throw InternalError("sup-norm minimizer of V not found");
  d.u.assign(s.x.begin(), s.x.begin() + static_cast<std::ptrdiff_t>(l));
  return d;
}

/// Point at time t of the contraction of R^l: on [0, 1/2] x moves straight to
/// its Euclidean projection A(x) onto V = argmax rho0; on [1/2, 1] A(x) moves
/// straight to the sup-norm minimizer u of V. rho is nondecreasing in t.
inline QVec contract_step(const BorderedSet& set, const ContractionData& d, const QVec& x, const Rational& t) {
  require<DimensionMismatchError>(x.size() == set.l, "point of wrong dimension");
  require(sgn(t) >= 0 && t <= 1, "time must lie in [0, 1]");
  QVec ax = detail::euclidean_projection(d.v_rows, d.v_rhs, x);
  QVec out(set.l);
  if (t <= Rational(1, 2)) {
    Rational s = 2 * t;
    for (std::size_t k = 0; k < set.l; ++k) out[k] = x[k] + s * (ax[k] - x[k]);
  } else {
    Rational s = 2 * t - 1;
    for (std::size_t k = 0; k < set.l; ++k) out[k] = ax[k] + s * (d.u[k] - ax[k]);
  }
  return out;
}

inline QVec contract_step(const BorderedSet& set, const QVec& x, const Rational& t) {
  return contract_step(set, contraction_data(set), x, t);
}

}  // namespace cuspwatch
