#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cuspwatch/bordered/bordered.hpp"
#include "cuspwatch/radicals/radicals.hpp"

namespace cuspwatch {

/// Diagonal subgroup A = exp(span of trace-zero directions) of SL_n;
/// points of A are coordinate vectors t in that basis.
struct SubgroupSpec {
  std::size_t n = 0;
  std::vector<QVec> basis;

  SubgroupSpec() = default;
  SubgroupSpec(std::size_t dim, std::vector<QVec> dirs) : n(dim), basis(std::move(dirs)) {
    require(n >= 2, "SL_n needs n >= 2");
    require(!basis.empty(), "A needs at least one direction");
    for (const auto& d : basis) {
      require<DimensionMismatchError>(d.size() == n, "A direction has the wrong length");
      Rational tr(0);
      for (const auto& x : d) tr += x;
      require(sgn(tr) == 0, "A directions must be trace-zero");
    }
    require<DependentInputError>(rank_of_vectors(basis) == basis.size(), "A directions are dependent");
  }

  /// The full diagonal torus with basis e_i - e_{i+1}.
  static SubgroupSpec full_torus(std::size_t n) {
    std::vector<QVec> dirs;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      QVec d(n, Rational(0));
      d[i] = 1;
      d[i + 1] = -1;
      dirs.push_back(d);
    }
    return SubgroupSpec(n, dirs);
  }

  std::size_t l() const { return basis.size(); }

  QVec direction(const QVec& t) const {
    require<DimensionMismatchError>(t.size() == l(), "point of A has the wrong dimension");
    QVec d(n, Rational(0));
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t k = 0; k < n; ++k) d[k] += t[i] * basis[i][k];
    return d;
  }

  /// psi restricted to A, as a functional on A-coordinates.
  QVec restrict(const Character& psi) const {
    QVec r;
    for (const auto& d : basis) r.push_back(psi(d));
    return r;
  }
};

/// {a : psi(a) >= d_psi + f(||a||)} for psi in Psi_u, with
/// d_psi = log ||phi_{-psi}(wedge Ad(g) p_ad)|| + C0.
struct CoverElement {
  RadicalWitness witness;
  std::vector<Character> psi;
  std::vector<Rational> norms;  // ||phi_{-psi}(wedge Ad(g) p_ad)||
  Rational c0{0};
  std::vector<QVec> functionals;  // psi restricted to A
  Gauge gauge;

  LogValue d(std::size_t i) const { return LogValue::log_of(norms[i]) + c0; }

  /// psi(a) - d_psi - f(||a||) for every psi.
  std::vector<LogValue> slacks(const QVec& t, bool gauged = true) const {
    Rational f = gauged ? gauge(max_abs(t)) : Rational(0);
    std::vector<LogValue> out;
    for (std::size_t i = 0; i < psi.size(); ++i) out.push_back(LogValue(dot(functionals[i], t) - f) - d(i));
    return out;
  }

  bool contains(const QVec& t, bool gauged = true) const {
    for (const auto& s : slacks(t, gauged))
      if (s.sign() < 0) return false;
    return true;
  }

  /// Rational bordered form when every d_psi is rational (all norms 1) and no
  /// psi vanishes on A. Membership in the result is strict.
  std::optional<BorderedSet> restricted_bordered() const {
    std::vector<QVec> phis;
    std::vector<Rational> cs;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      if (norms[i] != 1) return std::nullopt;
      if (std::all_of(functionals[i].begin(), functionals[i].end(), [](const Rational& x) { return sgn(x) == 0; }))
        return std::nullopt;
      phis.push_back(functionals[i]);
      cs.push_back(c0);
    }
    return BorderedSet(functionals.front().size(), phis, cs, gauge);
  }
};

/// Weight data of one witness at g: Psi_u with the component norms.
inline CoverElement make_element(const QMat& g, const SubgroupSpec& a, const RadicalWitness& w, const Rational& c0,
                                 const Gauge& gauge) {
  require<DimensionMismatchError>(w.n == a.n && g.rows() == a.n, "witness, A and g disagree on n");
  CoverElement e;
  e.witness = w;
  e.c0 = c0;
  e.gauge = gauge;
  for (const auto& [mu, size] : weight_components(ad_image(w, g), w.n)) {
    e.psi.push_back(-mu);
    e.norms.push_back(size);
  }
  if (e.psi.empty()) throw InternalError("witness with empty character set");
  // deterministic order by character
  std::vector<std::size_t> idx(e.psi.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return e.psi[x] < e.psi[y]; });
  std::vector<Character> ps;
  std::vector<Rational> ns;
  for (auto i : idx) {
    ps.push_back(e.psi[i]);
    ns.push_back(e.norms[i]);
  }
  e.psi = std::move(ps);
  e.norms = std::move(ns);
  for (const auto& p : e.psi) e.functionals.push_back(a.restrict(p));
  return e;
}

/// Linear gauge with slope half the certified epsilon bound of the distinct
/// nonzero restricted characters.
inline Gauge default_gauge(const std::vector<CoverElement>& elements) {
  std::vector<QVec> phis;
  for (const auto& e : elements)
    for (const auto& f : e.functionals) {
      if (std::all_of(f.begin(), f.end(), [](const Rational& x) { return sgn(x) == 0; })) continue;
      if (std::find(phis.begin(), phis.end(), f) == phis.end()) phis.push_back(f);
    }
  if (phis.empty()) return Gauge::zero();
  return Gauge::linear(epsilon_bound(phis).certified / 2);
}

/// One element per candidate. Without an explicit gauge the default linear
/// gauge is used.
inline std::vector<CoverElement> build_cover(const QMat& g, const SubgroupSpec& a,
                                             const std::vector<RadicalWitness>& candidates, const Rational& c0,
                                             std::optional<Gauge> gauge = std::nullopt) {
  require(!candidates.empty(), "no candidates");
  std::vector<CoverElement> out;
  for (const auto& w : candidates) out.push_back(make_element(g, a, w, c0, gauge.value_or(Gauge::zero())));
  if (!gauge) {
    Gauge f = default_gauge(out);
    for (auto& e : out) e.gauge = f;
  }
  return out;
}

/// Does the zero-gauge set of the conjunction of the elements meet the box
/// ||t|| <= R (closed), or have interior (Strict)? Exact, with log-valued
/// constants.
inline bool elements_meet(const std::vector<const CoverElement*>& es, std::optional<Rational> box,
                          Closure mode = Closure::Closed) {
  require(!es.empty(), "no elements");
  const std::size_t l = es.front()->functionals.front().size();
  const std::size_t nv = mode == Closure::Strict ? l + 1 : l;
  LinearProgram<LogValue> lp(nv);
  for (const auto* e : es)
    for (std::size_t i = 0; i < e->psi.size(); ++i) {
      require<DimensionMismatchError>(e->functionals[i].size() == l, "elements live on different A");
      QVec row = e->functionals[i];
      if (mode == Closure::Strict) row.push_back(-1);
      lp.add(row, Relation::GreaterEq, e->d(i));
    }
  if (box) {
    for (std::size_t k = 0; k < l; ++k) {
      QVec row(nv, Rational(0));
      row[k] = 1;
      lp.add(row, Relation::LessEq, LogValue(*box));
      lp.add(row, Relation::GreaterEq, LogValue(-*box));
    }
  }
  if (mode == Closure::Closed) return solve(lp).feasible();
  QVec cap(nv, Rational(0));
  cap[l] = 1;
  lp.add(cap, Relation::LessEq, LogValue(1));
  lp.set_objective(cap, true);
  auto r = solve(lp);
  return r.status == LpStatus::Optimal && r.value.sign() > 0;
}

/// Witnesses of height <= H whose zero-gauge set meets ||t||_inf <= R.
inline std::vector<RadicalWitness> enumerate_local(const QMat& g, const SubgroupSpec& a, const Rational& radius,
                                                   const Rational& c0, long height) {
  require(sgn(radius) >= 0, "box radius must be nonnegative");
  std::vector<RadicalWitness> out;
  for (const auto& w : enumerate_radicals(a.n, height)) {
    CoverElement e = make_element(g, a, w, c0, Gauge::zero());
    if (elements_meet({&e}, radius)) out.push_back(w);
  }
  return out;
}

struct GoodRestrictionReport {
  bool good = true;
  std::vector<Character> violation;  // independent over T, dependent on A
};

/// Every independent subset of Psi of size <= l stays independent after
/// restriction to A. Subsets are visited by size, then lexicographically.
inline GoodRestrictionReport good_restrictions(const SubgroupSpec& a, const std::vector<Character>& psi,
                                               std::size_t l) {
  GoodRestrictionReport rep;
  for (std::size_t k = 1; k <= std::min(l, psi.size()); ++k)
    for (const auto& s : combinations(psi.size(), k)) {
      std::vector<QVec> amb, res;
      for (auto i : s) {
        amb.push_back(psi[i].as_qvec());
        res.push_back(a.restrict(psi[i]));
      }
      if (rank_of_vectors(amb) < k) continue;
      if (rank_of_vectors(res) < k) {
        rep.good = false;
        for (auto i : s) rep.violation.push_back(psi[i]);
        return rep;
      }
    }
  return rep;
}

/// A choice psi_i in Psi of element i, linearly independent over T
/// (ambient) or after restriction to A.
struct IndependentChoice {
  std::optional<std::vector<Character>> ambient;
  std::optional<std::vector<Character>> restricted;
};

inline IndependentChoice independent_choice(const std::vector<const CoverElement*>& es) {
  IndependentChoice out;
  std::vector<std::size_t> pick(es.size(), 0);
  while (true) {
    std::vector<QVec> amb, res;
    std::vector<Character> chosen;
    for (std::size_t i = 0; i < es.size(); ++i) {
      chosen.push_back(es[i]->psi[pick[i]]);
      amb.push_back(chosen.back().as_qvec());
      res.push_back(es[i]->functionals[pick[i]]);
    }
    if (!out.ambient && rank_of_vectors(amb) == es.size()) out.ambient = chosen;
    if (!out.restricted && rank_of_vectors(res) == es.size()) out.restricted = chosen;
    if (out.ambient && out.restricted) return out;
    std::size_t k = 0;
    while (k < es.size() && ++pick[k] == es[k]->psi.size()) pick[k++] = 0;
    if (k == es.size()) return out;
  }
}

struct SubcoverReport {
  bool covered = true;
  std::vector<QVec> gaps;
  std::size_t checked = 0;
};

/// Grid check of the box ||t|| <= R outside the closed core: every point
/// must lie in some element's gauged set.
inline SubcoverReport verify_subcover(const std::vector<CoverElement>& elements, std::size_t l, const Rational& radius,
                                      const Rational& step, const BorderedSet& core) {
  require(sgn(step) > 0, "grid step must be positive");
  require<DimensionMismatchError>(core.l == l, "core lives in the wrong dimension");
  for (const auto& e : elements)
    require<DimensionMismatchError>(e.functionals.front().size() == l, "element lives in the wrong dimension");
  SubcoverReport rep;
  QVec lo(l, -radius), hi(l, radius);
  for (const auto& t : box_grid(lo, hi, step)) {
    if (core.contains_closure_point(t)) continue;
    ++rep.checked;
    bool in = std::any_of(elements.begin(), elements.end(), [&](const CoverElement& e) { return e.contains(t); });
    if (!in) {
      rep.covered = false;
      rep.gaps.push_back(t);
    }
  }
  return rep;
}

}  // namespace cuspwatch
