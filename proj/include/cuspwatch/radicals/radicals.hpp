#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cuspwatch/numeric/log_value.hpp"
#include "cuspwatch/radicals/lie.hpp"
#include "cuspwatch/radicals/lll.hpp"

namespace cuspwatch {

/// Radical of the parabolic stabilizing a rational subspace V (dim j) of Q^n:
/// u = {M : M Q^n in V, M V = 0} = V (x) V^perp. The integral basis
/// v_i w_k^T (v_i, w_k Z-bases of V cap Z^n and V^perp cap Z^n) is a Z-basis
/// of u cap sl_n(Z); p_ad is its wedge.
struct RadicalWitness {
  std::size_t n = 0;
  std::size_t j = 0;
  std::vector<QVec> basis;  // Z-basis of V cap Z^n
  std::vector<QVec> perp;   // Z-basis of V^perp cap Z^n
  std::vector<QVec> factors;  // sl_n coordinates of the factors of p_ad (sign fixed)
  QWedge p_std;
  QWedge p_ad;
  std::vector<Character> weights_std;
  std::vector<Character> weights_ad;

  std::size_t dim_u() const { return j * (n - j); }
};

namespace detail {

inline std::vector<Character> weights_of(const QWedge& w, const std::function<Character(const Tuple&)>& weight) {
  std::vector<Character> out;
  for (const auto& [t, c] : w.coeffs) out.push_back(weight(t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline RadicalWitness build_witness(std::size_t n, std::vector<QVec> basis, std::vector<QVec> perp) {
  const std::size_t j = basis.size();
  SlBasis sl(n);
  RadicalWitness r;
  r.n = n;
  r.j = j;
  r.p_std = plucker(basis, n);
  for (const auto& v : basis)
    for (const auto& w : perp) {
      QMat m(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m(a, b) = v[a] * w[b];
      r.factors.push_back(sl.coords(m));
    }
  QWedge raw = wedge(r.factors, sl.dim());
  r.p_ad = primitive(raw);
  const Rational& lead_raw = raw.coeffs.begin()->second;
  const Rational& lead_prim = r.p_ad.coeffs.begin()->second;
  if (abs(lead_raw) != lead_prim) throw InternalError("radical lattice basis is not saturated");
  if (sgn(lead_raw) < 0)
    for (auto& x : r.factors.front()) x = -x;
  r.basis = std::move(basis);
  r.perp = std::move(perp);
  r.weights_std = weights_of(r.p_std, [n](const Tuple& t) { return std_weight(n, t); });
  r.weights_ad = weights_of(r.p_ad, [&sl](const Tuple& t) { return sl.weight(t); });
  return r;
}

inline std::vector<QVec> to_qvecs(const std::vector<ZVec>& zs) {
  std::vector<QVec> out;
  for (const auto& z : zs) out.push_back(to_qvec(z));
  return out;
}

}  // namespace detail

inline RadicalWitness radical_from_subspace(const std::vector<QVec>& spanning) {
  require(!spanning.empty(), "subspace needs at least one spanning vector");
  const std::size_t n = spanning.front().size();
  std::size_t j = rank_of_vectors(spanning);
  require(j > 0 && j < n, "subspace must be nontrivial and proper");
  auto basis = detail::to_qvecs(saturate(spanning, n));
  auto perp_span = orthogonal_complement(basis, n);
  auto perp = detail::to_qvecs(saturate(perp_span, n));
  return detail::build_witness(n, std::move(basis), std::move(perp));
}

inline RadicalWitness standard_radical(std::size_t n, std::size_t j) {
  require(n >= 2 && j >= 1 && j < n, "parabolic type j must satisfy 1 <= j <= n-1");
  std::vector<QVec> basis, perp;
  for (std::size_t i = 0; i < j; ++i) basis.push_back(unit_vector<Rational>(n, i));
  for (std::size_t i = j; i < n; ++i) perp.push_back(unit_vector<Rational>(n, i));
  return detail::build_witness(n, std::move(basis), std::move(perp));
}

/// Wedge of Ad(g) applied to the factors: wedge^{j(n-j)} Ad(g) p_ad.
/// Ad(g)(v w^T) = (g v)(g^{-T} w)^T; Ad is invariant under scaling g, so any
/// invertible g is accepted.
inline QWedge ad_image(const RadicalWitness& r, const QMat& g) {
  require<DimensionMismatchError>(g.rows() == r.n && g.cols() == r.n, "group element has the wrong size");
  SlBasis sl(r.n);
  QMat ginv = inverse(g);
  std::vector<QVec> imgs;
  for (const auto& f : r.factors) imgs.push_back(sl.coords(g * sl.matrix(f) * ginv));
  return wedge(imgs, sl.dim());
}

/// Max-over-weights norm: each weight component in sup norm, which is the
/// sup norm of all coordinates because every basis wedge has one weight.
inline Rational ad_norm(const RadicalWitness& r, const QMat& g) { return max_abs(ad_image(r, g)); }

/// Weight components lambda -> ||phi_lambda(w)|| (sup norm).
inline std::map<Character, Rational> weight_components(const QWedge& w, std::size_t n) {
  SlBasis sl(n);
  std::map<Character, Rational> out;
  for (const auto& [t, c] : w.coeffs) {
    Character lam = sl.weight(t);
    Rational a = abs(c);
    auto [it, fresh] = out.try_emplace(lam, a);
    if (!fresh && a > it->second) it->second = a;
  }
  return out;
}

inline std::map<Character, Rational> std_weight_components(const QWedge& w) {
  std::map<Character, Rational> out;
  for (const auto& [t, c] : w.coeffs) {
    Rational a = abs(c);
    auto [it, fresh] = out.try_emplace(std_weight(w.m, t), a);
    if (!fresh && a > it->second) it->second = a;
  }
  return out;
}

// ---- subspace enumeration --------------------------------------------------

/// Largest brute-force universe (number of coordinate tuples) accepted.
inline constexpr double kMaxUniverse = 6.0e7;

namespace detail {

/// Calls f(v) for all v in [-h, h]^len with first nonzero entry positive and
/// gcd 1.
inline void for_each_primitive(std::size_t len, long h, const std::function<void(const std::vector<long>&)>& f) {
  if (h < 1) return;
  std::vector<long> v(len, -h);
  while (true) {
    std::size_t lead = 0;
    while (lead < len && v[lead] == 0) ++lead;
    if (lead < len && v[lead] > 0) {
      long g = 0;
      for (long x : v) g = std::gcd(g, std::abs(x));
      if (g == 1) f(v);
    }
    std::size_t i = len;
    while (i > 0 && v[i - 1] == h) v[--i] = -h;
    if (i == 0) break;
    ++v[i - 1];
  }
}

/// Subspace of a decomposable primitive Pluecker vector: the span of its
/// contractions with (j-1)-fold wedges of coordinate covectors.
inline std::optional<std::vector<QVec>> subspace_of(std::size_t n, std::size_t j, const QWedge& p) {
  std::vector<QVec> spanning;
  for (const auto& s : combinations(n, j - 1)) {
    QVec v(n, Rational(0));
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (std::find(s.begin(), s.end(), k) != s.end()) continue;
      Tuple t = s;
      std::size_t greater = 0;
      for (auto x : s)
        if (x > k) ++greater;
      t.push_back(k);
      std::sort(t.begin(), t.end());
      Rational c = p.coeff(t);
      if (sgn(c) == 0) continue;
      v[k] = greater % 2 ? Rational(-c) : c;
      any = true;
    }
    if (any) spanning.push_back(v);
  }
  auto rows = row_space_basis(spanning);
  if (rows.size() != j) return std::nullopt;
  auto basis = to_qvecs(saturate(rows, n));
  if (plucker(basis, n) != p) return std::nullopt;
  return basis;
}

}  // namespace detail

/// Visits every rational j-dimensional subspace V of Q^n whose primitive
/// Pluecker vector has height <= h. `f(p_std, basis)` receives the dense
/// Pluecker coordinates and a lazily computed Z-basis of V cap Z^n.
inline void for_each_subspace(std::size_t n, std::size_t j, long h,
                              const std::function<void(const QWedge&, const std::function<std::vector<QVec>()>&)>& f) {
  require(j >= 1 && j < n, "subspace dimension out of range");
  if (h < 1) return;
  const std::size_t coords = binomial(n, j);
  std::size_t len = (j == 1 || j == n - 1) ? n : coords;
  double universe = 1;
  for (std::size_t i = 0; i < len; ++i) universe *= static_cast<double>(2 * h + 1);
  require(universe <= kMaxUniverse, "brute-force universe too large; lower the height or use reduction mode");

  if (j == 1) {
    detail::for_each_primitive(n, h, [&](const std::vector<long>& v) {
      QVec q = to_qvec(v);
      QWedge p = QWedge::from_dense(n, 1, q);
      f(p, [q]() { return std::vector<QVec>{q}; });
    });
    return;
  }
  if (j == n - 1) {
    detail::for_each_primitive(n, h, [&](const std::vector<long>& v) {
      QMat row = QMat::from_rows({to_qvec(v)});
      auto basis = detail::to_qvecs(integer_kernel(row));
      QWedge p = plucker(basis, n);
      f(p, [basis]() { return basis; });
    });
    return;
  }
  const bool gr24 = n == 4 && j == 2;
  detail::for_each_primitive(coords, h, [&](const std::vector<long>& v) {
    if (gr24 && v[0] * v[5] - v[1] * v[4] + v[2] * v[3] != 0) return;
    QWedge p = QWedge::from_dense(n, j, to_qvec(v));
    if (gr24) {
      f(p, [n, j, p]() {
        auto b = detail::subspace_of(n, j, p);
        if (!b) throw InternalError("Pluecker relation accepted a non-decomposable vector");
        return *b;
      });
      return;
    }
    auto b = detail::subspace_of(n, j, p);
    if (!b) return;
    auto basis = *b;
    f(p, [basis]() { return basis; });
  });
}

/// All radicals of all types 1..n-1 with height(p_std) <= h.
inline std::vector<RadicalWitness> enumerate_radicals(std::size_t n, long h) {
  std::vector<RadicalWitness> out;
  for (std::size_t j = 1; j < n; ++j)
    for_each_subspace(n, j, h, [&](const QWedge&, const std::function<std::vector<QVec>()>& basis) {
      out.push_back(radical_from_subspace(basis()));
    });
  return out;
}

/// Order used for deterministic output: (j, p_std coordinates).
inline bool witness_less(const RadicalWitness& a, const RadicalWitness& b) {
  if (a.j != b.j) return a.j < b.j;
  return a.p_std.dense() < b.p_std.dense();
}

// ---- epsilon-active search -------------------------------------------------

enum class SearchMode { BruteForce, ReductionAssisted };

struct SearchOptions {
  SearchMode mode = SearchMode::BruteForce;
  long height = 3;
};

struct ActiveRadical {
  RadicalWitness witness;
  Rational norm;  // ||wedge Ad(g) p_ad||
  LogValue lognorm() const { return LogValue::log_of(norm); }
};

namespace detail {

/// Rigorous skip test. With a = ||wedge^j(g) p_std||_2, the Frobenius Gram
/// determinant of Ad(g)(u cap sl_n(Z)) is a^{2n} (covolume of a tensor
/// product of lattices). In the chosen sl_n coordinates the Frobenius Gram
/// matrix is bounded by 4 I, so a^{2n} <= 4^d C(N,d) ||x||_inf^2 for the image
/// coordinates x. If the right side with ||x|| < eps is too small, skip.
inline bool cannot_be_active(const Rational& a2, std::size_t n, std::size_t j, const Rational& eps) {
  const std::size_t d = j * (n - j);
  const std::size_t big_n = n * n - 1;
  Rational bound = eps * eps * power(Rational(4), static_cast<long>(d)) * Rational(static_cast<long>(binomial(big_n, d)));
  return power(a2, static_cast<long>(n)) >= bound;
}

/// Exact lower bound for ||wedge Ad(g) p_ad||. The coordinate of the adjoint
/// image at the positions A x A^c (all off-diagonal) is a Kronecker minor
/// det(X_A (x) Y_{A^c}) = +-P_A^{n-j} P_A^{j}, P = wedge^j(g) p_std.
inline Rational kronecker_lower_bound(const QVec& img, std::size_t n) {
  return power(max_abs(img), static_cast<long>(n));
}

}  // namespace detail

inline std::vector<ActiveRadical> active_radicals(const QMat& g, const Rational& eps, const SearchOptions& opt) {
  require(sgn(eps) > 0, "epsilon must be positive");
  require<DimensionMismatchError>(g.is_square() && g.rows() >= 2, "group element must be square, n >= 2");
  require(sgn(det(g)) != 0, "group element must be invertible");
  const std::size_t n = g.rows();
  std::vector<ActiveRadical> out;
  auto consider = [&](RadicalWitness w) {
    Rational nm = ad_norm(w, g);
    if (nm < eps) out.push_back(ActiveRadical{std::move(w), nm});
  };

  if (opt.mode == SearchMode::BruteForce) {
    for (std::size_t j = 1; j < n; ++j) {
      QMat wg = wedge_power(g, j);
      for_each_subspace(n, j, opt.height, [&](const QWedge& p, const std::function<std::vector<QVec>()>& basis) {
        QVec img = wg * p.dense();
        if (detail::kronecker_lower_bound(img, n) >= eps) return;
        Rational a2 = dot(img, img);
        if (detail::cannot_be_active(a2, n, j, eps)) return;
        consider(radical_from_subspace(basis()));
      });
    }
  } else {
    LllResult red = lll_reduce(g);
    std::vector<QVec> cols;
    for (std::size_t c = 0; c < n; ++c) cols.push_back(red.unimodular.col(c));
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<std::size_t> prefix(k);
      for (std::size_t i = 0; i < k; ++i) prefix[i] = i;
      subsets.push_back(prefix);
      std::size_t pool = std::min(n, k + 2);
      for (const auto& t : combinations(pool, k)) subsets.emplace_back(t.begin(), t.end());
    }
    std::vector<QWedge> seen;
    for (const auto& s : subsets) {
      std::vector<QVec> span;
      for (auto i : s) span.push_back(cols[i]);
      QWedge p = plucker(span, n);
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
      seen.push_back(p);
      consider(radical_from_subspace(span));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ActiveRadical& a, const ActiveRadical& b) { return witness_less(a.witness, b.witness); });
  return out;
}

/// Lattice form of activity: a Z-basis of Ad(g)(u cap sl_n(Z)) lies in the
/// open sup-norm ball of radius delta (matrix entries). Bases are products of
/// LLL-reduced bases of g V_Z and g^{-T} V^perp_Z, so this is a sufficient
/// test.
inline bool lattice_active(const RadicalWitness& r, const QMat& g, const Rational& delta) {
  QMat ginv_t = inverse(g).transpose();
  std::vector<QVec> gv, gw;
  for (const auto& v : r.basis) gv.push_back(g * v);
  for (const auto& w : r.perp) gw.push_back(ginv_t * w);
  QMat a = lll_reduce(QMat::from_columns(gv)).reduced;
  QMat b = lll_reduce(QMat::from_columns(gw)).reduced;
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k)
      for (std::size_t x = 0; x < r.n; ++x)
        for (std::size_t y = 0; y < r.n; ++y)
          if (abs(a(x, i) * b(y, k)) >= delta) return false;
  return true;
}

// ---- cusp profile ----------------------------------------------------------

enum class GridUnits { Natural, Log2 };

struct ProfilePoint {
  QVec t;           // coordinates in the A basis
  LogValue value;   // min over candidates of log ||wedge Ad(a g) p_ad||
  std::size_t argmin = 0;
};

/// Rational grid of a box [lo_i, hi_i] with step, inclusive of both ends.
inline std::vector<QVec> box_grid(const QVec& lo, const QVec& hi, const Rational& step) {
  require(sgn(step) > 0, "grid step must be positive");
  require<DimensionMismatchError>(lo.size() == hi.size() && !lo.empty(), "grid box bounds mismatch");
  std::vector<QVec> pts{QVec{}};
  for (std::size_t i = 0; i < lo.size(); ++i) {
    require(lo[i] <= hi[i], "empty grid box");
    std::vector<QVec> next;
    for (const auto& p : pts)
      for (Rational x = lo[i]; x <= hi[i]; x += step) {
        QVec q = p;
        q.push_back(x);
        next.push_back(q);
      }
    pts = std::move(next);
  }
  return pts;
}

/// a = exp(sum t_i A_i) acts on the lambda-component by e^{lambda(sum t_i A_i)}
/// (or 2^{...} in log2 units).
inline LogValue exponent_value(const Rational& x, GridUnits units) {
  return units == GridUnits::Natural ? LogValue(x) : LogValue::log_of(Rational(2), x);
}

namespace detail {

/// Candidate term with a double approximation whose error is far below
/// `screen_margin`; exact comparison settles every close call.
struct Term {
  double approx;
  std::function<LogValue()> exact;
};

inline double screen_margin(double v) { return 1e-9 * (1.0 + std::fabs(v)); }

/// Index of the exact maximum (or minimum).
inline std::size_t extreme(const std::vector<Term>& ts, bool want_max) {
  double best = ts[0].approx;
  for (const auto& t : ts) best = want_max ? std::max(best, t.approx) : std::min(best, t.approx);
  std::vector<std::size_t> contenders;
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (std::fabs(ts[i].approx - best) <= 2 * screen_margin(best) + screen_margin(ts[i].approx)) contenders.push_back(i);
  std::size_t arg = contenders.front();
  if (contenders.size() == 1) return arg;
  LogValue val = ts[arg].exact();
  for (std::size_t k = 1; k < contenders.size(); ++k) {
    LogValue v = ts[contenders[k]].exact();
    if (want_max ? v > val : v < val) {
      val = v;
      arg = contenders[k];
    }
  }
  return arg;
}

inline double log_double(const Rational& x) {
  BigFloat f(80);
  mpfr_set_q(f.get(), x.get_mpq_t(), MPFR_RNDN);
  mpfr_log(f.get(), f.get(), MPFR_RNDN);
  return f.to_double();
}

}  // namespace detail

/// min over candidates u of log ||wedge Ad(a g) p_ad|| at each grid point.
inline std::vector<ProfilePoint> cusp_profile(const QMat& g, const std::vector<QVec>& a_basis,
                                              const std::vector<QVec>& points,
                                              const std::vector<RadicalWitness>& candidates,
                                              GridUnits units = GridUnits::Natural) {
  require(!points.empty(), "empty grid");
  require(!candidates.empty(), "empty candidate set");
  require(!a_basis.empty(), "A needs at least one direction");
  for (const auto& d : a_basis) {
    require<DimensionMismatchError>(d.size() == g.rows(), "A direction has the wrong length");
    Rational tr(0);
    for (const auto& x : d) tr += x;
    require(sgn(tr) == 0, "A directions must be trace-zero");
  }
  struct Comp {
    Character lambda;
    Rational size;
    double log_size;
  };
  std::vector<std::vector<Comp>> comps;
  for (const auto& c : candidates) {
    std::vector<Comp> cs;
    for (auto& [lam, sz] : weight_components(ad_image(c, g), c.n)) cs.push_back(Comp{lam, sz, detail::log_double(sz)});
    comps.push_back(std::move(cs));
  }
  const double unit = units == GridUnits::Natural ? 1.0 : std::log(2.0);
  std::vector<ProfilePoint> out;
  for (const auto& t : points) {
    require<DimensionMismatchError>(t.size() == a_basis.size(), "grid point dimension mismatch");
    QVec dir(g.rows(), Rational(0));
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t k = 0; k < dir.size(); ++k) dir[k] += t[i] * a_basis[i][k];
    std::vector<detail::Term> per_candidate;
    per_candidate.reserve(comps.size());
    for (const auto& cs : comps) {
      std::vector<detail::Term> terms;
      for (const auto& c : cs) {
        Rational e = c.lambda(dir);
        terms.push_back(detail::Term{e.get_d() * unit + c.log_size, [e, &c, units]() {
                                       return exponent_value(e, units) + LogValue::log_of(c.size);
                                     }});
      }
      per_candidate.push_back(std::move(terms[detail::extreme(terms, true)]));
    }
    std::size_t best = detail::extreme(per_candidate, false);
    out.push_back(ProfilePoint{t, per_candidate[best].exact(), best});
  }
  return out;
}

}  // namespace cuspwatch
