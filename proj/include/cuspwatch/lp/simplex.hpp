#pragma once

#include <optional>
#include <vector>

#include "cuspwatch/ratlin/matrix.hpp"

namespace cuspwatch {

enum class Relation { LessEq, GreaterEq, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Linear program with rational constraint coefficients and a right-hand
/// side of type R. R only needs to be an ordered Q-vector space with exact
/// zero and sign tests (Rational, LogValue).
template <class R>
struct LinearProgram {
  struct Row {
    QVec a;
    Relation rel;
    R b;
  };

  std::size_t num_vars = 0;
  std::vector<bool> nonneg;  // per variable; false means free
  std::vector<Row> rows;
  QVec objective;  // empty means pure feasibility
  bool maximize = false;

  explicit LinearProgram(std::size_t n, bool nonnegative = false)
      : num_vars(n), nonneg(n, nonnegative), objective(n, Rational(0)) {}

  void add(QVec a, Relation rel, R b) {
    require<DimensionMismatchError>(a.size() == num_vars, "constraint length mismatch");
    rows.push_back(Row{std::move(a), rel, std::move(b)});
  }
  void set_objective(QVec c, bool maximize_it) {
    require<DimensionMismatchError>(c.size() == num_vars, "objective length mismatch");
    objective = std::move(c);
    maximize = maximize_it;
  }
};

template <class R>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<R> x;  // optimal (or feasible) point when status is Optimal
  R value{0};
  bool feasible() const { return status != LpStatus::Infeasible; }
};

namespace detail {

template <class R>
class Tableau {
 public:
  std::vector<QVec> t;       // m rows x ncols
  std::vector<R> rhs;        // m
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t e) {
    Rational inv = 1 / t[r][e];
    for (auto& x : t[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || sgn(t[i][e]) == 0) continue;
      Rational f = t[i][e];
      for (std::size_t j = 0; j < ncols; ++j)
        if (sgn(t[r][j]) != 0) t[i][j] -= f * t[r][j];
      if (!is_zero(rhs[r])) rhs[i] -= rhs[r] * f;
    }
    basis[r] = e;
  }

  /// Minimizes cost . x over the current tableau. Columns flagged in
  /// `blocked` never enter. Bland's rule rules out cycling.
  LpStatus minimize(const QVec& cost, const std::vector<bool>& blocked) {
    const std::size_t m = t.size();
    while (true) {
      // reduced costs
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < ncols && !enter; ++j) {
        if (blocked[j]) continue;
        bool is_basic = false;
        for (auto b : basis)
          if (b == j) is_basic = true;
        if (is_basic) continue;
        Rational d = cost[j];
        for (std::size_t i = 0; i < m; ++i)
          if (sgn(t[i][j]) != 0 && sgn(cost[basis[i]]) != 0) d -= cost[basis[i]] * t[i][j];
        if (sgn(d) < 0) enter = j;
      }
      if (!enter) return LpStatus::Optimal;
      const std::size_t e = *enter;
      std::optional<std::size_t> leave;
      R best{0};
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(t[i][e]) <= 0) continue;
        R ratio = rhs[i];
        ratio *= Rational(1 / t[i][e]);
        if (!leave) {
          leave = i;
          best = ratio;
          continue;
        }
        int c = sign_of(R(ratio - best));
        if (c < 0 || (c == 0 && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return LpStatus::Unbounded;
      pivot(*leave, e);
    }
  }

  R value(const QVec& cost) const {
    R v{0};
    for (std::size_t i = 0; i < t.size(); ++i)
      if (sgn(cost[basis[i]]) != 0) v += rhs[i] * cost[basis[i]];
    return v;
  }
};

}  // namespace detail

/// Two-phase primal simplex with Bland's rule in exact arithmetic.
template <class R>
LpResult<R> solve(const LinearProgram<R>& lp) {
  const std::size_t n = lp.num_vars;
  // column layout: x+ (n), x- for free vars, slack/surplus, artificials
  std::vector<std::size_t> neg_col(n, static_cast<std::size_t>(-1));
  std::size_t ncols = n;
  for (std::size_t v = 0; v < n; ++v)
    if (!lp.nonneg[v]) neg_col[v] = ncols++;
  const std::size_t m = lp.rows.size();
  std::vector<std::size_t> slack_col(m, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < m; ++i)
    if (lp.rows[i].rel != Relation::Equal) slack_col[i] = ncols++;
  const std::size_t first_art = ncols;

  detail::Tableau<R> tab;
  tab.t.assign(m, QVec());
  tab.rhs.assign(m, R{0});
  tab.basis.assign(m, 0);
  std::vector<bool> needs_art(m, false);
  std::size_t nart = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    bool flip = sign_of(row.b) < 0;
    Relation rel = row.rel;
    if (flip) rel = rel == Relation::LessEq ? Relation::GreaterEq : rel == Relation::GreaterEq ? Relation::LessEq : rel;
    needs_art[i] = rel != Relation::LessEq;
    if (needs_art[i]) ++nart;
  }
  ncols += nart;
  tab.ncols = ncols;
  std::size_t art = first_art;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    QVec r(ncols, Rational(0));
    bool flip = sign_of(row.b) < 0;
    Rational s = flip ? Rational(-1) : Rational(1);
    for (std::size_t v = 0; v < n; ++v) {
      r[v] = row.a[v] * s;
      if (neg_col[v] != static_cast<std::size_t>(-1)) r[neg_col[v]] = -r[v];
    }
    if (row.rel == Relation::LessEq) r[slack_col[i]] = s;
    if (row.rel == Relation::GreaterEq) r[slack_col[i]] = -s;
    R b = row.b;
    if (flip) b *= Rational(-1);
    tab.rhs[i] = b;
    if (needs_art[i]) {
      r[art] = 1;
      tab.basis[i] = art++;
    } else {
      tab.basis[i] = slack_col[i];
    }
    tab.t[i] = std::move(r);
  }

  LpResult<R> result;
  std::vector<bool> blocked(ncols, false);
  if (nart > 0) {
    QVec c1(ncols, Rational(0));
    for (std::size_t j = first_art; j < ncols; ++j) c1[j] = 1;
    tab.minimize(c1, blocked);
    if (!is_zero(tab.value(c1))) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // drive artificial variables out of the basis
    for (std::size_t i = 0; i < tab.t.size();) {
      if (tab.basis[i] < first_art) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_art && !col; ++j)
        if (sgn(tab.t[i][j]) != 0) col = j;
      if (col) {
        tab.pivot(i, *col);
        ++i;
      } else {
        tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
        tab.rhs.erase(tab.rhs.begin() + static_cast<std::ptrdiff_t>(i));
        tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (std::size_t j = first_art; j < ncols; ++j) blocked[j] = true;
  }

  QVec c2(ncols, Rational(0));
  for (std::size_t v = 0; v < n; ++v) {
    Rational c = lp.maximize ? Rational(-lp.objective[v]) : lp.objective[v];
    c2[v] = c;
    if (neg_col[v] != static_cast<std::size_t>(-1)) c2[neg_col[v]] = -c;
  }
  result.status = tab.minimize(c2, blocked);
  std::vector<R> full(ncols, R{0});
  for (std::size_t i = 0; i < tab.t.size(); ++i) full[tab.basis[i]] = tab.rhs[i];
  result.x.assign(n, R{0});
  for (std::size_t v = 0; v < n; ++v) {
    result.x[v] = full[v];
    if (neg_col[v] != static_cast<std::size_t>(-1)) result.x[v] -= full[neg_col[v]];
  }
  if (result.status == LpStatus::Optimal) {
    R val = tab.value(c2);
    if (lp.maximize) val *= Rational(-1);
    result.value = val;
  }
  return result;
}

}  // namespace cuspwatch
