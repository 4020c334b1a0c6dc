#pragma once

#include "cuspwatch/ratlin/linalg.hpp"

namespace oracle {

using cuspwatch::QVec;
using cuspwatch::Rational;

/// Feasibility of {a_i . x >= b_i} by Fourier-Motzkin elimination.
inline bool fm_feasible(std::vector<QVec> a, std::vector<Rational> b) {
  if (a.empty()) return true;
  const std::size_t n = a.front().size();
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<QVec> na;
    std::vector<Rational> nb;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < a.size(); ++i) {
      int s = sgn(a[i][v]);
      if (s > 0) pos.push_back(i);
      else if (s < 0) neg.push_back(i);
      else {
        na.push_back(a[i]);
        nb.push_back(b[i]);
      }
    }
    for (auto p : pos)
      for (auto q : neg) {
        Rational lp = -a[q][v], lq = a[p][v];
        QVec row(n);
        for (std::size_t k = 0; k < n; ++k) row[k] = lp * a[p][k] + lq * a[q][k];
        na.push_back(row);
        nb.push_back(lp * b[p] + lq * b[q]);
      }
    a = std::move(na);
    b = std::move(nb);
  }
  for (const auto& x : b)
    if (sgn(x) > 0) return false;
  return true;
}

/// Positive nontriviality: exists v with phi(v) >= 1 for all phi.
inline bool fm_positively_nontrivial(const std::vector<QVec>& phis) {
  return fm_feasible(phis, std::vector<Rational>(phis.size(), Rational(1)));
}

}  // namespace oracle
