#pragma once

#include <vector>

#include "cuspwatch/ratlin/linalg.hpp"

namespace cuspwatch {

struct LllResult {
  QMat reduced;  // columns: reduced basis
  QMat unimodular;  // integer, det +-1, basis * unimodular = reduced
};

/// Exact LLL reduction (delta = 3/4) of the columns of `basis`.
inline LllResult lll_reduce(const QMat& basis, const Rational& delta = Rational(3, 4)) {
  const std::size_t n = basis.cols();
  std::vector<QVec> b;
  for (std::size_t j = 0; j < n; ++j) b.push_back(basis.col(j));
  std::vector<QVec> u;  // u[j] = integer coordinates of b[j]
  for (std::size_t j = 0; j < n; ++j) u.push_back(unit_vector<Rational>(n, j));

  std::vector<QVec> star(n);
  std::vector<Rational> norms(n);
  std::vector<QVec> mu(n, QVec(n, Rational(0)));
  auto gram_schmidt = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      star[i] = b[i];
      for (std::size_t k = 0; k < i; ++k) {
        mu[i][k] = dot(b[i], star[k]) / norms[k];
        for (std::size_t t = 0; t < star[i].size(); ++t) star[i][t] -= mu[i][k] * star[k][t];
      }
      norms[i] = dot(star[i], star[i]);
      require(sgn(norms[i]) != 0, "lll_reduce needs linearly independent columns");
    }
  };
  auto add_multiple = [](QVec& dst, const QVec& src, const Rational& f) {
    for (std::size_t t = 0; t < dst.size(); ++t) dst[t] -= f * src[t];
  };

  gram_schmidt();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      Rational m = mu[k][jj];
      // nearest integer to mu
      Integer q;
      Rational twice = 2 * m + 1;
      mpz_fdiv_q(q.get_mpz_t(), twice.get_num_mpz_t(), Integer(2 * twice.get_den()).get_mpz_t());
      if (q == 0) continue;
      Rational f(q);
      add_multiple(b[k], b[jj], f);
      add_multiple(u[k], u[jj], f);
      for (std::size_t t = 0; t <= jj; ++t) mu[k][t] -= f * (t == jj ? Rational(1) : mu[jj][t]);
    }
    Rational lhs = norms[k];
    Rational rhs = (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      std::swap(u[k], u[k - 1]);
      gram_schmidt();
      k = k > 1 ? k - 1 : 1;
    }
  }
  return LllResult{QMat::from_columns(b), QMat::from_columns(u)};
}

}  // namespace cuspwatch
