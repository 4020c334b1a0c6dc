#pragma once

#include "cuspwatch/ratlin/linalg.hpp"

namespace oracle {

/// Permutation sigma (column j -> row sigma[j]) of the Bruhat cell N sigma B
/// containing g, read from ranks of bottom-left submatrices: these ranks are
/// invariant under N on the left and B on the right.
inline std::vector<std::size_t> cell_from_rank_profile(const cuspwatch::QMat& g) {
  const std::size_t n = g.rows();
  auto r = [&](std::size_t i, std::size_t j) -> long {  // rank of rows >= i, cols < j
    if (i >= n || j == 0) return 0;
    cuspwatch::QMat sub(n - i, j);
    for (std::size_t a = i; a < n; ++a)
      for (std::size_t b = 0; b < j; ++b) sub(a - i, b) = g(a, b);
    return static_cast<long>(cuspwatch::rank(sub));
  };
  std::vector<std::size_t> sigma(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r(i, j + 1) - r(i + 1, j + 1) - r(i, j) + r(i + 1, j) == 1) sigma[j] = i;
  return sigma;
}

}  // namespace oracle
