#pragma once

#include <vector>

#include "parhall/scalar.hpp"

namespace parhall {

// rank of a matrix over Q(v) by Gaussian elimination
inline int matrix_rank(std::vector<std::vector<Scalar>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  size_t prow = 0;
  for (size_t c = 0; c < cols && prow < rows; ++c) {
    size_t pivot = prow;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[prow], m[pivot]);
    Scalar inv = m[prow][c].inv();
    for (size_t r = prow + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      Scalar f = m[r][c] * inv;
      for (size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[prow][cc];
    }
    ++prow;
    ++rank;
  }
  return rank;
}

}  // namespace parhall
