// Reference fixed-point solver for the restart walk, independent of the
// iterative implementation: densify the transition matrix and solve
//   (I - alpha * T^t) s = (1 - alpha) * e_source
// by Gaussian elimination with partial pivoting. Test-only; meant for
// instances with a few hundred vertices at most.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/graph_rank.hpp"

namespace care::test {

inline std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    if (std::abs(a[pivot][col]) < 1e-14) {
      throw std::runtime_error("oracle system is singular");
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const double factor = a[row][col] / a[col][col];
      if (factor == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t row = n; row-- > 0;) {
    double sum = b[row];
    for (std::size_t k = row + 1; k < n; ++k) sum -= a[row][k] * x[k];
    x[row] = sum / a[row][row];
  }
  return x;
}

inline ScoreVector rank_oracle(const TransitionMatrix& matrix, int source,
                               double alpha) {
  const auto n = static_cast<std::size_t>(matrix.vertex_count);

  // I - alpha * T^t built entry by entry from the CSR triplets.
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1.0;
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = matrix.row_offsets[row]; k < matrix.row_offsets[row + 1];
         ++k) {
      a[static_cast<std::size_t>(matrix.cols[k])][row] -= alpha * matrix.values[k];
    }
  }
  std::vector<double> b(n, 0.0);
  b[static_cast<std::size_t>(source)] = 1.0 - alpha;

  ScoreVector out;
  out.scores = solve_dense(std::move(a), std::move(b));
  out.source = source;
  out.alpha = alpha;
  out.steps_run = 0;
  return out;
}

}  // namespace care::test
