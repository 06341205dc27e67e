#pragma once

// Dense Gaussian elimination over an exact field (Rational or QTScalar).

#include <optional>
#include <utility>
#include <vector>

#include "macrui/error.hpp"

namespace macrui {

template <typename F>
using Matrix = std::vector<std::vector<F>>;

/// Solves A x = b for square nonsingular A. Throws kSingularSystem otherwise.
template <typename F>
std::vector<F> solve_linear(Matrix<F> a, std::vector<F> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorKind::kInvalidArgument, "right-hand side size mismatch");
  const F zero(0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == zero) ++pivot;
    if (pivot == n) throw Error(ErrorKind::kSingularSystem, "singular linear system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const F inv = F(1) / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] = a[col][j] * inv;
    b[col] = b[col] * inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == zero) continue;
      const F factor = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] = a[row][j] - factor * a[col][j];
      b[row] = b[row] - factor * b[col];
    }
  }
  return b;
}

/// Inverse of a square nonsingular matrix.
template <typename F>
Matrix<F> invert(const Matrix<F>& a) {
  const std::size_t n = a.size();
  Matrix<F> inv(n, std::vector<F>(n, F(0)));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<F> e(n, F(0));
    e[k] = F(1);
    const auto col = solve_linear(a, std::move(e));
    for (std::size_t i = 0; i < n; ++i) inv[i][k] = col[i];
  }
  return inv;
}

/// Rank of a rectangular matrix.
template <typename F>
std::size_t matrix_rank(Matrix<F> a) {
  const F zero(0);
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == zero) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const F inv = F(1) / a[rank][col];
    for (std::size_t row = rank + 1; row < rows; ++row) {
      if (a[row][col] == zero) continue;
      const F factor = a[row][col] * inv;
      for (std::size_t j = col; j < cols; ++j) a[row][j] = a[row][j] - factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace macrui
