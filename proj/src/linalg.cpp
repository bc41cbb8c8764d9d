#include "ringweight/linalg.hpp"

#include <stdexcept>

namespace ringweight {

size_t matrix_rank(ScalarMatrix m) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar factor = m[r][col] / m[rank][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

bool invertible(const ScalarMatrix& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) return false;
  return matrix_rank(m) == n;
}

std::optional<std::vector<Scalar>> solve_linear(ScalarMatrix a, std::vector<Scalar> b) {
  const size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_linear: size mismatch");
  const size_t cols = rows == 0 ? 0 : a[0].size();

  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      Scalar factor = a[r][col] / a[rank][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
      b[r] -= factor * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r)
    if (!b[r].is_zero()) return std::nullopt;

  std::vector<Scalar> x(cols, Scalar(0));
  for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r] / a[r][pivot_col[r]];
  return x;
}

}  // namespace ringweight
