#include "gwh/linalg.hpp"

#include <stdexcept>

namespace gwh {

namespace {

// Reduces [A | b] to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& A, std::vector<Rational>* b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows == 0 ? 0 : A[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    if (b) std::swap((*b)[p], (*b)[r]);
    const Rational inv = 1 / A[r][c];
    for (std::size_t j = c; j < cols; ++j) A[r][j] *= inv;
    if (b) (*b)[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      const Rational f = A[i][c];
      for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      if (b) (*b)[i] -= f * (*b)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<Rational> solve_square(Matrix A, std::vector<Rational> b) {
  const std::size_t n = A.size();
  if (b.size() != n) throw std::invalid_argument("right-hand side length mismatch");
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("zero pivot");
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (A[i][c] == 0) continue;
      const Rational f = A[i][c] / A[c][c];
      for (std::size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
      b[i] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= A[i][j] * x[j];
    x[i] = s / A[i][i];
  }
  return x;
}

std::optional<std::vector<Rational>> solve_consistent(Matrix A, std::vector<Rational> b) {
  if (b.size() != A.size()) throw std::invalid_argument("right-hand side length mismatch");
  const std::size_t cols = A.empty() ? 0 : A[0].size();
  auto pivots = row_reduce(A, &b);
  for (std::size_t i = pivots.size(); i < A.size(); ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

int matrix_rank(Matrix A) { return static_cast<int>(row_reduce(A, nullptr).size()); }

}  // namespace gwh
