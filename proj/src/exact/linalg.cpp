#include "ncgeom/linalg.hpp"

#include <stdexcept>

#include "ncgeom/errors.hpp"

namespace ncgeom {

RowEchelon row_reduce(ExactMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t r = pivot_row;
    while (r < rows && m(r, col).is_zero()) ++r;
    if (r == rows) continue;
    if (r != pivot_row) {
      for (std::size_t c = col; c < cols; ++c) std::swap(m(r, c), m(pivot_row, c));
    }
    const Cyclotomic inv = m(pivot_row, col).inverse();
    for (std::size_t c = col; c < cols; ++c) {
      if (!m(pivot_row, c).is_zero()) m(pivot_row, c) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || m(i, col).is_zero()) continue;
      const Cyclotomic factor = m(i, col);
      for (std::size_t c = col; c < cols; ++c) {
        if (!m(pivot_row, c).is_zero()) m(i, c) -= factor * m(pivot_row, c);
      }
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ExactMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<ExactVector> kernel(const ExactMatrix& m) {
  const RowEchelon ech = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      const Cyclotomic& entry = ech.reduced(i, free);
      if (!entry.is_zero()) v[ech.pivots[i]] = -entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const ExactMatrix& m, const ExactVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length must equal row count");
  const std::size_t cols = m.cols();
  ExactMatrix aug(m.rows(), cols + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug(r, cols) = b[r];

  const RowEchelon ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == cols) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(cols, Cyclotomic());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) sol.particular[ech.pivots[i]] = ech.reduced(i, cols);
  sol.kernel = kernel(m);
  return sol;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw SingularMatrixError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, ExactMatrix::identity(n));
  const RowEchelon ech = row_reduce(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw SingularMatrixError("matrix is singular");
  return ech.reduced.block(0, n, n, n);
}

}  // namespace ncgeom
