#pragma once

#include <optional>
#include <vector>

#include "ncgeom/matrix.hpp"

namespace ncgeom {

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
RowEchelon row_reduce(ExactMatrix m);

std::size_t rank(const ExactMatrix& m);

/// Basis of the right null space {v : M v = 0}, one vector per free column,
/// with a 1 in that free coordinate.
std::vector<ExactVector> kernel(const ExactMatrix& m);

struct AffineSolution {
  ExactVector particular;
  std::vector<ExactVector> kernel;
};

/// Solves M x = b. Returns std::nullopt when b lies outside the column space.
std::optional<AffineSolution> solve_affine(const ExactMatrix& m, const ExactVector& b);

/// Throws SingularMatrixError when m is not invertible.
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace ncgeom
