#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "ncgeom/cyclotomic.hpp"

namespace ncgeom {

using ExactVector = std::vector<Cyclotomic>;

/// Dense row-major matrix over Q(ζ_N).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries);
  ExactMatrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return ExactMatrix(rows, cols); }
  static ExactMatrix diagonal(const ExactVector& diag);
  /// Matrix whose columns are the given vectors (all of length rows).
  static ExactMatrix from_columns(const std::vector<ExactVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Cyclotomic& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<Cyclotomic>& entries() const { return data_; }

  ExactVector row(std::size_t r) const;
  ExactVector column(std::size_t c) const;

  ExactMatrix transpose() const;
  /// Conjugate transpose.
  ExactMatrix adjoint() const;
  Cyclotomic trace() const;
  bool is_zero() const;
  bool is_hermitian() const { return is_square() && *this == adjoint(); }

  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& m);

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const Cyclotomic& scalar);

  friend ExactMatrix operator+(ExactMatrix lhs, const ExactMatrix& rhs) { return lhs += rhs; }
  friend ExactMatrix operator-(ExactMatrix lhs, const ExactMatrix& rhs) { return lhs -= rhs; }
  friend ExactMatrix operator*(ExactMatrix m, const Cyclotomic& s) { return m *= s; }
  friend ExactMatrix operator*(const Cyclotomic& s, ExactMatrix m) { return m *= s; }
  friend ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);
  friend ExactVector operator*(const ExactMatrix& m, const ExactVector& v);
  friend bool operator==(const ExactMatrix& lhs, const ExactMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyclotomic> data_;
};

/// Kronecker product; (A ⊗ B)(i*p + k, j*q + l) = A(i,j) B(k,l).
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

ExactMatrix power(const ExactMatrix& m, unsigned exponent);

bool is_zero_vector(const ExactVector& v);

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

}  // namespace ncgeom
