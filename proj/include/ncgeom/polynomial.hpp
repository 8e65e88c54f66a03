#pragma once

#include <optional>
#include <vector>

#include "ncgeom/matrix.hpp"

namespace ncgeom {

/// Univariate polynomial, coefficient of x^i at index i. No trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Cyclotomic> coeffs);

  /// Product of (x - root) over the given roots.
  static Polynomial from_roots(const std::vector<Cyclotomic>& roots);

  const std::vector<Cyclotomic>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Cyclotomic operator()(const Cyclotomic& x) const;
  ExactMatrix operator()(const ExactMatrix& m) const;

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim();
  std::vector<Cyclotomic> coeffs_;
};

/// Monic least annihilating polynomial, from the first linear dependence
/// among vec(I), vec(M), vec(M^2), ...
Polynomial minimal_polynomial(const ExactMatrix& m);

/// Distinct rational roots with multiplicity as roots of p. Returns
/// std::nullopt when some coefficient is irrational.
std::optional<std::vector<std::pair<mpq_class, int>>> rational_roots(const Polynomial& p);

}  // namespace ncgeom
