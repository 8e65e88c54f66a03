#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace ncgeom {

/// Exact element of the cyclotomic field Q(ζ_N).
///
/// Stored in the power basis 1, ζ, ..., ζ^(φ(N)-1) modulo the N-th cyclotomic
/// polynomial. Values whose non-constant coordinates vanish are kept at order
/// 1, so rationals stay on the cheap path. Binary operations on different
/// orders promote both operands to the least common multiple.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const mpq_class& value);  // NOLINT(google-explicit-constructor)

  /// Builds Σ powers[i] ζ_N^i for an arbitrary number of powers.
  Cyclotomic(int order, const std::vector<mpq_class>& powers);

  static Cyclotomic rational(long num, long den);
  /// ζ_N^k; throws std::invalid_argument when N < 1.
  static Cyclotomic zeta(int order, long k);

  int order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return order_ == 1; }
  /// Throws std::domain_error when the value is not rational.
  const mpq_class& rational_value() const;

  Cyclotomic conj() const;
  Cyclotomic inverse() const;
  Cyclotomic promoted(int order) const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend Cyclotomic operator/(const Cyclotomic& lhs, const Cyclotomic& rhs) {
    return lhs * rhs.inverse();
  }
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);

 private:
  void normalize();

  int order_;
  std::vector<mpq_class> coeffs_;
};

/// ζ_N^k in canonical form.
Cyclotomic cyclo(int order, long k);

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(int order);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value);

}  // namespace ncgeom
