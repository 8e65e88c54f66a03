#include "ncgeom/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ncgeom {

namespace {

// Reduction data for Q(ζ_N): powers[j] holds x^j mod Φ_N for 0 <= j < N.
struct Field {
  int order = 1;
  std::size_t phi = 1;
  std::vector<std::vector<long>> powers;
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic; both constant term first.
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long lead = num[i];
    if (lead == 0) continue;
    quot[i - dn] = lead;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

std::vector<long> compute_cyclotomic_polynomial(int order) {
  std::vector<long> poly(static_cast<std::size_t>(order) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(order)] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) poly = poly_divide_exact(poly, compute_cyclotomic_polynomial(d));
  }
  return poly;
}

Field build_field(int order) {
  Field f;
  f.order = order;
  const std::vector<long> minpoly = compute_cyclotomic_polynomial(order);
  f.phi = minpoly.size() - 1;
  std::vector<long> current(f.phi, 0);
  current[0] = 1;
  f.powers.reserve(static_cast<std::size_t>(order));
  for (int j = 0; j < order; ++j) {
    f.powers.push_back(current);
    // multiply by x and reduce with the monic minimal polynomial
    const long carry = current[f.phi - 1];
    for (std::size_t k = f.phi - 1; k > 0; --k) current[k] = current[k - 1];
    current[0] = 0;
    for (std::size_t k = 0; k < f.phi; ++k) current[k] -= carry * minpoly[k];
  }
  return f;
}

const Field& field(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const Field>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) {
    it = cache.emplace(order, std::make_unique<const Field>(build_field(order))).first;
  }
  return *it->second;
}

std::vector<mpq_class> reduce_powers(const Field& f, const std::vector<mpq_class>& powers) {
  std::vector<mpq_class> out(f.phi, 0);
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (sgn(powers[i]) == 0) continue;
    const auto& red = f.powers[i % static_cast<std::size_t>(f.order)];
    for (std::size_t k = 0; k < f.phi; ++k) {
      if (red[k] != 0) out[k] += powers[i] * red[k];
    }
  }
  return out;
}

// Solves M x = e_0 over Q for a square invertible M (row-major).
std::vector<mpq_class> solve_unit(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  std::vector<mpq_class> rhs(n, 0);
  rhs[0] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw std::domain_error("cyclotomic element is not invertible");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const mpq_class inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const mpq_class factor = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
      rhs[r] -= factor * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  return compute_cyclotomic_polynomial(order);
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_{mpq_class(0)} {}

Cyclotomic::Cyclotomic(long value) : order_(1), coeffs_{mpq_class(value)} {}

Cyclotomic::Cyclotomic(const mpq_class& value) : order_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(int order, const std::vector<mpq_class>& powers) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  coeffs_ = reduce_powers(field(order), powers);
  normalize();
}

Cyclotomic Cyclotomic::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Cyclotomic(q);
}

Cyclotomic Cyclotomic::zeta(int order, long k) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  const long n = order;
  const long e = ((k % n) + n) % n;
  std::vector<mpq_class> powers(static_cast<std::size_t>(e) + 1, 0);
  powers[static_cast<std::size_t>(e)] = 1;
  return Cyclotomic(order, powers);
}

Cyclotomic cyclo(int order, long k) { return Cyclotomic::zeta(order, k); }

void Cyclotomic::normalize() {
  if (order_ == 1) return;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return;
  }
  order_ = 1;
  coeffs_.resize(1);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

const mpq_class& Cyclotomic::rational_value() const {
  if (order_ != 1) throw std::domain_error("cyclotomic value is not rational: " + to_string());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(int order) const {
  if (order == order_) return *this;
  if (order % order_ != 0) throw std::invalid_argument("promotion target must be a multiple of the order");
  const std::size_t step = static_cast<std::size_t>(order / order_);
  std::vector<mpq_class> powers(coeffs_.size() * step, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) powers[i * step] = coeffs_[i];
  Cyclotomic out;
  out.order_ = order;
  out.coeffs_ = reduce_powers(field(order), powers);
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  if (order_ == 1) return *this;
  std::vector<mpq_class> powers(static_cast<std::size_t>(order_), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    powers[(static_cast<std::size_t>(order_) - i) % static_cast<std::size_t>(order_)] = coeffs_[i];
  }
  return Cyclotomic(order_, powers);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (order_ == 1) return Cyclotomic(mpq_class(1 / coeffs_[0]));
  const Field& f = field(order_);
  // column j of the multiplication-by-this matrix is this * x^j
  std::vector<std::vector<mpq_class>> m(f.phi, std::vector<mpq_class>(f.phi, 0));
  for (std::size_t j = 0; j < f.phi; ++j) {
    std::vector<mpq_class> powers(coeffs_.size() + j, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) powers[i + j] = coeffs_[i];
    const auto col = reduce_powers(f, powers);
    for (std::size_t r = 0; r < f.phi; ++r) m[r][j] = col[r];
  }
  Cyclotomic out;
  out.order_ = order_;
  out.coeffs_ = solve_unit(std::move(m));
  out.normalize();
  return out;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
    sum += coeffs_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  if (order_ == 1) return coeffs_[0].get_str();
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    std::string term;
    const mpq_class mag = abs(c);
    const std::string zeta = "z" + std::to_string(order_) + (i > 1 ? "^" + std::to_string(i) : "");
    if (i == 0) {
      term = mag.get_str();
    } else if (mag == 1) {
      term = zeta;
    } else {
      term = mag.get_str() + "*" + zeta;
    }
    if (out.empty()) {
      out = (sgn(c) < 0 ? "-" : "") + term;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (order_ == rhs.order_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  } else {
    const int common = std::lcm(order_, rhs.order_);
    *this = promoted(common);
    const Cyclotomic other = rhs.promoted(common);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this = *this / rhs; }

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.order_ == 1 && rhs.order_ == 1) return Cyclotomic(mpq_class(lhs.coeffs_[0] * rhs.coeffs_[0]));
  if (lhs.order_ == 1 || rhs.order_ == 1) {
    const Cyclotomic& scalar = lhs.order_ == 1 ? lhs : rhs;
    Cyclotomic out = lhs.order_ == 1 ? rhs : lhs;
    for (auto& c : out.coeffs_) c *= scalar.coeffs_[0];
    out.normalize();
    return out;
  }
  const int common = std::lcm(lhs.order_, rhs.order_);
  const Cyclotomic a = lhs.promoted(common);
  const Cyclotomic b = rhs.promoted(common);
  std::vector<mpq_class> powers(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      powers[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic(common, powers);
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.order_ == rhs.order_) return lhs.coeffs_ == rhs.coeffs_;
  // normalized values of different orders can still coincide, e.g. ζ_3 = ζ_6^2
  const int common = std::lcm(lhs.order_, rhs.order_);
  return lhs.promoted(common).coeffs_ == rhs.promoted(common).coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value) { return os << value.to_string(); }

}  // namespace ncgeom
