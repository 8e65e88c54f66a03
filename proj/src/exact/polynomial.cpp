#include "ncgeom/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncgeom/linalg.hpp"

namespace ncgeom {

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Returns quotient of p by (x - r) when r is a root.
std::optional<std::vector<mpq_class>> deflate(const std::vector<mpq_class>& p, const mpq_class& r) {
  if (p.size() < 2) return std::nullopt;
  std::vector<mpq_class> q(p.size() - 1);
  mpq_class carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  if (p[0] + carry * r != 0) return std::nullopt;
  return q;
}

}  // namespace

Polynomial::Polynomial(std::vector<Cyclotomic> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<Cyclotomic>& roots) {
  Polynomial p({Cyclotomic(1)});
  for (const auto& r : roots) p = p * Polynomial({-r, Cyclotomic(1)});
  return p;
}

Cyclotomic Polynomial::operator()(const Cyclotomic& x) const {
  Cyclotomic acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

ExactMatrix Polynomial::operator()(const ExactMatrix& m) const {
  if (!m.is_square()) throw std::invalid_argument("polynomial of a non-square matrix");
  const ExactMatrix id = ExactMatrix::identity(m.rows());
  ExactMatrix acc(m.rows(), m.cols());
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * m + coeffs_[i] * id;
  return acc;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) return Polynomial();
  std::vector<Cyclotomic> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial minimal_polynomial(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<ExactVector> powers;
  ExactMatrix current = ExactMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    powers.push_back(current.entries());
    const auto ker = kernel(ExactMatrix::from_columns(powers, n * n));
    if (!ker.empty()) {
      // Single kernel vector with free coordinate k set to 1: monic.
      return Polynomial(ker.front());
    }
    current = current * m;
  }
  throw std::logic_error("no annihilating polynomial up to degree n");
}

std::optional<std::vector<std::pair<mpq_class, int>>> rational_roots(const Polynomial& p) {
  if (p.degree() < 1) return std::vector<std::pair<mpq_class, int>>{};
  std::vector<mpq_class> c;
  for (const auto& x : p.coeffs()) {
    if (!x.is_rational()) return std::nullopt;
    c.push_back(x.rational_value());
  }

  std::vector<std::pair<mpq_class, int>> roots;
  std::size_t zero_mult = 0;
  while (zero_mult < c.size() && c[zero_mult] == 0) ++zero_mult;
  if (zero_mult > 0) {
    roots.emplace_back(0, static_cast<int>(zero_mult));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zero_mult));
  }
  if (c.size() < 2) return roots;

  mpz_class lcm_den = 1;
  for (const auto& x : c) lcm_den = lcm(lcm_den, mpz_class(x.get_den()));
  std::vector<mpz_class> z;
  for (const auto& x : c) z.push_back(mpz_class(x * lcm_den));

  std::vector<mpq_class> candidates;
  for (const auto& num : positive_divisors(z.front()))
    for (const auto& den : positive_divisors(z.back())) {
      mpq_class q(num, den);
      q.canonicalize();
      candidates.push_back(q);
      candidates.push_back(-q);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& r : candidates) {
    int mult = 0;
    while (auto q = deflate(c, r)) {
      c = std::move(*q);
      ++mult;
    }
    if (mult > 0) roots.emplace_back(r, mult);
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

}  // namespace ncgeom
