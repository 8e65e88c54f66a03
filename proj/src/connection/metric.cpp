#include "ncgeom/metric.hpp"

#include "ncgeom/errors.hpp"

namespace ncgeom {

Metric metric(int class_size, const mpq_class& mu) {
  if (class_size < 1) throw std::invalid_argument("metric needs a non-empty class");
  if (1 + class_size * mu == 0) throw SingularMetricError("metric is singular at mu = -1/" + std::to_string(class_size));
  const auto n = static_cast<std::size_t>(class_size);
  Metric m{mu, class_size, ExactMatrix(n, n), ExactMatrix(n, n)};
  // (I + μJ)⁻¹ = I - μ/(1 + nμ) J
  const mpq_class off = -mu / (1 + class_size * mu);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      m.eta(a, b) = Cyclotomic(mu + (a == b ? 1 : 0));
      m.eta_inv(a, b) = Cyclotomic(off + (a == b ? 1 : 0));
    }
  return m;
}

std::vector<OneForm> coframe(const Calculus& calc, const Metric& m) {
  std::vector<OneForm> out;
  for (int a = 0; a < calc.k(); ++a) {
    OneForm f = calc.zero_one_form();
    for (int b = 0; b < calc.k(); ++b)
      f.coeffs[static_cast<std::size_t>(b)] = calc.constant(m.eta(static_cast<std::size_t>(b), static_cast<std::size_t>(a)));
    out.push_back(std::move(f));
  }
  return out;
}

TensorForm metric_tensor(const Calculus& calc, const Metric& m) {
  TensorForm g = calc.zero_tensor();
  for (int a = 0; a < calc.k(); ++a) g += calc.tensor(calc.e(a), calc.e(a));
  g += calc.scale(calc.constant(Cyclotomic(m.mu)), calc.tensor(calc.theta(), calc.theta()));
  return g;
}

bool is_ad_invariant(const ConjClass& c, const Metric& m) {
  const FiniteGroup& g = c.group();
  for (int x = 0; x < g.order(); ++x)
    for (int a = 0; a < c.size(); ++a)
      for (int b = 0; b < c.size(); ++b) {
        const auto lhs = static_cast<std::size_t>(c.position(g.conj(g.inv(x), c.member(a))));
        const auto rhs = static_cast<std::size_t>(c.position(g.conj(x, c.member(b))));
        if (!(m.eta(lhs, static_cast<std::size_t>(b)) == m.eta(static_cast<std::size_t>(a), rhs))) return false;
      }
  return true;
}

}  // namespace ncgeom
