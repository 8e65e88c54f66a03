#include "ncgeom/curvature.hpp"

#include <array>

#include "ncgeom/errors.hpp"

namespace ncgeom {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

const Cyclotomic kHalf = Cyclotomic::rational(1, 2);

// i(ω_q) for one quotient basis monomial, as constant k²-coordinates.
ExactVector lift_monomial(const Calculus& calc, Lift variant, Monomial ab) {
  const int k = calc.k();
  const auto& c = calc.conj_class();
  const auto& g = calc.group();
  ExactVector out(idx(k * k));
  const auto [a, b] = ab;
  if (variant == Lift::braided) {
    out[idx(a * k + b)] += Cyclotomic(1);
    out[idx(calc.adjoint(a, b) * k + a)] -= Cyclotomic(1);
    return out;
  }
  if (a == b) return out;
  out[idx(a * k + b)] += Cyclotomic(1);
  const int product = g.mul(c.member(a), c.member(b));
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      if (p != q && g.mul(c.member(p), c.member(q)) == product) out[idx(p * k + q)] -= kHalf;
  return out;
}

ExactVector flat(const TensorForm& t) {
  ExactVector out;
  for (const auto& f : t.coeffs) out.insert(out.end(), f.values().begin(), f.values().end());
  return out;
}

TensorForm ricci_from_forms(const Calculus& calc, const std::vector<TwoForm>& F, Lift variant) {
  const int k = calc.k();
  TensorForm ric = calc.zero_tensor();
  for (int c = 0; c < k; ++c) {
    const TensorForm iF = lift(calc, variant, F[idx(c)]);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        const auto& coef = iF.coeffs[idx(a * k + b)];
        ric.coeffs[idx(b * k + calc.adjoint_inverse(a, c))] += coef;
        ric.coeffs[idx(b * k + a)] -= coef;
      }
  }
  return ric;
}

std::vector<TwoForm> linear_curvature(const Calculus& calc, const Connection& A) {
  std::vector<TwoForm> out;
  for (const auto& comp : A.components) out.push_back(calc.d(comp));
  return out;
}

Connection chart_point(const Calculus& calc, const ExactVector& v) {
  const std::size_t n = calc.order();
  std::array<GroupFunction, 3> f{GroupFunction(n), GroupFunction(n), GroupFunction(n)};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t g = 0; g < n; ++g) f[j][g] = v[j * n + g];
  return connection_from_chart_unconstrained(calc, f[0], f[1], f[2]);
}

ConnectionChart chart_of(const Calculus& calc, const ExactVector& v) {
  const auto A = chart_point(calc, v);
  return *A.chart;
}

// Quadratic part vanishes on (α, β, -1-α-β) for all α, β: a polynomial of
// degree ≤ 2 vanishes iff it does at 0, e_p, 2e_p and e_p + e_q.
bool quadratic_vanishes_on_chart(const Calculus& calc) {
  const std::size_t n = calc.order();
  const std::size_t free = 2 * n;
  auto probe = [&](const std::vector<std::pair<std::size_t, int>>& entries) {
    ExactVector v(3 * n);
    for (std::size_t g = 0; g < n; ++g) v[2 * n + g] = Cyclotomic(-1);
    for (const auto& [p, mult] : entries) {
      v[p] += Cyclotomic(mult);
      v[2 * n + p % n] -= Cyclotomic(mult);
    }
    for (const auto& w : curvature_forms(calc, chart_point(calc, v)).quadratic)
      if (!w.is_zero()) return false;
    return true;
  };
  if (!probe({})) return false;
  for (std::size_t p = 0; p < free; ++p) {
    if (!probe({{p, 1}}) || !probe({{p, 2}})) return false;
    for (std::size_t q = p + 1; q < free; ++q)
      if (!probe({{p, 1}, {q, 1}})) return false;
  }
  return true;
}

ExactMatrix stack(const ExactMatrix& top, const ExactMatrix& bottom) {
  ExactMatrix out(top.rows() + bottom.rows(), top.cols());
  out.set_block(0, 0, top);
  out.set_block(top.rows(), 0, bottom);
  return out;
}

}  // namespace

CurvatureForms curvature_forms(const Calculus& calc, const Connection& A) {
  const int k = calc.k();
  const auto& c = calc.conj_class();
  const auto& g = c.group();
  const OneForm sum = sum_components(calc, A);
  CurvatureForms out;
  for (int a = 0; a < k; ++a) {
    const OneForm& Aa = A.components[idx(a)];
    TwoForm q = calc.zero_two_form();
    for (int p = 0; p < k; ++p)
      for (int r = 0; r < k; ++r)
        if (g.mul(c.member(p), c.member(r)) == c.member(a))
          q += calc.wedge(A.components[idx(p)], A.components[idx(r)]);
    q -= calc.wedge(sum, Aa);
    q -= calc.wedge(Aa, sum);
    out.F.push_back(calc.d(Aa) + q);
    out.quadratic.push_back(std::move(q));
  }
  return out;
}

TensorForm covariant_derivative(const Calculus& calc, const Connection& A, const OneForm& alpha) {
  const int k = calc.k();
  TensorForm out = calc.zero_tensor();
  for (int a = 0; a < k; ++a) {
    const GroupFunction& coef = alpha.coeffs[idx(a)];
    for (int c = 0; c < k; ++c) out.coeffs[idx(c * k + a)] += calc.partial(c, coef);
    for (int b = 0; b < k; ++b) {
      const int moved = calc.adjoint_inverse(a, b);
      if (moved == a) continue;
      for (int c = 0; c < k; ++c) {
        const GroupFunction term = coef * A.coefficient(b, c);
        out.coeffs[idx(c * k + moved)] -= term;
        out.coeffs[idx(c * k + a)] += term;
      }
    }
  }
  return out;
}

bool CurvatureTensor::is_zero() const {
  for (const auto& f : coeffs)
    if (!f.is_zero()) return false;
  return true;
}

CurvatureTensor tensor_two_one(const Calculus& calc, const TwoForm& omega, const OneForm& alpha) {
  const int k = calc.k();
  const int dim = calc.two_forms().dimension();
  CurvatureTensor out{std::vector<GroupFunction>(idx(dim * k), calc.zero_function())};
  // e_a∧e_b f = R_{ab}(f) e_a∧e_b
  const auto& basis = calc.two_forms().quotient_basis();
  const auto& c = calc.conj_class();
  const auto& g = c.group();
  for (int q = 0; q < dim; ++q) {
    const auto [a, b] = basis[idx(q)];
    const int product = g.mul(c.member(a), c.member(b));
    for (int e = 0; e < k; ++e) {
      const auto& f = alpha.coeffs[idx(e)];
      GroupFunction moved(calc.order());
      for (std::size_t x = 0; x < calc.order(); ++x) moved[x] = f[idx(g.mul(static_cast<int>(x), product))];
      out.coeffs[idx(q * k + e)] += omega.coeffs[idx(q)] * moved;
    }
  }
  return out;
}

CurvatureTensor riemann(const Calculus& calc, const Connection& A, const OneForm& alpha) {
  const int k = calc.k();
  const int dim = calc.two_forms().dimension();
  const auto F = curvature_forms(calc, A).F;
  CurvatureTensor out{std::vector<GroupFunction>(idx(dim * k), calc.zero_function())};
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int moved = calc.adjoint_inverse(a, b);
      if (moved == a) continue;
      for (int q = 0; q < dim; ++q) {
        const GroupFunction term = alpha.coeffs[idx(a)] * F[idx(b)].coeffs[idx(q)];
        out.coeffs[idx(q * k + moved)] += term;
        out.coeffs[idx(q * k + a)] -= term;
      }
    }
  return out;
}

const char* lift_name(Lift variant) { return variant == Lift::canonical ? "canonical" : "braided"; }

TensorForm lift(const Calculus& calc, Lift variant, const TwoForm& omega) {
  const auto& basis = calc.two_forms().quotient_basis();
  TensorForm out = calc.zero_tensor();
  for (std::size_t q = 0; q < basis.size(); ++q) {
    const ExactVector image = lift_monomial(calc, variant, basis[q]);
    for (std::size_t m = 0; m < image.size(); ++m)
      if (!image[m].is_zero()) out.coeffs[m] += omega.coeffs[q] * image[m];
  }
  return out;
}

TensorForm ricci(const Calculus& calc, const Connection& A, Lift variant) {
  return ricci_from_forms(calc, curvature_forms(calc, A).F, variant);
}

RicciFlatResult ricci_flat_solve(const Calculus& calc, Lift variant) {
  if (calc.k() != 3) throw PreconditionError("Ricci-flat solve needs the three-member chart");
  const std::size_t n = calc.order();
  RicciFlatResult res;
  res.variant = variant;
  res.quadratic_vanishes = quadratic_vanishes_on_chart(calc);
  res.unknowns = 3 * n;

  // Ricci of the linear part is affine in v: offset at v = 0 plus unit columns.
  auto linear_ricci = [&](const ExactVector& v) {
    return flat(ricci_from_forms(calc, linear_curvature(calc, chart_point(calc, v)), variant));
  };
  const ExactVector offset = linear_ricci(ExactVector(3 * n));
  std::vector<ExactVector> cols;
  for (std::size_t j = 0; j < 3 * n; ++j) {
    ExactVector unit(3 * n);
    unit[j] = Cyclotomic(1);
    ExactVector col = linear_ricci(unit);
    for (std::size_t i = 0; i < col.size(); ++i) col[i] -= offset[i];
    cols.push_back(std::move(col));
  }
  const ExactMatrix system = ExactMatrix::from_columns(cols, offset.size());
  res.ricci_equations = offset.size();
  ExactVector rhs(offset.size());
  for (std::size_t i = 0; i < offset.size(); ++i) rhs[i] = -offset[i];

  ExactMatrix constraint(n, 3 * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t j = 0; j < 3; ++j) constraint(g, j * n + g) = Cyclotomic(1);
  const ExactVector constraint_rhs(n, Cyclotomic(-1));

  res.rank_unconstrained = rank(system);
  if (const auto sol = solve_affine(system, rhs)) {
    res.feasible_unconstrained = true;
    res.free_unconstrained = sol->kernel.size();
  }

  const ExactMatrix full = stack(system, constraint);
  ExactVector full_rhs = rhs;
  full_rhs.insert(full_rhs.end(), constraint_rhs.begin(), constraint_rhs.end());
  res.rank_constrained = rank(full);
  if (const auto sol = solve_affine(full, full_rhs)) {
    res.feasible_constrained = true;
    res.free_constrained = sol->kernel.size();
    res.solution = chart_of(calc, sol->particular);
  }

  const ExactMatrix reference = stack(reference_diagonal_system(calc), constraint);
  ExactVector reference_rhs(3 * n);
  reference_rhs.insert(reference_rhs.end(), constraint_rhs.begin(), constraint_rhs.end());
  res.reference_rank = rank(reference);
  if (const auto sol = solve_affine(reference, reference_rhs); sol && sol->kernel.empty())
    res.reference_solution = chart_of(calc, sol->particular);
  return res;
}

ExactMatrix reference_diagonal_system(const Calculus& calc) {
  if (calc.k() != 3) throw PreconditionError("reference system needs the three-member chart");
  const std::size_t n = calc.order();
  // coef[eq][op][var]: op 0 is the identity, op 1 + c is ∂^c; var is α, β, γ.
  static const int coef[3][4][3] = {
      {{-2, 1, 1}, {0, 1, 1}, {1, -2, 0}, {1, 0, -2}},
      {{1, -2, 1}, {0, 1, -2}, {1, 1, 0}, {-2, 0, 1}},
      {{1, 1, -2}, {0, -2, 1}, {-2, 1, 0}, {1, 0, 1}},
  };
  ExactMatrix out(3 * n, 3 * n);
  const auto& c = calc.conj_class();
  const auto& g = c.group();
  for (std::size_t eq = 0; eq < 3; ++eq)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t row = eq * n + x;
      for (std::size_t var = 0; var < 3; ++var) {
        out(row, var * n + x) += Cyclotomic(coef[eq][0][var]);
        for (int m = 0; m < 3; ++m) {
          // ∂^m f(x) = f(x c_m) - f(x)
          const int w = coef[eq][1 + m][var];
          if (w == 0) continue;
          const auto shifted = static_cast<std::size_t>(g.mul(static_cast<int>(x), c.member(m)));
          out(row, var * n + shifted) += Cyclotomic(w);
          out(row, var * n + x) -= Cyclotomic(w);
        }
      }
    }
  return out;
}

}  // namespace ncgeom
