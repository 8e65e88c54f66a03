#include "ncgeom/connection.hpp"

#include "ncgeom/errors.hpp"
#include "ncgeom/polynomial.hpp"

namespace ncgeom {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void append(ExactVector& out, const TwoForm& w) {
  for (const auto& f : w.coeffs) out.insert(out.end(), f.values().begin(), f.values().end());
}

ExactVector flatten(const std::vector<TwoForm>& forms) {
  ExactVector out;
  for (const auto& w : forms) append(out, w);
  return out;
}

// Σ_b A_b ∧ (e_{b⁻¹ab} - e_a): the part of the torsion linear in A.
TwoForm torsion_linear(const Calculus& calc, const Connection& A, int a) {
  TwoForm out = calc.zero_two_form();
  for (int b = 0; b < calc.k(); ++b) {
    const OneForm& Ab = A.components[idx(b)];
    if (Ab.is_zero()) continue;
    const int target = calc.adjoint_inverse(a, b);
    if (target == a) continue;
    out += calc.wedge(Ab, calc.e(target) - calc.e(a));
  }
  return out;
}

Connection from_coefficients(const Calculus& calc, const ExactVector& v) {
  Connection A = zero_connection(calc);
  const std::size_t n = calc.order();
  for (int a = 0; a < calc.k(); ++a)
    for (int b = 0; b < calc.k(); ++b)
      for (std::size_t g = 0; g < n; ++g)
        A.components[idx(a)].coeffs[idx(b)][g] = v[idx(a * calc.k() + b) * n + g];
  return A;
}

}  // namespace

Connection connection_from_chart(const Calculus& calc, const GroupFunction& alpha, const GroupFunction& beta,
                                 const GroupFunction& gamma) {
  if (!(alpha + beta + gamma + calc.constant(1)).is_zero()) {
    throw PreconditionError("chart functions must satisfy alpha + beta + gamma = -1");
  }
  return connection_from_chart_unconstrained(calc, alpha, beta, gamma);
}

Connection connection_from_chart_unconstrained(const Calculus& calc, const GroupFunction& alpha,
                                               const GroupFunction& beta, const GroupFunction& gamma) {
  if (calc.k() != 3) throw PreconditionError("the (alpha, beta, gamma) chart needs a three-member class");
  const GroupFunction* pattern[3] = {&alpha, &gamma, &beta};
  Connection A = zero_connection(calc);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      GroupFunction f = *pattern[(a + b) % 3];
      if (a == b) f += calc.constant(1);
      A.components[idx(a)].coeffs[idx(b)] = std::move(f);
    }
  A.chart = ConnectionChart{alpha, beta, gamma};
  return A;
}

Connection connection_from_right_coefficients(const Calculus& calc,
                                              const std::vector<std::vector<GroupFunction>>& right) {
  Connection A = zero_connection(calc);
  // e_b f = R_b(f) e_b
  for (int a = 0; a < calc.k(); ++a)
    for (int b = 0; b < calc.k(); ++b)
      A.components[idx(a)].coeffs[idx(b)] = calc.translate(b, right[idx(b)][idx(a)]);
  return A;
}

Connection zero_connection(const Calculus& calc) {
  return Connection{std::vector<OneForm>(idx(calc.k()), calc.zero_one_form()), std::nullopt};
}

OneForm sum_components(const Calculus& calc, const Connection& A) {
  OneForm sum = calc.zero_one_form();
  for (const auto& c : A.components) sum += c;
  return sum;
}

std::vector<TwoForm> torsion_residual(const Calculus& calc, const Connection& A) {
  std::vector<TwoForm> out;
  for (int a = 0; a < calc.k(); ++a) out.push_back(calc.d(calc.e(a)) + torsion_linear(calc, A, a));
  return out;
}

ExactMatrix torsion_system(const Calculus& calc, const std::vector<int>& members) {
  const std::size_t n = calc.order();
  const std::size_t unknowns = idx(calc.k() * calc.k()) * n;
  std::vector<ExactVector> columns;
  std::size_t rows = 0;
  for (std::size_t p = 0; p < unknowns; ++p) {
    ExactVector v(unknowns);
    v[p] = 1;
    const Connection A = from_coefficients(calc, v);
    ExactVector col;
    for (int a : members) append(col, torsion_linear(calc, A, a));
    rows = col.size();
    columns.push_back(std::move(col));
  }
  return ExactMatrix::from_columns(columns, rows);
}

TorsionFreeFamily torsion_free_family(const Calculus& calc) {
  std::vector<int> members;
  for (int a = 0; a < calc.k(); ++a) members.push_back(a);
  const ExactMatrix m = torsion_system(calc, members);

  std::vector<TwoForm> de;
  for (int a = 0; a < calc.k(); ++a) de.push_back(calc.d(calc.e(a)));
  ExactVector rhs = flatten(de);
  for (auto& x : rhs) x = -x;

  const auto sol = solve_affine(m, rhs);
  if (!sol) throw InternalError("torsion system is infeasible");
  TorsionFreeFamily family;
  family.particular = from_coefficients(calc, sol->particular);
  for (const auto& v : sol->kernel) family.directions.push_back(from_coefficients(calc, v));
  family.unknowns = m.cols();
  family.equations = m.rows();
  family.rank = m.cols() - sol->kernel.size();
  return family;
}

std::vector<TwoForm> cotorsion_residual(const Calculus& calc, const Connection& A, const Metric& m) {
  if (m.n != calc.k()) throw std::invalid_argument("metric size does not match the class");
  if (!sum_components(calc, A).is_zero()) throw PreconditionError("cotorsion residual needs sum_a A_a = 0");
  std::vector<TwoForm> out;
  for (int a = 0; a < calc.k(); ++a) {
    TwoForm r = calc.d(calc.e(a));
    for (int b = 0; b < calc.k(); ++b) r += calc.wedge(calc.e(calc.adjoint(b, a)), A.components[idx(b)]);
    out.push_back(std::move(r));
  }
  return out;
}

bool RegularityResidual::regular() const {
  for (const auto& [g, w] : off_class)
    if (!w.is_zero()) return false;
  return true;
}

RegularityResidual regularity_residual(const Calculus& calc, const Connection& A) {
  const ConjClass& c = calc.conj_class();
  const FiniteGroup& grp = calc.group();
  RegularityResidual out;
  for (int g = 0; g < grp.order(); ++g) {
    if (c.contains(g)) continue;
    bool any = false;
    TwoForm sum = calc.zero_two_form();
    for (int a = 0; a < c.size(); ++a)
      for (int b = 0; b < c.size(); ++b) {
        if (grp.mul(c.member(a), c.member(b)) != g) continue;
        any = true;
        sum += calc.wedge(A.components[idx(a)], A.components[idx(b)]);
      }
    if (!any) continue;
    if (g == grp.identity()) {
      out.identity_component = std::move(sum);
    } else {
      out.off_class.emplace_back(g, std::move(sum));
    }
  }
  return out;
}

Connection levi_civita(const Calculus& calc, const mpq_class& mu) {
  if (!matches_product_pattern(calc.conj_class())) {
    throw PreconditionError("Levi-Civita construction needs a three-member class with the circulant product table");
  }
  const Metric m = metric(calc.k(), mu);
  const GroupFunction third = calc.constant(Cyclotomic::rational(-1, 3));
  Connection A = connection_from_chart(calc, third, third, third);
  for (const auto& r : torsion_residual(calc, A))
    if (!r.is_zero()) throw InternalError("Levi-Civita candidate has torsion");
  for (const auto& r : cotorsion_residual(calc, A, m))
    if (!r.is_zero()) throw InternalError("Levi-Civita candidate has cotorsion");
  if (!regularity_residual(calc, A).regular()) throw InternalError("Levi-Civita candidate is not regular");
  return A;
}

namespace {

// Residual equations of a constant chart point (α, β, -1-α-β).
ExactVector scan_residual(const Calculus& calc, const Metric& m, const Cyclotomic& a, const Cyclotomic& b) {
  const Connection A =
      connection_from_chart(calc, calc.constant(a), calc.constant(b), calc.constant(Cyclotomic(-1) - a - b));
  ExactVector out = flatten(torsion_residual(calc, A));
  for (const auto& w : cotorsion_residual(calc, A, m)) append(out, w);
  for (const auto& [g, w] : regularity_residual(calc, A).off_class) append(out, w);
  return out;
}

// Monomials α², αβ, β², α, β, 1.
ExactVector monomials(const Cyclotomic& a, const Cyclotomic& b) { return {a * a, a * b, b * b, a, b, Cyclotomic(1)}; }

// Roots s of the quadratic system after substituting the line (u, v) = (p + q s, s)
// with u, v the (pivot, free) variables.
std::vector<Cyclotomic> roots_on_line(const ExactMatrix& eqs, const Cyclotomic& p, const Cyclotomic& q, bool pivot_is_alpha) {
  for (std::size_t r = 0; r < eqs.rows(); ++r) {
    // Coefficients in s of each monomial, constant term first.
    const Polynomial u({p, q});
    const Polynomial s({Cyclotomic(), Cyclotomic(1)});
    const Polynomial& alpha = pivot_is_alpha ? u : s;
    const Polynomial& beta = pivot_is_alpha ? s : u;
    const std::vector<Polynomial> mono = {alpha * alpha, alpha * beta, beta * beta, alpha, beta, Polynomial({1})};
    std::vector<Cyclotomic> acc(3);
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t d = 0; d < mono[j].coeffs().size(); ++d) acc[d] += eqs(r, j) * mono[j].coeffs()[d];
    const Polynomial poly(acc);
    if (poly.degree() < 0) continue;
    if (poly.degree() == 0) return {};
    const auto roots = rational_roots(poly);
    if (!roots) throw UnsupportedError("non-rational coefficients on the constant slice");
    int found = 0;
    for (const auto& [root, mult] : *roots) found += mult;
    if (found < poly.degree()) throw UnsupportedError("constant slice may have non-rational solutions");
    std::vector<Cyclotomic> out;
    for (const auto& [root, mult] : *roots) out.emplace_back(root);
    return out;
  }
  throw UnsupportedError("constant slice contains a line of solutions");
}

}  // namespace

ConstantScanResult constant_regular_scan(const Calculus& calc, const mpq_class& mu) {
  if (calc.k() != 3) throw PreconditionError("constant scan needs a three-member class");
  const Metric m = metric(3, mu);
  const std::vector<std::pair<long, long>> samples = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  ExactMatrix vandermonde(6, 6);
  std::vector<ExactVector> values;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto mono = monomials(samples[i].first, samples[i].second);
    for (std::size_t j = 0; j < 6; ++j) vandermonde(i, j) = mono[j];
    values.push_back(scan_residual(calc, m, samples[i].first, samples[i].second));
  }
  const ExactMatrix vinv = inverse(vandermonde);
  const std::size_t rows = values.front().size();
  ExactMatrix eqs(rows, 6);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t i = 0; i < 6; ++i)
        if (!vinv(j, i).is_zero() && !values[i][r].is_zero()) eqs(r, j) += vinv(j, i) * values[i][r];

  // The residual is at most quadratic; confirm on fresh points.
  for (const auto& [a, b] : std::vector<std::pair<long, long>>{{3, -2}, {-1, 5}}) {
    const auto actual = scan_residual(calc, m, a, b);
    const auto model = eqs * monomials(a, b);
    if (!(actual == model)) throw InternalError("constant-slice residual is not quadratic");
  }

  ConstantScanResult result;
  const RowEchelon ech = row_reduce(eqs);
  if (ech.pivots.empty()) {
    result.free_parameters = 2;
    return result;
  }
  std::vector<std::size_t> linear_rows;
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == 5) return result;  // 1 = 0
    if (ech.pivots[i] >= 3) linear_rows.push_back(i);
  }

  std::vector<std::pair<Cyclotomic, Cyclotomic>> candidates;
  const ExactMatrix& red = ech.reduced;
  if (linear_rows.size() == 2) {
    candidates.emplace_back(-red(linear_rows[0], 5), -red(linear_rows[1], 5));
  } else if (linear_rows.size() == 1) {
    const std::size_t r = linear_rows.front();
    const bool pivot_alpha = ech.pivots[r] == 3;
    // pivot + c·free + d = 0
    const Cyclotomic c = pivot_alpha ? red(r, 4) : Cyclotomic();
    const Cyclotomic d = red(r, 5);
    for (const auto& s : roots_on_line(eqs, -d, -c, pivot_alpha)) {
      const Cyclotomic u = -d - c * s;
      candidates.emplace_back(pivot_alpha ? u : s, pivot_alpha ? s : u);
    }
  } else {
    throw UnsupportedError("constant slice system has no linear consequence");
  }

  for (const auto& [a, b] : candidates) {
    if (!is_zero_vector(eqs * monomials(a, b))) continue;
    result.points.push_back({a, b, Cyclotomic(-1) - a - b});
  }
  return result;
}

}  // namespace ncgeom
