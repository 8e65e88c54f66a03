#include "ncgeom/dirac.hpp"

#include <algorithm>

#include "ncgeom/errors.hpp"
#include "ncgeom/metric.hpp"

namespace ncgeom {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

ExactMatrix shifted(const Representation& rep, int g) {
  return rep(g) - ExactMatrix::identity(idx(rep.dim));
}

std::optional<Cyclotomic> eigenvalue_of(const ExactMatrix& m, const ExactVector& v) {
  const ExactVector image = m * v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Cyclotomic lambda = image[i] / v[i];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!(image[j] == lambda * v[j])) return std::nullopt;
    return lambda;
  }
  return std::nullopt;
}

ExactMatrix minus_scalar(const ExactMatrix& m, const Cyclotomic& lambda) {
  return m - ExactMatrix::identity(m.rows()) * lambda;
}

}  // namespace

ExactMatrix casimir(const Representation& rep, const ConjClass& c, const mpq_class& mu) {
  const Metric m = metric(c.size(), mu);
  const auto d = idx(rep.dim);
  ExactMatrix out(d, d);
  for (int a = 0; a < c.size(); ++a)
    for (int b = 0; b < c.size(); ++b) {
      const auto& w = m.eta_inv(idx(a), idx(b));
      if (!w.is_zero()) out += w * (shifted(rep, c.member(a)) * shifted(rep, c.member(b)));
    }
  return out;
}

std::vector<ExactMatrix> gamma_matrices(const Representation& rep, const ConjClass& c, const mpq_class& mu) {
  const Metric m = metric(c.size(), mu);
  std::vector<ExactMatrix> out;
  for (int a = 0; a < c.size(); ++a) {
    ExactMatrix g(idx(rep.dim), idx(rep.dim));
    for (int b = 0; b < c.size(); ++b) g += m.eta_inv(idx(a), idx(b)) * shifted(rep, c.member(b));
    out.push_back(std::move(g));
  }
  return out;
}

SpinorOperator connection_term(const Calculus& calc, const Representation& rep, const Connection& A,
                               const mpq_class& mu) {
  const auto& c = calc.conj_class();
  const auto& grp = c.group();
  const auto gammas = gamma_matrices(rep, c, mu);
  const std::size_t n = calc.order();
  const auto d = idx(rep.dim);
  // γ_b τ^a per pair, then weighted pointwise by A_a^b(g).
  std::vector<ExactMatrix> products;
  for (int a = 0; a < c.size(); ++a) {
    const ExactMatrix tau = shifted(rep, grp.inv(c.member(a)));
    for (int b = 0; b < c.size(); ++b) products.push_back(gammas[idx(b)] * tau);
  }
  SpinorOperator out{ExactMatrix(d * n, d * n), rep.dim, grp.order()};
  for (std::size_t g = 0; g < n; ++g)
    for (int a = 0; a < c.size(); ++a)
      for (int b = 0; b < c.size(); ++b) {
        const Cyclotomic& w = A.coefficient(a, b)[g];
        if (w.is_zero()) continue;
        const ExactMatrix& p = products[idx(a * c.size() + b)];
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) out.matrix(i * n + g, j * n + g) += w * p(i, j);
      }
  return out;
}

SpinorOperator dirac_operator(const Calculus& calc, const Representation& rep, const Connection& A,
                              const mpq_class& mu) {
  const auto& c = calc.conj_class();
  const auto gammas = gamma_matrices(rep, c, mu);
  const std::size_t n = calc.order();
  SpinorOperator out = connection_term(calc, rep, A, mu);
  out.matrix *= Cyclotomic(-1);
  for (int a = 0; a < c.size(); ++a) {
    const ExactMatrix partial = right_translation(c.group(), c.member(a)) - ExactMatrix::identity(n);
    out.matrix += kron(gammas[idx(a)], partial);
  }
  return out;
}

ExactMatrix spinor_block(const SpinorOperator& op, int i, int j) {
  const auto n = idx(op.group_order);
  return op.matrix.block(idx(i) * n, idx(j) * n, n, n);
}

int Spectrum::multiplicity(const Cyclotomic& lambda) const {
  for (const auto& [value, mult] : pairs)
    if (value == lambda) return mult;
  return 0;
}

int Spectrum::total() const {
  int sum = 0;
  for (const auto& p : pairs) sum += p.second;
  return sum;
}

Spectrum spectrum(const ExactMatrix& m, const std::vector<Cyclotomic>& candidates) {
  if (!m.is_square()) throw std::invalid_argument("spectrum needs a square matrix");
  Spectrum out;
  out.dimension = m.rows();
  for (const auto& lambda : candidates) {
    if (out.multiplicity(lambda) > 0) continue;
    const auto nullity = static_cast<int>(m.rows() - rank(minus_scalar(m, lambda)));
    if (nullity > 0) out.pairs.emplace_back(lambda, nullity);
  }
  if (!out.complete()) {
    throw IncompleteSpectrumError("candidate eigenvalues account for " + std::to_string(out.total()) + " of " +
                                  std::to_string(out.dimension) + " dimensions");
  }
  return out;
}

Spectrum spectrum_auto(const ExactMatrix& m) {
  const Polynomial minimal = minimal_polynomial(m);
  const auto roots = rational_roots(minimal);
  if (!roots) throw UnsupportedError("minimal polynomial has irrational coefficients");
  std::vector<Cyclotomic> candidates;
  int degree = 0;
  for (const auto& [root, mult] : *roots) {
    candidates.emplace_back(root);
    degree += mult;
  }
  if (degree != minimal.degree()) throw UnsupportedError("minimal polynomial has irrational roots");
  return spectrum(m, candidates);
}

MinimalPolynomialCheck minimal_polynomial_check(const ExactMatrix& m) {
  MinimalPolynomialCheck out;
  out.minimal = minimal_polynomial(m);
  out.annihilates = out.minimal(m).is_zero();
  out.roots = rational_roots(out.minimal);
  return out;
}

ExactMatrix wave_operator(const Calculus& calc, const mpq_class& mu) {
  const auto& c = calc.conj_class();
  const Metric m = metric(c.size(), mu);
  const std::size_t n = calc.order();
  std::vector<ExactMatrix> partials;
  for (int a = 0; a < c.size(); ++a)
    partials.push_back(right_translation(c.group(), c.member(a)) - ExactMatrix::identity(n));
  ExactMatrix out(n, n);
  for (int a = 0; a < c.size(); ++a)
    for (int b = 0; b < c.size(); ++b) {
      const auto& w = m.eta_inv(idx(a), idx(b));
      if (!w.is_zero()) out -= w * (partials[idx(a)] * partials[idx(b)]);
    }
  return out;
}

ExactMatrix translation_sum(const Calculus& calc) {
  ExactMatrix out(calc.order(), calc.order());
  for (int a = 0; a < calc.k(); ++a) out += right_translation(calc.group(), calc.conj_class().member(a));
  return out;
}

ExactVector spinor(const GroupFunction& first, const GroupFunction& second) {
  ExactVector out = first.values();
  out.insert(out.end(), second.values().begin(), second.values().end());
  return out;
}

GroupFunction matrix_element(const Representation& rep, int i, int j) {
  GroupFunction f(rep.matrices.size());
  for (std::size_t g = 0; g < rep.matrices.size(); ++g) f[g] = rep.matrices[g](idx(i), idx(j));
  return f;
}

std::vector<std::pair<std::string, GroupFunction>> matrix_element_functions(const FiniteGroup& g) {
  std::vector<std::pair<std::string, GroupFunction>> out;
  for (const auto& rep : irreducibles(g))
    for (int i = 0; i < rep.dim; ++i)
      for (int j = 0; j < rep.dim; ++j)
        out.emplace_back(rep.name + "[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                         matrix_element(rep, i, j));
  return out;
}

EigenmodeCatalog eigenmode_catalog(const Calculus& calc, const SpinorOperator& D) {
  const auto& c = calc.conj_class();
  const auto& grp = c.group();
  const auto pres = find_dihedral_presentation(grp);
  if (c.size() != 3 || !pres || D.spinor_dim != 2) {
    throw PreconditionError("eigenmode catalog needs a three-member class of a dihedral group and 2-dim spinors");
  }
  const std::size_t n = calc.order();
  const auto rho = builtin_rep(grp, "spinor");
  const auto sign = builtin_rep(grp, "sign2");
  const ExactMatrix D1 = spinor_block(D, 1, 0);
  const ExactMatrix D2 = spinor_block(D, 0, 1);
  const ExactMatrix Rt = right_translation(grp, c.member(0));
  const ExactMatrix Rx = right_translation(grp, c.member(1));
  const Cyclotomic omega = Cyclotomic::zeta(pres->n, 1);
  const GroupFunction zero(n);
  auto apply = [](const ExactMatrix& m, const GroupFunction& f) { return GroupFunction(m * f.values()); };
  auto name = [](const std::string& base, int k, int l) {
    return base + std::to_string(k) + std::to_string(l);
  };

  EigenmodeCatalog out;
  auto add = [&](std::string label, ExactVector v, const Cyclotomic& expected) {
    CatalogEntry e{std::move(label), std::move(v), expected, false, std::nullopt};
    e.nonzero = !is_zero_vector(e.vector);
    if (e.nonzero) e.eigenvalue = eigenvalue_of(D.matrix, e.vector);
    out.entries.push_back(std::move(e));
  };

  const Cyclotomic three(3), minus_three(-3), zero_value(0);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) {
      const auto f = matrix_element(rho, k, l);
      add("(D1 " + name("rho", k, l) + ", 0)", spinor(apply(D1, f), zero), zero_value);
      add("(0, D2 " + name("rho", k, l) + ")", spinor(zero, apply(D2, f)), zero_value);
    }
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) {
      const auto f = matrix_element(sign, k, l);
      const Cyclotomic& expected = l == 0 ? three : minus_three;
      add("(" + name("sign", k, l) + ", 0)", spinor(f, zero), expected);
      add("(0, " + name("sign", k, l) + ")", spinor(zero, f), expected);
    }
  // Only the second column solves the ansatz eigenproblems.
  for (int k = 0; k < 2; ++k) {
    const auto f = matrix_element(rho, k, 1);
    add("(" + name("rho", k, 1) + ", omega R_t " + name("rho", k, 1) + ")", spinor(f, omega * apply(Rt, f)), three);
    add("(" + name("rho", k, 1) + ", R_x " + name("rho", k, 1) + ")", spinor(f, apply(Rx, f)), minus_three);
  }
  // Multiplication by sign00 anticommutes with D, so it negates the eigenvalue.
  const ExactMatrix flip = sign_multiplication(calc, D.spinor_dim);
  for (int k = 0; k < 2; ++k) {
    const auto f1 = matrix_element(rho, k, 1);
    const auto f0 = matrix_element(rho, k, 0);
    const std::string plus = "(" + name("rho", k, 1) + ", " + name("rho", k, 0) + ")";
    const std::string minus = "(" + name("rho", k, 1) + ", -" + name("rho", k, 0) + ")";
    add(plus, spinor(f1, f0), three);
    add(minus, spinor(f1, -f0), minus_three);
    add("sign00 " + plus, flip * spinor(f1, f0), minus_three);
    add("sign00 " + minus, flip * spinor(f1, -f0), three);
  }

  for (const auto& lambda : {zero_value, three, minus_three}) {
    std::vector<ExactVector> cols;
    for (const auto& e : out.entries)
      if (e.verified() && e.expected == lambda) cols.push_back(e.vector);
    CatalogSpan s{lambda, 0, 0};
    if (!cols.empty()) s.span = static_cast<int>(rank(ExactMatrix::from_columns(cols, D.dimension())));
    s.multiplicity = static_cast<int>(D.dimension() - rank(minus_scalar(D.matrix, lambda)));
    out.spans.push_back(s);
  }
  return out;
}

ExactMatrix chirality(const ExactMatrix& D, KernelInvolution kernel_action) {
  Spectrum spec;
  try {
    spec = spectrum_auto(D);
  } catch (const IncompleteSpectrumError&) {
    throw PreconditionError("chirality needs a diagonalizable operator");
  }
  for (const auto& [lambda, mult] : spec.pairs)
    if (spec.multiplicity(-lambda) != mult) throw PreconditionError("spectrum is not symmetric about 0");

  const std::size_t n = D.rows();
  std::vector<ExactVector> basis;
  std::vector<std::size_t> partner;  // column index of γ(basis[i])
  std::vector<Cyclotomic> sign_of;   // γ(basis[i]) = sign_of[i] basis[partner[i]]

  const auto kernel_basis = kernel(D);
  for (std::size_t i = 0; i < kernel_basis.size(); ++i) {
    basis.push_back(kernel_basis[i]);
    std::size_t p = i;
    Cyclotomic s(1);
    if (kernel_action == KernelInvolution::negated) s = Cyclotomic(-1);
    if (kernel_action == KernelInvolution::swap) {
      if (i % 2 == 1) p = i - 1;
      else if (i + 1 < kernel_basis.size()) p = i + 1;
    }
    partner.push_back(p);
    sign_of.push_back(s);
  }
  std::vector<Cyclotomic> positive;
  for (const auto& [lambda, mult] : spec.pairs)
    if (!lambda.is_zero() && lambda.rational_value() > 0) positive.push_back(lambda);
  for (const auto& lambda : positive) {
    const auto plus = kernel(minus_scalar(D, lambda));
    const auto minus = kernel(minus_scalar(D, -lambda));
    const std::size_t base = basis.size();
    const std::size_t m = plus.size();
    for (std::size_t i = 0; i < m; ++i) {
      basis.push_back(plus[i]);
      partner.push_back(base + m + i);
      sign_of.emplace_back(1);
    }
    for (std::size_t i = 0; i < m; ++i) {
      basis.push_back(minus[i]);
      partner.push_back(base + i);
      sign_of.emplace_back(1);
    }
  }
  if (basis.size() != n) throw PreconditionError("eigenbasis is incomplete");

  const ExactMatrix P = ExactMatrix::from_columns(basis, n);
  ExactMatrix G(n, n);
  for (std::size_t i = 0; i < n; ++i) G(partner[i], i) = sign_of[i];
  return P * G * inverse(P);
}

ExactMatrix sign_multiplication(const Calculus& calc, int spinor_dim) {
  const auto sign = matrix_element(builtin_rep(calc.group(), "sign2"), 0, 0);
  return kron(ExactMatrix::identity(idx(spinor_dim)), ExactMatrix::diagonal(sign.values()));
}

Cyclotomic spectral_action(const Spectrum& spec, const Polynomial& f, const mpq_class& cutoff) {
  if (!spec.complete()) throw IncompleteSpectrumError("spectral action needs a complete spectrum");
  if (cutoff <= 0) throw std::invalid_argument("cutoff must be positive");
  const Cyclotomic scale = Cyclotomic(mpq_class(1) / (cutoff * cutoff));
  Cyclotomic total(0);
  for (const auto& [lambda, mult] : spec.pairs) total += Cyclotomic(mult) * f(lambda * lambda * scale);
  return total;
}

}  // namespace ncgeom
