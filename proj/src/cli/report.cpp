#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ncgeom/cli.hpp"
#include "ncgeom/curvature.hpp"
#include "ncgeom/dirac.hpp"
#include "ncgeom/errors.hpp"

namespace ncgeom::cli {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string strip_zeros(std::string s) {
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string rational_decimal(const mpq_class& q) {
  const mpz_class scale = 1000000;
  const mpz_class a = abs(q.get_num()) * scale;
  const mpz_class b = q.get_den();
  const mpz_class r = (2 * a + b) / (2 * b);  // round half away from zero
  const mpz_class whole = r / scale;
  std::string frac = mpz_class(r % scale).get_str();
  frac.insert(0, 6 - frac.size(), '0');
  std::string out = (sgn(q) < 0 && r != 0 ? "-" : "") + whole.get_str() + "." + frac;
  return strip_zeros(out);
}

std::string double_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return strip_zeros(buf);
}

std::string monomial_label(const ConjClass& c, Monomial m, const char* sep) {
  const auto& g = c.group();
  return g.name(c.member(m.first)) + sep + g.name(c.member(m.second));
}

struct Context {
  JobSpec spec;
  mpq_class mu;
  FiniteGroup group;
  Calculus calc;
};

FiniteGroup make_group(const JobSpec& spec) {
  if (spec.cayley) return load_cayley(*spec.cayley);
  const std::string prefix = "dihedral:";
  if (spec.group.rfind(prefix, 0) != 0) throw UsageError("unknown group '" + spec.group + "', expected dihedral:N");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(spec.group.substr(prefix.size()), &used);
    if (used != spec.group.size() - prefix.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw UsageError("bad dihedral parameter in '" + spec.group + "'");
  }
  if (n < 3) throw UsageError("dihedral:N needs N >= 3");
  return dihedral(n);
}

Json function_json(const Calculus& calc, const GroupFunction& f) {
  Json out = Json::object();
  if (f.is_constant()) {
    out["constant"] = exact_json(f[0]);
    return out;
  }
  Json values = Json::object();
  for (std::size_t g = 0; g < f.size(); ++g) values[calc.group().name(static_cast<int>(g))] = exact_json(f[g]);
  out["values"] = std::move(values);
  return out;
}

Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(exact_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json two_form_json(const Calculus& calc, const TwoForm& w) {
  Json out = Json::object();
  const auto& basis = calc.two_forms().quotient_basis();
  for (std::size_t q = 0; q < basis.size(); ++q)
    out[monomial_label(calc.conj_class(), basis[q], "^")] = function_json(calc, w.coeffs[q]);
  return out;
}

Json tensor_json(const Calculus& calc, const TensorForm& t) {
  Json out = Json::object();
  const int k = calc.k();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      out[monomial_label(calc.conj_class(), {a, b}, "|")] = function_json(calc, t.coeffs[idx(a * k + b)]);
  return out;
}

Json curvature_tensor_json(const Calculus& calc, const CurvatureTensor& t) {
  Json out = Json::object();
  const int k = calc.k();
  const auto& c = calc.conj_class();
  const auto& basis = calc.two_forms().quotient_basis();
  for (std::size_t q = 0; q < basis.size(); ++q)
    for (int e = 0; e < k; ++e)
      out[monomial_label(c, basis[q], "^") + "|" + c.group().name(c.member(e))] =
          function_json(calc, t.coeffs[q * idx(k) + idx(e)]);
  return out;
}

Json names_json(const FiniteGroup& g, const std::vector<int>& elems) {
  Json out = Json::array();
  for (const int e : elems) out.push_back(g.name(e));
  return out;
}

Json spectrum_json(const Spectrum& spec) {
  Json counts = Json::object();
  Json exact = Json::array();
  for (const auto& [lambda, mult] : spec.pairs) {
    counts[lambda.to_string()] = mult;
    exact.push_back(Json{{"eigenvalue", exact_json(lambda)}, {"multiplicity", mult}});
  }
  return Json{{"multiplicities", counts}, {"exact", exact}, {"dimension", spec.dimension}};
}

Json polynomial_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(exact_json(c));
  return out;
}

bool all_zero(const std::vector<TwoForm>& forms) {
  for (const auto& w : forms)
    if (!w.is_zero()) return false;
  return true;
}

Json calculus_section(const Context& ctx) {
  const auto& calc = ctx.calc;
  const auto& c = calc.conj_class();
  const auto& g = ctx.group;
  const auto& space = calc.two_forms();
  Json out = Json::object();
  out["group"] = Json{{"order", g.order()}, {"elements", g.names()}};

  Json ad = Json::array();
  for (const auto& row : ad_table(c)) {
    Json r = Json::array();
    for (const int p : row) r.push_back(g.name(c.member(p)));
    ad.push_back(std::move(r));
  }
  Json products = Json::array();
  for (const auto& row : class_product_table(c)) products.push_back(names_json(g, row));
  out["class"] = Json{{"members", names_json(g, c.members())},
                      {"cyclic_witness", c.cyclic_witness() ? Json(g.name(*c.cyclic_witness())) : Json(nullptr)},
                      {"ad_table", ad},
                      {"product_table", products},
                      {"product_pattern", matches_product_pattern(c)}};

  Json basis = Json::array();
  for (const auto& m : space.quotient_basis()) basis.push_back(monomial_label(c, m, "^"));
  out["relation_dimension"] = space.relation_basis().size();
  out["two_form_dimension"] = space.dimension();
  out["two_form_basis"] = basis;
  if (space.uses_standard_basis()) {
    out["discrepancies"] = Json::array(
        {Json{{"quantity", "two_form_dimension"}, {"stated", 6}, {"computed", space.dimension()}}});
  }

  Json de = Json::object();
  bool maurer_cartan = true;
  for (int a = 0; a < calc.k(); ++a) {
    const TwoForm d = calc.d(calc.e(a));
    de[g.name(c.member(a))] = two_form_json(calc, d);
    maurer_cartan = maurer_cartan &&
                    d == calc.wedge(calc.theta(), calc.e(a)) + calc.wedge(calc.e(a), calc.theta());
  }
  bool commutator = true;
  for (int x = 0; x < g.order(); ++x) {
    const auto f = GroupFunction::delta(calc.order(), x);
    commutator = commutator && calc.d(f) == calc.scale_right(calc.theta(), f) - calc.scale(f, calc.theta());
  }
  out["maurer_cartan"] = Json{{"de", de},
                              {"de_is_graded_commutator_with_theta", maurer_cartan},
                              {"theta_wedge_theta_zero", calc.wedge(calc.theta(), calc.theta()).is_zero()},
                              {"d_theta_zero", calc.d(calc.theta()).is_zero()},
                              {"df_is_commutator_with_theta_on_deltas", commutator}};
  return out;
}

Json connection_json(const Calculus& calc, const Connection& A) {
  Json out = Json::object();
  const auto& c = calc.conj_class();
  for (int a = 0; a < calc.k(); ++a) {
    Json comp = Json::object();
    for (int b = 0; b < calc.k(); ++b) comp[c.group().name(c.member(b))] = function_json(calc, A.coefficient(a, b));
    out[c.group().name(c.member(a))] = std::move(comp);
  }
  return out;
}

Json connection_section(const Context& ctx) {
  const auto& calc = ctx.calc;
  Json out = Json::object();
  const auto fam = torsion_free_family(calc);
  out["torsion_free_family"] = Json{{"unknowns", fam.unknowns},
                                    {"equations", fam.equations},
                                    {"rank", fam.rank},
                                    {"dimension", fam.directions.size()}};
  const auto scan = constant_regular_scan(calc, ctx.mu);
  Json points = Json::array();
  for (const auto& p : scan.points) points.push_back(Json::array({exact_json(p[0]), exact_json(p[1]), exact_json(p[2])}));
  out["constant_regular_scan"] = Json{{"points", points}, {"free_parameters", scan.free_parameters}};

  const auto lc = levi_civita(calc, ctx.mu);
  const auto reg = regularity_residual(calc, lc);
  out["levi_civita"] = Json{
      {"components", connection_json(calc, lc)},
      {"torsion_zero", all_zero(torsion_residual(calc, lc))},
      {"cotorsion_zero", all_zero(cotorsion_residual(calc, lc, metric(calc.k(), ctx.mu)))},
      {"regular", reg.regular()},
      {"identity_component_zero", reg.identity_component ? Json(reg.identity_component->is_zero()) : Json(nullptr)}};
  return out;
}

Json curvature_section(const Context& ctx) {
  const auto& calc = ctx.calc;
  const auto& c = calc.conj_class();
  const auto lc = levi_civita(calc, ctx.mu);
  const auto F = curvature_forms(calc, lc);
  Json forms = Json::object();
  Json nabla = Json::object();
  Json riem = Json::object();
  bool quadratic_zero = true;
  bool equals_de = true;
  for (int a = 0; a < calc.k(); ++a) {
    const std::string name = c.group().name(c.member(a));
    forms[name] = two_form_json(calc, F.F[idx(a)]);
    quadratic_zero = quadratic_zero && F.quadratic[idx(a)].is_zero();
    equals_de = equals_de && F.F[idx(a)] == calc.d(calc.e(a));
    nabla[name] = tensor_json(calc, covariant_derivative(calc, lc, calc.e(a)));
    riem[name] = curvature_tensor_json(calc, riemann(calc, lc, calc.e(a)));
  }
  bool splits = true;
  for (int q = 0; q < calc.two_forms().dimension(); ++q) {
    TwoForm w = calc.zero_two_form();
    w.coeffs[idx(q)] = calc.constant(1);
    splits = splits && calc.project(lift(calc, Lift::canonical, w)) == w;
  }
  return Json{{"connection", "levi_civita"},
              {"curvature_forms", forms},
              {"quadratic_part_zero", quadratic_zero},
              {"curvature_equals_de", equals_de},
              {"covariant_derivative", nabla},
              {"riemann", riem},
              {"canonical_lift_splits_wedge", splits}};
}

Json ricci_section(const Context& ctx) {
  const auto& calc = ctx.calc;
  const auto lc = levi_civita(calc, ctx.mu);
  Json lcj = Json::object();
  Json solve = Json::object();
  for (const Lift v : {Lift::canonical, Lift::braided}) {
    const auto ric = ricci(calc, lc, v);
    lcj[lift_name(v)] = Json{{"coordinates", tensor_json(calc, ric)}, {"zero", ric.is_zero()}};
    const auto r = ricci_flat_solve(calc, v);
    auto chart_json = [&](const std::optional<ConnectionChart>& ch) -> Json {
      if (!ch) return nullptr;
      return Json{{"alpha", function_json(calc, ch->alpha)},
                  {"beta", function_json(calc, ch->beta)},
                  {"gamma", function_json(calc, ch->gamma)}};
    };
    solve[lift_name(v)] = Json{{"quadratic_part_vanishes", r.quadratic_vanishes},
                               {"unknowns", r.unknowns},
                               {"ricci_equations", r.ricci_equations},
                               {"rank_unconstrained", r.rank_unconstrained},
                               {"rank_constrained", r.rank_constrained},
                               {"feasible_unconstrained", r.feasible_unconstrained},
                               {"feasible_constrained", r.feasible_constrained},
                               {"free_unconstrained", r.feasible_unconstrained ? Json(r.free_unconstrained) : Json(nullptr)},
                               {"free_constrained", r.feasible_constrained ? Json(r.free_constrained) : Json(nullptr)},
                               {"solution", chart_json(r.solution)},
                               {"reference_rank", r.reference_rank},
                               {"reference_solution", chart_json(r.reference_solution)}};
  }
  return Json{{"levi_civita", lcj}, {"ricci_flat_solve", solve}};
}

struct DiracData {
  Representation rep;
  SpinorOperator D;
  std::optional<Spectrum> spec;
};

DiracData dirac_data(const Context& ctx) {
  const auto rep = builtin_rep(ctx.group, "spinor");
  const auto lc = levi_civita(ctx.calc, ctx.mu);
  DiracData out{rep, dirac_operator(ctx.calc, rep, lc, ctx.mu), std::nullopt};
  try {
    out.spec = spectrum_auto(out.D.matrix);
  } catch (const UnsupportedError&) {
  } catch (const IncompleteSpectrumError&) {
  }
  return out;
}

Json dirac_section(const Context& ctx) {
  const auto& calc = ctx.calc;
  const auto& c = calc.conj_class();
  const auto data = dirac_data(ctx);
  const auto& D = data.D.matrix;
  Json out = Json::object();
  out["mu"] = ctx.mu.get_str();
  out["representation"] = data.rep.name;
  out["casimir"] = matrix_json(casimir(data.rep, c, ctx.mu));
  Json gammas = Json::object();
  const auto gs = gamma_matrices(data.rep, c, ctx.mu);
  for (int a = 0; a < calc.k(); ++a) gammas[c.group().name(c.member(a))] = matrix_json(gs[idx(a)]);
  out["gamma"] = gammas;

  const auto term = connection_term(calc, data.rep, levi_civita(calc, ctx.mu), ctx.mu).matrix;
  const Cyclotomic scalar = term(0, 0);
  out["connection_term_scalar"] =
      term == ExactMatrix::identity(term.rows()) * scalar ? exact_json(scalar) : Json(nullptr);
  out["dimension"] = D.rows();
  out["hermitian"] = D.is_hermitian();
  out["trace"] = exact_json(D.trace());
  out["trace_square"] = exact_json((D * D).trace());
  out["cube_equals_9D"] = power(D, 3) == D * Cyclotomic(9);
  const auto mp = minimal_polynomial_check(D);
  out["minimal_polynomial"] = polynomial_json(mp.minimal);
  out["minimal_polynomial_annihilates"] = mp.annihilates;
  out["spectrum"] = data.spec ? spectrum_json(*data.spec) : Json(nullptr);

  const auto pres = find_dihedral_presentation(ctx.group);
  if (pres && ctx.mu == 0 && c.size() == 3) {
    // Blocks [[-D0, D2], [D1, -D0]] with D1 = Σ_a ζ^k R_a for a = s r^k.
    const std::size_t n = calc.order();
    const ExactMatrix D0 = translation_sum(calc);
    ExactMatrix D1(n, n);
    for (int a = 0; a < 3; ++a) {
      const int k = pres->position[idx(c.member(a))] % pres->n;
      D1 += Cyclotomic::zeta(pres->n, k) * right_translation(ctx.group, c.member(a));
    }
    const ExactMatrix D2 = D1.adjoint().transpose();
    out["block_form_matches"] = spinor_block(data.D, 0, 0) == Cyclotomic(-1) * D0 &&
                                spinor_block(data.D, 1, 1) == Cyclotomic(-1) * D0 &&
                                spinor_block(data.D, 1, 0) == D1 && spinor_block(data.D, 0, 1) == D2;

    const auto cat = eigenmode_catalog(calc, data.D);
    Json entries = Json::array();
    for (const auto& e : cat.entries)
      entries.push_back(Json{{"candidate", e.label},
                             {"expected", exact_json(e.expected)},
                             {"nonzero", e.nonzero},
                             {"eigenvalue", e.eigenvalue ? exact_json(*e.eigenvalue) : Json(nullptr)},
                             {"verified", e.verified()}});
    Json spans = Json::array();
    for (const auto& s : cat.spans)
      spans.push_back(Json{{"eigenvalue", exact_json(s.eigenvalue)},
                           {"span", s.span},
                           {"multiplicity", s.multiplicity},
                           {"gap", s.gap()}});
    out["eigenmode_catalog"] = Json{{"entries", entries}, {"spans", spans}};

    const auto m = sign_multiplication(calc, data.rep.dim);
    out["sign_multiplication_anticommutes"] = (D * m + m * D).is_zero();
  }

  Json chir = Json::object();
  try {
    const auto I = ExactMatrix::identity(D.rows());
    const auto g1 = chirality(D, KernelInvolution::identity);
    const auto g2 = chirality(D, KernelInvolution::negated);
    chir["exists"] = true;
    chir["involution"] = g1 * g1 == I && g2 * g2 == I;
    chir["anticommutes"] = (g1 * D + D * g1).is_zero() && (g2 * D + D * g2).is_zero();
    chir["unique"] = g1 == g2;
  } catch (const PreconditionError& e) {
    chir["exists"] = false;
    chir["reason"] = e.what();
  }
  out["chirality"] = chir;
  return out;
}

Json wave_section(const Context& ctx) {
  const auto box = wave_operator(ctx.calc, ctx.mu);
  Json out = Json::object();
  out["mu"] = ctx.mu.get_str();
  out["hermitian"] = box.is_hermitian();
  const std::size_t n = ctx.calc.order();
  const ExactMatrix displayed = Cyclotomic(2) * translation_sum(ctx.calc) - ExactMatrix::identity(n) * Cyclotomic(6);
  out["equals_2D0_minus_6"] = box == displayed;
  out["minimal_polynomial"] = polynomial_json(minimal_polynomial(box));
  try {
    out["spectrum"] = spectrum_json(spectrum_auto(box));
  } catch (const PreconditionError&) {
    out["spectrum"] = nullptr;
  }
  return out;
}

Polynomial parse_polynomial(const std::string& text) {
  std::vector<Cyclotomic> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.emplace_back(parse_rational(item));
  if (coeffs.empty()) throw UsageError("empty polynomial");
  return Polynomial(coeffs);
}

Json spectral_action_section(const Context& ctx) {
  const Polynomial f = parse_polynomial(ctx.spec.poly);
  const mpq_class cutoff = parse_rational(ctx.spec.cutoff);
  if (cutoff <= 0) throw UsageError("cutoff must be positive");
  const auto data = dirac_data(ctx);
  if (!data.spec) throw IncompleteSpectrumError("Dirac spectrum is not certified over the rationals");
  return Json{{"mu", ctx.mu.get_str()},
              {"polynomial", polynomial_json(f)},
              {"cutoff", exact_json(Cyclotomic(cutoff))},
              {"spectrum", spectrum_json(*data.spec)},
              {"value", exact_json(spectral_action(*data.spec, f, cutoff))}};
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  std::string t;
  for (const char ch : text)
    if (ch != ' ') t += ch;
  const auto slash = t.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string num = t.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw UsageError("not a rational number: '" + text + "'");
  mpq_class q(mpz_class(num[0] == '+' ? num.substr(1) : num), mpz_class(den));
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

FiniteGroup parse_cayley(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("Cayley file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("names") || !j.contains("table")) {
    throw ValidationError("Cayley file needs \"names\" and \"table\"");
  }
  try {
    return FiniteGroup(j.at("names").get<std::vector<std::string>>(), j.at("table").get<std::vector<std::vector<int>>>());
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("Cayley file has the wrong shape: ") + e.what());
  }
}

FiniteGroup load_cayley(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read Cayley file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_cayley(ss.str());
}

std::string export_cayley(const FiniteGroup& g) {
  std::string out = "{\n  \"names\": " + Json(g.names()).dump() + ",\n  \"table\": [\n";
  const auto& table = g.table();
  for (std::size_t r = 0; r < table.size(); ++r)
    out += "    " + Json(table[r]).dump() + (r + 1 < table.size() ? ",\n" : "\n");
  out += "  ]\n}\n";
  return out;
}

std::string decimal_string(const Cyclotomic& value) {
  if (value.is_rational()) return rational_decimal(value.rational_value());
  const auto z = value.to_complex();
  const std::string re = double_decimal(z.real());
  const std::string im = double_decimal(z.imag());
  if (im == "0") return re;
  const std::string sign = im[0] == '-' ? "" : "+";
  return (re == "0" ? "" : re + sign) + im + "i";
}

Json exact_json(const Cyclotomic& value) {
  mpz_class den = 1;
  for (const auto& c : value.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Json coeffs = Json::array();
  for (const auto& c : value.coeffs()) coeffs.push_back(integer_json(mpz_class(c.get_num() * (den / c.get_den()))));
  Json out = Json::object();
  out["num"] = value.is_rational() ? integer_json(value.rational_value().get_num()) : Json(nullptr);
  out["den"] = integer_json(den);
  out["zeta_order"] = value.order();
  out["coeffs"] = coeffs;
  out["decimal"] = decimal_string(value);
  return out;
}

Json build_report(const JobSpec& spec) {
  bool known = false;
  for (const char* c : kCommands) known = known || spec.command == c;
  if (!known) throw UsageError("unknown command '" + spec.command + "'");
  const mpq_class mu = parse_rational(spec.mu);
  FiniteGroup group = make_group(spec);
  const int rep = group.find(spec.class_label);
  if (rep == group.identity()) throw PreconditionError("the identity class is trivial");
  Calculus calc(conjugacy_class(group, rep));
  metric(calc.k(), mu);  // singular metric check
  const Context ctx{spec, mu, group, calc};

  Json report = Json::object();
  report["input"] = Json{{"group", spec.cayley ? "cayley:" + *spec.cayley : spec.group},
                         {"class", spec.class_label},
                         {"mu", mu.get_str()},
                         {"command", spec.command}};
  const auto& cmd = spec.command;
  const bool all = cmd == "report-all";
  if (all || cmd == "calculus") report["calculus"] = calculus_section(ctx);
  if (all || cmd == "connection") report["connection"] = connection_section(ctx);
  if (all || cmd == "curvature") report["curvature"] = curvature_section(ctx);
  if (all || cmd == "ricci") report["ricci"] = ricci_section(ctx);
  if (all || cmd == "dirac") report["dirac"] = dirac_section(ctx);
  if (all || cmd == "wave") report["wave"] = wave_section(ctx);
  if (all || cmd == "spectral-action") report["spectral_action"] = spectral_action_section(ctx);
  return report;
}

RunResult run(const JobSpec& spec) {
  RunResult res;
  try {
    const Json report = build_report(spec);
    res.report = (spec.pretty ? report.dump(2) : report.dump()) + "\n";
  } catch (const UsageError& e) {
    return {kUsage, "", std::string("usage error: ") + e.what()};
  } catch (const ValidationError& e) {
    return {kValidation, "", std::string("validation error: ") + e.what()};
  } catch (const NonCyclicClassError& e) {
    return {kPrecondition, "", std::string("non-cyclic class: ") + e.what()};
  } catch (const SingularMetricError& e) {
    return {kPrecondition, "", std::string("singular metric: ") + e.what()};
  } catch (const PreconditionError& e) {
    return {kPrecondition, "", std::string("precondition failed: ") + e.what()};
  } catch (const std::exception& e) {
    return {kInternal, "", std::string("internal error: ") + e.what()};
  }
  if (spec.output && !spec.output->empty()) {
    std::ofstream out(*spec.output, std::ios::binary);
    if (!out) return {kUsage, "", "cannot write '" + *spec.output + "'"};
    out << res.report;
  }
  return res;
}

}  // namespace ncgeom::cli
