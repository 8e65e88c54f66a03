#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ncgeom/calculus.hpp"
#include "ncgeom/metric.hpp"

namespace ncgeom {

/// Functions (α, β, γ) of the three-member chart with α + β + γ = -1.
struct ConnectionChart {
  GroupFunction alpha;
  GroupFunction beta;
  GroupFunction gamma;
};

/// Spin connection given by component 1-forms A_a, one per class member.
struct Connection {
  std::vector<OneForm> components;
  std::optional<ConnectionChart> chart;

  /// A_a^b, the left coefficient of e_b in A_a.
  const GroupFunction& coefficient(int a, int b) const {
    return components[static_cast<std::size_t>(a)].coeffs[static_cast<std::size_t>(b)];
  }
  bool operator==(const Connection& rhs) const { return components == rhs.components; }
};

/// Entry (a, b) of the coefficient matrix is α, γ or β as (a + b) mod 3 is
/// 0, 1 or 2, plus 1 on the diagonal. Needs a three-member class; throws
/// PreconditionError unless α + β + γ = -1 pointwise.
Connection connection_from_chart(const Calculus& calc, const GroupFunction& alpha, const GroupFunction& beta,
                                 const GroupFunction& gamma);

/// The same pattern without the constraint check.
Connection connection_from_chart_unconstrained(const Calculus& calc, const GroupFunction& alpha,
                                               const GroupFunction& beta, const GroupFunction& gamma);

/// A_a = Σ_b e_b right[b][a], coefficients on the right.
Connection connection_from_right_coefficients(const Calculus& calc,
                                              const std::vector<std::vector<GroupFunction>>& right);

Connection zero_connection(const Calculus& calc);

OneForm sum_components(const Calculus& calc, const Connection& A);

/// d e_a + Σ_b A_b ∧ (e_{b⁻¹ab} - e_a) per member a.
std::vector<TwoForm> torsion_residual(const Calculus& calc, const Connection& A);

struct TorsionFreeFamily {
  Connection particular;
  /// Homogeneous directions, each stored as a connection-shaped difference.
  std::vector<Connection> directions;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
};

/// Exact solution of the zero-torsion system over all k²|G| coefficient
/// values. Throws InternalError if the system is infeasible.
TorsionFreeFamily torsion_free_family(const Calculus& calc);

/// Linear map v ↦ torsion residual, restricted to the equations of the
/// listed members; columns index A_a^b(g) at (a*k + b)*|G| + g.
ExactMatrix torsion_system(const Calculus& calc, const std::vector<int>& members);

/// d e_a + Σ_b e_{bab⁻¹} ∧ A_b per member a. The η-dependence cancels for
/// Ad-invariant η, so the metric only fixes the admissible μ. Throws
/// PreconditionError unless Σ_a A_a = 0.
std::vector<TwoForm> cotorsion_residual(const Calculus& calc, const Connection& A, const Metric& m);

struct RegularityResidual {
  /// Σ_{ab=g} A_a ∧ A_b for every g outside C ∪ {e} with a nonempty pair set.
  std::vector<std::pair<int, TwoForm>> off_class;
  /// The same sum at g = e; reported, not part of the condition.
  std::optional<TwoForm> identity_component;

  bool regular() const;
};

RegularityResidual regularity_residual(const Calculus& calc, const Connection& A);

/// A_a = e_a - θ/3 after checking zero torsion, cotorsion and regularity.
/// Throws PreconditionError for classes without the three-member product
/// pattern and InternalError if a residual is nonzero.
Connection levi_civita(const Calculus& calc, const mpq_class& mu);

struct ConstantScanResult {
  /// Solutions (α, β, γ) with constant entries.
  std::vector<std::array<Cyclotomic, 3>> points;
  /// 2 when every point of the plane α + β + γ = -1 solves the system.
  int free_parameters = 0;
};

/// All constant chart points with zero torsion, cotorsion and (off-class)
/// regularity residual. Throws UnsupportedError when the quadratic system has
/// no linear consequence or non-rational roots.
ConstantScanResult constant_regular_scan(const Calculus& calc, const mpq_class& mu = 0);

}  // namespace ncgeom
