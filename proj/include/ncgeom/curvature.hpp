#pragma once

#include <optional>
#include <vector>

#include "ncgeom/calculus.hpp"
#include "ncgeom/connection.hpp"

namespace ncgeom {

struct CurvatureForms {
  /// F_a per class member.
  std::vector<TwoForm> F;
  /// Σ_{cd=a} A_c∧A_d - Σ_c (A_c∧A_a + A_a∧A_c), already included in F.
  std::vector<TwoForm> quadratic;
};

/// F_a = dA_a + Σ_{cd=a} A_c∧A_d - Σ_c (A_c∧A_a + A_a∧A_c).
CurvatureForms curvature_forms(const Calculus& calc, const Connection& A);

/// ∇α = Σ_c ∂^c α^a e_c⊗e_a - α^a Σ_b A_b ⊗ (e_{b⁻¹ab} - e_a).
TensorForm covariant_derivative(const Calculus& calc, const Connection& A, const OneForm& alpha);

/// Element of Ω²⊗Ω¹: coeffs[q*k + c] multiplies ω_q ⊗ e_c, ω_q the quotient basis.
struct CurvatureTensor {
  std::vector<GroupFunction> coeffs;

  bool is_zero() const;
  friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) { return a.coeffs == b.coeffs; }
};

/// ℛα = α^a Σ_b F_b ⊗ (e_{b⁻¹ab} - e_a).
CurvatureTensor riemann(const Calculus& calc, const Connection& A, const OneForm& alpha);

/// ω ⊗ α with the coefficients of α moved left through ω.
CurvatureTensor tensor_two_one(const Calculus& calc, const TwoForm& omega, const OneForm& alpha);

enum class Lift {
  /// i(e_a∧e_b) = e_a⊗e_b - ½ Σ_{cd=ab, c≠d} e_c⊗e_d, i(e_a∧e_a) = 0.
  canonical,
  /// i′(e_a∧e_b) = e_a⊗e_b - e_{aba⁻¹}⊗e_a.
  braided,
};

const char* lift_name(Lift variant);

/// Left-linear lift of a 2-form, applied to the quotient basis monomials.
/// The canonical variant satisfies ∧∘i = id.
TensorForm lift(const Calculus& calc, Lift variant, const TwoForm& omega);

/// Σ_c Σ_{a,b} i(F_c)^{ab} e_b ⊗ (e_{c⁻¹ac} - e_a).
TensorForm ricci(const Calculus& calc, const Connection& A, Lift variant);

/// Ricci = 0 on the three-member chart, posed as an exact linear system in the
/// 3|G| values of (α, β, γ). Rows are the k²|G| Ricci coordinates of the
/// linear part dA; the constraint α + β + γ = -1 adds |G| rows.
struct RicciFlatResult {
  Lift variant = Lift::canonical;
  /// The quadratic curvature part vanishes on the whole constrained chart.
  bool quadratic_vanishes = false;
  std::size_t unknowns = 0;
  std::size_t ricci_equations = 0;
  std::size_t rank_unconstrained = 0;
  std::size_t rank_constrained = 0;
  bool feasible_unconstrained = false;
  bool feasible_constrained = false;
  /// Kernel dimension of the solution set; meaningful when feasible.
  std::size_t free_unconstrained = 0;
  std::size_t free_constrained = 0;
  /// One solution of the constrained system, when feasible.
  std::optional<ConnectionChart> solution;
  /// Rank of reference_diagonal_system together with the constraint.
  std::size_t reference_rank = 0;
  /// Their solution when unique.
  std::optional<ConnectionChart> reference_solution;
};

/// Throws PreconditionError unless the class has three members.
RicciFlatResult ricci_flat_solve(const Calculus& calc, Lift variant = Lift::canonical);

/// Reference linear system on the chart for the diagonal Ricci coordinates,
/// three equations per group point with unknown index v*|G| + g over
/// (α, β, γ). The first reads
///   -2α + β + γ + ∂^tβ + ∂^tγ - 2∂^xβ + ∂^xα + ∂^yα - 2∂^yγ = 0.
/// Used as an independent cross-check of ricci_flat_solve.
ExactMatrix reference_diagonal_system(const Calculus& calc);

}  // namespace ncgeom
