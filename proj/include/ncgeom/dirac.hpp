#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncgeom/calculus.hpp"
#include "ncgeom/connection.hpp"
#include "ncgeom/polynomial.hpp"

namespace ncgeom {

/// ρ(C) = Σ_{a,b} η⁻¹_ab ρ(a - e) ρ(b - e). Throws SingularMetricError.
ExactMatrix casimir(const Representation& rep, const ConjClass& c, const mpq_class& mu);

/// γ_a = Σ_b η⁻¹_ab ρ(b - e), indexed by class position.
std::vector<ExactMatrix> gamma_matrices(const Representation& rep, const ConjClass& c, const mpq_class& mu);

/// Operator on spinor fields W ⊗ C(G). Coordinate i*|G| + g is component i
/// at group element g.
struct SpinorOperator {
  ExactMatrix matrix;
  int spinor_dim = 0;
  int group_order = 0;

  std::size_t dimension() const { return matrix.rows(); }
};

/// Pointwise Σ_{a,b} A_a^b γ_b τ^a with τ^a = ρ(a⁻¹) - id.
SpinorOperator connection_term(const Calculus& calc, const Representation& rep, const Connection& A,
                               const mpq_class& mu);

/// D = Σ_a γ_a ⊗ (R_a - id) minus connection_term.
SpinorOperator dirac_operator(const Calculus& calc, const Representation& rep, const Connection& A,
                              const mpq_class& mu);

/// Blocks (i, j) of size |G| of a spinor operator.
ExactMatrix spinor_block(const SpinorOperator& op, int i, int j);

struct Spectrum {
  /// (eigenvalue, multiplicity) with positive multiplicities, in candidate order.
  std::vector<std::pair<Cyclotomic, int>> pairs;
  std::size_t dimension = 0;

  int multiplicity(const Cyclotomic& lambda) const;
  int total() const;
  bool complete() const { return total() == static_cast<int>(dimension); }
};

/// Multiplicity of each candidate as the exact nullity of M - λ id. Throws
/// IncompleteSpectrumError when the multiplicities fall short of the dimension.
Spectrum spectrum(const ExactMatrix& m, const std::vector<Cyclotomic>& candidates);

/// Candidates from the rational roots of the minimal polynomial, ascending.
/// Throws UnsupportedError when a root is not rational.
Spectrum spectrum_auto(const ExactMatrix& m);

struct MinimalPolynomialCheck {
  Polynomial minimal;
  /// p(M) = 0, evaluated exactly.
  bool annihilates = false;
  /// Distinct rational roots with multiplicity in the minimal polynomial, when all coefficients are rational.
  std::optional<std::vector<std::pair<mpq_class, int>>> roots;
};

MinimalPolynomialCheck minimal_polynomial_check(const ExactMatrix& m);

/// □ = -Σ_{a,b} η⁻¹_ab (R_a - id)(R_b - id) on C(G).
ExactMatrix wave_operator(const Calculus& calc, const mpq_class& mu = 0);

/// Σ_a R_a.
ExactMatrix translation_sum(const Calculus& calc);

/// Spinor field (first, second) in the component-major layout.
ExactVector spinor(const GroupFunction& first, const GroupFunction& second);

/// Matrix element ρ(·)_{ij} as a function on the group.
GroupFunction matrix_element(const Representation& rep, int i, int j);

/// All matrix-element functions of the irreducibles, labelled name[i][j].
std::vector<std::pair<std::string, GroupFunction>> matrix_element_functions(const FiniteGroup& g);

struct CatalogEntry {
  std::string label;
  ExactVector vector;
  Cyclotomic expected;
  bool nonzero = false;
  /// D v = λ v for some λ.
  std::optional<Cyclotomic> eigenvalue;
  bool verified() const { return eigenvalue && *eigenvalue == expected; }
};

struct CatalogSpan {
  Cyclotomic eigenvalue;
  /// Rank of the verified candidates with this eigenvalue.
  int span = 0;
  /// Nullity-certified multiplicity.
  int multiplicity = 0;
  int gap() const { return multiplicity - span; }
};

struct EigenmodeCatalog {
  std::vector<CatalogEntry> entries;
  std::vector<CatalogSpan> spans;
};

/// Candidate eigenmodes of the spinor Dirac operator at μ = 0 built from
/// matrix elements ρ_kl of the spinor representation and ρ̃_kl of the sign2
/// representation (indices from 0, ω = ζ_n):
///   (D₁ρ_kl, 0), (0, D₂ρ_kl) with expected eigenvalue 0;
///   (ρ̃_k0, 0), (0, ρ̃_k0) with +3 and (ρ̃_k1, 0), (0, ρ̃_k1) with -3;
///   (φ, ωR_tφ) with +3 and (φ, R_xφ) with -3 for φ = ρ_k1;
///   (ρ_k1, ρ_k0) with +3 and (ρ_k1, -ρ_k0) with -3, and their images
///   under multiplication by ρ̃_00 with the opposite sign.
/// Needs a three-member class with a dihedral presentation; throws
/// PreconditionError otherwise.
EigenmodeCatalog eigenmode_catalog(const Calculus& calc, const SpinorOperator& D);

enum class KernelInvolution { identity, negated, swap };

/// γ with γ² = id and γD + Dγ = 0, from an exact eigenbasis: basis vectors of
/// the ±λ eigenspaces are exchanged pairwise and the kernel carries the chosen
/// involution (swap exchanges consecutive kernel basis vectors). Throws
/// PreconditionError when the spectrum is not symmetric about 0 or D is not
/// diagonalizable over its rational eigenvalues.
ExactMatrix chirality(const ExactMatrix& D, KernelInvolution kernel_action = KernelInvolution::identity);

/// Multiplication by ρ̃_00 (the sign of the reflection part) on every spinor component.
ExactMatrix sign_multiplication(const Calculus& calc, int spinor_dim);

/// Σ_λ mult(λ) f(λ²/Λ²). Throws IncompleteSpectrumError unless the spectrum is complete.
Cyclotomic spectral_action(const Spectrum& spec, const Polynomial& f, const mpq_class& cutoff);

}  // namespace ncgeom
