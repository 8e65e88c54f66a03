#pragma once

#include <utility>
#include <vector>

#include "ncgeom/group.hpp"
#include "ncgeom/linalg.hpp"

namespace ncgeom {

/// Function on a finite group, one value per element index.
class GroupFunction {
 public:
  GroupFunction() = default;
  explicit GroupFunction(std::size_t order) : values_(order) {}
  explicit GroupFunction(ExactVector values) : values_(std::move(values)) {}

  static GroupFunction constant(std::size_t order, const Cyclotomic& c) { return GroupFunction(ExactVector(order, c)); }
  static GroupFunction delta(std::size_t order, int g);

  std::size_t size() const { return values_.size(); }
  const Cyclotomic& operator[](std::size_t g) const { return values_[g]; }
  Cyclotomic& operator[](std::size_t g) { return values_[g]; }
  const ExactVector& values() const { return values_; }
  bool is_zero() const { return is_zero_vector(values_); }
  bool is_constant() const;

  GroupFunction& operator+=(const GroupFunction& rhs);
  GroupFunction& operator-=(const GroupFunction& rhs);
  GroupFunction& operator*=(const GroupFunction& rhs);
  GroupFunction& operator*=(const Cyclotomic& rhs);
  GroupFunction operator-() const;

  friend GroupFunction operator+(GroupFunction a, const GroupFunction& b) { return a += b; }
  friend GroupFunction operator-(GroupFunction a, const GroupFunction& b) { return a -= b; }
  friend GroupFunction operator*(GroupFunction a, const GroupFunction& b) { return a *= b; }
  friend GroupFunction operator*(GroupFunction a, const Cyclotomic& c) { return a *= c; }
  friend GroupFunction operator*(const Cyclotomic& c, GroupFunction a) { return a *= c; }
  friend bool operator==(const GroupFunction& a, const GroupFunction& b) { return a.values_ == b.values_; }

 private:
  ExactVector values_;
};

/// Σ_a coeffs[a] e_a with coefficients on the left; a runs over class positions.
struct OneForm {
  std::vector<GroupFunction> coeffs;

  bool is_zero() const;
  OneForm& operator+=(const OneForm& rhs);
  OneForm& operator-=(const OneForm& rhs);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  friend bool operator==(const OneForm& a, const OneForm& b) { return a.coeffs == b.coeffs; }
};

/// Element of Ω¹ ⊗ Ω¹: coeffs[a*k + b] multiplies e_a ⊗ e_b.
struct TensorForm {
  std::vector<GroupFunction> coeffs;

  bool is_zero() const;
  TensorForm& operator+=(const TensorForm& rhs);
  TensorForm& operator-=(const TensorForm& rhs);
  friend TensorForm operator+(TensorForm a, const TensorForm& b) { return a += b; }
  friend TensorForm operator-(TensorForm a, const TensorForm& b) { return a -= b; }
  friend bool operator==(const TensorForm& a, const TensorForm& b) { return a.coeffs == b.coeffs; }
};

/// Element of Ω² in the coordinates of a fixed quotient basis.
struct TwoForm {
  std::vector<GroupFunction> coeffs;

  bool is_zero() const;
  TwoForm& operator+=(const TwoForm& rhs);
  TwoForm& operator-=(const TwoForm& rhs);
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
  friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.coeffs == b.coeffs; }
};

/// Pair of class positions (a, b) standing for e_a ∧ e_b or e_a ⊗ e_b.
using Monomial = std::pair<int, int>;

/// Ψ(e_a ⊗ e_b) = e_{aba⁻¹} ⊗ e_a on class positions.
Monomial braiding(const ConjClass& c, Monomial ab);

/// Degree-two part of the exterior algebra: Ω¹⊗Ω¹ modulo ker(id - Ψ).
class TwoFormSpace {
 public:
  /// Throws NonCyclicClassError unless the class is cyclic.
  explicit TwoFormSpace(const ConjClass& c);

  int class_size() const { return k_; }
  int dimension() const { return static_cast<int>(quotient_basis_.size()); }
  /// Ψ as a k²×k² permutation matrix, column a*k+b.
  const ExactMatrix& braiding_matrix() const { return psi_; }
  const std::vector<ExactVector>& relation_basis() const { return relations_; }
  const std::vector<Monomial>& quotient_basis() const { return quotient_basis_; }
  /// dimension × k² matrix sending monomial coordinates to quotient coordinates.
  const ExactMatrix& reduction() const { return reduction_; }
  /// True when the fixed four-element basis for Table-2-type classes was used.
  bool uses_standard_basis() const { return standard_basis_; }

  /// Quotient coordinates of e_a ∧ e_b.
  ExactVector reduce(Monomial ab) const;
  /// Constant-coefficient projection of a k²-vector of monomial coordinates.
  ExactVector reduce(const ExactVector& monomial_coords) const;

 private:
  int k_;
  ExactMatrix psi_;
  std::vector<ExactVector> relations_;
  std::vector<Monomial> quotient_basis_;
  ExactMatrix reduction_;
  bool standard_basis_ = false;
};

/// First-order bicovariant calculus of a cyclic conjugacy class, together
/// with its degree-two exterior algebra.
class Calculus {
 public:
  explicit Calculus(ConjClass c);

  const ConjClass& conj_class() const { return class_; }
  const FiniteGroup& group() const { return class_.group(); }
  const TwoFormSpace& two_forms() const { return space_; }
  int k() const { return class_.size(); }
  std::size_t order() const { return static_cast<std::size_t>(class_.group().order()); }
  /// Position of b⁻¹ a b for class positions a, b.
  int adjoint_inverse(int a, int b) const;
  /// Position of a b a⁻¹.
  int adjoint(int a, int b) const;

  /// R_a(f)(g) = f(g c_a) for the class member at position a.
  GroupFunction translate(int a, const GroupFunction& f) const;
  /// ∂^a f = R_a f - f.
  GroupFunction partial(int a, const GroupFunction& f) const;

  GroupFunction zero_function() const { return GroupFunction(order()); }
  GroupFunction constant(const Cyclotomic& c) const { return GroupFunction::constant(order(), c); }
  OneForm zero_one_form() const;
  TwoForm zero_two_form() const;
  TensorForm zero_tensor() const;

  /// Maurer-Cartan form e_a.
  OneForm e(int a) const;
  /// θ = Σ_a e_a.
  OneForm theta() const;

  OneForm scale(const GroupFunction& f, const OneForm& alpha) const;
  /// α·f = Σ α^a R_a(f) e_a.
  OneForm scale_right(const OneForm& alpha, const GroupFunction& f) const;
  TwoForm scale(const GroupFunction& f, const TwoForm& omega) const;
  TensorForm scale(const GroupFunction& f, const TensorForm& t) const;

  /// df = Σ_a (∂^a f) e_a.
  OneForm d(const GroupFunction& f) const;
  /// d(f e_a) = df ∧ e_a + f (θ∧e_a + e_a∧θ).
  TwoForm d(const OneForm& alpha) const;

  /// α ⊗ β with coefficients moved left: (α⊗β)^{ab} = α^a R_a(β^b).
  TensorForm tensor(const OneForm& alpha, const OneForm& beta) const;
  TwoForm project(const TensorForm& t) const;
  TwoForm wedge(const OneForm& alpha, const OneForm& beta) const;

 private:
  ConjClass class_;
  TwoFormSpace space_;
  std::vector<std::vector<int>> right_mul_;  // right_mul_[a][g] = g c_a
  std::vector<std::vector<int>> adjoint_;    // adjoint_[a][b] = pos(a b a⁻¹)
  std::vector<TwoForm> de_;
};

}  // namespace ncgeom
