#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncgeom/matrix.hpp"

namespace ncgeom {

/// Finite group given by a Cayley table. Index 0 is the identity.
///
/// Copies share the immutable table.
class FiniteGroup {
 public:
  /// Validates the identity law, the Latin-square property and (for orders
  /// up to kAssociativityCheckLimit) associativity. Throws ValidationError
  /// naming the first violated axiom.
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table);

  static constexpr int kAssociativityCheckLimit = 24;

  int order() const;
  int identity() const { return 0; }
  const std::vector<std::string>& names() const;
  const std::string& name(int g) const;
  const std::vector<std::vector<int>>& table() const;
  /// Throws ValidationError for an unknown label.
  int find(const std::string& label) const;

  int mul(int g, int h) const;
  int inv(int g) const;
  /// a g a⁻¹
  int conj(int a, int g) const;
  int element_order(int g) const;

  friend bool operator==(const FiniteGroup& lhs, const FiniteGroup& rhs);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Elements e, r, ..., r^(n-1), s, sr, ..., sr^(n-1); s^a r^i has index a*n + i.
FiniteGroup dihedral(int n);

/// Generators r (order n ≥ 3) and s (involution, s r s = r⁻¹) of a group of
/// order 2n, with element[a*n + i] the index of s^a r^i.
struct DihedralPresentation {
  int n;
  int r;
  int s;
  std::vector<int> element;
  std::vector<int> position;  // inverse of element
};

/// Smallest-index r of order |G|/2, then smallest-index s. std::nullopt when
/// G has no such presentation.
std::optional<DihedralPresentation> find_dihedral_presentation(const FiniteGroup& g);

class ConjClass {
 public:
  ConjClass(FiniteGroup group, std::vector<int> members, std::optional<int> witness);

  const FiniteGroup& group() const { return group_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  int member(int i) const { return members_[static_cast<std::size_t>(i)]; }
  /// Position of g in members(), or -1.
  int position(int g) const;
  bool contains(int g) const { return position(g) >= 0; }
  const std::optional<int>& cyclic_witness() const { return witness_; }

 private:
  FiniteGroup group_;
  std::vector<int> members_;
  std::optional<int> witness_;
};

/// Orbit of g under conjugation. For a cyclic class the members are ordered
/// witness first, then the Ad_t-orbit of the smallest remaining index; for
/// other classes ascending by index. With D6 and g = sr this yields (sr, sr³, sr⁵).
ConjClass conjugacy_class(const FiniteGroup& g, int element);

struct CyclicityResult {
  bool cyclic = false;
  std::optional<int> witness;
};

/// Throws PreconditionError when the class has fewer than two members.
CyclicityResult is_cyclic_class(const ConjClass& c);

/// Entry (i, j) is the position of Ad_{c_i}(c_j).
std::vector<std::vector<int>> ad_table(const ConjClass& c);

/// Entry (i, j) is the group element c_i c_j.
std::vector<std::vector<int>> class_product_table(const ConjClass& c);

/// True for a 3-member class whose product table has the circulant shape
/// diag t², superdiagonal yt, subdiagonal xt, with no product in the class.
bool matches_product_pattern(const ConjClass& c);

/// Matrix of R_a f(g) = f(ga) in the delta basis: M(g, ga) = 1.
ExactMatrix right_translation(const FiniteGroup& g, int a);

struct Representation {
  std::string name;
  int dim = 0;
  std::vector<ExactMatrix> matrices;  // indexed by group element

  const ExactMatrix& operator()(int g) const { return matrices[static_cast<std::size_t>(g)]; }
};

bool is_homomorphism(const FiniteGroup& g, const Representation& rep);
bool is_unitary(const FiniteGroup& g, const Representation& rep);

/// "spinor": ρ(r) = diag(ζ_n, ζ_n⁻¹), ρ(s) = antidiag(1, 1).
/// "sign2":  ρ̃(r) = id, ρ̃(s) = diag(-1, 1).
/// Available on any group with a dihedral presentation; throws
/// UnsupportedError otherwise and ValidationError for an unknown name.
Representation builtin_rep(const FiniteGroup& g, const std::string& name);

/// Complete list of irreducibles from the dihedral catalog: the one-dimensional
/// characters first, then ρ_j(r) = diag(ζ^j, ζ^-j) for 1 ≤ j < n/2.
std::vector<Representation> irreducibles(const FiniteGroup& g);

}  // namespace ncgeom
