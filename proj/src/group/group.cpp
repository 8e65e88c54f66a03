#include "ncgeom/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ncgeom/errors.hpp"

namespace ncgeom {

struct FiniteGroup::Data {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;
  std::vector<int> inverse;
};

namespace {

[[noreturn]] void fail(const std::string& message) { throw ValidationError(message); }

void validate(const std::vector<std::string>& names, const std::vector<std::vector<int>>& table) {
  const std::size_t n = names.size();
  if (n == 0) fail("group must have at least one element");
  if (table.size() != n) fail("table has " + std::to_string(table.size()) + " rows for " + std::to_string(n) + " names");
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) fail("element names must be non-empty");
    if (!seen.insert(name).second) fail("duplicate element name '" + name + "'");
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) fail("table row " + std::to_string(g) + " has wrong length");
    for (int x : table[g]) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) fail("table entry " + std::to_string(x) + " out of range");
    }
  }

  for (std::size_t g = 0; g < n; ++g) {
    if (table[0][g] != static_cast<int>(g) || table[g][0] != static_cast<int>(g)) {
      fail("identity law fails: index 0 is not an identity for " + names[g]);
    }
  }

  for (std::size_t g = 0; g < n; ++g) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t h = 0; h < n; ++h) {
      if (row[static_cast<std::size_t>(table[g][h])]) fail("Latin square fails: row " + names[g] + " repeats an entry");
      if (col[static_cast<std::size_t>(table[h][g])]) fail("Latin square fails: column " + names[g] + " repeats an entry");
      row[static_cast<std::size_t>(table[g][h])] = true;
      col[static_cast<std::size_t>(table[h][g])] = true;
    }
  }

  if (n > static_cast<std::size_t>(FiniteGroup::kAssociativityCheckLimit)) return;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const int left = table[static_cast<std::size_t>(table[a][b])][c];
        const int right = table[a][static_cast<std::size_t>(table[b][c])];
        if (left != right) {
          std::ostringstream os;
          os << "associativity fails for (" << names[a] << ", " << names[b] << ", " << names[c] << "): ("
             << names[a] << names[b] << ")" << names[c] << " = " << names[static_cast<std::size_t>(left)] << " but "
             << names[a] << "(" << names[b] << names[c] << ") = " << names[static_cast<std::size_t>(right)];
          fail(os.str());
        }
      }
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table) {
  validate(names, table);
  auto data = std::make_shared<Data>();
  data->names = std::move(names);
  data->table = std::move(table);
  const std::size_t n = data->names.size();
  data->inverse.resize(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (data->table[g][h] == 0) data->inverse[g] = static_cast<int>(h);
  data_ = std::move(data);
}

int FiniteGroup::order() const { return static_cast<int>(data_->names.size()); }
const std::vector<std::string>& FiniteGroup::names() const { return data_->names; }
const std::string& FiniteGroup::name(int g) const { return data_->names.at(static_cast<std::size_t>(g)); }
const std::vector<std::vector<int>>& FiniteGroup::table() const { return data_->table; }

int FiniteGroup::find(const std::string& label) const {
  const auto& names = data_->names;
  auto it = std::find(names.begin(), names.end(), label);
  if (it == names.end()) throw ValidationError("unknown element '" + label + "'");
  return static_cast<int>(it - names.begin());
}

int FiniteGroup::mul(int g, int h) const {
  return data_->table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
}

int FiniteGroup::inv(int g) const { return data_->inverse[static_cast<std::size_t>(g)]; }

int FiniteGroup::conj(int a, int g) const { return mul(mul(a, g), inv(a)); }

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

bool operator==(const FiniteGroup& lhs, const FiniteGroup& rhs) {
  return lhs.data_ == rhs.data_ || (lhs.names() == rhs.names() && lhs.table() == rhs.table());
}

FiniteGroup dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral(n) requires n >= 1");
  std::vector<std::string> names;
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < n; ++i) {
      std::string label = a ? "s" : "";
      if (i == 1) label += "r";
      if (i > 1) label += "r" + std::to_string(i);
      names.push_back(label.empty() ? "e" : label);
    }
  const auto size = static_cast<std::size_t>(2 * n);
  std::vector<std::vector<int>> table(size, std::vector<int>(size));
  // (s^a r^i)(s^b r^j) = s^(a+b) r^((-1)^b i + j)
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < 2; ++b)
        for (int j = 0; j < n; ++j) {
          const int exponent = (((b ? -i : i) + j) % n + n) % n;
          table[static_cast<std::size_t>(a * n + i)][static_cast<std::size_t>(b * n + j)] = ((a + b) % 2) * n + exponent;
        }
  return FiniteGroup(std::move(names), std::move(table));
}

std::optional<DihedralPresentation> find_dihedral_presentation(const FiniteGroup& g) {
  if (g.order() % 2 != 0 || g.order() < 6) return std::nullopt;
  const int n = g.order() / 2;
  for (int r = 1; r < g.order(); ++r) {
    if (g.element_order(r) != n) continue;
    std::vector<bool> in_cyclic(static_cast<std::size_t>(g.order()), false);
    for (int i = 0, x = 0; i < n; ++i, x = g.mul(x, r)) in_cyclic[static_cast<std::size_t>(x)] = true;
    for (int s = 1; s < g.order(); ++s) {
      if (in_cyclic[static_cast<std::size_t>(s)] || g.mul(s, s) != 0) continue;
      if (g.conj(s, r) != g.inv(r)) continue;
      DihedralPresentation p{n, r, s, {}, std::vector<int>(static_cast<std::size_t>(g.order()))};
      for (int a = 0; a < 2; ++a)
        for (int i = 0, x = a ? s : 0; i < n; ++i, x = g.mul(x, r)) p.element.push_back(x);
      for (int k = 0; k < g.order(); ++k) p.position[static_cast<std::size_t>(p.element[static_cast<std::size_t>(k)])] = k;
      return p;
    }
  }
  return std::nullopt;
}

ConjClass::ConjClass(FiniteGroup group, std::vector<int> members, std::optional<int> witness)
    : group_(std::move(group)), members_(std::move(members)), witness_(witness) {}

int ConjClass::position(int g) const {
  auto it = std::find(members_.begin(), members_.end(), g);
  return it == members_.end() ? -1 : static_cast<int>(it - members_.begin());
}

namespace {

bool is_witness(const FiniteGroup& g, const std::vector<int>& members, int t) {
  const std::size_t k = members.size();
  // a ↦ Ad_a(t) must be a permutation of the class.
  std::set<int> images;
  for (int a : members) images.insert(g.conj(a, t));
  if (images.size() != k) return false;
  // Ad_t must be one (|C|-1)-cycle on C - {t}.
  int start = -1;
  for (int m : members)
    if (m != t) start = m;
  std::size_t length = 0;
  int x = start;
  do {
    x = g.conj(t, x);
    ++length;
    if (x == t) return false;
  } while (x != start && length <= k);
  return length == k - 1;
}

}  // namespace

ConjClass conjugacy_class(const FiniteGroup& g, int element) {
  if (element < 0 || element >= g.order()) throw ValidationError("element index out of range");
  std::set<int> orbit;
  for (int a = 0; a < g.order(); ++a) orbit.insert(g.conj(a, element));
  std::vector<int> sorted(orbit.begin(), orbit.end());
  if (sorted.size() < 2 || orbit.count(0)) return ConjClass(g, sorted, std::nullopt);

  for (int t : sorted) {
    if (!is_witness(g, sorted, t)) continue;
    std::vector<int> ordered{t};
    int start = t == sorted[0] ? sorted[1] : sorted[0];
    for (int x = start; ordered.size() < sorted.size(); x = g.conj(t, x)) ordered.push_back(x);
    return ConjClass(g, ordered, t);
  }
  return ConjClass(g, sorted, std::nullopt);
}

CyclicityResult is_cyclic_class(const ConjClass& c) {
  if (c.size() < 2) throw PreconditionError("cyclicity needs a class with at least two members");
  for (int t : c.members()) {
    if (is_witness(c.group(), c.members(), t)) return {true, t};
  }
  return {};
}

std::vector<std::vector<int>> ad_table(const ConjClass& c) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(c.size()));
  for (int a : c.members())
    for (int b : c.members()) out[static_cast<std::size_t>(c.position(a))].push_back(c.position(c.group().conj(a, b)));
  return out;
}

std::vector<std::vector<int>> class_product_table(const ConjClass& c) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(c.size()));
  for (int a : c.members())
    for (int b : c.members()) out[static_cast<std::size_t>(c.position(a))].push_back(c.group().mul(a, b));
  return out;
}

bool matches_product_pattern(const ConjClass& c) {
  if (c.size() != 3) return false;
  const auto p = class_product_table(c);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int shift = ((j - i) % 3 + 3) % 3;
      if (p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != p[0][static_cast<std::size_t>(shift)]) return false;
      if (c.contains(p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) return false;
    }
  return true;
}

ExactMatrix right_translation(const FiniteGroup& g, int a) {
  const auto n = static_cast<std::size_t>(g.order());
  ExactMatrix m(n, n);
  for (int x = 0; x < g.order(); ++x) m(static_cast<std::size_t>(x), static_cast<std::size_t>(g.mul(x, a))) = 1;
  return m;
}

bool is_homomorphism(const FiniteGroup& g, const Representation& rep) {
  if (rep.matrices.size() != static_cast<std::size_t>(g.order())) return false;
  if (rep(0) != ExactMatrix::identity(static_cast<std::size_t>(rep.dim))) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (rep(a) * rep(b) != rep(g.mul(a, b))) return false;
  return true;
}

bool is_unitary(const FiniteGroup& g, const Representation& rep) {
  for (int a = 0; a < g.order(); ++a)
    if (rep(a).adjoint() != rep(g.inv(a))) return false;
  return true;
}

namespace {

Representation from_generators(const std::string& name, const DihedralPresentation& p, const ExactMatrix& r,
                               const ExactMatrix& s) {
  Representation rep{name, static_cast<int>(r.rows()), std::vector<ExactMatrix>(p.element.size())};
  const ExactMatrix id = ExactMatrix::identity(r.rows());
  for (int a = 0; a < 2; ++a) {
    ExactMatrix x = a ? s : id;
    for (int i = 0; i < p.n; ++i, x = x * r) rep.matrices[static_cast<std::size_t>(p.element[static_cast<std::size_t>(a * p.n + i)])] = x;
  }
  return rep;
}

DihedralPresentation require_presentation(const FiniteGroup& g) {
  auto p = find_dihedral_presentation(g);
  if (!p) throw UnsupportedError("no representation catalog for this group (needs a dihedral presentation)");
  return *p;
}

ExactMatrix two_dim_r(int n, int j) { return ExactMatrix{{cyclo(n, j), 0}, {0, cyclo(n, -j)}}; }

const ExactMatrix kSwap{{0, 1}, {1, 0}};

}  // namespace

Representation builtin_rep(const FiniteGroup& g, const std::string& name) {
  if (name != "spinor" && name != "sign2") throw ValidationError("unknown built-in representation '" + name + "'");
  const auto p = require_presentation(g);
  if (name == "spinor") return from_generators(name, p, two_dim_r(p.n, 1), kSwap);
  return from_generators(name, p, ExactMatrix::identity(2), ExactMatrix{{-1, 0}, {0, 1}});
}

std::vector<Representation> irreducibles(const FiniteGroup& g) {
  const auto p = require_presentation(g);
  std::vector<Representation> out;
  auto one = [](long v) { return ExactMatrix{{Cyclotomic(v)}}; };
  out.push_back(from_generators("trivial", p, one(1), one(1)));
  out.push_back(from_generators("sign", p, one(1), one(-1)));
  if (p.n % 2 == 0) {
    out.push_back(from_generators("alt_r", p, one(-1), one(1)));
    out.push_back(from_generators("alt_rs", p, one(-1), one(-1)));
  }
  for (int j = 1; 2 * j < p.n; ++j) out.push_back(from_generators("rho" + std::to_string(j), p, two_dim_r(p.n, j), kSwap));
  return out;
}

}  // namespace ncgeom
