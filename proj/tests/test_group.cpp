#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "doctest.h"
#include "ncgeom/errors.hpp"
#include "ncgeom/group.hpp"
#include "ncgeom/linalg.hpp"

using namespace ncgeom;

namespace {

// Independent S3: permutations of {0,1,2}, product p∘q.
std::vector<std::array<int, 3>> s3_elements() {
  std::vector<std::array<int, 3>> out;
  std::array<int, 3> p{0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int s3_mul(const std::vector<std::array<int, 3>>& el, int a, int b) {
  std::array<int, 3> c{};
  for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = el[static_cast<std::size_t>(a)][static_cast<std::size_t>(el[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
  return static_cast<int>(std::find(el.begin(), el.end(), c) - el.begin());
}

std::set<std::string> names_of(const ConjClass& c) {
  std::set<std::string> out;
  for (int m : c.members()) out.insert(c.group().name(m));
  return out;
}

Cyclotomic inner_product(const FiniteGroup& g, const Representation& a, const Representation& b) {
  Cyclotomic sum;
  for (int x = 0; x < g.order(); ++x) sum += a(x).trace() * b(x).trace().conj();
  return sum / Cyclotomic(g.order());
}

}  // namespace

TEST_CASE("dihedral construction") {
  const auto d6 = dihedral(6);
  CHECK(d6.order() == 12);
  CHECK(d6.names() == std::vector<std::string>{"e", "r", "r2", "r3", "r4", "r5", "s", "sr", "sr2", "sr3", "sr4", "sr5"});
  CHECK(dihedral(1).order() == 2);
  CHECK_THROWS(dihedral(0));

  const int s = d6.find("s");
  const int r = d6.find("r");
  CHECK(d6.element_order(r) == 6);
  CHECK(d6.mul(s, s) == 0);
  // s r^a = r^-a s
  for (int a = 0; a < 6; ++a) {
    int ra = 0;
    for (int i = 0; i < a; ++i) ra = d6.mul(ra, r);
    CHECK(d6.mul(s, ra) == d6.mul(d6.inv(ra), s));
  }
}

TEST_CASE("associativity for every triple") {
  for (int n : {1, 2, 3, 6}) {
    const auto g = dihedral(n);
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        for (int c = 0; c < g.order(); ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

TEST_CASE("dihedral(3) is isomorphic to S3") {
  const auto d3 = dihedral(3);
  const auto el = s3_elements();
  std::vector<int> phi(6);
  std::iota(phi.begin(), phi.end(), 0);
  bool found = false;
  do {
    bool hom = true;
    for (int a = 0; a < 6 && hom; ++a)
      for (int b = 0; b < 6 && hom; ++b)
        hom = phi[static_cast<std::size_t>(d3.mul(a, b))] == s3_mul(el, phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]);
    found = hom;
  } while (!found && std::next_permutation(phi.begin(), phi.end()));
  CHECK(found);
}

TEST_CASE("validation diagnostics") {
  SUBCASE("identity law") {
    CHECK_THROWS_WITH_AS(FiniteGroup({"a", "b"}, {{1, 0}, {0, 1}}), doctest::Contains("identity law"), ValidationError);
  }
  SUBCASE("latin square") {
    CHECK_THROWS_WITH_AS(FiniteGroup({"e", "a", "b"}, {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}), doctest::Contains("Latin square"),
                         ValidationError);
  }
  SUBCASE("associativity names the triple") {
    // A Latin square with identity that is not associative (order 5 loop).
    const std::vector<std::vector<int>> t{
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_WITH_AS(FiniteGroup({"e", "a", "b", "c", "d"}, t), doctest::Contains("associativity fails for (a, a, b)"),
                         ValidationError);
  }
  SUBCASE("shape") { CHECK_THROWS_AS(FiniteGroup({"e", "a"}, {{0, 1}}), ValidationError); }
  SUBCASE("unknown label") { CHECK_THROWS_AS(dihedral(6).find("q"), ValidationError); }
}

TEST_CASE("conjugacy classes of D6") {
  const auto d6 = dihedral(6);
  const auto c = conjugacy_class(d6, d6.find("sr"));
  CHECK(c.members() == std::vector<int>{d6.find("sr"), d6.find("sr3"), d6.find("sr5")});
  CHECK(conjugacy_class(d6, 0).members() == std::vector<int>{0});

  // Oracle: conjugate r by every element directly.
  std::set<std::string> brute;
  const int r = d6.find("r");
  for (int a = 0; a < 12; ++a) brute.insert(d6.name(d6.mul(d6.mul(a, r), d6.inv(a))));
  CHECK(brute == std::set<std::string>{"r", "r5"});
  CHECK(names_of(conjugacy_class(d6, r)) == brute);
}

TEST_CASE("cyclicity") {
  const auto d6 = dihedral(6);
  const auto c = conjugacy_class(d6, d6.find("sr3"));
  const auto res = is_cyclic_class(c);
  CHECK(res.cyclic);
  CHECK(res.witness == d6.find("sr"));
  CHECK(c.cyclic_witness() == d6.find("sr"));
  CHECK(c.member(0) == d6.find("sr"));

  const auto rc = conjugacy_class(d6, d6.find("r"));
  CHECK_FALSE(is_cyclic_class(rc).cyclic);
  // Both candidate witnesses fail: Ad_a(r) = r for a in {r, r5}.
  for (int a : rc.members()) CHECK(d6.conj(a, d6.find("r")) == d6.find("r"));

  CHECK_THROWS_AS(is_cyclic_class(conjugacy_class(d6, 0)), PreconditionError);
}

TEST_CASE("ad and product tables for D6") {
  const auto d6 = dihedral(6);
  const auto c = conjugacy_class(d6, d6.find("sr"));
  const auto ad = ad_table(c);
  // t=0, x=1, y=2
  CHECK(ad[0] == std::vector<int>{0, 2, 1});
  CHECK(ad[1] == std::vector<int>{2, 1, 0});
  CHECK(ad[2] == std::vector<int>{1, 0, 2});
  for (const auto& row : ad) {
    std::set<int> s(row.begin(), row.end());
    CHECK(s.size() == 3);
  }

  const auto p = class_product_table(c);
  CHECK(p[0][0] == 0);
  CHECK(p[1][0] == d6.find("r4"));
  CHECK(p[2][0] == d6.find("r2"));
  CHECK(matches_product_pattern(c));
  for (int a : c.members()) {
    CHECK(d6.mul(a, a) == 0);
    for (int b : c.members()) CHECK_FALSE(c.contains(d6.mul(a, b)));
  }
  CHECK_FALSE(matches_product_pattern(conjugacy_class(d6, d6.find("r"))));
}

TEST_CASE("right translations") {
  const auto d6 = dihedral(6);
  CHECK(right_translation(d6, 0) == ExactMatrix::identity(12));
  std::vector<ExactMatrix> r;
  for (int a = 0; a < 12; ++a) r.push_back(right_translation(d6, a));
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b) CHECK(r[static_cast<std::size_t>(a)] * r[static_cast<std::size_t>(b)] == r[static_cast<std::size_t>(d6.mul(a, b))]);

  // R_t swaps rotations and reflections: zero diagonal 6×6 blocks.
  for (const char* name : {"sr", "sr3", "sr5"}) {
    const auto rt = r[static_cast<std::size_t>(d6.find(name))];
    CHECK(rt.block(0, 0, 6, 6).is_zero());
    CHECK(rt.block(6, 6, 6, 6).is_zero());
    CHECK(rt == rt.transpose());
    CHECK(rank(rt.block(0, 6, 6, 6)) == 6);
  }
}

TEST_CASE("built-in representations") {
  const auto d6 = dihedral(6);
  const auto rho = builtin_rep(d6, "spinor");
  const auto sign = builtin_rep(d6, "sign2");
  for (const auto* rep : {&rho, &sign}) {
    CHECK(rep->dim == 2);
    CHECK(is_homomorphism(d6, *rep));
    CHECK(is_unitary(d6, *rep));
  }
  const Cyclotomic w = cyclo(6, 1);
  CHECK(rho(d6.find("r")) == ExactMatrix{{w, 0}, {0, w.inverse()}});
  CHECK(rho(d6.find("s")) == ExactMatrix{{0, 1}, {1, 0}});
  CHECK(rho(d6.find("sr")) == ExactMatrix{{0, w.inverse()}, {w, 0}});
  for (const char* n : {"sr", "sr3", "sr5"}) CHECK(sign(d6.find(n)) == sign(d6.find("s")));
  CHECK(sign(d6.find("s")) == ExactMatrix{{-1, 0}, {0, 1}});

  ExactMatrix sum(2, 2);
  for (const char* n : {"sr", "sr3", "sr5"}) sum += rho(d6.find(n));
  CHECK(sum.is_zero());

  CHECK_THROWS_AS(builtin_rep(d6, "vector"), ValidationError);
  CHECK_THROWS_AS(builtin_rep(dihedral(2), "spinor"), UnsupportedError);
}

TEST_CASE("irreducibles and characters") {
  const auto d6 = dihedral(6);
  const auto irr = irreducibles(d6);
  CHECK(irr.size() == 6);
  int dims_sq = 0, ones = 0, twos = 0;
  for (const auto& rep : irr) {
    dims_sq += rep.dim * rep.dim;
    (rep.dim == 1 ? ones : twos)++;
    CHECK(is_homomorphism(d6, rep));
    CHECK(is_unitary(d6, rep));
  }
  CHECK(dims_sq == 12);
  CHECK(ones == 4);
  CHECK(twos == 2);
  CHECK(irr.front().name == "trivial");

  // Class count oracle.
  std::set<std::set<int>> classes;
  for (int g = 0; g < 12; ++g) {
    std::set<int> orbit;
    for (int a = 0; a < 12; ++a) orbit.insert(d6.conj(a, g));
    classes.insert(orbit);
  }
  CHECK(classes.size() == irr.size());

  for (std::size_t i = 0; i < irr.size(); ++i)
    for (std::size_t j = 0; j < irr.size(); ++j)
      CHECK(inner_product(d6, irr[i], irr[j]) == Cyclotomic(i == j ? 1 : 0));

  const auto s3 = irreducibles(dihedral(3));
  CHECK(s3.size() == 3);
}

TEST_CASE("presentation of a relabelled group") {
  // S3 with labels in a non-dihedral order still gets the catalog.
  const FiniteGroup s3({"e", "u", "v", "uv", "vu", "uvu"}, {{0, 1, 2, 3, 4, 5},
                                                           {1, 0, 3, 2, 5, 4},
                                                           {2, 4, 0, 5, 1, 3},
                                                           {3, 5, 1, 4, 0, 2},
                                                           {4, 2, 5, 0, 3, 1},
                                                           {5, 3, 4, 1, 2, 0}});
  const auto p = find_dihedral_presentation(s3);
  REQUIRE(p);
  CHECK(p->n == 3);
  const auto rho = builtin_rep(s3, "spinor");
  CHECK(is_homomorphism(s3, rho));
  const auto c = conjugacy_class(s3, s3.find("u"));
  CHECK(names_of(c) == std::set<std::string>{"u", "v", "uvu"});
  CHECK(is_cyclic_class(c).cyclic);
  CHECK(matches_product_pattern(c));
}
