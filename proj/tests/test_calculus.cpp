#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "doctest.h"
#include "ncgeom/errors.hpp"
#include "test_support.hpp"

using namespace ncgeom;
using ncgeom::testing::d6_calculus;
using ncgeom::testing::random_function;
using ncgeom::testing::random_one_form;

namespace {

constexpr int T = 0, X = 1, Y = 2;

ExactVector coords(std::initializer_list<long> v) {
  ExactVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Constant-coefficient view of a two-form at one group element.
ExactVector at(const TwoForm& w, std::size_t g) {
  ExactVector out;
  for (const auto& f : w.coeffs) out.push_back(f[g]);
  return out;
}

}  // namespace

TEST_CASE("braiding on D6's class") {
  const auto calc = d6_calculus();
  const auto& c = calc.conj_class();
  for (int a = 0; a < 3; ++a) CHECK(braiding(c, {a, a}) == Monomial{a, a});
  CHECK(braiding(c, {T, X}) == Monomial{Y, T});
  CHECK(braiding(c, {Y, T}) == Monomial{X, Y});
  CHECK(braiding(c, {X, Y}) == Monomial{T, X});

  // Oracle: cycle decomposition of Ψ on the 9 monomials by iteration.
  std::set<Monomial> seen;
  std::multiset<int> cycle_lengths;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (seen.count({a, b})) continue;
      int len = 0;
      Monomial m{a, b};
      do {
        seen.insert(m);
        m = braiding(c, m);
        ++len;
      } while (m != Monomial{a, b});
      cycle_lengths.insert(len);
    }
  CHECK(cycle_lengths == std::multiset<int>{1, 1, 1, 3, 3});
  CHECK(calc.two_forms().relation_basis().size() == cycle_lengths.size());

  // Ψ preserves products ab.
  const auto& g = c.group();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const auto m = braiding(c, {a, b});
      CHECK(g.mul(c.member(m.first), c.member(m.second)) == g.mul(c.member(a), c.member(b)));
    }
}

TEST_CASE("two-form space of D6") {
  const auto calc = d6_calculus();
  const auto& space = calc.two_forms();
  CHECK(space.uses_standard_basis());
  CHECK(space.relation_basis().size() == 5);
  CHECK(space.dimension() == 4);
  CHECK(space.quotient_basis() == std::vector<Monomial>{{X, T}, {Y, X}, {Y, T}, {X, Y}});

  for (int a = 0; a < 3; ++a) CHECK(is_zero_vector(space.reduce(Monomial{a, a})));

  ExactVector cyc(4);
  for (const auto& m : {Monomial{X, T}, Monomial{Y, X}, Monomial{T, Y}}) {
    const auto r = space.reduce(m);
    for (std::size_t i = 0; i < 4; ++i) cyc[i] += r[i];
  }
  CHECK(is_zero_vector(cyc));

  CHECK(space.reduce(Monomial{T, Y}) == coords({-1, -1, 0, 0}));

  // Numeric elimination of [Q | ker] gives these rows.
  const ExactMatrix expected{{0, 0, -1, 1, 0, 0, 0, 0, 0},
                             {0, 0, -1, 0, 0, 0, 0, 1, 0},
                             {0, -1, 0, 0, 0, 0, 1, 0, 0},
                             {0, -1, 0, 0, 0, 1, 0, 0, 0}};
  CHECK(space.reduction() == expected);

  // ∧ annihilates exactly the relation space.
  for (const auto& rel : space.relation_basis()) CHECK(is_zero_vector(space.reduce(rel)));
  CHECK(rank(space.reduction()) == 4);
  const auto ker = kernel(space.reduction());
  std::vector<ExactVector> both = space.relation_basis();
  both.insert(both.end(), ker.begin(), ker.end());
  CHECK(rank(ExactMatrix::from_columns(both, 9)) == 5);

  // Ψ is a permutation matrix with kernel of id - Ψ of dimension 5.
  const auto& psi = space.braiding_matrix();
  for (std::size_t c = 0; c < 9; ++c) {
    int ones = 0;
    for (std::size_t r = 0; r < 9; ++r) ones += psi(r, c) == Cyclotomic(1);
    CHECK(ones == 1);
  }
}

TEST_CASE("non-cyclic classes are rejected") {
  const auto g = dihedral(6);
  CHECK_THROWS_AS(Calculus(conjugacy_class(g, g.find("r"))), NonCyclicClassError);
  CHECK_THROWS_AS(Calculus(conjugacy_class(g, 0)), NonCyclicClassError);
}

TEST_CASE("wedge and the bimodule rule") {
  const auto calc = d6_calculus();
  std::mt19937 rng(1);
  const auto f = random_function(rng, 12);
  CHECK(calc.wedge(calc.e(T), calc.e(T)).is_zero());
  const auto ety = calc.wedge(calc.e(T), calc.e(Y));
  const auto expected = calc.zero_two_form() - calc.wedge(calc.e(X), calc.e(T)) - calc.wedge(calc.e(Y), calc.e(X));
  CHECK(ety == expected);

  CHECK(calc.wedge(calc.scale(f, calc.e(T)), calc.e(X)) == calc.scale(f, calc.wedge(calc.e(T), calc.e(X))));
  CHECK(calc.wedge(calc.e(T), calc.scale(f, calc.e(X))) ==
        calc.scale(calc.translate(T, f), calc.wedge(calc.e(T), calc.e(X))));
  // e_a f = R_a(f) e_a
  CHECK(calc.scale_right(calc.e(X), f) == calc.scale(calc.translate(X, f), calc.e(X)));

  CHECK(calc.wedge(calc.theta(), calc.theta()).is_zero());
}

TEST_CASE("exterior derivative on functions") {
  const auto calc = d6_calculus();
  const auto& g = calc.group();
  CHECK(calc.d(calc.constant(5)).is_zero());

  // Oracle: R_a δ_e (x) = δ_e(x a) = δ_{a⁻¹}(x).
  const auto de = calc.d(GroupFunction::delta(12, 0));
  for (int a = 0; a < 3; ++a) {
    GroupFunction expected(12);
    expected[static_cast<std::size_t>(g.inv(calc.conj_class().member(a)))] += 1;
    expected[0] -= 1;
    CHECK(de.coeffs[static_cast<std::size_t>(a)] == expected);
  }

  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_function(rng, 12);
    CHECK(calc.d(f) == calc.scale_right(calc.theta(), f) - calc.scale(f, calc.theta()));
  }
}

TEST_CASE("Maurer-Cartan and d squared") {
  const auto calc = d6_calculus();
  for (int a = 0; a < 3; ++a) {
    const auto mc = calc.wedge(calc.theta(), calc.e(a)) + calc.wedge(calc.e(a), calc.theta());
    CHECK(calc.d(calc.e(a)) == mc);
  }
  CHECK(at(calc.d(calc.e(T)), 0) == coords({0, -1, 0, -1}));
  CHECK(at(calc.d(calc.e(X)), 0) == coords({1, 1, -1, 0}));
  CHECK(at(calc.d(calc.e(Y)), 0) == coords({-1, 0, 1, 1}));
  CHECK(calc.d(calc.theta()).is_zero());

  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_function(rng, 12);
    CHECK(calc.d(calc.d(f)).is_zero());
  }
  // Leibniz: d(f α) = df ∧ α + f dα
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_function(rng, 12);
    const auto alpha = random_one_form(rng, calc);
    CHECK(calc.d(calc.scale(f, alpha)) == calc.wedge(calc.d(f), alpha) + calc.scale(f, calc.d(alpha)));
  }
}

TEST_CASE("S3 calculus has the same structure") {
  const auto s3 = dihedral(3);
  const Calculus calc(conjugacy_class(s3, s3.find("s")));
  CHECK(calc.two_forms().uses_standard_basis());
  CHECK(calc.two_forms().dimension() == 4);
  CHECK(calc.d(calc.theta()).is_zero());
}

TEST_CASE("greedy quotient basis for other cyclic classes") {
  // A 3-cycle class of A4: cyclic, four members.
  const FiniteGroup a4 = ncgeom::testing::alternating4();
  // Find a 3-cycle: element of order 3.
  int three = 1;
  while (a4.element_order(three) != 3) ++three;
  const auto cls = conjugacy_class(a4, three);
  REQUIRE(cls.size() == 4);
  const Calculus calc(cls);
  CHECK_FALSE(calc.two_forms().uses_standard_basis());
  CHECK(calc.two_forms().dimension() + static_cast<int>(calc.two_forms().relation_basis().size()) == 16);
  CHECK(calc.wedge(calc.theta(), calc.theta()).is_zero());
  std::mt19937 rng(4);
  CHECK(calc.d(calc.d(random_function(rng, 12))).is_zero());
}
