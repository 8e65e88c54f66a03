#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "ncgeom/cyclotomic.hpp"
#include "ncgeom/errors.hpp"
#include "ncgeom/linalg.hpp"
#include "ncgeom/matrix.hpp"
#include "ncgeom/polynomial.hpp"

using namespace ncgeom;

namespace {

Cyclotomic random_element(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<mpq_class> powers;
  for (int i = 0; i < order; ++i) powers.emplace_back(num(rng), den(rng));
  for (auto& p : powers) p.canonicalize();
  return Cyclotomic(order, powers);
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int order, int sparsity) {
  std::uniform_int_distribution<int> coin(0, sparsity);
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) == 0) m(i, j) = random_element(rng, order);
  return m;
}

}  // namespace

TEST_CASE("cyclo basics") {
  CHECK(cyclo(6, 0) == Cyclotomic(1));
  CHECK(cyclo(6, 3) == Cyclotomic(-1));
  CHECK(cyclo(6, 6) == Cyclotomic(1));
  CHECK(cyclo(6, -1) == cyclo(6, 5));
  CHECK_THROWS_AS(cyclo(0, 1), std::invalid_argument);

  // Numeric oracle first, then the exact reduction.
  std::complex<double> sum = 0;
  for (int k : {1, 3, 5}) sum += std::polar(1.0, M_PI * k / 3.0);
  CHECK(std::abs(sum) < 1e-12);
  const Cyclotomic exact = cyclo(6, 1) + cyclo(6, 3) + cyclo(6, 5);
  CHECK(exact.is_zero());
  CHECK(exact.is_rational());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("to_complex agrees with the numeric embedding") {
  for (int n : {3, 4, 6, 12}) {
    for (int k = 0; k < n; ++k) {
      const auto z = cyclo(n, k).to_complex();
      CHECK(std::abs(z - std::polar(1.0, 2 * M_PI * k / n)) < 1e-12);
    }
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(7);
  for (int order : {1, 3, 4, 6, 12}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto a = random_element(rng, order);
      const auto b = random_element(rng, order);
      const auto c = random_element(rng, order);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == Cyclotomic());
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
    }
  }
}

TEST_CASE("mixed orders promote to the lcm") {
  const auto s = cyclo(4, 1) + cyclo(6, 1);
  CHECK(s.order() == 12);
  CHECK(std::abs(s.to_complex() - (std::complex<double>(0, 1) + std::polar(1.0, M_PI / 3))) < 1e-12);
  CHECK(cyclo(4, 1) * cyclo(4, 1) == Cyclotomic(-1));
  CHECK(cyclo(12, 2) == cyclo(6, 1));
}

TEST_CASE("division by zero") { CHECK_THROWS(Cyclotomic(1) / Cyclotomic()); }

TEST_CASE("kernel trivial cases") {
  CHECK(kernel(ExactMatrix::identity(3)).empty());
  const auto k = kernel(ExactMatrix(2, 3));
  CHECK(k.size() == 3);
}

TEST_CASE("kernel and rank properties") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 2 + trial % 5;
    const std::size_t c = 3 + trial % 4;
    auto m = random_matrix(rng, r, c, trial % 2 ? 6 : 1, 2);
    // Force a dependent row so kernels are non-trivial more often.
    if (r > 2) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) + cyclo(6, 1) * m(1, j);
    }
    const auto ker = kernel(m);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& v : ker) CHECK(is_zero_vector(m * v));
    CHECK(rank(m) == rank(m.adjoint()));
    CHECK(m.adjoint().adjoint() == m);
  }
}

TEST_CASE("solve_affine") {
  std::mt19937 rng(3);
  const ExactVector b = {Cyclotomic(2), cyclo(6, 1), Cyclotomic::rational(-1, 3)};
  auto id = solve_affine(ExactMatrix::identity(3), b);
  REQUIRE(id);
  CHECK(id->particular == b);
  CHECK(id->kernel.empty());

  CHECK_FALSE(solve_affine(ExactMatrix(3, 3), b));
  CHECK(solve_affine(ExactMatrix(3, 2), ExactVector(3)));

  for (int trial = 0; trial < 10; ++trial) {
    const auto m = random_matrix(rng, 4, 6, 6, 1);
    ExactVector x0(6);
    for (auto& x : x0) x = random_element(rng, 6);
    const auto rhs = m * x0;
    const auto sol = solve_affine(m, rhs);
    REQUIRE(sol);
    auto residual = m * sol->particular;
    for (std::size_t i = 0; i < rhs.size(); ++i) residual[i] -= rhs[i];
    CHECK(is_zero_vector(residual));
    CHECK(sol->kernel.size() == 6 - rank(m));
  }
  CHECK_THROWS_AS(solve_affine(ExactMatrix(2, 2), ExactVector(3)), std::invalid_argument);
}

TEST_CASE("inverse") {
  std::mt19937 rng(5);
  const auto m = random_matrix(rng, 4, 4, 6, 0);
  if (rank(m) == 4) CHECK(m * inverse(m) == ExactMatrix::identity(4));
  CHECK_THROWS_AS(inverse(ExactMatrix(2, 2)), SingularMatrixError);
}

TEST_CASE("kron layout") {
  const ExactMatrix a{{1, 2}, {3, 4}};
  const ExactMatrix b{{0, 1}, {1, 0}};
  const auto k = kron(a, b);
  CHECK(k(0, 1) == Cyclotomic(1));
  CHECK(k(1, 2) == Cyclotomic(2));
  CHECK(k(3, 2) == Cyclotomic(4));
  CHECK(k(2, 2) == Cyclotomic());
}

TEST_CASE("minimal polynomial") {
  CHECK(minimal_polynomial(ExactMatrix::identity(3)) == Polynomial({Cyclotomic(-1), Cyclotomic(1)}));
  const ExactMatrix nil{{0, 1}, {0, 0}};
  CHECK(minimal_polynomial(nil) == Polynomial({Cyclotomic(), Cyclotomic(), Cyclotomic(1)}));
  const ExactMatrix rot{{0, -1}, {1, 0}};
  const auto p = minimal_polynomial(rot);
  CHECK(p == Polynomial({Cyclotomic(1), Cyclotomic(), Cyclotomic(1)}));
  CHECK(p(rot).is_zero());
  CHECK(rational_roots(p)->empty());
  const ExactMatrix diag = ExactMatrix::diagonal({3, 3, -1, Cyclotomic::rational(1, 2)});
  const auto roots = rational_roots(minimal_polynomial(diag));
  REQUIRE(roots);
  REQUIRE(roots->size() == 3);
  CHECK((*roots)[0].first == -1);
  CHECK((*roots)[1].first == mpq_class(1, 2));
  CHECK((*roots)[2].first == 3);
  CHECK_FALSE(rational_roots(Polynomial({cyclo(6, 1), Cyclotomic(1)})));
}

TEST_CASE("rational roots with multiplicity") {
  const auto p = Polynomial::from_roots({0, 0, 3, -3, 3});
  const auto roots = rational_roots(p);
  REQUIRE(roots);
  REQUIRE(roots->size() == 3);
  CHECK((*roots)[0] == std::make_pair(mpq_class(-3), 1));
  CHECK((*roots)[1] == std::make_pair(mpq_class(0), 2));
  CHECK((*roots)[2] == std::make_pair(mpq_class(3), 2));
}
