#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <string>

#include "ncgeom/calculus.hpp"

namespace ncgeom::testing {

inline Cyclotomic random_value(std::mt19937& rng, int order = 6) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<mpq_class> powers;
  for (int i = 0; i < (order == 1 ? 1 : 2); ++i) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    powers.push_back(q);
  }
  return Cyclotomic(order, powers);
}

inline GroupFunction random_function(std::mt19937& rng, std::size_t n, int order = 6) {
  GroupFunction f(n);
  for (std::size_t g = 0; g < n; ++g) f[g] = random_value(rng, order);
  return f;
}

inline OneForm random_one_form(std::mt19937& rng, const Calculus& calc, int order = 6) {
  OneForm out;
  for (int a = 0; a < calc.k(); ++a) out.coeffs.push_back(random_function(rng, calc.order(), order));
  return out;
}

inline Calculus d6_calculus() {
  const auto g = dihedral(6);
  return Calculus(conjugacy_class(g, g.find("sr")));
}

/// A4 as even permutations of {0, 1, 2, 3}, composed right to left; index 0 is the identity.
inline FiniteGroup alternating4() {
  std::vector<std::array<int, 4>> el;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    if (inversions % 2 == 0) el.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> table(12, std::vector<int>(12));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < 12; ++a) {
    names.push_back(a == 0 ? "e" : "g" + std::to_string(a));
    for (std::size_t b = 0; b < 12; ++b) {
      std::array<int, 4> c{};
      for (std::size_t i = 0; i < 4; ++i) c[i] = el[a][static_cast<std::size_t>(el[b][i])];
      table[a][b] = static_cast<int>(std::find(el.begin(), el.end(), c) - el.begin());
    }
  }
  return FiniteGroup(names, table);
}

/// Calculus of the four-member 3-cycle class containing the first order-3 element.
inline Calculus a4_calculus() {
  const auto a4 = alternating4();
  int three = 1;
  while (a4.element_order(three) != 3) ++three;
  return Calculus(conjugacy_class(a4, three));
}

}  // namespace ncgeom::testing
