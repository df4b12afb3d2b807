#include "doctest.h"

#include <algorithm>

#include "jinf/character_table.hpp"
#include "jinf/groups.hpp"

using namespace jinf;

namespace {

std::vector<std::size_t> sorted_degrees(CharacterTable const &t)
{
  auto d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

// Exhaustive search over all subsets of irreducible characters.
std::size_t faithful_by_subsets(CharacterTable const &t)
{
  std::size_t r = t.degrees.size();
  std::size_t best = static_cast<std::size_t>(-1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<bool> inter(r, true);
    std::size_t cost = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (!((mask >> i) & 1))
        continue;
      cost += t.degrees[i];
      std::vector<bool> ker(r, false);
      for (auto j : t.kernel_classes(i))
        ker[j] = true;
      for (std::size_t j = 0; j < r; ++j)
        inter[j] = inter[j] && ker[j];
    }
    bool trivial = true;
    for (std::size_t j = 1; j < r; ++j)
      trivial = trivial && !inter[j];
    if (trivial)
      best = std::min(best, cost);
  }
  return best;
}

// <pi, chi> for the permutation character pi of the natural action, as an
// exact cyclotomic number.
CyclotomicValue permutation_inner_product(CharacterTable const &t, std::size_t i)
{
  CyclotomicValue sum(t.values[i][0].size(), Rational(0));
  for (std::size_t j = 0; j < t.class_sizes.size(); ++j) {
    std::size_t fixed = 0;
    auto const &g = t.class_representatives[j];
    for (Point x = 0; x < g.degree(); ++x)
      fixed += g[x] == x;
    auto const &v = t.values[i][t.inverse_class[j]];
    for (std::size_t k = 0; k < v.size(); ++k)
      sum[k] += Rational(static_cast<unsigned long>(t.class_sizes[j] * fixed)) * v[k] /
                Rational(static_cast<unsigned long>(t.group_order));
  }
  return sum;
}

} // namespace

TEST_CASE("cyclotomic polynomials")
{
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<Integer>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12).size() == 5);
  // zeta_3^2 = -1 - zeta_3
  auto v = reduce_cyclotomic({0, 0, 1}, 3);
  CHECK(v == CyclotomicValue{-1, -1});
  CHECK(format_cyclotomic(v) == "-1 - z");
}

TEST_CASE("character tables: degrees")
{
  auto c2 = character_table(groups::cyclic(2));
  CHECK(sorted_degrees(c2) == std::vector<std::size_t>{1, 1});

  auto q8 = character_table(groups::generalized_quaternion(8));
  CHECK(sorted_degrees(q8) == std::vector<std::size_t>{1, 1, 1, 1, 2});

  auto e = character_table(groups::extraspecial_central_d8_cube());
  std::vector<std::size_t> expected(64, 1);
  expected.push_back(8);
  CHECK(sorted_degrees(e) == expected);
  std::size_t sum = 0;
  for (auto d : e.degrees)
    sum += d * d;
  CHECK(sum == 128);

  CHECK(sorted_degrees(character_table(groups::symmetric(4))) == std::vector<std::size_t>{1, 1, 2, 3, 3});
  CHECK(sorted_degrees(character_table(groups::alternating(5))) == std::vector<std::size_t>{1, 3, 3, 4, 5});
  CHECK(sorted_degrees(character_table(groups::gl32_on_points())) ==
        std::vector<std::size_t>{1, 3, 3, 6, 7, 8});
  CHECK_THROWS_AS(character_table(groups::symmetric(7)), GateExceeded);
}

TEST_CASE("character tables satisfy exact orthogonality")
{
  for (auto const &g : {groups::cyclic(2), groups::cyclic(7), groups::symmetric(4), groups::alternating(5),
                        groups::generalized_quaternion(8), groups::generalized_quaternion(16),
                        groups::semidihedral(16), groups::affine_1d(7, 3), groups::gl32_on_points(),
                        groups::extraspecial_central_d8_cube(), groups::dihedral(6)}) {
    auto t = character_table(g);
    CHECK(table_is_consistent(t));
    CHECK(t.values.size() == FiniteGroup(g).classes().size());
    // trivial character first
    for (auto const &v : t.values[0])
      CHECK(v == t.values[0][0]);
  }
}

TEST_CASE("permutation character decomposes with nonnegative integer multiplicities")
{
  for (auto const &g : {groups::symmetric(4), groups::alternating(5), groups::gl32_on_points()}) {
    auto t = character_table(g);
    Rational total_degree = 0;
    for (std::size_t i = 0; i < t.degrees.size(); ++i) {
      auto ip = permutation_inner_product(t, i);
      for (std::size_t k = 1; k < ip.size(); ++k)
        CHECK(ip[k] == 0);
      Rational m = ip[0];
      CHECK(denominator(m) == 1);
      CHECK(m >= 0);
      total_degree += m * Rational(static_cast<unsigned long>(t.degrees[i]));
    }
    CHECK(total_degree == Rational(static_cast<unsigned long>(g.degree())));
  }
}

TEST_CASE("A5 takes golden-ratio values on 5-cycles")
{
  auto t = character_table(groups::alternating(5));
  CHECK(t.root_order == 30);
  // some degree-3 character has value (1 + sqrt 5)/2 on a 5-cycle; its square
  // is the value plus one
  bool found = false;
  for (std::size_t i = 0; i < t.degrees.size(); ++i) {
    if (t.degrees[i] != 3)
      continue;
    for (std::size_t j = 0; j < t.class_sizes.size(); ++j) {
      if (t.element_orders[j] != 5)
        continue;
      auto const &v = t.values[i][j];
      std::vector<Rational> sq(2 * v.size(), Rational(0));
      for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = 0; b < v.size(); ++b)
          sq[a + b] += v[a] * v[b];
      auto lhs = reduce_cyclotomic(sq, 30);
      auto rhs = v;
      rhs[0] += 1;
      if (lhs == rhs)
        found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("min_faithful_degree")
{
  CHECK(min_faithful_degree(character_table(groups::extraspecial_central_d8_cube())) == 8);
  CHECK(min_faithful_degree(character_table(groups::cyclic(5))) == 1);
  auto v4 = character_table(groups::klein_four());
  CHECK(min_faithful_degree(v4) == 2);
  CHECK(faithful_by_subsets(v4) == 2);

  for (auto const &g : {groups::cyclic(6), groups::klein_four(), groups::symmetric(3), groups::symmetric(4),
                        groups::generalized_quaternion(8), groups::dihedral(4), groups::cyclic(8),
                        groups::direct_product(groups::cyclic(3), groups::cyclic(3)), groups::alternating(5)}) {
    auto t = character_table(g);
    std::size_t m = min_faithful_degree(t);
    CHECK(m == faithful_by_subsets(t));
    CHECK((m == 1) == recognize_special(g).cyclic);
  }
}
