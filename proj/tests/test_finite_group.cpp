#include "doctest.h"

#include <set>

#include "jinf/finite_group.hpp"
#include "jinf/groups.hpp"

using namespace jinf;

namespace {

using PermSet = std::set<Perm>;

PermSet close_up(PermSet gens, std::size_t degree)
{
  PermSet seen{Perm(degree)};
  std::vector<Perm> queue{Perm(degree)};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (auto const &g : gens) {
      Perm x = queue[k] * g;
      if (seen.insert(x).second)
        queue.push_back(x);
    }
  return seen;
}

// Every subgroup, as element sets: start from cyclic subgroups and join with
// single elements until nothing new appears.
std::set<PermSet> all_subgroups(PermGroup const &g)
{
  auto elems = g.elements();
  std::set<PermSet> found;
  std::vector<PermSet> queue;
  for (auto const &x : elems) {
    auto c = close_up({x}, g.degree());
    if (found.insert(c).second)
      queue.push_back(c);
  }
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (auto const &x : elems) {
      if (queue[k].count(x))
        continue;
      PermSet gens = queue[k];
      gens.insert(x);
      auto c = close_up(gens, g.degree());
      if (found.insert(c).second)
        queue.push_back(c);
    }
  return found;
}

PermSet conjugate_set(PermSet const &s, Perm const &g)
{
  PermSet out;
  for (auto const &x : s)
    out.insert(x.conjugated_by(g));
  return out;
}

struct OracleMaximals
{
  std::size_t classes = 0;
  std::multiset<std::size_t> orders;
};

OracleMaximals oracle_maximals(PermGroup const &g)
{
  auto subs = all_subgroups(g);
  std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<PermSet> maximal;
  for (auto const &m : subs) {
    if (m.size() == n)
      continue;
    bool is_max = true;
    for (auto const &k : subs)
      if (k.size() > m.size() && k.size() < n &&
          std::includes(k.begin(), k.end(), m.begin(), m.end()))
        is_max = false;
    if (is_max)
      maximal.push_back(m);
  }
  OracleMaximals r;
  std::set<PermSet> covered;
  auto elems = g.elements();
  for (auto const &m : maximal) {
    if (covered.count(m))
      continue;
    ++r.classes;
    r.orders.insert(m.size());
    for (auto const &x : elems)
      covered.insert(conjugate_set(m, x));
  }
  return r;
}

std::size_t oracle_subgroup_classes(PermGroup const &g)
{
  auto subs = all_subgroups(g);
  auto elems = g.elements();
  std::set<PermSet> covered;
  std::size_t count = 0;
  for (auto const &s : subs) {
    if (covered.count(s))
      continue;
    ++count;
    for (auto const &x : elems)
      covered.insert(conjugate_set(s, x));
  }
  return count;
}

std::multiset<std::size_t> orders_of(std::vector<PermGroup> const &gs)
{
  std::multiset<std::size_t> out;
  for (auto const &g : gs)
    out.insert(static_cast<std::size_t>(g.order()));
  return out;
}

} // namespace

TEST_CASE("element tables")
{
  FiniteGroup s4(groups::symmetric(4));
  CHECK(s4.order() == 24);
  CHECK(s4.element(0).is_identity());
  for (std::size_t a = 0; a < s4.order(); ++a) {
    CHECK(s4.mul(a, s4.inv(a)) == 0);
    for (std::size_t b = 0; b < s4.order(); b += 5)
      CHECK(s4.element(s4.mul(a, b)) == s4.element(a) * s4.element(b));
  }
  CHECK(s4.classes().size() == 5);
  CHECK(s4.exponent() == 12);
  CHECK(FiniteGroup(groups::alternating(5)).classes().size() == 5);
  CHECK(FiniteGroup(groups::generalized_quaternion(8)).classes().size() == 5);
  CHECK(FiniteGroup(groups::extraspecial_central_d8_cube()).classes().size() == 65);
  CHECK_THROWS_AS(FiniteGroup(groups::symmetric(7)), GateExceeded);
  CHECK_THROWS_AS(s4.index_of(Perm(5)), std::invalid_argument);
}

TEST_CASE("subgroup classes agree with the exhaustive lattice")
{
  for (auto const &g : {groups::symmetric(4), groups::alternating(5), groups::generalized_quaternion(8),
                        groups::dihedral(4), groups::dihedral(6), groups::generalized_quaternion(16)}) {
    FiniteGroup fg(g);
    auto classes = subgroup_classes(fg);
    CHECK(classes.size() == oracle_subgroup_classes(g));
    std::size_t total = 0;
    for (auto const &c : classes)
      total += c.length;
    CHECK(total == all_subgroups(g).size());
  }
}

TEST_CASE("maximal subgroups: examples")
{
  auto q8 = maximal_subgroups(groups::generalized_quaternion(8));
  CHECK(q8.size() == 3);
  CHECK(orders_of(q8) == std::multiset<std::size_t>{4, 4, 4});

  auto c5 = maximal_subgroups(groups::cyclic(5));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].order() == 1);

  auto q16 = maximal_subgroups(groups::generalized_quaternion(16));
  REQUIRE(q16.size() == 3);
  std::size_t cyclic8 = 0, quaternion8 = 0;
  for (auto const &m : q16) {
    CHECK(m.order() == 8);
    auto tags = recognize_special(m);
    if (tags.cyclic)
      ++cyclic8;
    if (tags.generalized_quaternion == 8)
      ++quaternion8;
  }
  CHECK(cyclic8 == 1);
  CHECK(quaternion8 == 2);

  CHECK(maximal_subgroups(PermGroup::trivial(3)).empty());
  CHECK_THROWS_AS(maximal_subgroups(groups::symmetric(7)), GateExceeded);
}

TEST_CASE("maximal subgroups agree with the exhaustive lattice")
{
  for (auto const &g : {groups::symmetric(4), groups::alternating(5), groups::generalized_quaternion(8),
                        groups::generalized_quaternion(16), groups::dihedral(4), groups::dihedral(6),
                        groups::affine_1d(7, 3), groups::semidihedral(16),
                        groups::direct_product(groups::klein_four(), groups::cyclic(2))}) {
    auto oracle = oracle_maximals(g);
    auto ms = maximal_subgroups(g);
    CHECK(ms.size() == oracle.classes);
    CHECK(orders_of(ms) == oracle.orders);
    for (auto const &m : ms)
      CHECK(m.is_subgroup_of(g));
  }
}

TEST_CASE("frattini: examples")
{
  CHECK(frattini(groups::generalized_quaternion(8)).order() == 2);
  FiniteGroup q8(groups::generalized_quaternion(8));
  CHECK(frattini_subgroup(q8).elements == q8.center().elements);

  CHECK(frattini(groups::direct_product(groups::klein_four(), groups::cyclic(2))).order() == 1);
  CHECK(frattini(groups::klein_four()).order() == 1);
  CHECK(frattini(groups::alternating(4)).order() == 1);
  CHECK(frattini(groups::generalized_quaternion(16)).order() == 4);
  CHECK(frattini(groups::dihedral(4)).order() == 2);
  CHECK(frattini(groups::cyclic(9)).order() == 3);
  // a non-p-group with nontrivial Frattini subgroup: C4 x C3 = C12
  CHECK(frattini(groups::cyclic(12)).order() == 2);
}

TEST_CASE("normal subgroups")
{
  FiniteGroup s4(groups::symmetric(4));
  auto ns = normal_subgroups(s4);
  REQUIRE(ns.size() == 4);
  CHECK(ns[0].order() == 1);
  CHECK(ns[1].order() == 4);
  CHECK(ns[2].order() == 12);
  CHECK(ns[3].order() == 24);
  for (auto const &n : ns)
    CHECK(s4.is_normal(n));
  CHECK(normal_subgroups(FiniteGroup(groups::alternating(5))).size() == 2);
  CHECK(normal_subgroups(FiniteGroup(groups::generalized_quaternion(8))).size() == 6);
}

TEST_CASE("normal subgroups of primitive groups have trivial Frattini subgroup")
{
  auto corpus = groups::primitive_corpus();
  CHECK(corpus.size() == 25);
  for (auto const &named : corpus) {
    CAPTURE(named.name);
    CHECK(named.group.is_transitive());
    CHECK(minimal_blocks(named.group).primitive);
    FiniteGroup fg(named.group);
    for (auto const &n : normal_subgroups(fg)) {
      FiniteGroup sub(fg.to_perm_group(n));
      CHECK(frattini_subgroup(sub).order() == 1);
    }
  }
  // the primitivity hypothesis matters: the imprimitive D8 has Frattini order 2
  CHECK_FALSE(minimal_blocks(groups::dihedral(4)).primitive);
  CHECK(frattini(groups::dihedral(4)).order() == 2);
}

TEST_CASE("recognize_special")
{
  auto q16 = recognize_special(groups::generalized_quaternion(16));
  CHECK(q16.names() == std::vector<std::string>{"p_group(2)", "generalized_quaternion(16)"});

  auto c6 = recognize_special(groups::cyclic(6));
  CHECK(c6.names() == std::vector<std::string>{"cyclic"});

  auto e = recognize_special(groups::extraspecial_central_d8_cube());
  CHECK(e.names() == std::vector<std::string>{"p_group(2)", "extraspecial"});
  FiniteGroup ef(groups::extraspecial_central_d8_cube());
  CHECK(ef.center().order() == 2);

  auto v4 = recognize_special(groups::klein_four());
  CHECK(v4.elementary_abelian);
  CHECK(v4.p_group == 2);
  CHECK_FALSE(v4.cyclic);

  CHECK(recognize_special(groups::symmetric(3)).none());
  CHECK(recognize_special(groups::semidihedral(16)).generalized_quaternion == 0);
  CHECK(recognize_special(groups::dihedral(4)).extraspecial);
  CHECK(recognize_special(groups::cyclic(8)).generalized_quaternion == 0);

  // unique involution + cyclic index-2 subgroup, checked independently
  for (auto const &g : {groups::generalized_quaternion(8), groups::generalized_quaternion(16),
                        groups::dihedral(4), groups::semidihedral(16)}) {
    FiniteGroup fg(g);
    std::size_t involutions = 0;
    bool half_cyclic = false;
    for (std::size_t a = 0; a < fg.order(); ++a) {
      involutions += fg.element_order(a) == 2;
      half_cyclic = half_cyclic || fg.element_order(a) == fg.order() / 2;
    }
    bool expected = involutions == 1 && half_cyclic;
    CHECK((recognize_special(fg).generalized_quaternion != 0) == expected);
  }
}
