#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "jinf/groups.hpp"
#include "jinf/perm_group.hpp"

using namespace jinf;

namespace {

// Exhaustive closure: the oracle for orders and membership.
std::set<Perm> closure(std::vector<Perm> const &gens, std::size_t degree)
{
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> queue{Perm(degree)};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (auto const &g : gens) {
      Perm x = queue[k] * g;
      if (seen.insert(x).second)
        queue.push_back(x);
    }
  return seen;
}

Perm random_perm(std::size_t n, std::mt19937 &rng)
{
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

// All set partitions of {0..n-1}.
void partitions(std::size_t n, std::size_t i, std::vector<std::vector<Point>> &cur,
                std::vector<std::vector<std::vector<Point>>> &out)
{
  if (i == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t c = 0, m = cur.size(); c < m; ++c) {
    cur[c].push_back(static_cast<Point>(i));
    partitions(n, i + 1, cur, out);
    cur[c].pop_back();
  }
  cur.push_back({static_cast<Point>(i)});
  partitions(n, i + 1, cur, out);
  cur.pop_back();
}

std::vector<std::vector<std::vector<Point>>> invariant_partitions(PermGroup const &g)
{
  std::vector<std::vector<std::vector<Point>>> all, result;
  std::vector<std::vector<Point>> cur;
  partitions(g.degree(), 0, cur, all);
  for (auto const &p : all) {
    std::vector<int> cell_of(g.degree());
    for (std::size_t c = 0; c < p.size(); ++c)
      for (auto x : p[c])
        cell_of[x] = static_cast<int>(c);
    bool invariant = true;
    for (auto const &s : g.generators())
      for (auto const &cell : p)
        for (auto x : cell)
          if (cell_of[s[x]] != cell_of[s[cell.front()]])
            invariant = false;
    if (invariant && p.size() > 1 && p.size() < g.degree())
      result.push_back(p);
  }
  return result;
}

} // namespace

TEST_CASE("group_from_generators: orders")
{
  auto s4 = group_from_generators({Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 1}})});
  CHECK(s4.order() == 24);
  CHECK(closure(s4.generators(), 4).size() == 24);

  CHECK(group_from_generators({Perm(5)}).order() == 1);

  auto v4 = group_from_generators({Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  CHECK(v4.order() == 4);
  CHECK(v4.is_abelian());
  for (auto const &x : v4.elements())
    CHECK((x * x).is_identity());
}

TEST_CASE("group_from_generators: errors")
{
  CHECK_THROWS_AS(group_from_generators({}), std::invalid_argument);
  CHECK_THROWS_AS(group_from_generators({Perm(3), Perm(4)}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("chain order and membership agree with exhaustive closure")
{
  std::mt19937 rng(12345);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    std::size_t n = 3 + trial % 5;
    std::size_t k = 1 + trial % 3;
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < k; ++i)
      gens.push_back(random_perm(n, rng));
    auto elems = closure(gens, n);
    if (elems.size() > 2000)
      continue;
    ++checked;
    PermGroup g(n, gens);
    CHECK(g.order() == elems.size());
    auto listed = g.elements();
    CHECK(std::set<Perm>(listed.begin(), listed.end()) == elems);
    for (int probe = 0; probe < 10; ++probe) {
      Perm x = random_perm(n, rng);
      CHECK(g.contains(x) == (elems.count(x) == 1));
    }
    // order is the product of transversal lengths
    Integer prod = 1;
    for (auto s : g.transversal_sizes())
      prod *= static_cast<unsigned long>(s);
    CHECK(prod == g.order());
  }
  CHECK(checked >= 40);
}

TEST_CASE("incremental extension matches rebuilding")
{
  auto a5 = groups::alternating(5);
  PermGroup c5(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
  auto grown = c5.extended_by({Perm::from_cycles(5, {{0, 1, 2}})});
  CHECK(grown.order() == 60);
  CHECK(grown.same_group(a5));
  auto s5 = grown.extended_by({Perm::from_cycles(5, {{0, 1}})});
  CHECK(s5.order() == 120);
}

TEST_CASE("orbits")
{
  auto triv = PermGroup::trivial(3);
  CHECK(orbits(triv) == std::vector<std::vector<Point>>{{0}, {1}, {2}});
  CHECK(orbits(groups::cyclic(4)) == std::vector<std::vector<Point>>{{0, 1, 2, 3}});
  PermGroup swap(4, {Perm::from_cycles(4, {{0, 1}})});
  CHECK(orbits(swap) == std::vector<std::vector<Point>>{{0, 1}, {2}, {3}});

  // invariance under change of generating set
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Perm> gens{random_perm(7, rng) * random_perm(7, rng)};
    gens.push_back(Perm::from_cycles(7, {{0, 1}}));
    PermGroup g(7, gens);
    if (g.order() > 1000)
      continue;
    auto elems = g.elements();
    std::vector<Perm> other{elems.begin() + 1, elems.end()};
    std::shuffle(other.begin(), other.end(), rng);
    CHECK(orbits(PermGroup(7, other)) == orbits(g));
  }
}

TEST_CASE("minimal_blocks against invariant-partition enumeration")
{
  auto c4 = groups::cyclic(4);
  auto blocks = minimal_blocks(c4);
  CHECK_FALSE(blocks.primitive);
  REQUIRE(blocks.minimal_systems.size() == 1);
  CHECK(blocks.minimal_systems[0] == std::vector<std::vector<Point>>{{0, 2}, {1, 3}});
  CHECK(invariant_partitions(c4).size() == 1);

  CHECK(minimal_blocks(groups::symmetric(4)).primitive);
  CHECK(invariant_partitions(groups::symmetric(4)).empty());

  auto d8 = groups::dihedral(4);
  CHECK_FALSE(minimal_blocks(d8).primitive);
  CHECK(!invariant_partitions(d8).empty());

  CHECK_THROWS_AS(minimal_blocks(PermGroup(4, {Perm::from_cycles(4, {{0, 1}})})), std::invalid_argument);

  // every transitive group of degree 6 in a small sample agrees with the oracle
  for (auto const &g : {groups::cyclic(6), groups::dihedral(6), groups::projective_line_group(5, false),
                        groups::alternating(6), groups::dihedral(5), groups::affine_1d(7, 3)}) {
    auto inv = invariant_partitions(g);
    auto mb = minimal_blocks(g);
    CHECK(mb.primitive == inv.empty());
    for (auto const &sys : mb.minimal_systems) {
      auto sorted = sys;
      bool found = false;
      for (auto p : inv) {
        for (auto &c : p)
          std::sort(c.begin(), c.end());
        std::sort(p.begin(), p.end());
        if (p == sorted)
          found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("relative_ops against exhaustive conjugation")
{
  auto s3 = groups::symmetric(3);
  PermGroup h(3, {Perm::from_cycles(3, {{0, 1}})});
  auto ops = relative_ops(s3, h);
  CHECK(ops.normal_closure.order() == 6);
  CHECK(ops.core.order() == 1);
  CHECK(ops.normalizer.order() == 2);
  CHECK(ops.centralizer.order() == 2);
  CHECK(ops.center_of_g.order() == 1);

  auto a3 = groups::alternating(3).extended_by({});
  PermGroup a3_in_s3(3, a3.generators());
  auto normal_ops = relative_ops(s3, a3_in_s3);
  CHECK(normal_ops.normal_closure.same_group(a3_in_s3));
  CHECK(normal_ops.core.same_group(a3_in_s3));

  auto d8 = groups::dihedral(4);
  PermGroup refl(4, {Perm::from_cycles(4, {{1, 3}})});
  auto d8_ops = relative_ops(d8, refl);
  CHECK(d8_ops.core.order() == 1);
  CHECK(d8_ops.center_of_g.order() == 2);

  // oracle: core = intersection of all conjugates
  auto elems = d8.elements();
  std::set<Perm> inter;
  for (auto const &x : refl.elements())
    inter.insert(x);
  for (auto const &g : elems) {
    std::set<Perm> next;
    for (auto const &x : inter)
      if (refl.contains(x.conjugated_by(g.inverse())))
        next.insert(x);
    inter = next;
  }
  CHECK(inter.size() == d8_ops.core.order());

  CHECK_THROWS_AS(relative_ops(d8, PermGroup(4, {Perm::from_cycles(4, {{0, 1}})})), std::invalid_argument);
}

TEST_CASE("action kernel and core for large groups")
{
  auto w = groups::wreath_product(groups::alternating(5), groups::cyclic(4));
  CHECK(w.group.order() == Integer(60) * 60 * 60 * 60 * 4);
  // H = base x <shift by 2>: index 2, normal, its core is itself
  PermGroup h = w.base.extended_by({w.lift_top(Perm::from_cycles(4, {{0, 2}, {1, 3}}))});
  auto k = core(w.group, h);
  CHECK(k.same_group(h));
  // block action kernel is the base group
  std::vector<Perm> images;
  for (auto const &g : w.group.generators())
    images.push_back(w.project(g));
  CHECK(action_kernel(w.group, images).same_group(w.base));
}

TEST_CASE("standard builders have the expected orders")
{
  CHECK(groups::generalized_quaternion(16).order() == 16);
  CHECK(groups::semidihedral(16).order() == 16);
  CHECK(groups::extraspecial_central_d8_cube().order() == 128);
  CHECK(groups::projective_line_group(7, false).order() == 168);
  CHECK(groups::projective_line_group(7, true).order() == 336);
  CHECK(groups::gl32_on_points().order() == 168);
  CHECK(groups::agl32().order() == 1344);
  CHECK(groups::affine_f8(false).order() == 56);
  CHECK(groups::affine_f8(true).order() == 168);
  CHECK(groups::affine_1d(7, 3).order() == 21);
}
