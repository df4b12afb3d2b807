#include "jinf/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

namespace jinf {

struct PermGroup::Chain
{
  struct Level
  {
    Point base = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit_pos;
    std::vector<Point> orbit;
    std::vector<Perm> transversal;
    std::vector<Perm> transversal_inv;
  };

  std::size_t degree = 1;
  std::vector<Perm> generators;
  std::vector<Level> levels;
  Integer order = 1;

  void compute_orbit(std::size_t i)
  {
    Level &lv = levels[i];
    lv.orbit_pos.assign(degree, -1);
    lv.orbit.clear();
    lv.transversal.clear();
    lv.transversal_inv.clear();
    lv.orbit.push_back(lv.base);
    lv.orbit_pos[lv.base] = 0;
    lv.transversal.emplace_back(degree);
    lv.transversal_inv.emplace_back(degree);
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      Point beta = lv.orbit[k];
      for (auto const &s : lv.gens) {
        Point img = s[beta];
        if (lv.orbit_pos[img] >= 0)
          continue;
        lv.orbit_pos[img] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(img);
        Perm u = lv.transversal[k] * s;
        lv.transversal_inv.push_back(u.inverse());
        lv.transversal.push_back(std::move(u));
      }
    }
  }

  /// Returns the residue and the level at which sifting stopped.
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const
  {
    for (std::size_t i = from; i < levels.size(); ++i) {
      Level const &lv = levels[i];
      int pos = lv.orbit_pos[g[lv.base]];
      if (pos < 0)
        return {std::move(g), i};
      g = g * lv.transversal_inv[pos];
    }
    return {std::move(g), levels.size()};
  }

  static Point moved_point(Perm const &g)
  {
    for (Point x = 0; x < g.degree(); ++x)
      if (g[x] != x)
        return x;
    return 0;
  }

  bool fixes_prefix(Perm const &g, std::size_t upto) const
  {
    for (std::size_t l = 0; l < upto; ++l)
      if (g[levels[l].base] != levels[l].base)
        return false;
    return true;
  }

  void push_level(Point base)
  {
    Level lv;
    lv.base = base;
    levels.push_back(std::move(lv));
  }

  /// Deterministic Schreier-Sims. Levels strictly below `start` must already
  /// be complete with respect to their generators.
  void schreier_sims(long start)
  {
    long i = start;
    while (i >= 0) {
      bool restarted = false;
      Level &lv = levels[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; !restarted && k < lv.orbit.size(); ++k) {
        for (std::size_t s = 0; s < lv.gens.size(); ++s) {
          Perm const &gen = lv.gens[s];
          Point img = gen[lv.orbit[k]];
          Perm partial = lv.transversal[k] * gen;
          if (partial == lv.transversal[static_cast<std::size_t>(lv.orbit_pos[img])])
            continue;
          Perm h = partial * lv.transversal_inv[static_cast<std::size_t>(lv.orbit_pos[img])];
          auto [residue, stop] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
          if (residue.is_identity())
            continue;
          if (stop == levels.size())
            push_level(moved_point(residue));
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
            levels[l].gens.push_back(residue);
            compute_orbit(l);
          }
          i = static_cast<long>(stop);
          restarted = true;
          break;
        }
      }
      if (!restarted)
        --i;
    }
    order = 1;
    for (auto const &lv : levels)
      order *= static_cast<unsigned long>(lv.orbit.size());
  }

  void add_generator(Perm const &g)
  {
    generators.push_back(g);
    auto [residue, stop] = strip(g, 0);
    if (residue.is_identity())
      return;
    (void)stop;
    // g itself joins level 0 and any deeper level whose prefix it fixes.
    std::size_t deepest = 0;
    while (deepest < levels.size() && fixes_prefix(g, deepest + 1))
      ++deepest;
    if (deepest == levels.size())
      push_level(moved_point(g));
    for (std::size_t l = 0; l <= deepest && l < levels.size(); ++l) {
      levels[l].gens.push_back(g);
      compute_orbit(l);
    }
    schreier_sims(static_cast<long>(std::min(deepest, levels.size() - 1)));
  }
};

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens,
                     std::vector<Point> const &base_prefix)
{
  if (degree == 0)
    throw std::invalid_argument("permutation group of degree 0");
  auto chain = std::make_shared<Chain>();
  chain->degree = degree;
  for (auto &g : gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " does not match group degree " +
                                  std::to_string(degree));
    if (!g.is_identity())
      chain->generators.push_back(std::move(g));
  }
  for (auto b : base_prefix) {
    if (b >= degree)
      throw std::invalid_argument("base point out of range");
    chain->push_level(b);
  }
  for (auto const &g : chain->generators) {
    bool fixes_all = chain->fixes_prefix(g, chain->levels.size());
    if (fixes_all)
      chain->push_level(Chain::moved_point(g));
  }
  for (std::size_t l = 0; l < chain->levels.size(); ++l) {
    for (auto const &g : chain->generators)
      if (chain->fixes_prefix(g, l))
        chain->levels[l].gens.push_back(g);
    chain->compute_orbit(l);
  }
  if (!chain->levels.empty())
    chain->schreier_sims(static_cast<long>(chain->levels.size()) - 1);
  chain_ = std::move(chain);
}

std::size_t PermGroup::degree() const { return chain_->degree; }
std::vector<Perm> const &PermGroup::generators() const { return chain_->generators; }
Integer const &PermGroup::order() const { return chain_->order; }

Perm PermGroup::sift(Perm const &g) const
{
  if (g.degree() != degree())
    throw std::invalid_argument("degree mismatch in membership test");
  return chain_->strip(g, 0).first;
}

bool PermGroup::contains(Perm const &g) const
{
  if (g.degree() != degree())
    return false;
  return sift(g).is_identity();
}

std::vector<Point> PermGroup::base() const
{
  std::vector<Point> b;
  for (auto const &lv : chain_->levels)
    b.push_back(lv.base);
  return b;
}

std::vector<std::size_t> PermGroup::transversal_sizes() const
{
  std::vector<std::size_t> sizes;
  for (auto const &lv : chain_->levels)
    sizes.push_back(lv.orbit.size());
  return sizes;
}

std::vector<Perm> PermGroup::stabilizer_generators(std::size_t level) const
{
  if (level == 0)
    return generators();
  if (level >= chain_->levels.size())
    return {};
  return chain_->levels[level].gens;
}

std::vector<Perm> PermGroup::elements(std::size_t max_order) const
{
  if (order() > max_order)
    throw GateExceeded("order-gate", "group order " + order().str() +
                                         " exceeds order gate " +
                                         std::to_string(max_order));
  std::vector<Perm> result{Perm(degree())};
  // g = u_{k-1} ... u_1 u_0, built from the deepest level upwards
  for (std::size_t l = chain_->levels.size(); l-- > 0;) {
    auto const &lv = chain_->levels[l];
    std::vector<Perm> next;
    next.reserve(result.size() * lv.transversal.size());
    for (auto const &x : result)
      for (auto const &u : lv.transversal)
        next.push_back(x * u);
    result = std::move(next);
  }
  auto id = std::find_if(result.begin(), result.end(),
                         [](Perm const &p) { return p.is_identity(); });
  std::iter_swap(result.begin(), id);
  return result;
}

std::vector<Point> PermGroup::orbit(Point x) const
{
  std::vector<bool> seen(degree(), false);
  std::vector<Point> orb{x};
  seen[x] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (auto const &g : generators()) {
      Point y = g[orb[k]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const
{
  std::vector<bool> seen(degree(), false);
  std::vector<std::vector<Point>> result;
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x])
      continue;
    auto orb = orbit(x);
    for (auto y : orb)
      seen[y] = true;
    result.push_back(std::move(orb));
  }
  return result;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree(); }

bool PermGroup::is_subgroup_of(PermGroup const &other) const
{
  if (other.degree() != degree())
    return false;
  for (auto const &g : generators())
    if (!other.contains(g))
      return false;
  return true;
}

bool PermGroup::same_group(PermGroup const &other) const
{
  return other.degree() == degree() && order() == other.order() &&
         is_subgroup_of(other);
}

bool PermGroup::is_normal_in(PermGroup const &other) const
{
  if (!is_subgroup_of(other))
    return false;
  for (auto const &h : generators())
    for (auto const &g : other.generators())
      if (!contains(h.conjugated_by(g)))
        return false;
  return true;
}

bool PermGroup::is_abelian() const
{
  auto const &gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

PermGroup PermGroup::conjugated_by(Perm const &g) const
{
  std::vector<Perm> gens;
  for (auto const &h : generators())
    gens.push_back(h.conjugated_by(g));
  return PermGroup(degree(), std::move(gens));
}

PermGroup PermGroup::extended_by(std::vector<Perm> const &extra) const
{
  auto chain = std::make_shared<Chain>(*chain_);
  for (auto const &g : extra) {
    if (g.degree() != degree())
      throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity())
      chain->add_generator(g);
  }
  PermGroup result;
  result.chain_ = std::move(chain);
  return result;
}

PermGroup group_from_generators(std::vector<Perm> const &gens)
{
  if (gens.empty())
    throw std::invalid_argument("empty generator list");
  std::size_t degree = gens.front().degree();
  for (auto const &g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generators have different degrees");
  return PermGroup(degree, gens);
}

SubgroupHandle::SubgroupHandle(PermGroup parent_group, std::vector<Perm> const &gens)
: parent(std::move(parent_group)), group(parent.degree(), gens)
{
  for (auto const &g : gens)
    if (!parent.contains(g))
      throw std::invalid_argument("subgroup generator " + g.cycle_string() +
                                  " is not in the parent group");
}

SubgroupHandle::SubgroupHandle(PermGroup parent_group, PermGroup sub)
: SubgroupHandle(std::move(parent_group), sub.generators())
{
  group = std::move(sub);
}

// Orbits and blocks -----------------------------------------------------

std::vector<std::vector<Point>> orbits(PermGroup const &g) { return g.orbits(); }

namespace {

struct UnionFind
{
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Point a, Point b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<std::vector<Point>> classes(UnionFind &uf, std::size_t n)
{
  std::map<Point, std::vector<Point>> cells;
  for (Point x = 0; x < n; ++x)
    cells[uf.find(x)].push_back(x);
  std::vector<std::vector<Point>> result;
  for (auto &[rep, cell] : cells)
    result.push_back(std::move(cell));
  return result;
}

} // namespace

std::vector<std::vector<Point>> block_system_joining(PermGroup const &g, Point a, Point b)
{
  UnionFind uf(g.degree());
  std::deque<std::pair<Point, Point>> queue;
  if (uf.unite(a, b))
    queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (auto const &s : g.generators()) {
      Point u = uf.find(s[x]);
      Point v = uf.find(s[y]);
      if (uf.unite(u, v))
        queue.emplace_back(u, v);
    }
  }
  return classes(uf, g.degree());
}

BlockSystems minimal_blocks(PermGroup const &g)
{
  if (!g.is_transitive())
    throw std::invalid_argument("minimal_blocks requires a transitive group");
  BlockSystems result;
  std::vector<std::vector<std::vector<Point>>> candidates;
  std::vector<std::vector<Point>> blocks_of_zero;
  for (Point b = 1; b < g.degree(); ++b) {
    auto system = block_system_joining(g, 0, b);
    if (system.size() == 1)
      continue;
    auto const &block = system.front(); // contains 0
    if (std::find(blocks_of_zero.begin(), blocks_of_zero.end(), block) != blocks_of_zero.end())
      continue;
    blocks_of_zero.push_back(block);
    candidates.push_back(std::move(system));
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < candidates.size() && minimal; ++j) {
      if (i == j)
        continue;
      auto const &bi = blocks_of_zero[i];
      auto const &bj = blocks_of_zero[j];
      if (bj.size() < bi.size() && std::includes(bi.begin(), bi.end(), bj.begin(), bj.end()))
        minimal = false;
    }
    if (minimal)
      result.minimal_systems.push_back(candidates[i]);
  }
  result.primitive = result.minimal_systems.empty();
  return result;
}

// Subgroup operators ----------------------------------------------------

namespace {

PermGroup extend_group(PermGroup const &g, std::vector<Perm> const &extra)
{
  return g.extended_by(extra);
}

} // namespace

PermGroup normal_closure(PermGroup const &g, PermGroup const &h)
{
  PermGroup n(g.degree(), h.generators());
  std::vector<Perm> gens = n.generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (auto const &s : g.generators()) {
      Perm c = gens[k].conjugated_by(s);
      if (!n.contains(c)) {
        n = extend_group(n, {c});
        gens.push_back(std::move(c));
      }
    }
  }
  return n;
}

CosetAction coset_action(PermGroup const &g, PermGroup const &h, std::size_t max_index)
{
  if (g.order() / h.order() > max_index)
    throw GateExceeded("index-gate", "subgroup index exceeds coset gate");
  CosetAction result;
  result.representatives.emplace_back(g.degree());
  std::vector<std::vector<Point>> images(g.generators().size());
  auto locate = [&](Perm const &x) -> std::size_t {
    for (std::size_t i = 0; i < result.representatives.size(); ++i)
      if (h.contains(x * result.representatives[i].inverse()))
        return i;
    result.representatives.push_back(x);
    return result.representatives.size() - 1;
  };
  for (std::size_t k = 0; k < result.representatives.size(); ++k) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      Perm x = result.representatives[k] * g.generators()[s];
      images[s].push_back(static_cast<Point>(locate(x)));
    }
  }
  for (auto &img : images)
    result.generator_images.emplace_back(std::move(img));
  return result;
}

PermGroup action_kernel(PermGroup const &g, std::vector<Perm> const &images)
{
  if (images.size() != g.generators().size())
    throw std::invalid_argument("one image per generator required");
  if (images.empty())
    return g;
  std::size_t n = g.degree();
  std::size_t k = images.front().degree();
  std::vector<Perm> combined;
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::vector<Point> img(n + k);
    for (std::size_t x = 0; x < n; ++x)
      img[x] = g.generators()[i][static_cast<Point>(x)];
    for (std::size_t x = 0; x < k; ++x)
      img[n + x] = static_cast<Point>(n + images[i][static_cast<Point>(x)]);
    combined.emplace_back(std::move(img));
  }
  std::vector<Point> prefix(k);
  std::iota(prefix.begin(), prefix.end(), static_cast<Point>(n));
  PermGroup big(n + k, combined, prefix);
  std::vector<Perm> kernel_gens;
  for (auto const &s : big.stabilizer_generators(k)) {
    std::vector<Point> img(s.images().begin(), s.images().begin() + static_cast<long>(n));
    kernel_gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(kernel_gens));
}

PermGroup core(PermGroup const &g, PermGroup const &h, std::size_t max_index)
{
  if (!h.is_subgroup_of(g))
    throw std::invalid_argument("core: H is not contained in G");
  auto action = coset_action(g, h, max_index);
  return action_kernel(g, action.generator_images);
}

std::vector<PermGroup> conjugates(PermGroup const &g, PermGroup const &h)
{
  std::vector<PermGroup> orbit{h};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (auto const &s : g.generators()) {
      PermGroup c = orbit[k].conjugated_by(s);
      bool known = false;
      for (auto const &o : orbit)
        if (c.is_subgroup_of(o)) {
          known = true;
          break;
        }
      if (!known)
        orbit.push_back(std::move(c));
    }
  }
  return orbit;
}

PermGroup intersection(PermGroup const &a, PermGroup const &b, std::size_t max_order)
{
  PermGroup const &small = a.order() <= b.order() ? a : b;
  PermGroup const &large = a.order() <= b.order() ? b : a;
  PermGroup result = PermGroup::trivial(a.degree());
  for (auto const &x : small.elements(max_order))
    if (large.contains(x) && !result.contains(x))
      result = extend_group(result, {x});
  return result;
}

PermGroup join(PermGroup const &a, PermGroup const &b)
{
  return extend_group(a, b.generators());
}

RelativeOps relative_ops(PermGroup const &g, PermGroup const &h, std::size_t order_gate)
{
  if (!h.is_subgroup_of(g))
    throw std::invalid_argument("relative_ops: H is not contained in G");
  auto elements = g.elements(order_gate);
  PermGroup normalizer = h, centralizer = PermGroup::trivial(g.degree());
  PermGroup center = PermGroup::trivial(g.degree());
  for (auto const &x : elements) {
    bool normalizes = true, centralizes = true, central = true;
    for (auto const &s : h.generators()) {
      Perm c = s.conjugated_by(x);
      if (c != s)
        centralizes = false;
      if (!h.contains(c)) {
        normalizes = false;
        break;
      }
    }
    for (auto const &s : g.generators())
      if (s * x != x * s) {
        central = false;
        break;
      }
    if (normalizes && !normalizer.contains(x))
      normalizer = extend_group(normalizer, {x});
    if (centralizes && normalizes && !centralizer.contains(x))
      centralizer = extend_group(centralizer, {x});
    if (central && !center.contains(x))
      center = extend_group(center, {x});
  }
  PermGroup closure = normal_closure(g, h);
  PermGroup core_group = core(g, h, order_gate);
  if (!core_group.is_normal_in(g))
    throw std::logic_error("computed core is not normal");
  return RelativeOps{closure, core_group, normalizer, centralizer, center};
}

} // namespace jinf
