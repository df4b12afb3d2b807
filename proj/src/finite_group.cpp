#include "jinf/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace jinf {

// ElementSet ------------------------------------------------------------

ElementSet::ElementSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

std::size_t ElementSet::count() const
{
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

std::vector<std::size_t> ElementSet::members() const
{
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

ElementSet &ElementSet::operator&=(ElementSet const &rhs)
{
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] &= rhs.words_[w];
  return *this;
}

bool ElementSet::subset_of(ElementSet const &rhs) const
{
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~rhs.words_[w])
      return false;
  return true;
}

std::size_t ElementSet::hash() const
{
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// FiniteGroup -----------------------------------------------------------

namespace {

struct KeyHash
{
  std::size_t operator()(std::vector<Point> const &v) const
  {
    std::size_t h = 0;
    for (auto x : v)
      h = h * 1000003u + x;
    return h;
  }
};

} // namespace

FiniteGroup::FiniteGroup(PermGroup const &g, std::size_t order_gate)
: group_(g), elements_(g.elements(order_gate))
{
  std::size_t n = elements_.size();
  base_ = g.base();
  auto const &base = base_;
  auto key_of = [&](Perm const &x) {
    std::vector<Point> key(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
      key[i] = x[base[i]];
    return key;
  };
  std::unordered_map<std::vector<Point>, std::uint32_t, KeyHash> index;
  index.reserve(n * 2);
  std::vector<std::vector<Point>> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    keys[i] = key_of(elements_[i]);
    index.emplace(keys[i], static_cast<std::uint32_t>(i));
    index_.emplace(keys[i], i);
  }
  table_.resize(n * n);
  std::vector<Point> key(base.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < base.size(); ++i)
        key[i] = elements_[b][keys[a][i]];
      table_[a * n + b] = index.at(key);
    }
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) {
        inverse_[a] = b;
        break;
      }
  orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (std::size_t x = a; x != 0; x = mul(x, a))
      ++k;
    orders_[a] = a == 0 ? 1 : k;
  }
  for (auto const &s : g.generators())
    gens_.push_back(index_of(s));

  class_of_.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of_[a] != static_cast<std::size_t>(-1))
      continue;
    std::vector<std::size_t> cls{a};
    class_of_[a] = classes_.size();
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (auto s : gens_) {
        std::size_t c = conj(cls[k], s);
        if (class_of_[c] == static_cast<std::size_t>(-1)) {
          class_of_[c] = classes_.size();
          cls.push_back(c);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

std::size_t FiniteGroup::index_of(Perm const &g) const
{
  if (!group_.contains(g))
    throw std::invalid_argument("element " + g.cycle_string() + " is not in the group");
  std::vector<Point> key(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i)
    key[i] = g[base_[i]];
  return index_.at(key);
}

std::size_t FiniteGroup::power(std::size_t a, std::size_t e) const
{
  std::size_t result = 0;
  e %= orders_[a];
  for (std::size_t k = 0; k < e; ++k)
    result = mul(result, a);
  return result;
}

std::size_t FiniteGroup::exponent() const
{
  std::size_t e = 1;
  for (auto o : orders_)
    e = std::lcm(e, o);
  return e;
}

Subgroup FiniteGroup::closure(std::vector<std::size_t> const &gens) const
{
  Subgroup h{ElementSet(order()), {}};
  for (auto g : gens)
    if (g != 0)
      h.generators.push_back(g);
  std::vector<std::size_t> queue{0};
  h.elements.insert(0);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (auto g : h.generators) {
      std::size_t x = mul(queue[k], g);
      if (!h.elements.contains(x)) {
        h.elements.insert(x);
        queue.push_back(x);
      }
    }
  return h;
}

Subgroup FiniteGroup::join(Subgroup const &h, std::size_t z) const
{
  if (h.elements.contains(z))
    return h;
  Subgroup r{h.elements, h.generators};
  r.generators.push_back(z);
  // grow by right cosets of the current group until closed
  std::vector<std::size_t> queue = h.elements.members();
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (auto g : r.generators) {
      std::size_t x = mul(queue[k], g);
      if (!r.elements.contains(x)) {
        r.elements.insert(x);
        queue.push_back(x);
      }
    }
  return r;
}

Subgroup FiniteGroup::whole() const { return closure(gens_); }

Subgroup FiniteGroup::trivial() const { return closure({}); }

Subgroup FiniteGroup::conjugate(Subgroup const &h, std::size_t g) const
{
  Subgroup r{ElementSet(order()), {}};
  for (auto x : h.elements.members())
    r.elements.insert(conj(x, g));
  for (auto s : h.generators)
    r.generators.push_back(conj(s, g));
  return r;
}

Subgroup FiniteGroup::intersect(Subgroup const &a, Subgroup const &b) const
{
  ElementSet e = a.elements;
  e &= b.elements;
  // greedy generating set
  Subgroup r = trivial();
  for (auto x : e.members())
    if (!r.elements.contains(x))
      r = join(r, x);
  return r;
}

Subgroup FiniteGroup::from_perm_group(PermGroup const &h) const
{
  std::vector<std::size_t> gens;
  for (auto const &s : h.generators())
    gens.push_back(index_of(s));
  return closure(gens);
}

PermGroup FiniteGroup::to_perm_group(Subgroup const &h) const
{
  std::vector<Perm> gens;
  for (auto s : h.generators)
    gens.push_back(elements_[s]);
  return PermGroup(group_.degree(), gens);
}

bool FiniteGroup::is_normal(Subgroup const &h) const
{
  for (auto s : h.generators)
    for (auto g : gens_)
      if (!h.elements.contains(conj(s, g)))
        return false;
  return true;
}

Subgroup FiniteGroup::normal_closure(Subgroup const &h) const
{
  Subgroup n = closure(h.generators);
  for (std::size_t k = 0; k < n.generators.size(); ++k)
    for (auto g : gens_) {
      std::size_t c = conj(n.generators[k], g);
      if (!n.elements.contains(c))
        n = join(n, c);
    }
  return n;
}

std::vector<Subgroup> FiniteGroup::conjugates(Subgroup const &h) const
{
  std::vector<Subgroup> orbit{h};
  std::unordered_set<ElementSet, ElementSetHash> seen{h.elements};
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (auto g : gens_) {
      Subgroup c = conjugate(orbit[k], g);
      if (seen.insert(c.elements).second)
        orbit.push_back(std::move(c));
    }
  return orbit;
}

Subgroup FiniteGroup::normalizer(Subgroup const &h) const
{
  Subgroup r = trivial();
  for (std::size_t g = 0; g < order(); ++g) {
    if (r.elements.contains(g))
      continue;
    bool normalizes = true;
    for (auto s : h.generators)
      if (!h.elements.contains(conj(s, g))) {
        normalizes = false;
        break;
      }
    if (normalizes)
      r = join(r, g);
  }
  return r;
}

Subgroup FiniteGroup::centralizer(Subgroup const &h) const
{
  Subgroup r = trivial();
  for (std::size_t g = 0; g < order(); ++g) {
    if (r.elements.contains(g))
      continue;
    bool commutes = true;
    for (auto s : h.generators)
      if (mul(s, g) != mul(g, s)) {
        commutes = false;
        break;
      }
    if (commutes)
      r = join(r, g);
  }
  return r;
}

Subgroup FiniteGroup::center() const { return centralizer(whole()); }

Subgroup FiniteGroup::commutator_subgroup() const
{
  Subgroup c = trivial();
  for (auto a : gens_)
    for (auto b : gens_) {
      std::size_t comm = mul(mul(inv(a), inv(b)), mul(a, b));
      if (!c.elements.contains(comm))
        c = join(c, comm);
    }
  return normal_closure(c);
}

std::vector<std::size_t> FiniteGroup::zuppos() const
{
  std::vector<std::size_t> result;
  std::vector<bool> covered(order(), false);
  for (std::size_t a = 1; a < order(); ++a) {
    if (covered[a])
      continue;
    std::size_t o = orders_[a];
    std::size_t p = 2;
    while (o % p != 0)
      ++p;
    std::size_t q = o;
    while (q % p == 0)
      q /= p;
    if (q != 1)
      continue;
    // a has prime-power order; mark every generator of <a>
    std::size_t x = a;
    for (std::size_t k = 1; k < o; ++k, x = mul(x, a))
      if (k % p != 0)
        covered[x] = true;
    result.push_back(a);
  }
  return result;
}

// Lattice -----------------------------------------------------------------

namespace {

std::size_t smallest_prime_factor(std::size_t n)
{
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return p;
  return n;
}

bool is_prime_power(std::size_t n, std::size_t &p)
{
  if (n < 2)
    return false;
  p = smallest_prime_factor(n);
  while (n % p == 0)
    n /= p;
  return n == 1;
}

// G^p [G,G] for a p-group.
Subgroup p_group_frattini(FiniteGroup const &g, std::size_t p)
{
  Subgroup f = g.commutator_subgroup();
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t y = g.power(x, p);
    if (!f.elements.contains(y))
      f = g.join(f, y);
  }
  return g.normal_closure(f);
}

// Maximal subgroups of a p-group: preimages of the hyperplanes of G/Phi.
std::vector<Subgroup> p_group_maximals(FiniteGroup const &g, std::size_t p)
{
  Subgroup phi = p_group_frattini(g, p);
  std::vector<std::size_t> basis;
  Subgroup span = phi;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!span.elements.contains(x)) {
      basis.push_back(x);
      span = g.join(span, x);
    }
  std::size_t r = basis.size();
  // coordinates of every element of G/Phi
  std::vector<std::vector<std::size_t>> coord(g.order());
  std::vector<std::size_t> digits(r, 0);
  auto phi_members = phi.elements.members();
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i)
    total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code, x = 0;
    for (std::size_t i = 0; i < r; ++i) {
      digits[i] = c % p;
      c /= p;
      x = g.mul(x, g.power(basis[i], digits[i]));
    }
    for (auto f : phi_members)
      coord[g.mul(x, f)] = digits;
  }
  std::vector<Subgroup> result;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<std::size_t> f(r);
    std::size_t c = code;
    for (std::size_t i = 0; i < r; ++i) {
      f[i] = c % p;
      c /= p;
    }
    std::size_t lead = 0;
    while (f[lead] == 0)
      ++lead;
    if (f[lead] != 1)
      continue;
    Subgroup m = phi;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (m.elements.contains(x))
        continue;
      std::size_t s = 0;
      for (std::size_t i = 0; i < r; ++i)
        s += f[i] * coord[x][i];
      if (s % p == 0)
        m = g.join(m, x);
    }
    result.push_back(std::move(m));
  }
  return result;
}

} // namespace

std::vector<SubgroupClass> subgroup_classes(FiniteGroup const &g)
{
  auto zup = g.zuppos();
  std::vector<SubgroupClass> classes{{g.trivial(), 1}};
  std::unordered_set<ElementSet, ElementSetHash> known{classes[0].representative.elements};
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (auto z : zup) {
      Subgroup const &rep = classes[k].representative;
      if (rep.elements.contains(z))
        continue;
      Subgroup j = g.join(rep, z);
      if (known.count(j.elements))
        continue;
      auto conj = g.conjugates(j);
      for (auto const &c : conj)
        known.insert(c.elements);
      classes.push_back({std::move(j), conj.size()});
    }
  }
  std::stable_sort(classes.begin(), classes.end(), [](SubgroupClass const &a, SubgroupClass const &b) {
    return a.representative.order() < b.representative.order();
  });
  return classes;
}

std::vector<Subgroup> maximal_subgroup_classes(FiniteGroup const &g)
{
  if (g.order() == 1)
    return {};
  std::size_t p = 0;
  if (is_prime_power(g.order(), p))
    return p_group_maximals(g, p);
  auto zup = g.zuppos();
  std::vector<Subgroup> result;
  for (auto const &cls : subgroup_classes(g)) {
    Subgroup const &m = cls.representative;
    if (m.order() == g.order())
      continue;
    bool maximal = true;
    for (auto z : zup) {
      if (m.elements.contains(z))
        continue;
      if (g.join(m, z).order() != g.order()) {
        maximal = false;
        break;
      }
    }
    if (maximal)
      result.push_back(m);
  }
  return result;
}

std::vector<PermGroup> maximal_subgroups(PermGroup const &g, std::size_t order_gate)
{
  FiniteGroup fg(g, order_gate);
  std::vector<PermGroup> result;
  for (auto const &m : maximal_subgroup_classes(fg))
    result.push_back(fg.to_perm_group(m));
  return result;
}

Subgroup frattini_subgroup(FiniteGroup const &g)
{
  if (g.order() == 1)
    return g.trivial();
  std::size_t p = 0;
  if (is_prime_power(g.order(), p))
    return p_group_frattini(g, p);
  ElementSet e = g.whole().elements;
  for (auto const &m : maximal_subgroup_classes(g))
    for (auto const &c : g.conjugates(m))
      e &= c.elements;
  Subgroup r = g.trivial();
  for (auto x : e.members())
    if (!r.elements.contains(x))
      r = g.join(r, x);
  return r;
}

PermGroup frattini(PermGroup const &g, std::size_t order_gate)
{
  FiniteGroup fg(g, order_gate);
  return fg.to_perm_group(frattini_subgroup(fg));
}

std::vector<Subgroup> normal_subgroups(FiniteGroup const &g)
{
  std::vector<Subgroup> result{g.trivial()};
  std::unordered_set<ElementSet, ElementSetHash> known{result[0].elements};
  auto add = [&](Subgroup s) {
    if (known.insert(s.elements).second)
      result.push_back(std::move(s));
  };
  for (auto const &cls : g.classes())
    add(g.normal_closure(g.closure({cls.front()})));
  for (std::size_t i = 0; i < result.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Subgroup prod = result[i];
      for (auto s : result[j].generators)
        prod = g.join(prod, s);
      add(std::move(prod));
    }
  std::stable_sort(result.begin(), result.end(),
                   [](Subgroup const &a, Subgroup const &b) { return a.order() < b.order(); });
  return result;
}

// Recognition -------------------------------------------------------------

std::vector<std::string> SpecialTags::names() const
{
  std::vector<std::string> out;
  if (cyclic)
    out.push_back("cyclic");
  if (elementary_abelian)
    out.push_back("elementary_abelian");
  if (p_group)
    out.push_back("p_group(" + std::to_string(p_group) + ")");
  if (generalized_quaternion)
    out.push_back("generalized_quaternion(" + std::to_string(generalized_quaternion) + ")");
  if (extraspecial)
    out.push_back("extraspecial");
  if (out.empty())
    out.push_back("none");
  return out;
}

SpecialTags recognize_special(FiniteGroup const &g)
{
  SpecialTags tags;
  std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    if (g.element_order(a) == n)
      tags.cyclic = true;
  std::size_t p = 0;
  if (!is_prime_power(n, p))
    return tags;
  tags.p_group = p;
  Subgroup whole = g.whole();
  Subgroup z = g.center();
  bool abelian = z.order() == n;
  if (abelian) {
    bool all_p = true;
    for (std::size_t a = 1; a < n; ++a)
      if (g.element_order(a) != p)
        all_p = false;
    tags.elementary_abelian = all_p;
  }
  if (p == 2 && n >= 8 && !tags.cyclic) {
    std::size_t involutions = 0;
    bool index_two_cyclic = false;
    for (std::size_t a = 1; a < n; ++a) {
      if (g.element_order(a) == 2)
        ++involutions;
      if (g.element_order(a) == n / 2)
        index_two_cyclic = true;
    }
    if (involutions == 1 && index_two_cyclic)
      tags.generalized_quaternion = n;
  }
  if (!abelian && z.order() == p) {
    bool quotient_elementary = true;
    for (std::size_t a = 0; a < n && quotient_elementary; ++a) {
      if (!z.elements.contains(g.power(a, p)))
        quotient_elementary = false;
      for (auto b : whole.generators)
        if (!z.elements.contains(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b))))
          quotient_elementary = false;
    }
    tags.extraspecial = quotient_elementary;
  }
  return tags;
}

SpecialTags recognize_special(PermGroup const &g, std::size_t order_gate)
{
  return recognize_special(FiniteGroup(g, order_gate));
}

} // namespace jinf
