#include "jinf/basal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "jinf/finite_group.hpp"

namespace jinf {

namespace {

std::vector<Point> support_of(std::vector<Perm> const &gens, std::size_t degree)
{
  std::vector<bool> moved(degree, false);
  for (auto const &g : gens)
    for (Point x = 0; x < degree; ++x)
      if (g[x] != x)
        moved[x] = true;
  std::vector<Point> out;
  for (Point x = 0; x < degree; ++x)
    if (moved[x])
      out.push_back(x);
  return out;
}

// Index of the conjugate generated by gens (a conjugate of the listed ones,
// so of the same order), or conjugates.size().
std::size_t locate(std::vector<PermGroup> const &conjugates,
                   std::vector<std::vector<Point>> const &supports,
                   std::vector<Perm> const &gens)
{
  if (conjugates.empty())
    return 0;
  auto sup = support_of(gens, conjugates.front().degree());
  for (std::size_t i = 0; i < conjugates.size(); ++i) {
    if (supports[i] != sup)
      continue;
    bool inside = true;
    for (auto const &x : gens)
      if (!conjugates[i].contains(x)) {
        inside = false;
        break;
      }
    if (inside)
      return i;
  }
  return conjugates.size();
}

std::vector<std::vector<Point>> supports_of(std::vector<PermGroup> const &groups)
{
  std::vector<std::vector<Point>> out;
  for (auto const &g : groups)
    out.push_back(support_of(g.generators(), g.degree()));
  return out;
}

std::vector<Perm> conjugate_gens(std::vector<Perm> const &gens, Perm const &by)
{
  std::vector<Perm> out;
  for (auto const &x : gens)
    out.push_back(x.conjugated_by(by));
  return out;
}

std::vector<PermGroup> conjugate_orbit(PermGroup const &g, PermGroup const &b)
{
  std::vector<PermGroup> orbit{b};
  std::vector<std::vector<Point>> sups{support_of(b.generators(), b.degree())};
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (auto const &s : g.generators()) {
      auto gens = conjugate_gens(orbit[k].generators(), s);
      if (locate(orbit, sups, gens) == orbit.size()) {
        sups.push_back(support_of(gens, b.degree()));
        orbit.emplace_back(b.degree(), gens);
      }
    }
  return orbit;
}

bool pairwise_commute(std::vector<PermGroup> const &groups)
{
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      for (auto const &a : groups[i].generators())
        for (auto const &b : groups[j].generators())
          if (a * b != b * a)
            return false;
  return true;
}

Integer product_of_orders(std::vector<PermGroup> const &groups)
{
  Integer prod = 1;
  for (auto const &g : groups)
    prod *= g.order();
  return prod;
}

} // namespace

std::size_t find_conjugate(std::vector<PermGroup> const &conjugates, PermGroup const &x)
{
  return locate(conjugates, supports_of(conjugates), x.generators());
}

BasalCheck is_basal(PermGroup const &g, PermGroup const &b, std::string label, std::size_t order_gate)
{
  if (b.is_trivial())
    throw std::invalid_argument("is_basal: B is trivial");
  if (!b.is_subgroup_of(g))
    throw std::invalid_argument("is_basal: B is not contained in G");
  BasalCheck check;
  BasalCertificate &c = check.data;
  c.subgroup = b;
  c.label = std::move(label);
  c.conjugates = conjugate_orbit(g, b);
  c.closure = normal_closure(g, b);
  c.commuting = pairwise_commute(c.conjugates);
  Integer prod = product_of_orders(c.conjugates);
  c.order_identity = c.closure.order() == prod;
  if (c.holds()) {
    c.trivial_intersections = true;
  } else if (b.order() <= order_gate) {
    bool trivial = true;
    for (std::size_t i = 0; i < c.conjugates.size() && trivial; ++i)
      for (std::size_t j = i + 1; j < c.conjugates.size() && trivial; ++j)
        if (!intersection(c.conjugates[i], c.conjugates[j], order_gate).is_trivial())
          trivial = false;
    c.trivial_intersections = trivial;
  }
  if (c.holds()) {
    check.certificate = c;
  } else {
    if (!c.commuting)
      check.reason = "distinct conjugates do not commute";
    else
      check.reason = "normal closure has order " + to_string(c.closure.order()) +
                     ", product of conjugate orders is " + to_string(prod);
  }
  return check;
}

bool recheck_certificate(PermGroup const &g, BasalCertificate const &cert)
{
  std::vector<Perm> gens;
  for (auto const &c : cert.conjugates)
    for (auto const &x : c.generators())
      gens.push_back(x);
  PermGroup closure(g.degree(), gens);
  if (!closure.same_group(normal_closure(g, cert.subgroup)))
    return false;
  if (!closure.same_group(cert.closure))
    return false;
  if (conjugate_orbit(g, cert.subgroup).size() != cert.conjugates.size())
    return false;
  return pairwise_commute(cert.conjugates) && closure.order() == product_of_orders(cert.conjugates);
}

IntersectionBasal basal_from_intersections(PermGroup const &g, PermGroup const &k, std::size_t order_gate)
{
  if (k.is_trivial())
    throw std::invalid_argument("basal_from_intersections: K is trivial");
  if (!k.is_subgroup_of(g))
    throw std::invalid_argument("basal_from_intersections: K is not contained in G");
  PermGroup closure = normal_closure(g, k);
  if (!k.is_normal_in(closure))
    throw std::invalid_argument("hypothesis fails: K is not normal in its normal closure");
  FiniteGroup fn(closure, order_gate);
  IntersectionBasal result;
  result.closure_center_trivial = fn.center().order() == 1;
  result.conjugates_of_k = conjugate_orbit(g, k);
  std::size_t n = result.conjugates_of_k.size();
  if (n > 16)
    throw GateExceeded("conjugate-gate", "more than 16 conjugates of K");
  std::vector<Subgroup> subs;
  for (auto const &c : result.conjugates_of_k)
    subs.push_back(fn.from_perm_group(c));

  for (std::size_t size = n; size >= 1; --size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    bool any_nontrivial = false;
    do {
      ElementSet meet = fn.whole().elements;
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) {
          meet &= subs[i].elements;
          subset.push_back(i);
        }
      if (meet.count() <= 1)
        continue;
      any_nontrivial = true;
      Subgroup kj = fn.trivial();
      for (auto x : meet.members())
        if (!kj.elements.contains(x))
          kj = fn.join(kj, x);
      auto check = is_basal(g, fn.to_perm_group(kj), "intersection of conjugates of K", order_gate);
      if (check.certificate) {
        result.certificate = *check.certificate;
        result.subset = subset;
        return result;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (any_nontrivial)
      throw std::logic_error("model violation: no maximal intersection of conjugates is basal");
  }
  throw std::logic_error("model violation: K has no nontrivial intersection");
}

// Shadow models ---------------------------------------------------------------

PermGroup TopQuotient::preimage(PermGroup const &top_subgroup) const
{
  std::vector<Perm> lifted;
  for (auto const &s : top_subgroup.generators())
    lifted.push_back(lift(s));
  return base.extended_by(lifted);
}

PermGroup TopQuotient::image(PermGroup const &h) const
{
  std::vector<Perm> gens;
  for (auto const &s : h.generators())
    gens.push_back(project(s));
  return PermGroup(top.degree(), gens);
}

std::vector<std::vector<Point>> all_blocks_containing_zero(PermGroup const &g)
{
  if (!g.is_transitive())
    throw std::invalid_argument("block systems require a transitive group");
  std::size_t n = g.degree();
  // finest block system in which all of `seed` lie in one block; returns that block
  auto block_of = [&](std::vector<Point> const &seed) {
    std::vector<Point> parent(n);
    std::iota(parent.begin(), parent.end(), Point{0});
    auto find = [&](Point x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<Point, Point>> queue;
    auto unite = [&](Point a, Point b) {
      a = find(a);
      b = find(b);
      if (a == b)
        return;
      parent[std::max(a, b)] = std::min(a, b);
      queue.emplace_back(a, b);
    };
    for (std::size_t i = 1; i < seed.size(); ++i)
      unite(seed[0], seed[i]);
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (auto const &s : g.generators())
        unite(s[queue[k].first], s[queue[k].second]);
    std::vector<Point> block;
    for (Point x = 0; x < n; ++x)
      if (find(x) == find(0))
        block.push_back(x);
    return block;
  };
  std::set<std::vector<Point>> found{{0}};
  std::vector<std::vector<Point>> queue{{0}};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Point b = 0; b < n; ++b) {
      if (std::binary_search(queue[k].begin(), queue[k].end(), b))
        continue;
      auto seed = queue[k];
      seed.push_back(b);
      auto block = block_of(seed);
      if (found.insert(block).second)
        queue.push_back(block);
    }
  std::vector<std::vector<Point>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](auto const &a, auto const &b) { return a.size() < b.size(); });
  return out;
}

ShadowModel wreath_shadow_model(groups::Wreath const &w, PermGroup const &top)
{
  if (!top.is_transitive())
    throw std::invalid_argument("wreath shadow needs a transitive top group");
  ShadowModel model;
  model.group = w.group;
  model.provenance = "coordinate factors and block products of the wreath shadow";
  TopQuotient q;
  q.base = w.base;
  q.top = top;
  q.project = [w](Perm const &g) { return w.project(g); };
  q.lift = [w](Perm const &t) { return w.lift_top(t); };
  model.quotient = q;
  for (auto const &block : all_blocks_containing_zero(top)) {
    std::vector<Perm> gens;
    for (auto b : block)
      for (auto &x : w.factor_generators(b))
        gens.push_back(std::move(x));
    std::string label;
    if (block.size() == 1)
      label = "coordinate factor 0";
    else if (block.size() == top.degree())
      label = "base group";
    else {
      label = "block product {";
      for (std::size_t i = 0; i < block.size(); ++i)
        label += (i ? "," : "") + std::to_string(block[i]);
      label += "}";
    }
    auto check = is_basal(w.group, PermGroup(w.group.degree(), gens), label);
    if (!check.certificate)
      throw std::logic_error("wreath shadow family member is not basal: " + check.reason);
    model.basal_family.push_back(*check.certificate);
  }
  return model;
}

std::vector<std::vector<std::size_t>> conjugation_orbits(BasalCertificate const &cert, PermGroup const &h)
{
  auto const &conj = cert.conjugates;
  auto sups = supports_of(conj);
  std::size_t n = conj.size();
  std::vector<std::vector<std::size_t>> images;
  for (auto const &s : h.generators()) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = locate(conj, sups, conjugate_gens(conj[i].generators(), s));
      if (img[i] == n)
        throw std::invalid_argument("H does not permute the conjugates of B");
    }
    images.push_back(std::move(img));
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    std::vector<std::size_t> orb{i};
    seen[i] = true;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (auto const &img : images)
        if (!seen[img[orb[k]]]) {
          seen[img[orb[k]]] = true;
          orb.push_back(img[orb[k]]);
        }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

PermGroup shadow_core(ShadowModel const &model, PermGroup const &h)
{
  if (model.quotient && model.quotient->base.is_subgroup_of(h)) {
    auto const &q = *model.quotient;
    return q.preimage(core(q.top, q.image(h)));
  }
  return core(model.group, h);
}

std::optional<PermjiWitness> permji_witness(ShadowModel const &model, PermGroup const &h)
{
  if (!h.is_subgroup_of(model.group))
    throw std::invalid_argument("permji_witness: H is not a subgroup of the model group");
  std::optional<PermGroup> core_h;
  for (std::size_t idx = 0; idx < model.basal_family.size(); ++idx) {
    auto const &cert = model.basal_family[idx];
    auto orbits = conjugation_orbits(cert, h);
    if (orbits.size() < 2)
      continue;
    if (!core_h)
      core_h = shadow_core(model, h);
    auto sups = supports_of(cert.conjugates);
    bool fixes_all = true;
    for (auto const &c : core_h->generators()) {
      for (std::size_t i = 0; i < cert.conjugates.size() && fixes_all; ++i)
        if (locate(cert.conjugates, sups, conjugate_gens(cert.conjugates[i].generators(), c)) != i)
          fixes_all = false;
      if (!fixes_all)
        break;
    }
    if (fixes_all)
      return PermjiWitness{idx, std::move(orbits)};
  }
  return std::nullopt;
}

ShadowVerdict shadow_ji_verdict(ShadowModel const &model, PermGroup const &h)
{
  ShadowVerdict v;
  v.witness = permji_witness(model, h);
  v.just_infinite = !v.witness.has_value();
  return v;
}

std::vector<PermGroup> maximal_subgroups_containing(ShadowModel const &model, PermGroup const &h,
                                                    std::size_t order_gate)
{
  auto all_maximals = [](FiniteGroup const &fg) {
    std::vector<Subgroup> out;
    for (auto const &m : maximal_subgroup_classes(fg))
      for (auto &c : fg.conjugates(m))
        out.push_back(std::move(c));
    return out;
  };
  std::vector<PermGroup> result;
  if (model.group.order() <= order_gate) {
    FiniteGroup fg(model.group, order_gate);
    Subgroup hs = fg.from_perm_group(h);
    for (auto const &m : all_maximals(fg))
      if (hs.elements.subset_of(m.elements))
        result.push_back(fg.to_perm_group(m));
    return result;
  }
  if (!model.quotient || !model.quotient->base.is_subgroup_of(h))
    throw GateExceeded("order-gate", "shadow group exceeds the order gate and H does not contain the base");
  auto const &q = *model.quotient;
  FiniteGroup top(q.top, order_gate);
  Subgroup hbar = top.from_perm_group(q.image(h));
  for (auto const &m : all_maximals(top))
    if (hbar.elements.subset_of(m.elements))
      result.push_back(q.preimage(top.to_perm_group(m)));
  return result;
}

MaxcorReport maxcor_equivalence_check(ShadowModel const &model, PermGroup const &h, bool require_normal,
                                      std::size_t order_gate)
{
  if (h.is_trivial())
    throw std::invalid_argument("maxcor_equivalence_check: H is trivial");
  if (require_normal && !h.is_normal_in(model.group))
    throw std::invalid_argument("maxcor_equivalence_check: H is not normal");
  MaxcorReport r;
  r.lhs = shadow_ji_verdict(model, h);
  r.maximals = maximal_subgroups_containing(model, h, order_gate);
  for (auto const &m : r.maximals) {
    r.maximal_verdicts.push_back(shadow_ji_verdict(model, m));
    r.rhs = r.rhs && r.maximal_verdicts.back().just_infinite;
  }
  r.agree = r.lhs.just_infinite == r.rhs;
  return r;
}

std::optional<std::pair<PermGroup, MaxcorReport>>
find_non_normal_separation(ShadowModel const &model, std::size_t order_gate)
{
  if (!model.quotient)
    throw std::invalid_argument("find_non_normal_separation: model has no top quotient");
  auto const &q = *model.quotient;
  FiniteGroup top(q.top, order_gate);
  for (auto const &cls : subgroup_classes(top)) {
    if (top.is_normal(cls.representative))
      continue;
    PermGroup h = q.preimage(top.to_perm_group(cls.representative));
    auto r = maxcor_equivalence_check(model, h, false, order_gate);
    if (!r.lhs.just_infinite && r.rhs)
      return std::make_pair(std::move(h), std::move(r));
  }
  return std::nullopt;
}

std::vector<PermGroup> shadow_normal_subgroups(ShadowModel const &model, std::size_t order_gate)
{
  std::vector<PermGroup> result;
  if (model.quotient && model.group.order() > order_gate) {
    auto const &q = *model.quotient;
    FiniteGroup top(q.top, order_gate);
    for (auto const &n : normal_subgroups(top))
      result.push_back(q.preimage(top.to_perm_group(n)));
    return result;
  }
  FiniteGroup fg(model.group, order_gate);
  for (auto const &n : normal_subgroups(fg))
    if (n.order() > 1)
      result.push_back(fg.to_perm_group(n));
  return result;
}

} // namespace jinf
