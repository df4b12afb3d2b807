#include <stdexcept>

#include "jinf/decide.hpp"

namespace jinf {

namespace {

template <class T>
bool verify_blocks(MatRepT<T> const &rep, std::vector<std::vector<std::vector<T>>> const &blocks)
{
  if (blocks.size() < 2)
    return false;
  std::size_t d = rep.dimension;
  std::vector<std::vector<T>> all;
  for (auto const &b : blocks) {
    if (b.empty() || b.size() != blocks.front().size())
      return false;
    all.insert(all.end(), b.begin(), b.end());
  }
  if (all.size() != d || span_basis(all, d, all.front().front()).size() != d)
    return false;
  for (auto const &g : rep.images)
    for (auto const &b : blocks) {
      auto tb = detail::image_subspace(g, b, d);
      bool found = false;
      for (auto const &c : blocks)
        found = found || detail::same_subspace(c, tb);
      if (!found)
        return false;
    }
  return true;
}

template <class T>
BlockSummary summarise(MatRepT<T> const &rep, BlockSystemResult<T> const &res)
{
  BlockSummary s;
  s.verdict = res.verdict;
  s.blocks = res.blocks.size();
  s.block_dimension = res.blocks.empty() ? 0 : res.blocks.front().size();
  if (res.verdict == Primitivity::imprimitive)
    s.verified = verify_blocks(rep, res.blocks);
  for (auto const &r : res.rows)
    s.rows.push_back("maximal subgroup of " + r.subgroup + ", index " + std::to_string(r.index) + ": " +
                     (r.excluded ? "excluded, " : "") + r.analysis);
  return s;
}

bool is_p_group(PermGroup const &q, long p)
{
  return q.is_trivial() || recognize_special(q).p_group == static_cast<std::size_t>(p);
}

} // namespace

TypeCheck quaternionic_type(VaProfile const &profile)
{
  TypeCheck t;
  auto need = [&](bool ok, std::string const &what) {
    t.evidence.push_back(what + (ok ? ": yes" : ": no"));
    return ok;
  };
  if (!need(profile.p == 2, "O = Z2") || !need(profile.dimension() == 4, "d = 4") ||
      !need(profile.faithful(), "action faithful"))
    return t;
  auto tags = recognize_special(profile.group());
  if (!need(tags.generalized_quaternion == 16, "Q is generalized quaternion of order 16"))
    return t;
  auto v = va_just_infinite(profile);
  t.value = need(v.status == VerdictStatus::ji, "irreducible over Q2");
  return t;
}

BlockSummary block_summary(VaProfile const &profile, std::size_t order_gate)
{
  if (auto const *prep = std::get_if<PadicRep>(&profile.action))
    return summarise(*prep, matrix_block_system_Qp(*prep, order_gate));
  auto const &rep = std::get<MatRep>(profile.action);
  if (profile.p == 0)
    return summarise(rep, matrix_block_system_Q(rep, order_gate));
  return summarise(rep, matrix_block_system_Qp(rep, profile.p, profile.precision, order_gate));
}

ClassificationReport lgm_oracle(VaProfile const &profile, std::size_t order_gate)
{
  if (profile.p == 0)
    throw std::invalid_argument("classification check needs O = Z_p");
  PermGroup const &q = profile.group();
  if (q.is_trivial() || !is_p_group(q, profile.p))
    throw std::invalid_argument("classification check needs Q a nontrivial p-group");
  if (!profile.faithful())
    throw std::invalid_argument("classification check needs a faithful action");
  auto ji = va_just_infinite(profile);
  if (ji.status != VerdictStatus::ji)
    throw std::invalid_argument("classification check needs an action irreducible over " + profile.field() +
                                ", got " + to_string(ji.status));
  ClassificationReport r;
  r.blocks = block_summary(profile, order_gate);
  auto tags = recognize_special(q);
  std::size_t d = profile.dimension();
  if (tags.cyclic && q.order() == profile.p && d == static_cast<std::size_t>(profile.p - 1))
    r.classified_case = "C_p in dimension p-1";
  else if (profile.p == 2 && tags.generalized_quaternion == 16 && d == 4)
    r.classified_case = "Q16 in dimension 4";
  switch (r.blocks.verdict) {
  case Primitivity::primitive:
    r.consistent = !r.classified_case.empty();
    r.evidence = r.consistent ? "primitive and classified as " + r.classified_case
                              : "primitive but matches neither classified case";
    break;
  case Primitivity::imprimitive:
    r.consistent = r.blocks.verified;
    r.evidence = "imprimitive with " + std::to_string(r.blocks.blocks) + " blocks of dimension " +
                 std::to_string(r.blocks.block_dimension) + (r.blocks.verified ? "" : " (block check failed)");
    break;
  case Primitivity::unknown:
    r.consistent = true;
    r.evidence = "primitivity undecided, no classification claim";
    break;
  }
  return r;
}

Verdict respthm_check(VaProfile const &g, VaProfile const &h, std::size_t order_gate)
{
  if (!validate_va_profile(g).valid || !validate_va_profile(h).valid)
    throw std::invalid_argument("respthm_check needs valid profiles");
  if (g.p != h.p || g.dimension() != h.dimension() || g.padic() != h.padic() ||
      g.group().degree() != h.group().degree() || !h.group().is_subgroup_of(g.group()))
    throw std::invalid_argument("H is not a finite-index sub-profile of G");
  bool same_action = std::visit(
      [&](auto const &hr) {
        using R = std::decay_t<decltype(hr)>;
        auto const &gr = std::get<R>(g.action);
        for (std::size_t k = 0; k < hr.generators.size(); ++k)
          if (!gr.image_of(hr.generators[k]).equals(hr.images[k]))
            return false;
        return true;
      },
      h.action);
  if (!same_action)
    throw std::invalid_argument("H acts differently from G on the lattice");

  Verdict v;
  v.provenance = "sufficient conditions for hereditary just infiniteness";
  auto &trace = v.witness.trace;
  trace.push_back("H has index " + Integer(g.group().order() / h.group().order()).str() + " in G modulo A");
  auto fail = [&](std::string cond, std::string why) {
    trace.push_back("condition (" + cond + ") fails: " + why);
    v.status = VerdictStatus::hypothesis_failed;
    v.witness.failed_condition = std::move(cond);
    return v;
  };

  if (h.p == 0 || !is_p_group(h.group(), h.p))
    return fail("i", "needs O = Z_p with Q_H a p-group");
  trace.push_back("condition (i): O = " + h.ring() + ", Q_H a " + std::to_string(h.p) + "-group");

  bool undecided = false;
  auto self = va_just_infinite(h);
  trace.push_back("H itself: " + to_string(self.status));
  for (auto const &row : maximal_scan(h, order_gate)) {
    trace.push_back("maximal row " + row.label + " (index " + row.index.str() + "): " + to_string(row.verdict.status));
    if (row.verdict.status == VerdictStatus::not_ji)
      return fail("ii", "row " + row.label + " is not just infinite");
    undecided = undecided || row.verdict.status != VerdictStatus::ji;
  }
  if (self.status == VerdictStatus::not_ji)
    return fail("ii", "maximal subgroups not containing A map onto Q_H, and H is not just infinite");
  undecided = undecided || self.status != VerdictStatus::ji;
  trace.push_back("maximal subgroups not containing A map onto Q_H and share the verdict of H");
  if (undecided) {
    trace.push_back("condition (ii) undecided");
    v.status = VerdictStatus::unknown;
    return v;
  }
  trace.push_back("condition (ii): every maximal subgroup of finite index is just infinite");

  auto qt = quaternionic_type(h);
  if (qt.value)
    return fail("iii", "H is of quaternionic type");
  trace.push_back("condition (iii): H is not of quaternionic type");
  v.status = VerdictStatus::hji;
  return v;
}

} // namespace jinf
