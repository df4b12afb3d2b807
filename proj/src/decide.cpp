#include "jinf/decide.hpp"

#include <stdexcept>

namespace jinf {

namespace {

struct Irreducibility
{
  Decision status = Decision::unknown;
  std::vector<RatVec> witness;
  std::vector<PadicVec> padic_witness;
  std::string evidence;
};

Irreducibility decide_irreducible(VaProfile const &profile)
{
  Irreducibility out;
  if (auto const *prep = std::get_if<PadicRep>(&profile.action)) {
    auto v = irreducible_over_Qp(*prep);
    out.status = v.status;
    out.padic_witness = v.witness;
    out.evidence = v.evidence + " (precision " + std::to_string(v.precision) + ")";
    return out;
  }
  auto const &rep = std::get<MatRep>(profile.action);
  if (profile.p == 0) {
    auto v = irreducible_over_Q(rep, profile.seed);
    out.status = v.probabilistic ? Decision::unknown : v.status;
    out.witness = v.witness;
    out.evidence = v.evidence + (v.probabilistic ? " (sampled, not certified)" : "");
    return out;
  }
  auto v = irreducible_over_Qp(rep, profile.p, profile.precision);
  out.status = v.status;
  out.padic_witness = v.witness;
  out.evidence = v.evidence + " (precision " + std::to_string(v.precision) + ")";
  return out;
}

Verdict from_irreducibility(Irreducibility const &r, std::string const &field, std::string const &provenance)
{
  Verdict v;
  v.provenance = provenance;
  v.witness.trace.push_back("over " + field + ": " + r.evidence);
  switch (r.status) {
  case Decision::irreducible: v.status = VerdictStatus::ji; break;
  case Decision::reducible:
    v.status = VerdictStatus::not_ji;
    v.witness.invariant_subspace = r.witness;
    v.witness.padic_invariant_subspace = r.padic_witness;
    break;
  case Decision::unknown: v.status = VerdictStatus::unknown; break;
  }
  return v;
}

void require_valid(VaProfile const &profile)
{
  auto r = validate_va_profile(profile);
  if (!r.valid)
    throw std::invalid_argument("invalid profile " + profile.name + ": condition " + r.failed + " fails");
}

constexpr char const *kIrreducibilityRule = "irreducibility criterion for virtually abelian groups";

} // namespace

PermGroup const &VaProfile::group() const
{
  return std::visit([](auto const &r) -> PermGroup const & { return r.group; }, action);
}

std::size_t VaProfile::dimension() const
{
  return std::visit([](auto const &r) { return r.dimension; }, action);
}

bool VaProfile::faithful() const
{
  return std::visit([](auto const &r) { return r.faithful; }, action);
}

VaProfile make_profile(MatRep action, long p, std::string name)
{
  if (p != 0 && !is_prime(p))
    throw std::invalid_argument("profile prime must be prime or 0");
  VaProfile out;
  out.p = p;
  action.ring = out.ring();
  out.action = std::move(action);
  out.name = std::move(name);
  return out;
}

VaProfile make_profile(PadicRep action, std::string name)
{
  VaProfile out;
  out.p = action.images.front()(0, 0).prime();
  action.ring = out.ring();
  out.action = std::move(action);
  out.name = std::move(name);
  return out;
}

std::string to_string(VerdictStatus s)
{
  switch (s) {
  case VerdictStatus::ji: return "ji";
  case VerdictStatus::not_ji: return "not_ji";
  case VerdictStatus::hji: return "hji";
  case VerdictStatus::not_hji: return "not_hji";
  case VerdictStatus::hypothesis_failed: return "hypothesis_failed";
  case VerdictStatus::unknown: return "unknown";
  }
  return "unknown";
}

ValidationReport validate_va_profile(VaProfile const &profile)
{
  ValidationReport r;
  auto fail = [&](std::string cond, std::string why) {
    r.failed = std::move(cond);
    r.trace.push_back(std::move(why));
    return r;
  };
  if (!profile.faithful())
    return fail("faithful", "some nontrivial element of Q acts trivially");
  r.trace.push_back("action faithful, so A is self-centralising");
  if (auto const *prep = std::get_if<PadicRep>(&profile.action)) {
    for (std::size_t k = 0; k < prep->images.size(); ++k) {
      if (min_valuation(prep->images[k]) < 0)
        return fail("integral", "generator " + std::to_string(k) + " has an entry of negative valuation");
      if (determinant(prep->images[k]).valuation() != 0)
        return fail("unit-determinant", "generator " + std::to_string(k) + " has non-unit determinant");
    }
  } else {
    auto const &rep = std::get<MatRep>(profile.action);
    Integer p(profile.p);
    for (std::size_t k = 0; k < rep.images.size(); ++k) {
      for (auto const &x : rep.images[k].data()) {
        bool ok = profile.p == 0 ? denominator(x) == 1 : (x == 0 || valuation(x, p) >= 0);
        if (!ok)
          return fail("integral", "generator " + std::to_string(k) + " has entry " + to_string(x) + " outside " +
                                      profile.ring());
      }
      Rational det = determinant(rep.images[k]);
      bool unit = profile.p == 0 ? (det == 1 || det == -1) : valuation(det, p) == 0;
      if (!unit)
        return fail("unit-determinant", "generator " + std::to_string(k) + " has determinant " + to_string(det) +
                                            ", not a unit of " + profile.ring());
    }
  }
  r.trace.push_back("entries in " + profile.ring() + ", generator determinants are units");
  r.valid = true;
  return r;
}

VaProfile restrict_profile(VaProfile const &profile, PermGroup const &sub)
{
  VaProfile out = profile;
  std::visit([&](auto const &r) { out.action = restrict_rep(r, sub); }, profile.action);
  return out;
}

Verdict va_just_infinite(VaProfile const &profile)
{
  require_valid(profile);
  return from_irreducibility(decide_irreducible(profile), profile.field(), kIrreducibilityRule);
}

Verdict subgroup_ji(VaProfile const &profile, SubgroupHandle const &s)
{
  require_valid(profile);
  if (!s.parent.same_group(profile.group()))
    throw std::invalid_argument("subgroup handle belongs to a different group");
  if (s.group.is_trivial()) {
    Verdict v;
    v.provenance = "rank-one lattices";
    v.status = profile.dimension() == 1 ? VerdictStatus::ji : VerdictStatus::not_ji;
    v.witness.trace.push_back("S trivial: A = " + profile.ring() + "^" + std::to_string(profile.dimension()) +
                              (profile.dimension() == 1 ? " is just infinite" : " has a rank-one summand of infinite index"));
    if (profile.dimension() > 1) {
      RatVec e(profile.dimension(), Rational(0));
      e[0] = 1;
      v.witness.invariant_subspace.push_back(e);
    }
    return v;
  }
  auto sub = restrict_profile(profile, s.group);
  auto v = from_irreducibility(decide_irreducible(sub), profile.field(), kIrreducibilityRule);
  v.witness.trace.insert(v.witness.trace.begin(), "restricted to S of index " + s.index().str());
  return v;
}

std::vector<ScanRow> maximal_scan(VaProfile const &profile, std::size_t order_gate)
{
  require_valid(profile);
  PermGroup const &q = profile.group();
  std::vector<ScanRow> rows;
  for (auto const &mx : maximal_subgroups(q, order_gate)) {
    ScanRow row;
    row.subgroup = mx;
    row.index = q.order() / mx.order();
    row.label = "A";
    if (!mx.is_trivial()) {
      auto tags = recognize_special(mx);
      std::string n = mx.order().str();
      row.label += " x| " + (tags.generalized_quaternion ? "Q" + n : tags.cyclic ? "C" + n : "M of order " + n);
    }
    row.verdict = subgroup_ji(profile, SubgroupHandle(q, mx));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace jinf
