#include <stdexcept>

#include "jinf/cli.hpp"
#include "jinf/finite_group.hpp"

namespace jinf {

namespace {

void claim(std::vector<Claim> &out, std::string label, bool pass, std::string detail = {})
{
  out.push_back(Claim{std::move(label), pass, std::move(detail)});
}

void affine_shadow_claims(std::vector<Claim> &out)
{
  for (std::size_t p : {2u, 3u}) {
    std::string tag = "affine shadow A5, p = " + std::to_string(p) + ": ";
    auto ex = build_wreath_shadow("A5", p);
    auto v = wreath_verdicts(ex);
    Integer expected_order = 1;
    for (std::size_t k = 0; k < ex.shadow.top.degree(); ++k)
      expected_order *= 60;
    expected_order *= ex.shadow.top.order();
    claim(out, tag + "shadow order 60^|V| |A|", ex.shadow.model.group.order() == expected_order,
          ex.shadow.model.group.order().str());
    claim(out, tag + "G just infinite", v.g.just_infinite);
    bool coordinate = v.h.witness && v.h.witness->family_index == 0;
    claim(out, tag + "H = base x| W not just infinite, coordinate-factor basal witness",
          !v.h.just_infinite && coordinate);
    claim(out, tag + "H has index p^2", v.h_index == Integer(p * p), v.h_index.str());
    claim(out, tag + "W not normal in A", !v.w_normal_in_top);
    claim(out, tag + "M unique maximal over H", v.m_is_unique_maximal_over_h,
          std::to_string(v.maximals_over_h) + " maximal subgroups over H");
    claim(out, tag + "M = base x| V just infinite", v.m.just_infinite);
  }
}

void quaternionic_claims(std::vector<Claim> &out, long precision, std::size_t order_gate)
{
  std::string tag = "quaternionic type: ";
  auto ex = build_quaternionic_example(precision);
  claim(out, tag + "|Q16| = 16", ex.q16.order() == 16);
  claim(out, tag + "8-dim order representation faithful", ex.integral.faithful);
  claim(out, tag + "irreducible over Q (certified)",
        ex.over_q.status == Decision::irreducible && !ex.over_q.probabilistic, ex.over_q.evidence);
  bool split = ex.constituents.size() == 2;
  for (auto const &c : ex.constituents)
    split = split && c.rep.dimension == 4 && c.rep.faithful;
  claim(out, tag + "splits over Q2 into two faithful 4-dim constituents", split);
  auto const &prof = ex.profile;
  claim(out, tag + "constituent profile valid", validate_va_profile(prof).valid);
  auto ji = va_just_infinite(prof);
  claim(out, tag + "A x| Q16 just infinite", ji.status == VerdictStatus::ji, ji.witness.trace.front());
  auto rows = maximal_scan(prof, order_gate);
  bool maximals = rows.size() == 3;
  for (auto const &r : rows)
    maximals = maximals && r.verdict.status == VerdictStatus::ji;
  claim(out, tag + "all three maximal subgroups act irreducibly", maximals);
  FiniteGroup fg(prof.group(), order_gate);
  bool index4 = true, exact = true;
  std::size_t index4_count = 0;
  for (auto const &cls : subgroup_classes(fg)) {
    PermGroup s = fg.to_perm_group(cls.representative);
    Integer idx = prof.group().order() / s.order();
    auto v = subgroup_ji(prof, SubgroupHandle(prof.group(), s));
    if (idx == 4) {
      ++index4_count;
      index4 = index4 && v.status == VerdictStatus::not_ji;
    }
    exact = exact && v.status == (idx <= 2 ? VerdictStatus::ji : VerdictStatus::not_ji);
  }
  claim(out, tag + "index-4 subgroups not just infinite", index4 && index4_count > 0,
        std::to_string(index4_count) + " classes");
  claim(out, tag + "open K just infinite iff index at most 2", exact);
  claim(out, tag + "constituent is of quaternionic type", quaternionic_type(prof).value);
  auto h = respthm_check(prof, prof, order_gate);
  claim(out, tag + "hereditary criterion blocked by condition (iii)",
        h.status == VerdictStatus::hypothesis_failed && h.witness.failed_condition == "iii");
}

void extraspecial_claims(std::vector<Claim> &out)
{
  std::string tag = "extraspecial 2^(1+6): ";
  auto ex = build_extraspecial_example();
  claim(out, tag + "|E| = 128", ex.e.order() == 128);
  std::size_t linear = 0, eight = 0;
  for (auto d : ex.character_degrees) {
    linear += d == 1;
    eight += d == 8;
  }
  claim(out, tag + "character degrees 1 x 64 and 8 x 1",
        linear == 64 && eight == 1 && ex.character_degrees.size() == 65);
  claim(out, tag + "smallest faithful degree 8", ex.min_faithful_degree == 8,
        std::to_string(ex.min_faithful_degree));
  claim(out, tag + "2.Alt(8) minimal faithful degree 8 (cited reference data)",
        ExtraspecialExample::kCitedDoubleCoverAlt8Degree == 8);
}

void classification_claims(std::vector<Claim> &out, long precision, std::size_t order_gate)
{
  auto corpus = two_group_corpus();
  corpus.push_back(build_quaternionic_example(precision).profile);
  for (auto &prof : corpus) {
    prof.precision = precision;
    auto r = lgm_oracle(prof, order_gate);
    bool expect_primitive = prof.name == "C2" || prof.name == "Q16 constituent";
    bool ok = r.consistent && (expect_primitive ? r.blocks.verdict == Primitivity::primitive
                                                : r.blocks.verdict == Primitivity::imprimitive && r.blocks.verified);
    claim(out, "2-adic classification: " + prof.name + " in dimension " + std::to_string(prof.dimension()) + " " +
                   to_string(r.blocks.verdict),
          ok, r.evidence);
  }
}

} // namespace

std::vector<Claim> verify_paper(std::string const &which, long precision, std::size_t order_gate)
{
  std::vector<Claim> out;
  bool all = which == "all";
  if (!all && which != "1" && which != "2" && which != "3" && which != "leethm")
    throw std::invalid_argument("verify-paper takes 1, 2, 3, leethm or all");
  if (all || which == "1")
    affine_shadow_claims(out);
  if (all || which == "2")
    quaternionic_claims(out, precision, order_gate);
  if (all || which == "3")
    extraspecial_claims(out);
  if (all || which == "leethm")
    classification_claims(out, precision, order_gate);
  return out;
}

} // namespace jinf
