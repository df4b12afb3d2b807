#include "doctest.h"

#include <map>

#include "jinf/decide.hpp"
#include "jinf/finite_group.hpp"

using namespace jinf;

namespace {

RatMat M(std::vector<std::vector<Rational>> rows)
{
  std::vector<RatVec> r(rows.begin(), rows.end());
  return RatMat::from_rows(r);
}

MatRep rep_of(PermGroup const &g, std::vector<RatMat> const &mats)
{
  return rep_from_data(g.degree(), g.generators(), mats);
}

MatRep c3_companion() { return rep_of(groups::cyclic(3), {M({{0, -1}, {1, -1}})}); }

// Left multiplication on Q(z) + Q(z) y, z^4 = -1, y^2 = -1, y z = z^-1 y,
// written out entry by entry.
MatRep q16_by_hand()
{
  RatMat z(8, 8, Rational(0)), y(8, 8, Rational(0));
  for (int half = 0; half < 2; ++half)
    for (int k = 0; k < 4; ++k) {
      if (k < 3)
        z(4 * half + k + 1, 4 * half + k) = 1;
      else
        z(4 * half, 4 * half + k) = -1;
    }
  int neg_index[4] = {0, 3, 2, 1};
  int neg_sign[4] = {1, -1, -1, -1};
  for (int k = 0; k < 4; ++k) {
    y(4 + neg_index[k], k) = neg_sign[k];
    y(neg_index[k], 4 + k) = -neg_sign[k];
  }
  return rep_of(groups::generalized_quaternion(16), {z, y});
}

QuaternionicExample const &quaternionic()
{
  static QuaternionicExample ex = build_quaternionic_example();
  return ex;
}

VaProfile corpus_member(std::string const &name)
{
  for (auto &p : two_group_corpus())
    if (p.name == name)
      return p;
  throw std::logic_error("no corpus member " + name);
}

} // namespace

TEST_CASE("profile validation")
{
  CHECK(validate_va_profile(make_profile(c3_companion())).valid);
  auto c2 = make_profile(rep_of(groups::cyclic(2), {M({{-1}})}));
  CHECK(validate_va_profile(c2).valid);
  auto bad = c2;
  std::get<MatRep>(bad.action).images[0] = M({{2}});
  auto r = validate_va_profile(bad);
  CHECK_FALSE(r.valid);
  CHECK(r.failed == "unit-determinant");

  auto swap = rep_of(groups::cyclic(2), {M({{0, 2}, {Rational(1, 2), 0}})});
  CHECK(validate_va_profile(make_profile(swap)).failed == "integral");
  CHECK(validate_va_profile(make_profile(swap, 2)).failed == "integral");
  CHECK(validate_va_profile(make_profile(swap, 3)).valid);

  auto trivial_action = rep_of(groups::cyclic(2), {M({{1}})});
  CHECK(validate_va_profile(make_profile(trivial_action)).failed == "faithful");
  CHECK_THROWS_AS(va_just_infinite(make_profile(trivial_action)), std::invalid_argument);

  CHECK(validate_va_profile(quaternionic().profile).valid);
}

TEST_CASE("just infinite iff irreducible over the field of fractions")
{
  CHECK(va_just_infinite(make_profile(c3_companion(), 3)).status == VerdictStatus::ji);
  CHECK(va_just_infinite(make_profile(c3_companion())).status == VerdictStatus::ji);
  CHECK(va_just_infinite(make_profile(c3_companion(), 7)).status == VerdictStatus::not_ji);
  auto diag = make_profile(rep_of(groups::cyclic(2), {M({{1, 0}, {0, -1}})}));
  auto v = va_just_infinite(diag);
  REQUIRE(v.status == VerdictStatus::not_ji);
  REQUIRE(v.witness.invariant_subspace.size() == 1);
  CHECK(is_invariant(std::get<MatRep>(diag.action), v.witness.invariant_subspace));
  CHECK(va_just_infinite(quaternionic().profile).status == VerdictStatus::ji);
}

TEST_CASE("Q16 order representation and its 2-adic splitting")
{
  auto const &ex = quaternionic();
  CHECK(ex.q16.order() == 16);
  auto hand = q16_by_hand();
  REQUIRE(hand.images.size() == ex.integral.images.size());
  for (std::size_t k = 0; k < hand.images.size(); ++k)
    CHECK(hand.images[k].equals(ex.integral.images[k]));
  CHECK(ex.integral.faithful);
  CHECK(ex.over_q.status == Decision::irreducible);
  CHECK_FALSE(ex.over_q.probabilistic);
  REQUIRE(ex.constituents.size() == 2);
  for (auto const &c : ex.constituents) {
    CHECK(c.rep.dimension == 4);
    CHECK(c.rep.faithful);
  }
  auto bundle = paper_examples(2);
  REQUIRE(bundle.two);
  CHECK(bundle.two->profile.dimension() == 4);
  CHECK_THROWS_AS(paper_examples(4), std::invalid_argument);
}

TEST_CASE("Q16 subgroups: just infinite exactly in index at most 2")
{
  auto const &prof = quaternionic().profile;
  FiniteGroup fg(prof.group());
  std::map<Integer, int> ji_by_index, total_by_index;
  for (auto const &cls : subgroup_classes(fg)) {
    PermGroup s = fg.to_perm_group(cls.representative);
    Integer idx = prof.group().order() / s.order();
    auto v = subgroup_ji(prof, SubgroupHandle(prof.group(), s));
    INFO("index " << idx);
    CHECK(v.status == (idx <= 2 ? VerdictStatus::ji : VerdictStatus::not_ji));
    total_by_index[idx] += 1;
  }
  CHECK(total_by_index[Integer(2)] == 3);
  CHECK(total_by_index[Integer(4)] >= 1);

  auto rows = maximal_scan(prof);
  REQUIRE(rows.size() == 3);
  for (auto const &r : rows) {
    CHECK(r.index == 2);
    CHECK(r.verdict.status == VerdictStatus::ji);
  }
}

TEST_CASE("maximal scans")
{
  auto c3 = make_profile(c3_companion(), 3);
  auto rows = maximal_scan(c3);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].label == "A");
  CHECK(rows[0].verdict.status == VerdictStatus::not_ji);

  auto q8 = corpus_member("Q8");
  bool some_not_ji = false;
  for (auto const &r : maximal_scan(q8))
    some_not_ji = some_not_ji || r.verdict.status == VerdictStatus::not_ji;
  CHECK(some_not_ji);

  auto line = make_profile(rep_of(groups::cyclic(2), {M({{-1}})}), 2);
  auto lr = maximal_scan(line);
  REQUIRE(lr.size() == 1);
  CHECK(lr[0].verdict.status == VerdictStatus::ji);
}

TEST_CASE("full subgroup agrees with the whole group")
{
  std::vector<VaProfile> profiles = two_group_corpus();
  profiles.push_back(make_profile(c3_companion(), 3));
  profiles.push_back(make_profile(c3_companion(), 7));
  for (auto const &p : profiles) {
    INFO(p.name);
    auto whole = va_just_infinite(p);
    auto sub = subgroup_ji(p, SubgroupHandle(p.group(), p.group()));
    CHECK(whole.status == sub.status);
  }
}

TEST_CASE("quaternionic type")
{
  CHECK(quaternionic_type(quaternionic().profile).value);
  CHECK_FALSE(quaternionic_type(make_profile(c3_companion(), 3)).value);
  CHECK_FALSE(quaternionic_type(make_profile(quaternionic().integral)).value);
  CHECK_FALSE(quaternionic_type(corpus_member("Q8")).value);
}

TEST_CASE("primitive 2-adic 2-groups are the classified ones")
{
  std::vector<VaProfile> corpus = two_group_corpus();
  corpus.push_back(quaternionic().profile);
  for (auto const &p : corpus) {
    INFO(p.name);
    auto r = lgm_oracle(p);
    CHECK(r.consistent);
    bool expect_primitive = p.name == "C2" || p.name == "Q16 constituent";
    if (expect_primitive) {
      CHECK(r.blocks.verdict == Primitivity::primitive);
      CHECK_FALSE(r.classified_case.empty());
    } else {
      CHECK(r.blocks.verdict == Primitivity::imprimitive);
      CHECK(r.blocks.verified);
    }
  }
  auto q8 = lgm_oracle(corpus_member("Q8"));
  CHECK(q8.blocks.blocks == 2);
  CHECK(q8.blocks.block_dimension == 2);
  auto d8 = lgm_oracle(corpus_member("D8"));
  CHECK(d8.blocks.blocks == 2);
  CHECK(d8.blocks.block_dimension == 1);

  auto c3 = lgm_oracle(make_profile(c3_companion(), 3));
  CHECK(c3.blocks.verdict == Primitivity::primitive);
  CHECK(c3.classified_case == "C_p in dimension p-1");
  CHECK(c3.consistent);
  CHECK_THROWS_AS(lgm_oracle(make_profile(c3_companion(), 7)), std::invalid_argument);
}

TEST_CASE("hereditarily just infinite checker")
{
  auto dihedral = make_profile(rep_of(groups::cyclic(2), {M({{-1}})}), 2, "pro-2 dihedral");
  auto v = respthm_check(dihedral, dihedral);
  CHECK(v.status == VerdictStatus::hji);

  auto const &q = quaternionic().profile;
  auto vq = respthm_check(q, q);
  CHECK(vq.status == VerdictStatus::hypothesis_failed);
  CHECK(vq.witness.failed_condition == "iii");

  auto c3 = make_profile(c3_companion(), 3);
  auto vc = respthm_check(c3, c3);
  CHECK(vc.status == VerdictStatus::hypothesis_failed);
  CHECK(vc.witness.failed_condition == "ii");

  auto overZ = make_profile(c3_companion());
  CHECK(respthm_check(overZ, overZ).witness.failed_condition == "i");

  // H = A x| C8 inside the quaternionic-type group
  auto rows = maximal_scan(q);
  auto h = restrict_profile(q, rows[0].subgroup);
  auto vh = respthm_check(q, h);
  CHECK(vh.status != VerdictStatus::hji);
  CHECK_THROWS_AS(respthm_check(h, q), std::invalid_argument);
}

TEST_CASE("extraspecial group of order 128")
{
  auto ex = paper_examples(3);
  REQUIRE(ex.three);
  CHECK(ex.three->e.order() == 128);
  std::map<std::size_t, int> degs;
  for (auto d : ex.three->character_degrees)
    degs[d] += 1;
  CHECK(degs == std::map<std::size_t, int>{{1, 64}, {8, 1}});
  CHECK(ex.three->min_faithful_degree == 8);
  CHECK(ExtraspecialExample::kCitedDoubleCoverAlt8Degree == 8);
}
