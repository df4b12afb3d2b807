// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "jinf/cli.hpp"
#include "jinf/finite_group.hpp"
#include "jinf/profile_io.hpp"
#include "oracles.hpp"

using namespace jinf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome
{
  bool pass = true;
  std::string detail;

  void require(bool ok, std::string const &what)
  {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int id, std::string const &title, double limit_s, std::function<void(Outcome &)> const &body)
{
  Outcome o;
  auto start = Clock::now();
  try {
    body(o);
  } catch (std::exception const &e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0)
    o.require(s < limit_s, "over time limit");
  std::ostringstream line;
  line.precision(2);
  line << std::fixed << (o.pass ? "PASS" : "FAIL") << " C" << id << " " << title << " (" << s << " s";
  if (limit_s > 0)
    line << ", limit " << limit_s << " s";
  line << ")";
  if (!o.pass)
    line << " [" << o.detail << "]";
  std::cout << line.str() << std::endl;
  failures += !o.pass;
}

std::string slurp(std::string const &path)
{
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RatMat M(std::vector<std::vector<long>> rows)
{
  std::vector<RatVec> r;
  for (auto const &row : rows) {
    RatVec v;
    for (long x : row)
      v.emplace_back(x);
    r.push_back(v);
  }
  return RatMat::from_rows(r);
}

MatRep rep_of(PermGroup const &g, std::vector<RatMat> const &mats)
{
  return rep_from_data(g.degree(), g.generators(), mats);
}

// Every verdict status the deciders produce for a profile, in a fixed order.
std::string verdict_fingerprint(VaProfile const &prof)
{
  std::string s = to_string(va_just_infinite(prof).status);
  for (auto const &row : maximal_scan(prof))
    s += "," + row.label + "=" + to_string(row.verdict.status);
  s += quaternionic_type(prof).value ? ",quaternionic" : ",not-quaternionic";
  if (prof.p > 0 && !prof.group().is_trivial() &&
      recognize_special(prof.group()).p_group == static_cast<std::size_t>(prof.p)) {
    auto h = respthm_check(prof, prof);
    s += ",hereditary=" + to_string(h.status) + h.witness.failed_condition;
    s += ",blocks=" + to_string(block_summary(prof).verdict);
  }
  return s;
}

} // namespace

int main()
{
  criterion(1, "quaternionic type: Q16 order rep, 2-adic splitting, ji exactly in index <= 2", 5, [](Outcome &o) {
    auto ex = build_quaternionic_example(64);
    o.require(ex.q16.order() == 16, "|Q16|");
    o.require(ex.integral.dimension == 8 && ex.integral.faithful, "8-dim faithful");
    o.require(ex.over_q.status == Decision::irreducible && !ex.over_q.probabilistic, "irreducible over Q");
    o.require(ex.constituents.size() == 2, "two Q2 constituents");
    for (auto const &c : ex.constituents)
      o.require(c.rep.dimension == 4 && c.rep.faithful, "4-dim faithful constituent");
    auto const &prof = ex.profile;
    o.require(validate_va_profile(prof).valid, "valid profile");
    o.require(va_just_infinite(prof).status == VerdictStatus::ji, "constituent ji");
    auto rows = maximal_scan(prof);
    o.require(rows.size() == 3, "three maximal rows");
    for (auto const &r : rows)
      o.require(r.verdict.status == VerdictStatus::ji, "maximal row " + r.label + " ji");
    FiniteGroup fg(prof.group());
    std::size_t index4 = 0;
    for (auto const &cls : subgroup_classes(fg)) {
      PermGroup s = fg.to_perm_group(cls.representative);
      Integer idx = prof.group().order() / s.order();
      auto v = subgroup_ji(prof, SubgroupHandle(prof.group(), s));
      index4 += idx == 4;
      o.require(v.status == (idx <= 2 ? VerdictStatus::ji : VerdictStatus::not_ji),
                "subgroup of index " + idx.str());
    }
    o.require(index4 > 0, "some index-4 subgroup");
  });

  criterion(2, "primitive 2-adic 2-groups: only C2 in dim 1 and Q16 in dim 4", 30, [](Outcome &o) {
    auto corpus = two_group_corpus();
    corpus.push_back(build_quaternionic_example(64).profile);
    std::map<std::string, ClassificationReport> by_name;
    for (auto const &p : corpus) {
      auto r = lgm_oracle(p);
      by_name.emplace(p.name, r);
      bool classified = (p.name == "C2" && p.dimension() == 1) || (p.name == "Q16 constituent" && p.dimension() == 4);
      o.require(r.consistent, p.name + " consistent");
      if (classified)
        o.require(r.blocks.verdict == Primitivity::primitive && !r.classified_case.empty(), p.name + " primitive");
      else
        o.require(r.blocks.verdict == Primitivity::imprimitive && r.blocks.verified, p.name + " imprimitive");
    }
    o.require(by_name.size() == 7, "seven corpus members");
    auto const &q8 = by_name.at("Q8");
    o.require(q8.blocks.blocks * q8.blocks.block_dimension == 4 && q8.blocks.verified, "Q8 4-dim blocks");
    auto const &d8 = by_name.at("D8");
    o.require(d8.blocks.blocks * d8.blocks.block_dimension == 2 && d8.blocks.verified, "D8 2-dim blocks");
  });

  criterion(3, "affine A5 shadows, p = 2 and 3: G ji, H not ji via a coordinate factor, unique M ji", 60,
            [](Outcome &o) {
              for (std::size_t p : {2u, 3u}) {
                std::string tag = "p = " + std::to_string(p) + ": ";
                auto ex = build_wreath_shadow("A5", p);
                auto v = wreath_verdicts(ex);
                o.require(v.g.just_infinite, tag + "G ji");
                o.require(!v.h.just_infinite, tag + "H not ji");
                o.require(v.h.witness && ex.shadow.model.basal_family.at(v.h.witness->family_index).conjugates.size() ==
                                             ex.shadow.top.degree(),
                          tag + "coordinate-factor witness");
                o.require(v.h_index == Integer(p * p), tag + "index p^2");
                o.require(v.m_is_unique_maximal_over_h, tag + "unique maximal over H");
                o.require(v.m.just_infinite, tag + "M ji");
              }
            });

  criterion(4, "maximal-subgroup criterion on every normal subgroup of the shadow corpus, plus a non-normal failure",
            0, [](Outcome &o) {
              std::size_t checked = 0;
              for (auto const &tag : {"A5", "PSL(2,7)"})
                for (auto const &top : shadow_top_corpus()) {
                  std::string name = std::string(tag) + " wr " + top.name;
                  auto s = make_wreath_shadow(tag, top.group);
                  for (auto const &n : shadow_normal_subgroups(s.model)) {
                    o.require(maxcor_equivalence_check(s.model, n).agree, name + " normal of order " + n.order().str());
                    ++checked;
                  }
                  auto sep = find_non_normal_separation(s.model);
                  o.require(sep && !sep->first.is_normal_in(s.model.group) && !sep->second.agree,
                            name + " non-normal separation");
                }
              o.require(checked > 0, "normal subgroups checked");
            });

  criterion(5, "Frattini subgroup of every normal subgroup of the primitive corpus is trivial", 60, [](Outcome &o) {
    auto corpus = groups::primitive_corpus();
    o.require(!corpus.empty(), "corpus");
    for (auto const &named : corpus) {
      FiniteGroup fg(named.group);
      for (auto const &n : normal_subgroups(fg))
        o.require(frattini_subgroup(FiniteGroup(fg.to_perm_group(n))).order() == 1, named.name);
    }
  });

  criterion(6, "extraspecial 2^(1+6): order 128, degrees 1 x 64 and 8 x 1, min faithful degree 8", 30,
            [](Outcome &o) {
              auto ex = paper_examples(3);
              o.require(ex.three.has_value(), "bundle");
              o.require(ex.three->e.order() == 128, "order");
              std::map<std::size_t, int> degs;
              for (auto d : ex.three->character_degrees)
                degs[d] += 1;
              o.require(degs == std::map<std::size_t, int>{{1, 64}, {8, 1}}, "degrees");
              o.require(ex.three->min_faithful_degree == 8, "min faithful degree");
              o.require(ExtraspecialExample::kCitedDoubleCoverAlt8Degree == 8, "cited 2.Alt(8) degree");
            });

  criterion(7, "Hilbert symbols match the mod p^k solubility oracle and the real sign rule", 0, [](Outcome &o) {
    for (long p : {2L, 3L, 5L}) {
      std::vector<long> vals{1, -1, 2, -2, 5, -5, p, -p};
      for (long a : vals)
        for (long b : vals) {
          std::string at = "(" + std::to_string(a) + "," + std::to_string(b) + ")_";
          o.require(hilbert_symbol(Rational(a), Rational(b), Integer(p)) == test::hilbert_oracle(a, b, p),
                    at + std::to_string(p));
          int real = a < 0 && b < 0 ? -1 : 1;
          o.require(hilbert_symbol(Rational(a), Rational(b), Integer(kRealPlace)) == real, at + "inf");
        }
    }
  });

  criterion(8, "hereditary checker: dihedral hji, quaternionic fails (iii), C3 fails (ii)", 0, [](Outcome &o) {
    auto dihedral = make_profile(rep_of(groups::cyclic(2), {M({{-1}})}), 2, "pro-2 dihedral");
    o.require(respthm_check(dihedral, dihedral).status == VerdictStatus::hji, "dihedral");
    auto q = build_quaternionic_example(64).profile;
    auto vq = respthm_check(q, q);
    o.require(vq.status == VerdictStatus::hypothesis_failed && vq.witness.failed_condition == "iii", "quaternionic");
    auto c3 = make_profile(rep_of(groups::cyclic(3), {M({{0, -1}, {1, -1}})}), 3, "C3");
    auto vc = respthm_check(c3, c3);
    o.require(vc.status == VerdictStatus::hypothesis_failed && vc.witness.failed_condition == "ii", "C3");
  });

  criterion(9, "verdicts unchanged from precision 64 to 128 and across sampling seeds", 0, [](Outcome &o) {
    std::vector<VaProfile> profiles;
    for (auto const &entry : std::filesystem::directory_iterator(JINF_FIXTURE_DIR)) {
      auto f = parse_profile(slurp(entry.path().string()));
      if (f.kind != ProfileKind::va)
        continue;
      auto prof = file_va_profile(f);
      prof.name = entry.path().filename().string();
      profiles.push_back(prof);
    }
    o.require(profiles.size() >= 8, "fixtures");
    for (auto const &base : profiles) {
      std::string reference;
      for (long precision : {64L, 128L})
        for (std::uint64_t seed : {1u, 7u, 12345u}) {
          auto prof = base;
          prof.precision = precision;
          prof.seed = seed;
          auto fp = verdict_fingerprint(prof);
          if (reference.empty())
            reference = fp;
          o.require(fp == reference, base.name + " at precision " + std::to_string(precision) + ", seed " +
                                         std::to_string(seed));
        }
    }
    auto low = build_quaternionic_example(64).profile;
    auto high = build_quaternionic_example(128).profile;
    o.require(verdict_fingerprint(low) == verdict_fingerprint(high), "quaternionic constituent built at 128");
  });

  return failures == 0 ? 0 : 1;
}
