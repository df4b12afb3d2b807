#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "jinf/cli.hpp"
#include "jinf/profile_io.hpp"

using namespace jinf;

namespace {

std::string fixture(std::string const &name) { return std::string(JINF_FIXTURE_DIR) + "/" + name; }

std::string slurp(std::string const &path)
{
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CommandResult run(std::vector<std::string> args) { return run_command(args); }

std::size_t error_line(std::string const &text)
{
  try {
    parse_profile(text);
  } catch (ProfileError const &e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

} // namespace

TEST_CASE("minimal profile")
{
  std::string text = "jinf-profile 1\nkind va\nring Z\ndegree 2\ngen 1 0\nmatrix\n-1\n";
  auto prof = file_va_profile(parse_profile(text));
  CHECK(prof.p == 0);
  CHECK(prof.dimension() == 1);
  CHECK(prof.group().order() == 2);
  CHECK(validate_va_profile(prof).valid);
  CHECK(emit_profile(parse_profile(text)) == text);
}

TEST_CASE("shipped fixtures round-trip through the canonical form")
{
  std::size_t seen = 0;
  for (auto const &entry : std::filesystem::directory_iterator(JINF_FIXTURE_DIR)) {
    INFO(entry.path().string());
    auto f = parse_profile(slurp(entry.path().string()));
    std::string canon = emit_profile(f);
    CHECK(emit_profile(parse_profile(canon)) == canon);
    if (f.kind == ProfileKind::va) {
      auto prof = file_va_profile(f);
      auto back = profile_file(prof);
      back.modulus = f.modulus;
      if (f.modulus)
        back.matrices = f.matrices;
      CHECK(emit_profile(back) == canon);
    }
    ++seen;
  }
  CHECK(seen >= 10);
}

TEST_CASE("the Q16 fixture is the quaternionic constituent")
{
  auto prof = file_va_profile(parse_profile(slurp(fixture("q16_constituent.profile"))));
  auto ex = paper_examples(2);
  auto const &built = std::get<PadicRep>(ex.two->profile.action);
  auto const &read = std::get<PadicRep>(prof.action);
  REQUIRE(read.images.size() == built.images.size());
  for (std::size_t k = 0; k < read.images.size(); ++k)
    CHECK((read.images[k] - built.images[k]).is_zero());
  CHECK(quaternionic_type(prof).value);

  auto order = file_va_profile(parse_profile(slurp(fixture("q16_order.profile"))));
  auto const &z = std::get<MatRep>(order.action);
  for (std::size_t k = 0; k < z.images.size(); ++k)
    CHECK(z.images[k].equals(ex.two->integral.images[k]));
}

TEST_CASE("number ring matrices expand blockwise")
{
  auto ring = file_va_profile(parse_profile(slurp(fixture("c8_ring_z2.profile"))));
  auto plain = file_va_profile(parse_profile(slurp(fixture("c8_z2.profile"))));
  CHECK(std::get<MatRep>(ring.action).images[0].equals(std::get<MatRep>(plain.action).images[0]));
}

TEST_CASE("located diagnostics")
{
  std::string good = slurp(fixture("c3_z3.profile"));
  // cut inside the matrix
  std::string truncated = good.substr(0, good.rfind("1 -1"));
  CHECK_THROWS_AS(parse_profile(truncated), ProfileError);
  CHECK(error_line(truncated) == 9);
  CHECK(error_line("") == 0);
  CHECK(error_line("jinf-profile 2\n") == 1);
  CHECK(error_line("jinf-profile 1\nkind lattice\n") == 2);
  CHECK(error_line("jinf-profile 1\nkind permgroup\ndegree 3\ngen 0 0 1\n") == 4);
  CHECK(error_line("jinf-profile 1\nkind va\nring Z4\n") == 3);
  CHECK(error_line("jinf-profile 1\nkind va\nring Z\ndegree 2\ngen 1 0\nmatrix\n1 x\n0 1\n") == 7);
  try {
    parse_profile("jinf-profile 1\nkind va\nring Z\ndegree 2\ngen 1 0\nmatrix\n1 x\n0 1\n");
  } catch (ProfileError const &e) {
    CHECK(e.field() == "row");
    CHECK(std::string(e.what()).find("line 7") != std::string::npos);
  }
  // relations are checked when the profile is built
  auto bad = parse_profile("jinf-profile 1\nkind va\nring Z\ndegree 3\ngen 1 2 0\nmatrix\n0 1\n1 0\n");
  CHECK_THROWS_AS(file_va_profile(bad), ProfileError);
}

TEST_CASE("command line")
{
  auto h = run({"hilbert", "-1", "-1", "2"});
  CHECK(h.exit_code == 0);
  CHECK(h.out == "-1\n");
  CHECK(run({"hilbert", "-1", "-1", "inf"}).out == "-1\n");
  CHECK(run({"hilbert", "2", "3", "5"}).out == "1\n");
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"hilbert", "1", "1", "4"}).exit_code == 2);
  CHECK(run({"analyze", fixture("missing.profile")}).exit_code == 2);
  auto gate = run({"--order-gate", "8", "analyze", fixture("q16_constituent.profile")});
  CHECK(gate.exit_code == 2);
  CHECK(gate.err.find("order-gate") != std::string::npos);

  auto v2 = run({"verify-paper", "2"});
  CHECK(v2.exit_code == 0);
  CHECK(v2.out.find("FAIL") == std::string::npos);
  CHECK(v2.out.find("PASS quaternionic type: index-4 subgroups not just infinite") != std::string::npos);
  CHECK(v2.out.find("PASS quaternionic type: all three maximal subgroups act irreducibly") != std::string::npos);
}

TEST_CASE("machine reports are deterministic and their witnesses re-verify")
{
  for (auto const &name : {"q16_constituent.profile", "c2_diag_z.profile", "q16_order.profile", "c3_z3.profile"}) {
    INFO(name);
    auto a = run({"analyze", fixture(name), "--report", "machine"});
    auto b = run({"analyze", fixture(name), "--report", "machine"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }

  auto r = run({"analyze", fixture("c2_diag_z.profile"), "--report", "machine"});
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["just_infinite"]["status"] == "not_ji");
  std::vector<RatVec> w;
  for (auto const &v : j["just_infinite"]["invariant_subspace"]) {
    RatVec x;
    for (auto const &e : v)
      x.push_back(parse_rational(e.get<std::string>()));
    w.push_back(x);
  }
  auto prof = file_va_profile(parse_profile(slurp(fixture("c2_diag_z.profile"))));
  REQUIRE(!w.empty());
  CHECK(w.size() < prof.dimension());
  CHECK(is_invariant(std::get<MatRep>(prof.action), w));
}

TEST_CASE("verdicts do not depend on the sampling seed")
{
  for (auto const &name : {"q16_order.profile", "c2_diag_z.profile", "c3_z3.profile"}) {
    INFO(name);
    std::string first;
    for (auto const &seed : {"1", "7", "12345"}) {
      auto r = run({"analyze", fixture(name), "--report", "machine", "--seed", seed});
      auto j = nlohmann::json::parse(r.out);
      std::string statuses = j["just_infinite"]["status"].get<std::string>();
      for (auto const &row : j["maximal_scan"])
        statuses += "," + row["verdict"]["status"].get<std::string>();
      if (first.empty())
        first = statuses;
      CHECK(statuses == first);
    }
  }
}
