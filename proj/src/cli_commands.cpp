#include <fstream>
#include <sstream>

#include "cli_report.hpp"
#include "jinf/character_table.hpp"
#include "jinf/finite_group.hpp"

namespace jinf::cli {

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json to_json(RatVec const &v)
{
  json a = json::array();
  for (auto const &x : v)
    a.push_back(to_string(x));
  return a;
}

json to_json(PadicVec const &v)
{
  json a = json::array();
  for (auto const &x : v) {
    if (x.is_zero())
      a.push_back({{"zero", true}, {"precision", x.precision() >= Padic::kExact ? -1 : x.precision()}});
    else
      a.push_back({{"unit", to_string(x.unit())}, {"valuation", x.valuation()}, {"precision", x.precision()}});
  }
  return a;
}

json to_json(Verdict const &v)
{
  json j{{"status", to_string(v.status)}, {"provenance", v.provenance}, {"trace", v.witness.trace}};
  if (!v.witness.invariant_subspace.empty()) {
    json w = json::array();
    for (auto const &x : v.witness.invariant_subspace)
      w.push_back(to_json(x));
    j["invariant_subspace"] = w;
  }
  if (!v.witness.padic_invariant_subspace.empty()) {
    json w = json::array();
    for (auto const &x : v.witness.padic_invariant_subspace)
      w.push_back(to_json(x));
    j["padic_invariant_subspace"] = w;
  }
  if (!v.witness.failed_condition.empty())
    j["failed_condition"] = v.witness.failed_condition;
  return j;
}

namespace {

VaProfile load_profile(std::string const &path, Options const &opt)
{
  auto prof = file_va_profile(parse_profile(read_file(path)), opt.order_gate);
  if (opt.precision_given)
    prof.precision = opt.precision;
  prof.seed = opt.seed;
  return prof;
}

bool nontrivial_p_group(VaProfile const &prof)
{
  return prof.p > 0 && !prof.group().is_trivial() &&
         recognize_special(prof.group()).p_group == static_cast<std::size_t>(prof.p);
}

} // namespace

Report analyze(std::string const &path, Options const &opt)
{
  Report r;
  auto prof = load_profile(path, opt);
  std::string shape = prof.ring() + "^" + std::to_string(prof.dimension()) + ", |Q| = " + prof.group().order().str();
  r.data["profile"] = {{"name", prof.name},
                       {"ring", prof.ring()},
                       {"dimension", prof.dimension()},
                       {"order", prof.group().order().str()},
                       {"padic", prof.padic()}};
  r.line("profile " + (prof.name.empty() ? std::string("(unnamed)") : prof.name) + ": " + shape);

  auto val = validate_va_profile(prof);
  r.data["validation"] = {{"valid", val.valid}, {"failed", val.failed}, {"trace", val.trace}};
  if (!val.valid) {
    r.line("validation: invalid, condition " + val.failed + " (" + val.trace.back() + ")");
    r.failed = true;
    return r;
  }
  r.line("validation: valid");

  auto ji = va_just_infinite(prof);
  r.data["just_infinite"] = to_json(ji);
  r.line("just infinite: " + to_string(ji.status) + " [" + ji.witness.trace.front() + "]");

  json rows = json::array();
  for (auto const &row : maximal_scan(prof, opt.order_gate)) {
    rows.push_back({{"label", row.label}, {"index", row.index.str()}, {"verdict", to_json(row.verdict)}});
    r.line("maximal row " + row.label + " (index " + row.index.str() + "): " + to_string(row.verdict.status));
  }
  r.data["maximal_scan"] = rows;

  auto qt = quaternionic_type(prof);
  r.data["quaternionic_type"] = {{"value", qt.value}, {"evidence", qt.evidence}};
  r.line(std::string("quaternionic type: ") + (qt.value ? "true" : "false"));

  if (nontrivial_p_group(prof)) {
    auto h = respthm_check(prof, prof, opt.order_gate);
    r.data["hereditary"] = to_json(h);
    r.line("hereditary check: " + to_string(h.status) +
           (h.witness.failed_condition.empty() ? "" : " (" + h.witness.failed_condition + ")"));
    if (ji.status == VerdictStatus::ji) {
      auto c = lgm_oracle(prof, opt.order_gate);
      r.data["classification"] = {{"primitivity", to_string(c.blocks.verdict)},
                                  {"blocks", c.blocks.blocks},
                                  {"block_dimension", c.blocks.block_dimension},
                                  {"blocks_verified", c.blocks.verified},
                                  {"classified_case", c.classified_case},
                                  {"consistent", c.consistent},
                                  {"rows", c.blocks.rows}};
      r.line("primitivity: " + c.evidence + (c.consistent ? ", CONSISTENT" : ", INCONSISTENT"));
      r.failed = r.failed || !c.consistent;
    }
  }
  return r;
}

Report hilbert(std::string const &a, std::string const &b, std::string const &place)
{
  Report r;
  Rational qa = parse_rational(a), qb = parse_rational(b);
  Integer v;
  if (place == "inf" || place == "real" || place == "R" || place == "0") {
    v = kRealPlace;
  } else {
    Rational q = parse_rational(place);
    if (denominator(q) != 1 || q < 2 || !is_prime(static_cast<long>(numerator(q))))
      throw std::invalid_argument("place must be a prime or inf");
    v = numerator(q);
  }
  int h = hilbert_symbol(qa, qb, v);
  r.data = {{"a", to_string(qa)}, {"b", to_string(qb)}, {"place", v == kRealPlace ? "inf" : to_string(v)}, {"symbol", h}};
  r.line(std::to_string(h));
  return r;
}

} // namespace jinf::cli
