#ifndef JINF_CLI_REPORT_HPP
#define JINF_CLI_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "jinf/cli.hpp"
#include "jinf/profile_io.hpp"

namespace jinf::cli {

using nlohmann::json;

struct Options
{
  long precision = kDefaultPrecision;
  bool precision_given = false;
  std::size_t order_gate = kDefaultOrderGate;
  std::uint64_t seed = 1;
  bool machine = false;
};

/// Both renderings of one command's result.
struct Report
{
  json data = json::object();
  std::vector<std::string> lines;
  bool failed = false;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

json to_json(RatVec const &v);
json to_json(PadicVec const &v);
json to_json(Verdict const &v);

Report analyze(std::string const &path, Options const &opt);
Report shadow(std::string const &path, Options const &opt);
Report hilbert(std::string const &a, std::string const &b, std::string const &place);
Report chartab(std::string const &path, Options const &opt);
Report verify(std::string const &which, Options const &opt);

std::string read_file(std::string const &path);

} // namespace jinf::cli

#endif
