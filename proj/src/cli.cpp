#include <algorithm>
#include <chrono>
#include <sstream>

#include "CLI11.hpp"

#include "cli_report.hpp"

namespace jinf {

CommandResult run_command(std::vector<std::string> const &args)
{
  CommandResult res;
  cli::Options opt;
  std::string report = "text";

  CLI::App app{"Just-infinite decision tools for virtually abelian profiles and wreath shadows", "jinf"};
  app.require_subcommand(1);
  app.fallthrough();
  auto *prec = app.add_option("--precision", opt.precision, "p-adic precision in digits")->check(CLI::PositiveNumber);
  app.add_option("--order-gate", opt.order_gate, "bound on group orders for element-level algorithms")
      ->check(CLI::PositiveNumber);
  app.add_option("--report", report, "output form")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", opt.seed, "sampling seed (never changes a verdict)");

  std::string file, a, b, place, which = "all";
  auto *analyze = app.add_subcommand("analyze", "validate and decide a virtually abelian profile");
  analyze->add_option("file", file)->required();
  auto *shadow = app.add_subcommand("shadow", "wreath shadow verdicts and the maximal-subgroup criterion");
  shadow->add_option("file", file)->required();
  auto *hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b) at a prime or inf");
  hilbert->add_option("a", a)->required();
  hilbert->add_option("b", b)->required();
  hilbert->add_option("place", place)->required();
  auto *chartab = app.add_subcommand("chartab", "character table of the group in a profile file");
  chartab->add_option("file", file)->required();
  auto *verify = app.add_subcommand("verify-paper", "run the fixture suite and print PASS/FAIL per claim");
  verify->add_option("suite", which)->check(CLI::IsMember({"1", "2", "3", "leethm", "all"}));

  std::ostringstream out, err;
  for (std::size_t k = 0; k < args.size(); ++k) {
    std::string const &s = args[k];
    if (s.rfind("-", 0) == 0) {
      if (s != "--help" && s != "-h" && s.find('=') == std::string::npos)
        ++k;
      continue;
    }
    if (!app.get_subcommand_no_throw(s)) {
      res.err = "error: unknown subcommand '" + s + "'\n";
      res.exit_code = 2;
      return res;
    }
    break;
  }
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (CLI::ParseError const &e) {
    res.exit_code = app.exit(e, out, err);
    if (res.exit_code == 0)
      res.out = out.str();
    else
      res.exit_code = 2;
    res.err = err.str();
    return res;
  }
  opt.precision_given = prec->count() > 0;
  opt.machine = report == "machine";

  auto start = std::chrono::steady_clock::now();
  cli::Report rep;
  try {
    if (analyze->parsed())
      rep = cli::analyze(file, opt);
    else if (shadow->parsed())
      rep = cli::shadow(file, opt);
    else if (hilbert->parsed())
      rep = cli::hilbert(a, b, place);
    else if (chartab->parsed())
      rep = cli::chartab(file, opt);
    else
      rep = cli::verify(which, opt);
  } catch (GateExceeded const &e) {
    res.err = "error: gate " + e.gate() + " exceeded: " + e.what() + "\n";
    res.exit_code = 2;
    return res;
  } catch (std::exception const &e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 2;
    return res;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opt.machine) {
    res.out = rep.data.dump(2) + "\n";
  } else {
    for (auto const &l : rep.lines)
      res.out += l + "\n";
    if (!hilbert->parsed()) {
      std::ostringstream t;
      t.precision(1);
      t << std::fixed << ms;
      res.out += "time: " + t.str() + " ms\n";
    }
  }
  res.exit_code = rep.failed ? 1 : 0;
  return res;
}

} // namespace jinf
