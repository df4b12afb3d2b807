#ifndef JINF_CLI_HPP
#define JINF_CLI_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "jinf/decide.hpp"

namespace jinf {

struct Claim
{
  std::string label;
  bool pass = false;
  std::string detail;
};

/// Fixture suite for "1" (affine shadows), "2" (quaternionic type), "3"
/// (extraspecial group), "leethm" (primitive 2-adic 2-groups) or "all".
/// Throws std::invalid_argument for anything else.
std::vector<Claim> verify_paper(std::string const &which, long precision = kDefaultPrecision,
                                std::size_t order_gate = kDefaultOrderGate);

struct CommandResult
{
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs the command line (without the program name). Exit code 0 iff no
/// claim failed and no error occurred.
CommandResult run_command(std::vector<std::string> const &args);

} // namespace jinf

#endif
