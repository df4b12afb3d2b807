#include <iostream>

#include "jinf/cli.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = jinf::run_command(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
