#include <iostream>
#include <string>
#include <vector>

#include "twotors/cli/commands.hpp"
#include "twotors/cli/render.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = twotors::cli::run_cli(args, twotors::cli::use_style());
  std::cout << outcome.out << std::flush;
  std::cerr << outcome.err << std::flush;
  return outcome.exit_code;
}
