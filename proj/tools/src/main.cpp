#include <iostream>
#include <string>
#include <vector>

#include "drazin_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  const auto response = drazin::cli::run_args(args, std::cin);
  std::cout << response.out;
  std::cerr << response.err;
  return response.exit_code;
}
