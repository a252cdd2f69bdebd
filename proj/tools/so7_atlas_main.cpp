#include <iostream>
#include <string>
#include <vector>

#include "so7/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return so7::run_cli(args, std::cout, std::cerr);
}
