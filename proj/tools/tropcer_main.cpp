#include <iostream>
#include <string>
#include <vector>

#include "tropcer/cli_app.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return tropcer::run_cli(args, std::cout, std::cin);
}
