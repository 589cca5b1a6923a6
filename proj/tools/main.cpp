#include <iostream>
#include <string>
#include <vector>

#include "mber/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mber::cli::run(std::move(args), std::cout, std::cerr);
}
