#include <iostream>
#include <string>
#include <vector>

#include "pftlab/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const pftlab::cli::Outcome r = pftlab::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}
