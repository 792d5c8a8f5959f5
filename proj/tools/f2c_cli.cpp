#include <iostream>

#include "f2c/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto r = f2c::run(args);
  std::cout << r.rendered();
  if (r.exit_code != 0) std::cerr << "error: " << r.message << "\n";
  return r.exit_code;
}
