#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <oclattice/cli.hpp>

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return oclattice::cli::run(args, std::cout, std::cerr);
  } catch (std::exception const &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return oclattice::cli::Internal;
  }
}
