#include <iostream>

#include "isob_cli/cli.hpp"

int main(int argc, char** argv) {
  return isob::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
