#include <exception>
#include <iostream>

#include "phasegauge/cli/commands.hpp"

int main(int argc, char** argv) {
  try {
    return phasegauge::cli::run_app(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
