#include <iostream>

#include "howestrata/cli.hpp"

int main(int argc, char** argv) {
  howestrata::Integer budget;
  try {
    budget = howestrata::cli::budget_from_environment();
  } catch (const howestrata::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return howestrata::cli::exit_usage;
  }
  return howestrata::cli::run(argc, argv, std::cout, std::cerr, budget);
}
