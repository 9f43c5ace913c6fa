#include <iostream>

#include "specbound/cli.hpp"

int main(int argc, char** argv) {
  const auto parsed = specbound::cli::parse_args(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return specbound::cli::run(*parsed.config, std::cin, std::cout, std::cerr);
}
