#include <iostream>

#include "pointscheme/cli.hpp"

int main(int argc, char** argv) {
  pointscheme::cli::RunConfig cfg;
  pointscheme::cli::RunResult result;
  if (pointscheme::cli::parse_args(argc, argv, cfg, result)) result = pointscheme::cli::run(cfg);
  std::cout << result.out;
  std::cerr << result.err;
  return result.status;
}
