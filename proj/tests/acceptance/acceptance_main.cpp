// Runs the ten acceptance criteria and prints one line per criterion.
#include <cstdlib>
#include <iostream>

#include "bbgkit_suite/acceptance.hpp"

int main(int argc, char** argv) {
  bbg::suite::SuiteOptions options;
  if (const char* env = std::getenv("BBGKIT_SEED")) options.seed = std::strtoull(env, nullptr, 10);
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);

  int failed = 0;
  bbg::suite::run_acceptance(options, [&](const bbg::suite::CriterionResult& r) {
    std::cout << bbg::suite::format_result(r) << std::endl;
    failed += !r.pass;
  });
  std::cout << (failed ? "acceptance: FAILED (" + std::to_string(failed) + " of 10)" : "acceptance: all 10 passed")
            << std::endl;
  return failed ? 1 : 0;
}
