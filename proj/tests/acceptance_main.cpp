// Runs every acceptance criterion and prints one line per criterion.
// Exit status is nonzero if any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "treedeck/acceptance.hpp"

int main(int argc, char** argv) {
  treedeck::SuiteOptions opts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--full") opts.level = treedeck::SuiteLevel::full;
    else if (arg == "--verbose" || arg == "-v") continue;
    else opts.only.push_back(std::atoi(arg.c_str()));
  }
  const bool verbose = [&] {
    for (int i = 1; i < argc; ++i)
      if (std::string(argv[i]) == "--verbose" || std::string(argv[i]) == "-v") return true;
    return false;
  }();

  bool all = true;
  for (const auto& r : treedeck::run_suite(opts)) {
    std::cout << treedeck::summary_line(r) << std::endl;
    if (verbose || !r.passed) std::cout << r.body;
    all = all && r.passed;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
