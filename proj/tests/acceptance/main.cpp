// Runs every acceptance criterion and prints one line per criterion.
// Usage: chipdual_acceptance [--threads N] [criterion ids...]

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "chipdual/checks.hpp"

int main(int argc, char** argv) {
  std::size_t threads = 1;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--threads" && i + 1 < argc)
      threads = std::strtoul(argv[++i], nullptr, 10);
    else
      ids.push_back(std::atoi(arg.c_str()));
  }
  if (ids.empty()) ids = chipdual::criterion_ids();

  int failed = 0;
  for (int id : ids) {
    const chipdual::CriterionResult r = chipdual::run_criterion(id, threads);
    std::printf("%s criterion %2d %-18s %7.3f s (limit %g s)  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.limit_seconds, r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%zu criteria, %d failed\n", ids.size(), failed);
  return failed == 0 ? 0 : 1;
}
