#pragma once

// The acceptance suite: ten numbered checks against the worked fixtures,
// the graph-family sweeps and randomized property runs. Each check carries
// its own runtime limit and counts as failed when it runs over.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "chipdual/exact.hpp"

namespace chipdual {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

std::vector<int> criterion_ids();
// Exceptions from the check body are caught and reported as a failure.
CriterionResult run_criterion(int id, std::size_t threads = 1);
std::vector<CriterionResult> run_all_criteria(std::size_t threads = 1);

// Random inputs for the property runs. Off-diagonal entries of the
// M-matrix lie in [-2, 0]; |det| stays at most max_det.
IntMatrix random_m_matrix(std::mt19937_64& rng, std::size_t n, long max_det = 200);
// Entries in [-3, 3], nonsingular, |det| <= max_det.
IntMatrix random_invertible(std::mt19937_64& rng, std::size_t n, long max_det = 60);

}  // namespace chipdual
