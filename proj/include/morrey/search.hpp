#pragma once

#include <cstdint>

#include "morrey/functionals.hpp"

namespace morrey {

struct SearchConfig {
  std::uint64_t budget = 10000;  // functional evaluation count
  std::uint64_t seed = 0;
  int max_support = 6;
  std::int64_t coord_range = 4;  // support coordinates drawn from [-range, range]^d
  int threads = 0;               // 0: MORREY_THREADS env, else hardware
};

// Searched lower bound for a constant, with its witness pair and norm trace.
struct ConstantReport {
  Functional functional = Functional::nj;
  double value = 0.0;
  double tolerance = 0.0;
  SparseSequence<double> x, y;
  std::vector<std::pair<std::string, double>> trace;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
};

// Randomized multi-start with coordinate-wise hill climbing over sparse pairs.
// The budget is split over a fixed set of logical streams keyed by (seed,
// stream index) and merged by maximum value (ties: lexicographically smallest
// witness encoding), so the report does not depend on the worker count.
ConstantReport search_lower_bound(const DiscreteSpaceD& space, Functional functional,
                                  const SearchConfig& cfg);

}  // namespace morrey
