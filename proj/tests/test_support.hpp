#pragma once

#include <random>

#include "morrey/lattice_norm.hpp"

// Shared generators for the lattice-norm property tests and the acceptance
// suite. Entries are integers in [-5,5] (optionally half-integers) so the
// exact engine applies; coordinates stay in a small box to keep the brute
// force oracle cheap.
namespace testsupport {

inline morrey::LatticePoint random_point(std::mt19937_64& rng, int d, int coord_range) {
  std::uniform_int_distribution<std::int64_t> coord(-coord_range, coord_range);
  std::vector<std::int64_t> c(d);
  for (auto& ci : c) ci = coord(rng);
  return morrey::LatticePoint(std::move(c));
}

inline morrey::SparseSequence<morrey::Rational> random_exact_seq(std::mt19937_64& rng, int d,
                                                                 int max_support, int coord_range,
                                                                 bool halves = true) {
  morrey::SparseSequence<morrey::Rational> x(d);
  std::uniform_int_distribution<int> size_dist(1, max_support);
  std::uniform_int_distribution<int> val_dist(-5, 5);
  int size = size_dist(rng);
  for (int i = 0; i < size; ++i) {
    morrey::Rational v(val_dist(rng));
    if (halves && rng() % 4 == 0) v = v * morrey::Rational::of(1, 2);
    x.set(random_point(rng, d, coord_range), v);
  }
  return x;
}

inline morrey::SparseSequence<morrey::Rational> random_nonzero_exact_seq(std::mt19937_64& rng,
                                                                         int d, int max_support,
                                                                         int coord_range,
                                                                         bool halves = true) {
  while (true) {
    auto x = random_exact_seq(rng, d, max_support, coord_range, halves);
    if (!x.is_zero()) return x;
  }
}

// Plain l^p norm over the support, summed in map order (the same order the
// window engine uses, so p = q comparisons can demand exact float equality).
inline double plain_lp_norm(const morrey::SparseSequence<double>& x, const morrey::MorreyParams& params) {
  double sum = 0.0;
  for (const auto& [k, v] : x.entries) sum += morrey::scalar_ops<double>::abs_pow(v, params);
  return sum == 0.0 ? 0.0 : std::pow(sum, 1.0 / params.p);
}

inline std::int64_t covering_radius(const morrey::SparseSequence<morrey::Rational>& x) {
  auto [lo, hi] = x.bounding_box();
  std::int64_t n0 = 0;
  for (std::size_t i = 0; i < lo.coords.size(); ++i)
    n0 = std::max(n0, (hi.coords[i] - lo.coords[i] + 1) / 2);
  return n0;
}

}  // namespace testsupport
