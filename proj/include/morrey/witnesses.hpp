#pragma once

#include <optional>
#include <utility>

#include "morrey/lattice.hpp"
#include "morrey/piecewise.hpp"

namespace morrey {

// The discrete extremal pair: x = delta_0 + delta_(n,0,..,0), y = delta_0 -
// delta_(n,0,..,0), with n even and large enough that the covering window
// cannot beat the single-point windows: (n+1)^{d(1/q-1/p)} 2^{1/p} < 1.
struct DiscreteWitness {
  MorreyParams params;
  std::int64_t n = 0;
  double threshold = 0.0;  // 2^{q/(d(q-p))} - 1
  SparseSequence<Rational> x, y;
};

// f = |x|^{-d/q} on R^d, g its truncation to |x| < 1, h = f - g, k = -f + 2g.
struct ContinuousWitness {
  MorreyParams params;
  PiecewisePowerFn f, g, h, k;
};

enum class DwVariant { paper, corrected };

// Smallest even n with (n+1)^{d(1/q-1/p)} 2^{1/p} < 1; exact integer check
// when p and q are integers. Throws DegenerateParams when p = q.
std::int64_t minimal_even_n(const MorreyParams& params);

// Strict admissibility of a given even n.
bool witness_threshold_ok(const MorreyParams& params, std::int64_t n);

DiscreteWitness discrete_witness_pair(const MorreyParams& params,
                                      std::optional<std::int64_t> n = std::nullopt);

ContinuousWitness continuous_witness_family(const MorreyParams& params);

// (f, (1+r)g + (1-r)h) for r in (0,1).
std::pair<PiecewisePowerFn, PiecewisePowerFn> dw_couple_continuous(const ContinuousWitness& w,
                                                                   double r);

// paper: (x+y, (1+r)x + (1-r)y), which evaluates to 2 under the defined norm.
// corrected: (a+b, (1+r)a + (1-r)b) with a = (x+y)/2, b = (x-y)/2 -- the
// disjoint-support analog of the continuous couple, reproducing (4+2r)/(1+r).
std::pair<SparseSequence<Rational>, SparseSequence<Rational>> dw_couple_discrete(
    const DiscreteWitness& w, const Rational& r, DwVariant variant);

// Reference curve (4+2r)/(1+r) for the Dunkl-Williams reports.
double dw_ratio(double r);
Rational dw_ratio_exact(const Rational& r);

}  // namespace morrey
