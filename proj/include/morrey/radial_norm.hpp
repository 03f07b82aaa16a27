#pragma once

#include <cstddef>

#include "morrey/params.hpp"
#include "morrey/piecewise.hpp"

namespace morrey {

// B(a, r) = (a - r, a + r) in d = 1.
struct IntervalBall {
  double center = 0.0;
  double radius = 0.0;
};

struct OptimizerConfig {
  double r_min = 1e-4;
  double r_max = 1e4;
  int r_points = 65;
  double tol = 1e-8;  // relative refinement stopping criterion
  int refine_sweeps = 8;
};

// value is a certified lower bound of the supremum (an evaluated ball value or
// a closed-form limit of ball values); tolerance describes the refinement
// stopping criterion, not a proved upper-bound gap.
struct NormEstimate {
  double value = 0.0;
  IntervalBall witness;
  double tolerance = 0.0;
  std::size_t evaluations = 0;
};

double ball_volume(int d);   // |B(0,1)| in R^d
double sphere_area(int d);   // surface measure of S^{d-1}

// Closed-form integral of |c s^alpha|^p over the radial shell s in [s_lo, s_hi]
// of R^d: sigma_{d-1} |c|^p (s_hi^beta - s_lo^beta)/beta with beta = alpha p + d,
// logarithmic branch when beta = 0. Throws Divergent when s_lo = 0 and beta <= 0.
double piece_integral(double c, double alpha, double p, double s_lo, double s_hi, int d);

// |B|^{1/q-1/p} (int_B |fn|^p)^{1/p} for an interval ball, d = 1.
double ball_value_1d(const PiecewisePowerFn& fn, const IntervalBall& ball,
                     const MorreyParams& params);

// Supremum over centered balls B(0, r) in any dimension, by closed-form
// stationarity analysis per piece interval plus breakpoint and limit
// candidates; exact up to float rounding.
NormEstimate local_norm_radial(const PiecewisePowerFn& fn, const MorreyParams& params);

// Supremum over all balls B(a, r), d = 1: symmetry reduction a >= 0, exact
// one-variable reduction for pure powers, otherwise a log-grid over r with
// breakpoint-seeded centers and golden-section refinement; the closed-form
// centered supremum is always included as a candidate.
NormEstimate global_norm_1d(const PiecewisePowerFn& fn, const MorreyParams& params,
                            const OptimizerConfig& opt = {});

}  // namespace morrey
