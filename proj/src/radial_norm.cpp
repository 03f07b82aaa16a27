#include "morrey/radial_norm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "morrey/errors.hpp"

namespace morrey {

namespace {

constexpr double kPi = 3.14159265358979323846;

// |c|^p (hi^beta - lo^beta)/beta with beta = alpha*p + d; log branch at beta=0.
double shell_mass_d(double c, double alpha, double p, double lo, double hi, int d) {
  if (c == 0.0 || hi <= lo) return 0.0;
  double cp = std::pow(std::fabs(c), p);
  double beta = alpha * p + d;
  if (beta == 0.0) {
    if (lo == 0.0) raise(errc::divergent, "integral diverges at the origin (beta = 0)");
    return cp * std::log(hi / lo);
  }
  if (lo == 0.0 && beta < 0.0) raise(errc::divergent, "integral diverges at the origin (beta < 0)");
  double hi_b = std::pow(hi, beta);
  double lo_b = lo == 0.0 ? 0.0 : std::pow(lo, beta);
  return cp * (hi_b - lo_b) / beta;
}

struct Candidate {
  double r = 0.0;       // representative radius for reporting
  double value = 0.0;
};

}  // namespace

double ball_volume(int d) {
  if (d < 1) raise(errc::invalid_params, "dimension must be >= 1");
  return std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double sphere_area(int d) { return d * ball_volume(d); }

double piece_integral(double c, double alpha, double p, double s_lo, double s_hi, int d) {
  if (!(s_lo >= 0.0) || !(s_hi > s_lo)) raise(errc::invalid_params, "need 0 <= s_lo < s_hi");
  if (!std::isfinite(s_hi)) raise(errc::invalid_params, "piece_integral needs a finite upper radius");
  return sphere_area(d) * shell_mass_d(c, alpha, p, s_lo, s_hi, d);
}

double ball_value_1d(const PiecewisePowerFn& fn, const IntervalBall& ball,
                     const MorreyParams& params) {
  if (fn.d != 1) raise(errc::dimension_mismatch, "ball_value_1d needs a 1-dimensional function");
  if (!(ball.radius > 0.0)) raise(errc::bad_range, "ball radius must be positive");
  double lo = ball.center - ball.radius;
  double hi = ball.center + ball.radius;

  // Fold (lo, hi) onto radial coverage of the two half-lines.
  double mass = 0.0;
  auto add_side = [&](double u, double v) {
    if (v <= u) return;
    for (const auto& pc : fn.pieces) {
      double a = std::max(u, pc.lo);
      double b = std::min(v, pc.hi);
      if (b > a) mass += shell_mass_d(pc.c, pc.alpha, params.p, a, b, 1);
    }
  };
  add_side(std::max(lo, 0.0), std::max(hi, 0.0));   // positive half-line
  add_side(std::max(-hi, 0.0), std::max(-lo, 0.0)); // negative half-line
  if (mass == 0.0) return 0.0;
  return std::pow(2.0 * ball.radius, params.exponent()) * std::pow(mass, 1.0 / params.p);
}

namespace {

// Shared analysis state for the centered-ball value r -> (v_d r^d)^e I(r)^{1/p}
// with I(r) the accumulated shell integral.
struct CenteredAnalysis {
  const PiecewisePowerFn& fn;
  MorreyParams params;
  double sigma;       // sphere area
  double vol;         // unit-ball volume
  double e;           // 1/q - 1/p
  std::size_t evals = 0;

  CenteredAnalysis(const PiecewisePowerFn& f, const MorreyParams& pr)
      : fn(f), params(pr), sigma(sphere_area(f.d)), vol(ball_volume(f.d)), e(pr.exponent()) {}

  double integral_to(double r) {
    double mass = 0.0;
    for (const auto& pc : fn.pieces) {
      double b = std::min(r, pc.hi);
      if (b > pc.lo) mass += sigma * shell_mass_d(pc.c, pc.alpha, params.p, pc.lo, b, fn.d);
    }
    return mass;
  }

  double value_at(double r) {
    ++evals;
    double mass = integral_to(r);
    if (mass == 0.0) return 0.0;
    return std::pow(vol, e) * std::pow(r, fn.d * e) * std::pow(mass, 1.0 / params.p);
  }
};

// Centered supremum with divergence/unboundedness detection. Factored out so
// both local_norm_radial and global_norm_1d use the identical analysis.
NormEstimate centered_supremum(const PiecewisePowerFn& fn, const MorreyParams& params) {
  NormEstimate out;
  if (fn.is_zero()) return out;

  CenteredAnalysis ca(fn, params);
  const double p = params.p;
  const int d = fn.d;
  const double e = ca.e;

  const PowerPiece& first = fn.pieces.front();
  const PowerPiece& last = fn.pieces.back();

  // Behavior at r -> 0: only the piece touching the origin matters.
  if (first.lo == 0.0) {
    double beta = first.alpha * p + d;
    if (beta <= 0.0) raise(errc::divergent, "centered balls have infinite integral");
    double mu = d * e + beta / p;  // small-r value exponent = d/q + alpha
    if (mu < 0.0) raise(errc::unbounded, "ball value blows up as r -> 0");
  }

  std::vector<Candidate> limits;  // r -> 0 / r -> infinity closed-form limits
  if (first.lo == 0.0) {
    double beta = first.alpha * p + d;
    double mu = d * e + beta / p;
    if (mu == 0.0) {
      double val = std::pow(ca.vol, e) *
                   std::pow(ca.sigma * std::pow(std::fabs(first.c), p) / beta, 1.0 / p);
      limits.push_back({first.lo > 0.0 ? first.lo : (first.hi < kInf ? first.hi / 2.0 : 0.5), val});
    }
  }

  bool has_tail = !std::isfinite(last.hi);
  double tail_rep = std::isfinite(last.hi) ? std::max(1.0, last.hi) * 1e9
                                           : std::max(1.0, last.lo) * 1e9;
  if (has_tail) {
    double beta = last.alpha * p + d;
    if (beta > 0.0) {
      double lambda = d * e + beta / p;
      if (lambda > 0.0) raise(errc::unbounded, "ball value grows without bound as r -> inf");
      if (lambda == 0.0) {
        double val = std::pow(ca.vol, e) *
                     std::pow(ca.sigma * std::pow(std::fabs(last.c), p) / beta, 1.0 / p);
        limits.push_back({tail_rep, val});
      }
    } else if (beta == 0.0) {
      if (e == 0.0) raise(errc::unbounded, "L^p mass diverges logarithmically");
      // e < 0: value decays; no candidate.
    } else {
      // beta < 0: finite total integral.
      if (e == 0.0) {
        double total = ca.integral_to(kInf);
        limits.push_back({tail_rep, std::pow(total, 1.0 / p)});
      }
    }
  } else if (e == 0.0) {
    // p = q: value is nondecreasing in r, supremum is the full L^p mass.
    double total = ca.integral_to(last.hi);
    limits.push_back({std::isfinite(last.hi) ? last.hi : tail_rep, std::pow(total, 1.0 / p)});
  }

  // Interior candidates: every finite breakpoint, plus the per-piece
  // stationary radius of r^{dpe} (K + A r^beta / beta).
  std::vector<double> radii;
  for (const auto& pc : fn.pieces) {
    if (pc.lo > 0.0) radii.push_back(pc.lo);
    if (std::isfinite(pc.hi)) radii.push_back(pc.hi);
  }
  const double dpe = d * p * e;
  for (const auto& pc : fn.pieces) {
    double beta = pc.alpha * p + d;
    double A = ca.sigma * std::pow(std::fabs(pc.c), p);
    double u = pc.lo, w = pc.hi;
    if (dpe == 0.0) continue;  // p = q: monotone, endpoints/limits cover it
    if (beta != 0.0) {
      if (dpe + beta == 0.0) continue;  // degenerate: monotone on the piece
      double Iu = u > 0.0 ? ca.integral_to(u) : 0.0;
      double K = Iu - A * (u > 0.0 ? std::pow(u, beta) : 0.0) / beta;
      double rhs = -dpe * K * beta / (A * (dpe + beta));
      if (rhs > 0.0) {
        double rstar = std::pow(rhs, 1.0 / beta);
        if (rstar > u && rstar < w && std::isfinite(rstar)) radii.push_back(rstar);
      }
    } else if (u > 0.0) {
      // log piece: d/dr [r^{dpe} (K' + A ln r)] = 0
      double Ku = ca.integral_to(u) - A * std::log(u);
      double ln_r = -(dpe * Ku + A) / (dpe * A);
      double rstar = std::exp(ln_r);
      if (rstar > u && rstar < w && std::isfinite(rstar)) radii.push_back(rstar);
    }
  }

  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  std::vector<Candidate> cands = std::move(limits);
  for (double r : radii) cands.push_back({r, ca.value_at(r)});
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return a.r < b.r;
  });

  for (const auto& c : cands) {
    if (!std::isfinite(c.value)) continue;
    if (c.value > out.value * (1.0 + 1e-13)) {
      out.value = c.value;
      out.witness = {0.0, c.r};
    }
  }
  out.tolerance = 1e-12;
  out.evaluations = ca.evals;
  return out;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                  std::size_t* evals) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  *evals += 2;
  for (int it = 0; it < 200 && (b - a) > rel_tol * std::max(1.0, std::fabs(a) + std::fabs(b)); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
    ++*evals;
  }
  return 0.5 * (a + b);
}

}  // namespace

NormEstimate local_norm_radial(const PiecewisePowerFn& fn, const MorreyParams& params) {
  if (fn.d != params.d) raise(errc::dimension_mismatch, "function/params dimensions disagree");
  return centered_supremum(fn, params);
}

NormEstimate global_norm_1d(const PiecewisePowerFn& fn, const MorreyParams& params,
                            const OptimizerConfig& opt) {
  if (fn.d != 1 || params.d != 1)
    raise(errc::dimension_mismatch, "global_norm_1d is defined for d = 1");
  NormEstimate best = centered_supremum(fn, params);  // also runs the divergence checks
  best.tolerance = opt.tol;
  if (fn.is_zero()) return best;

  std::size_t evals = best.evaluations;
  auto value_at = [&](double a, double r) -> double {
    if (!(r > 0.0)) return 0.0;
    ++evals;
    return ball_value_1d(fn, {a, r}, params);
  };
  auto consider = [&](double a, double r, double v) {
    if (!std::isfinite(v)) return;
    if (v > best.value * (1.0 + 1e-13)) {
      best.value = v;
      best.witness = {a, r};
    }
  };

  // Pure single power surviving the divergence checks has 1/q + alpha = 0 and
  // value(a, r) = value(a/r, 1): a one-variable problem in the reduced center.
  bool pure_power = fn.pieces.size() == 1 && fn.pieces.front().lo == 0.0 &&
                    !std::isfinite(fn.pieces.front().hi);
  if (pure_power) {
    auto psi = [&](double s) { return value_at(s, 1.0); };
    double best_s = 0.0, best_psi = psi(0.0);
    for (int i = 1; i <= 64; ++i) {
      double s = i * 0.25;
      double v = psi(s);
      if (v > best_psi * (1.0 + 1e-13)) {
        best_psi = v;
        best_s = s;
      }
    }
    double lo = std::max(0.0, best_s - 0.5), hi = best_s + 0.5;
    double s_ref = golden_max([&](double s) { return psi(s); }, lo, hi, opt.tol, &evals);
    double v_ref = psi(s_ref);
    consider(best_s, 1.0, best_psi);
    consider(s_ref, 1.0, v_ref);
    best.evaluations = evals;
    return best;
  }

  // Grid phase: log-spaced radii with centers seeded at breakpoints
  // +- {0,1/2,1,2} r, plus every ball that exactly spans a pair of (signed)
  // breakpoints -- corner maxima of indicator-like pieces sit on those.
  std::vector<double> breakpoints{0.0};
  for (const auto& pc : fn.pieces) {
    if (pc.lo > 0.0) breakpoints.push_back(pc.lo);
    if (std::isfinite(pc.hi)) breakpoints.push_back(pc.hi);
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  const int n_r = std::max(2, opt.r_points);
  const double log_lo = std::log(opt.r_min), log_hi = std::log(opt.r_max);
  double grid_a = 0.0, grid_r = 0.0, grid_v = -1.0;
  auto grid_consider = [&](double a, double r) {
    double v = value_at(a, r);
    if (v > grid_v * (1.0 + 1e-13)) {
      grid_v = v;
      grid_a = a;
      grid_r = r;
    }
  };
  static const double kOffsets[] = {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0};
  for (int i = 0; i < n_r; ++i) {
    double r = std::exp(log_lo + (log_hi - log_lo) * i / (n_r - 1));
    std::vector<double> centers;
    for (double b : breakpoints) {
      for (double s : kOffsets) {
        double a = b + s * r;
        if (a >= 0.0) centers.push_back(a);  // even function: a >= 0 suffices
      }
    }
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    for (double a : centers) grid_consider(a, r);
  }
  std::vector<double> signed_bps;
  for (double b : breakpoints) {
    signed_bps.push_back(b);
    if (b > 0.0) signed_bps.push_back(-b);
  }
  std::sort(signed_bps.begin(), signed_bps.end());
  for (std::size_t i = 0; i < signed_bps.size(); ++i) {
    for (std::size_t j = i + 1; j < signed_bps.size(); ++j) {
      double a = 0.5 * (signed_bps[i] + signed_bps[j]);
      double r = 0.5 * (signed_bps[j] - signed_bps[i]);
      if (r > 0.0 && a >= 0.0) grid_consider(a, r);
    }
  }

  // Golden-section refinement, alternating center and radius with a
  // shrinking window.
  if (grid_v > 0.0) {
    consider(grid_a, grid_r, grid_v);
    double a = grid_a, r = grid_r;
    const double rho = std::exp((log_hi - log_lo) / (n_r - 1));
    double wa = 2.0 * std::max(r, 1e-12);
    double wr = rho * rho;
    for (int sweep = 0; sweep < opt.refine_sweeps; ++sweep) {
      a = golden_max([&](double s) { return value_at(s, r); }, std::max(0.0, a - wa), a + wa,
                     opt.tol, &evals);
      r = golden_max([&](double s) { return value_at(a, s); }, r / wr, r * wr, opt.tol, &evals);
      consider(a, r, value_at(a, r));
      wa *= 0.4;
      wr = std::pow(wr, 0.5);
    }
  }

  best.evaluations = evals;
  return best;
}

}  // namespace morrey
