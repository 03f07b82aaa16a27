#include <doctest.h>

#include <random>

#include "morrey/radial_norm.hpp"

using namespace morrey;

namespace {

const double kSqrt8 = 2.0 * std::sqrt(2.0);  // ||f|| for (p,q,d) = (1,2,1)

PiecewisePowerFn pure_power(int d, double c, double alpha) {
  return PiecewisePowerFn{d, {{0.0, kInf, c, alpha}}};
}

std::mt19937_64& rng() {
  static std::mt19937_64 gen(424242);
  return gen;
}

double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng());
}

// Random well-conditioned piecewise power function on up to 3 intervals.
PiecewisePowerFn random_fn() {
  std::vector<PowerPiece> pieces;
  double cut1 = uniform(0.3, 1.0), cut2 = uniform(1.2, 3.0);
  int n = 1 + static_cast<int>(rng()() % 3);
  double bounds[4] = {0.0, cut1, cut2, kInf};
  for (int i = 0; i < n; ++i) {
    if (rng()() % 4 == 0) continue;  // leave a gap sometimes
    double c = (rng()() % 2 ? 1.0 : -1.0) * uniform(0.5, 2.0);
    double alpha = uniform(-0.6, 1.5);
    pieces.push_back({bounds[i], bounds[i + 1], c, alpha});
  }
  if (pieces.empty()) pieces.push_back({0.0, 1.0, 1.0, 0.0});
  return PiecewisePowerFn{1, std::move(pieces)};
}

}  // namespace

TEST_SUITE_BEGIN("radial");

TEST_CASE("piece integral closed forms") {
  // int_{B(0,1)} |y|^{-1/2} dy in d = 1: antiderivative 2 sqrt(s) per half-line
  CHECK(piece_integral(1.0, -0.5, 1.0, 0.0, 1.0, 1) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(piece_integral(0.0, 1.7, 2.0, 0.0, 5.0, 1) == 0.0);
  // constant 1 over (-1,1), p = 2
  CHECK(piece_integral(1.0, 0.0, 2.0, 0.0, 1.0, 1) == doctest::Approx(2.0).epsilon(1e-14));
  // logarithmic branch: alpha p + d = 0
  CHECK(piece_integral(1.0, -1.0, 1.0, 1.0, std::exp(1.0), 1) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(piece_integral(1.0, -1.0, 1.0, 0.0, 1.0, 1), Error);   // beta = 0 at origin
  CHECK_THROWS_AS(piece_integral(1.0, -2.0, 1.0, 0.0, 1.0, 1), Error);   // beta < 0 at origin
  CHECK_THROWS_AS(piece_integral(1.0, 1.0, 1.0, 2.0, 1.0, 1), Error);    // bad interval
}

TEST_CASE("sphere area and ball volume for small d") {
  CHECK(ball_volume(1) == doctest::Approx(2.0));
  CHECK(ball_volume(2) == doctest::Approx(3.14159265358979324));
  CHECK(ball_volume(3) == doctest::Approx(4.18879020478639098));
  CHECK(sphere_area(1) == doctest::Approx(2.0));
  CHECK(sphere_area(2) == doctest::Approx(6.28318530717958648));
  CHECK(sphere_area(3) == doctest::Approx(12.5663706143591730));
}

TEST_CASE("ball value examples") {
  auto f = pure_power(1, 1.0, -0.5);
  MorreyParams params(1, 2, 1);
  CHECK(ball_value_1d(f, {0.0, 1.0}, params) == doctest::Approx(kSqrt8).epsilon(1e-14));
  CHECK(ball_value_1d(f, {1.0, 1.0}, params) == doctest::Approx(2.0).epsilon(1e-14));
  PiecewisePowerFn zero{1, {}};
  CHECK(ball_value_1d(zero, {0.3, 2.0}, params) == 0.0);
}

TEST_CASE("local norm closed forms for the witness family") {
  MorreyParams params(1, 2, 1);
  auto f = pure_power(1, 1.0, -0.5);
  NormEstimate nf = local_norm_radial(f, params);
  CHECK(std::fabs(nf.value - kSqrt8) <= 1e-12);

  PiecewisePowerFn g{1, {{0.0, 1.0, 1.0, -0.5}}};
  CHECK(local_norm_radial(g, params).value == doctest::Approx(kSqrt8).epsilon(1e-13));

  PiecewisePowerFn h{1, {{1.0, kInf, 1.0, -0.5}}};
  CHECK(local_norm_radial(h, params).value == doctest::Approx(kSqrt8).epsilon(1e-13));

  PiecewisePowerFn zero{1, {}};
  CHECK(local_norm_radial(zero, params).value == 0.0);
}

TEST_CASE("local norm in higher dimensions: pure power constancy") {
  for (int d = 1; d <= 3; ++d) {
    for (auto [p, q] : {std::pair{1.0, 2.0}, {2.0, 3.0}, {1.0, 4.0}}) {
      MorreyParams params(p, q, d);
      auto f = pure_power(d, 1.0, -d / q);
      double beta = (-d / q) * p + d;
      double expected = std::pow(ball_volume(d), params.exponent()) *
                        std::pow(sphere_area(d) / beta, 1.0 / p);
      NormEstimate est = local_norm_radial(f, params);
      CHECK(est.value == doctest::Approx(expected).epsilon(1e-13));
      // the centered value really is r-independent
      for (double r : {0.01, 1.0, 75.0}) {
        if (d == 1) CHECK(ball_value_1d(f, {0.0, r}, params) == doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("local norm divergence and unboundedness") {
  MorreyParams params(1, 2, 1);
  // beta = alpha p + d <= 0 at the origin: infinite integral
  CHECK_THROWS_AS(local_norm_radial(pure_power(1, 1.0, -1.0), params), Error);
  CHECK_THROWS_AS(local_norm_radial(pure_power(1, 1.0, -2.0), params), Error);
  // constant tail: value grows like r^{1/q}
  CHECK_THROWS_AS(local_norm_radial(pure_power(1, 1.0, 0.0), params), Error);
  // alpha < -d/q with finite integrals: blows up as r -> 0
  CHECK_THROWS_AS(local_norm_radial(pure_power(1, 1.0, -0.7), params), Error);
  // p = q with a non-integrable tail
  CHECK_THROWS_AS(local_norm_radial(pure_power(1, 1.0, -0.5), MorreyParams(2, 2, 1)), Error);

  try {
    local_norm_radial(pure_power(1, 1.0, 0.0), params);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::unbounded);
  }
  try {
    local_norm_radial(pure_power(1, 1.0, -1.0), params);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::divergent);
  }
}

TEST_CASE("local norm at p = q is the L^p norm") {
  MorreyParams params(2, 2, 1);
  PiecewisePowerFn g{1, {{0.0, 1.0, 1.0, 0.25}}};
  // int_{-1}^{1} |s|^{0.5} ds = 2 * (2/3)
  NormEstimate est = local_norm_radial(g, params);
  CHECK(est.value == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("global norm: witness family chain at (1,2)") {
  MorreyParams params(1, 2, 1);
  OptimizerConfig opt;
  auto f = pure_power(1, 1.0, -0.5);
  NormEstimate nf = global_norm_1d(f, params, opt);
  CHECK(nf.value == doctest::Approx(kSqrt8).epsilon(1e-8));
  CHECK(nf.witness.center == doctest::Approx(0.0));

  PiecewisePowerFn g{1, {{0.0, 1.0, 1.0, -0.5}}};
  PiecewisePowerFn h{1, {{1.0, kInf, 1.0, -0.5}}};
  PiecewisePowerFn k{1, {{0.0, 1.0, 1.0, -0.5}, {1.0, kInf, -1.0, -0.5}}};
  CHECK(global_norm_1d(g, params, opt).value == doctest::Approx(kSqrt8).epsilon(1e-6));
  CHECK(global_norm_1d(h, params, opt).value == doctest::Approx(kSqrt8).epsilon(1e-6));
  CHECK(global_norm_1d(k, params, opt).value == doctest::Approx(kSqrt8).epsilon(1e-6));

  PiecewisePowerFn zero{1, {}};
  CHECK(global_norm_1d(zero, params, opt).value == 0.0);
}

TEST_CASE("global norm finds off-center suprema") {
  // indicator of the annulus 1 <= |x| <= 2: the sup sits on B(1.5, 0.5),
  // beating every centered ball
  PiecewisePowerFn annulus{1, {{1.0, 2.0, 1.0, 0.0}}};
  MorreyParams params(1, 3, 1);
  NormEstimate global = global_norm_1d(annulus, params);
  CHECK(global.value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(global.witness.center == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(global.witness.radius == doctest::Approx(0.5).epsilon(1e-6));
  NormEstimate local = local_norm_radial(annulus, params);
  CHECK(local.value == doctest::Approx(std::pow(4.0, -2.0 / 3.0) * 2.0).epsilon(1e-12));
}

TEST_CASE("global norm rejects d != 1") {
  CHECK_THROWS_AS(global_norm_1d(pure_power(2, 1.0, -1.0), MorreyParams(1, 2, 2)), Error);
}

TEST_CASE("scale: fixed point and truncation shift") {
  MorreyParams params(1, 2, 1);
  auto f = pure_power(1, 1.0, -0.5);
  CHECK(scale(f, 3.7, params) == f);

  PiecewisePowerFn g{1, {{0.0, 1.0, 1.0, -0.5}}};
  PiecewisePowerFn expected{1, {{0.0, 0.5, 1.0, -0.5}}};
  CHECK(scale(g, 2.0, params) == expected);

  PiecewisePowerFn zero{1, {}};
  CHECK(scale(zero, 2.0, params).is_zero());
  CHECK_THROWS_AS(scale(g, 0.0, params), Error);
}

TEST_CASE("combine_fn reproduces h and k") {
  auto f = pure_power(1, 1.0, -0.5);
  PiecewisePowerFn g{1, {{0.0, 1.0, 1.0, -0.5}}};
  PiecewisePowerFn h{1, {{1.0, kInf, 1.0, -0.5}}};
  PiecewisePowerFn k{1, {{0.0, 1.0, 1.0, -0.5}, {1.0, kInf, -1.0, -0.5}}};
  CHECK(combine_fn(-1.0, f, 2.0, g) == k);
  CHECK(combine_fn(1.0, f, -1.0, g) == h);
  CHECK(combine_fn(1.0, f, -1.0, f).is_zero());

  PiecewisePowerFn other{1, {{0.5, 2.0, 1.0, 1.0}}};
  CHECK_THROWS_AS(combine_fn(1.0, f, 1.0, other), Error);
}

TEST_CASE("scaling equivariance of the ball evaluator") {
  MorreyParams params(1, 3, 1);
  for (int iter = 0; iter < 100; ++iter) {
    auto fn = random_fn();
    double t = uniform(0.125, 8.0);
    double a = uniform(-5.0, 5.0);
    double r = uniform(0.1, 8.0);
    double lhs = ball_value_1d(scale(fn, t, params), {a, r}, params);
    double rhs = ball_value_1d(fn, {t * a, t * r}, params);
    CHECK(std::fabs(lhs - rhs) <= 1e-13 * std::max(1.0, std::fabs(rhs)));
  }
}

TEST_CASE("truncation never increases ball values") {
  MorreyParams params(2, 4, 1);
  for (int iter = 0; iter < 50; ++iter) {
    auto fn = random_fn();
    // truncate: drop everything beyond the first piece
    PiecewisePowerFn trunc{1, {fn.pieces.front()}};
    double a = uniform(-3.0, 3.0);
    double r = uniform(0.1, 5.0);
    try {
      double full = ball_value_1d(fn, {a, r}, params);
      double part = ball_value_1d(trunc, {a, r}, params);
      CHECK(part <= full * (1.0 + 1e-12) + 1e-15);
    } catch (const Error& e) {
      CHECK(e.code() == errc::divergent);  // draw not integrable at this p
    }
  }
}

TEST_CASE("pointwise modulus identity: ||h - g|| = ||f||") {
  MorreyParams params(1, 2, 1);
  OptimizerConfig opt;
  PiecewisePowerFn g{1, {{0.0, 1.0, 1.0, -0.5}}};
  PiecewisePowerFn h{1, {{1.0, kInf, 1.0, -0.5}}};
  auto diff = combine_fn(1.0, h, -1.0, g);
  double lhs = global_norm_1d(diff, params, opt).value;
  double rhs = global_norm_1d(pure_power(1, 1.0, -0.5), params, opt).value;
  CHECK(lhs == doctest::Approx(rhs).epsilon(2.0 * opt.tol));
}

TEST_CASE("local never exceeds global in d = 1") {
  MorreyParams params(1, 2, 1);
  OptimizerConfig opt;
  for (int iter = 0; iter < 30; ++iter) {
    auto fn = random_fn();
    NormEstimate local, global;
    try {
      local = local_norm_radial(fn, params);
      global = global_norm_1d(fn, params, opt);
    } catch (const Error&) {
      continue;  // divergent/unbounded draws are fine here
    }
    CHECK(local.value <= global.value * (1.0 + opt.tol) + 1e-15);
  }
}

TEST_SUITE_END();
