#include <doctest.h>

#include "morrey/functionals.hpp"
#include "morrey/witnesses.hpp"

using namespace morrey;

TEST_SUITE_BEGIN("witnesses");

TEST_CASE("minimal even n for the tabulated triples") {
  CHECK(minimal_even_n(MorreyParams(1, 2, 1)) == 4);
  CHECK(minimal_even_n(MorreyParams(1, 2, 2)) == 2);
  CHECK(minimal_even_n(MorreyParams(2, 3, 1)) == 8);
  CHECK_THROWS_AS(minimal_even_n(MorreyParams(2, 2, 1)), Error);
}

TEST_CASE("minimal even n on non-integer exponents") {
  // threshold 2^{3/1.5} - 1 = 3, so n = 4; check the defining inequality
  std::int64_t n = minimal_even_n(MorreyParams(1.5, 3.0, 1));
  CHECK(n == 4);
  MorreyParams params(1.5, 3.0, 1);
  CHECK(std::pow(static_cast<double>(n + 1), params.exponent()) * std::exp2(1.0 / params.p) < 1.0);
}

TEST_CASE("witness threshold check") {
  CHECK(witness_threshold_ok(MorreyParams(1, 2, 1), 4));
  CHECK(!witness_threshold_ok(MorreyParams(1, 2, 1), 2));  // 3^{-1/2} 2 > 1
  CHECK(!witness_threshold_ok(MorreyParams(1, 2, 1), 5));  // odd
  CHECK(witness_threshold_ok(MorreyParams(1, 2, 1), 6));
}

TEST_CASE("discrete witness pair construction") {
  DiscreteWitness w = discrete_witness_pair(MorreyParams(1, 2, 1));
  CHECK(w.n == 4);
  CHECK(w.threshold == doctest::Approx(3.0));
  CHECK(w.x.entries.at(LatticePoint({0})) == Rational(1));
  CHECK(w.x.entries.at(LatticePoint({4})) == Rational(1));
  CHECK(w.y.entries.at(LatticePoint({4})) == Rational(-1));
  CHECK(w.x.entries.size() == 2);

  DiscreteWitness w2 = discrete_witness_pair(MorreyParams(1, 2, 2));
  CHECK(w2.n == 2);
  CHECK(w2.x.entries.count(LatticePoint({0, 0})) == 1);
  CHECK(w2.x.entries.count(LatticePoint({2, 0})) == 1);

  CHECK_THROWS_AS(discrete_witness_pair(MorreyParams(1, 2, 1), 2), Error);
  try {
    discrete_witness_pair(MorreyParams(1, 2, 1), 2);
  } catch (const Error& e) {
    CHECK(e.code() == errc::threshold_violated);
  }
}

TEST_CASE("witness norms are exactly 1 and 2 across the parameter grid") {
  for (int d = 1; d <= 3; ++d) {
    for (int p = 1; p <= 5; ++p) {
      for (int q = p + 1; q <= 6; ++q) {
        MorreyParams params(p, q, d);
        DiscreteWitness w = discrete_witness_pair(params);
        DiscreteSpaceX space(params);
        CHECK(space.norm(w.x).exact.value() == Rational(1));
        CHECK(space.norm(w.y).exact.value() == Rational(1));
        CHECK(space.norm(space.add(w.x, w.y)).exact.value() == Rational(2));
        CHECK(space.norm(space.sub(w.x, w.y)).exact.value() == Rational(2));
      }
    }
  }
}

TEST_CASE("continuous witness family layout") {
  ContinuousWitness w = continuous_witness_family(MorreyParams(1, 2, 1));
  CHECK(w.f == PiecewisePowerFn{1, {{0.0, kInf, 1.0, -0.5}}});
  CHECK(w.g == PiecewisePowerFn{1, {{0.0, 1.0, 1.0, -0.5}}});
  CHECK(w.h == PiecewisePowerFn{1, {{1.0, kInf, 1.0, -0.5}}});
  CHECK(w.k == (PiecewisePowerFn{1, {{0.0, 1.0, 1.0, -0.5}, {1.0, kInf, -1.0, -0.5}}}));

  // f + k = 2g and f - k = 2h as piecewise identities
  CHECK(combine_fn(1.0, w.f, 1.0, w.k) == combine_fn(2.0, w.g, 0.0, w.g));
  CHECK(combine_fn(1.0, w.f, -1.0, w.k) == combine_fn(2.0, w.h, 0.0, w.h));
  CHECK_THROWS_AS(continuous_witness_family(MorreyParams(2, 2, 1)), Error);
}

TEST_CASE("continuous dw couple coefficients") {
  ContinuousWitness w = continuous_witness_family(MorreyParams(1, 2, 1));
  auto [f, v] = dw_couple_continuous(w, 0.5);
  CHECK(f == w.f);
  CHECK(v == (PiecewisePowerFn{1, {{0.0, 1.0, 1.5, -0.5}, {1.0, kInf, 0.5, -0.5}}}));
  CHECK_THROWS_AS(dw_couple_continuous(w, 0.0), Error);
  CHECK_THROWS_AS(dw_couple_continuous(w, 1.0), Error);
}

TEST_CASE("continuous dw couple evaluates to (4+2r)/(1+r)") {
  MorreyParams params(1, 2, 1);
  ContinuousWitness w = continuous_witness_family(params);
  ContinuousSpace space(params, ContinuousSpace::Mode::global1d);
  for (double r : {0.5, 0.1, 0.01}) {
    auto [u, v] = dw_couple_continuous(w, r);
    FunctionalResult res = dw_functional(space, u, v);
    CHECK(res.value == doctest::Approx(dw_ratio(r)).epsilon(1e-4));
  }
}

TEST_CASE("discrete dw couple structure and values") {
  MorreyParams params(1, 2, 1);
  DiscreteWitness w = discrete_witness_pair(params);
  Rational half = Rational::of(1, 2);

  auto [u, v] = dw_couple_discrete(w, half, DwVariant::corrected);
  CHECK(u.entries.at(LatticePoint({0})) == Rational(1));
  CHECK(u.entries.at(LatticePoint({4})) == Rational(1));
  CHECK(v.entries.at(LatticePoint({0})) == Rational::of(3, 2));
  CHECK(v.entries.at(LatticePoint({4})) == Rational::of(1, 2));

  auto [up, vp] = dw_couple_discrete(w, half, DwVariant::paper);
  CHECK(up.entries.size() == 1);
  CHECK(up.entries.at(LatticePoint({0})) == Rational(2));
  CHECK(vp.entries.at(LatticePoint({0})) == Rational(2));
  CHECK(vp.entries.at(LatticePoint({4})) == Rational(1));

  CHECK_THROWS_AS(dw_couple_discrete(w, Rational(1), DwVariant::corrected), Error);
}

TEST_CASE("corrected dw couple tracks the reference curve exactly") {
  MorreyParams params(1, 2, 1);
  DiscreteWitness w = discrete_witness_pair(params);
  DiscreteSpaceX space(params);
  double prev = 0.0;
  for (auto r : {Rational::of(1, 2), Rational::of(1, 4), Rational::of(1, 10),
                 Rational::of(1, 100)}) {
    auto [u, v] = dw_couple_discrete(w, r, DwVariant::corrected);
    FunctionalResult res = dw_functional(space, u, v);
    CHECK(res.exact.value() == dw_ratio_exact(r));
    CHECK(std::fabs(res.value - dw_ratio(r.to_double())) <= 1e-12);
    CHECK(res.value > prev);  // increases toward 4 as r decreases
    prev = res.value;

    auto [up, vp] = dw_couple_discrete(w, r, DwVariant::paper);
    CHECK(dw_functional(space, up, vp).exact.value() == Rational(2));
  }
  CHECK(prev < 4.0);
}

TEST_CASE("dw ratio reference values") {
  CHECK(dw_ratio(0.5) == doctest::Approx(10.0 / 3.0).epsilon(1e-15));
  CHECK(dw_ratio_exact(Rational::of(1, 2)) == Rational::of(10, 3));
  CHECK(dw_ratio(0.01) == doctest::Approx(4.02 / 1.01).epsilon(1e-15));
  CHECK(dw_ratio(1.0 - 1e-12) == doctest::Approx(3.0).epsilon(1e-9));  // r -> 1 limit
  CHECK_THROWS_AS(dw_ratio(0.0), Error);
  CHECK_THROWS_AS(dw_ratio(1.5), Error);
}

TEST_SUITE_END();
