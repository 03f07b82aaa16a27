#include "morrey/witnesses.hpp"

#include <cmath>

namespace morrey {

namespace {

double threshold_value(const MorreyParams& params) {
  return std::exp2(params.q / (params.d * (params.q - params.p))) - 1.0;
}

LatticePoint axis_point(int d, std::int64_t v) {
  std::vector<std::int64_t> c(d, 0);
  c[0] = v;
  return LatticePoint(std::move(c));
}

}  // namespace

bool witness_threshold_ok(const MorreyParams& params, std::int64_t n) {
  if (!(params.p < params.q)) raise(errc::degenerate_params, "witness threshold needs p < q");
  if (n <= 0 || n % 2 != 0) return false;
  auto pi = params.p_int(), qi = params.q_int();
  if (pi && qi) {
    // (n+1)^{d(1/q-1/p)} 2^{1/p} < 1  <=>  2^q < (n+1)^{d(q-p)}
    BigInt lhs = BigInt(2).pow(static_cast<unsigned>(*qi));
    BigInt rhs = BigInt(n + 1).pow(static_cast<unsigned>(params.d * (*qi - *pi)));
    return lhs < rhs;
  }
  double check = std::pow(static_cast<double>(n + 1), params.d * params.exponent()) *
                 std::exp2(1.0 / params.p);
  return check < 1.0;
}

std::int64_t minimal_even_n(const MorreyParams& params) {
  if (!(params.p < params.q)) raise(errc::degenerate_params, "minimal_even_n needs p < q");
  auto pi = params.p_int(), qi = params.q_int();
  if (pi && qi) {
    for (std::int64_t n = 2;; n += 2) {
      if (witness_threshold_ok(params, n)) return n;
    }
  }
  double t = threshold_value(params);
  std::int64_t n = 2 * static_cast<std::int64_t>(std::floor(t / 2.0)) + 2;
  while (!witness_threshold_ok(params, n)) n += 2;
  return n;
}

DiscreteWitness discrete_witness_pair(const MorreyParams& params,
                                      std::optional<std::int64_t> n_opt) {
  if (!(params.p < params.q)) raise(errc::degenerate_params, "witness pair needs p < q");
  std::int64_t n = n_opt ? *n_opt : minimal_even_n(params);
  if (n_opt && !witness_threshold_ok(params, n))
    raise(errc::threshold_violated, "n fails (n+1)^{d(1/q-1/p)} 2^{1/p} < 1");

  DiscreteWitness w;
  w.params = params;
  w.n = n;
  w.threshold = threshold_value(params);
  w.x = SparseSequence<Rational>(params.d);
  w.y = SparseSequence<Rational>(params.d);
  w.x.set(axis_point(params.d, 0), Rational(1));
  w.x.set(axis_point(params.d, n), Rational(1));
  w.y.set(axis_point(params.d, 0), Rational(1));
  w.y.set(axis_point(params.d, n), Rational(-1));
  return w;
}

ContinuousWitness continuous_witness_family(const MorreyParams& params) {
  if (!(params.p < params.q)) raise(errc::degenerate_params, "witness family needs p < q");
  double alpha = -static_cast<double>(params.d) / params.q;
  ContinuousWitness w;
  w.params = params;
  w.f = PiecewisePowerFn{params.d, {{0.0, kInf, 1.0, alpha}}};
  w.g = PiecewisePowerFn{params.d, {{0.0, 1.0, 1.0, alpha}}};
  w.h = PiecewisePowerFn{params.d, {{1.0, kInf, 1.0, alpha}}};
  w.k = PiecewisePowerFn{params.d, {{0.0, 1.0, 1.0, alpha}, {1.0, kInf, -1.0, alpha}}};
  return w;
}

std::pair<PiecewisePowerFn, PiecewisePowerFn> dw_couple_continuous(const ContinuousWitness& w,
                                                                   double r) {
  if (!(r > 0.0 && r < 1.0)) raise(errc::bad_range, "dw couple needs r in (0,1)");
  return {w.f, combine_fn(1.0 + r, w.g, 1.0 - r, w.h)};
}

std::pair<SparseSequence<Rational>, SparseSequence<Rational>> dw_couple_discrete(
    const DiscreteWitness& w, const Rational& r, DwVariant variant) {
  if (!(r > Rational(0) && r < Rational(1))) raise(errc::bad_range, "dw couple needs r in (0,1)");
  Rational one(1);
  if (variant == DwVariant::paper) {
    auto u = combine(one, w.x, one, w.y);
    auto v = combine(one + r, w.x, one - r, w.y);
    return {std::move(u), std::move(v)};
  }
  Rational half = Rational::of(1, 2);
  auto a = scale_seq(half, combine(one, w.x, one, w.y));   // delta at the origin
  auto b = scale_seq(half, combine(one, w.x, -one, w.y));  // delta at (n,0,...,0)
  auto u = combine(one, a, one, b);
  auto v = combine(one + r, a, one - r, b);
  return {std::move(u), std::move(v)};
}

double dw_ratio(double r) {
  if (!(r > 0.0 && r < 1.0)) raise(errc::bad_range, "dw_ratio needs r in (0,1)");
  return (4.0 + 2.0 * r) / (1.0 + r);
}

Rational dw_ratio_exact(const Rational& r) {
  if (!(r > Rational(0) && r < Rational(1))) raise(errc::bad_range, "dw_ratio needs r in (0,1)");
  return (Rational(4) + Rational(2) * r) / (Rational(1) + r);
}

}  // namespace morrey
