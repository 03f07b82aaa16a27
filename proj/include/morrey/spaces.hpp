#pragma once

#include <optional>

#include "morrey/lattice_norm.hpp"
#include "morrey/radial_norm.hpp"

namespace morrey {

// Norm value as seen by the functionals: a double, the tolerance the engine
// claims for it, and the exact rational value when the engine can certify one.
struct NormOutcome {
  double value = 0.0;
  double tolerance = 0.0;
  std::optional<Rational> exact;
};

template <class S>
struct DiscreteSpace {
  using Vector = SparseSequence<S>;
  using Scalar = S;

  MorreyParams params;

  explicit DiscreteSpace(MorreyParams pr) : params(std::move(pr)) {
    if constexpr (std::is_same_v<S, Rational>) {
      if (!params.exact_capable())
        raise(errc::invalid_params, "exact mode requires integer p and q");
    }
  }

  NormOutcome norm(const Vector& x) const {
    DiscreteNormResult r = discrete_norm(x, params);
    NormOutcome out;
    out.value = r.value;
    out.exact = r.exact_value;
    out.tolerance = std::is_same_v<S, Rational> && r.exact_value ? 0.0 : 1e-12;
    return out;
  }

  DiscreteNormResult norm_full(const Vector& x) const { return discrete_norm(x, params); }

  Vector add(const Vector& a, const Vector& b) const { return combine(S(1), a, S(1), b); }
  Vector sub(const Vector& a, const Vector& b) const { return combine(S(1), a, S(-1), b); }
  bool is_zero(const Vector& v) const { return v.is_zero(); }
  bool equal(const Vector& a, const Vector& b) const { return a == b; }

  // x / ||x||; in exact mode only available when the norm is exactly rational.
  std::optional<Vector> normalized(const Vector& x, const NormOutcome& nx) const {
    if constexpr (std::is_same_v<S, Rational>) {
      if (!nx.exact) return std::nullopt;
      return scale_seq(Rational(1) / *nx.exact, x);
    } else {
      return scale_seq(1.0 / nx.value, x);
    }
  }
};

using DiscreteSpaceD = DiscreteSpace<double>;
using DiscreteSpaceX = DiscreteSpace<Rational>;

struct ContinuousSpace {
  enum class Mode { global1d, local };
  using Vector = PiecewisePowerFn;

  MorreyParams params;
  Mode mode = Mode::global1d;
  OptimizerConfig opt;

  ContinuousSpace(MorreyParams pr, Mode m, OptimizerConfig o = {})
      : params(std::move(pr)), mode(m), opt(o) {
    if (mode == Mode::global1d && params.d != 1)
      raise(errc::invalid_params, "global continuous norms are implemented for d = 1 only");
  }

  NormOutcome norm(const Vector& f) const {
    NormEstimate e = mode == Mode::global1d ? global_norm_1d(f, params, opt)
                                            : local_norm_radial(f, params);
    return {e.value, e.tolerance, std::nullopt};
  }

  NormEstimate norm_full(const Vector& f) const {
    return mode == Mode::global1d ? global_norm_1d(f, params, opt) : local_norm_radial(f, params);
  }

  Vector add(const Vector& a, const Vector& b) const { return combine_fn(1.0, a, 1.0, b); }
  Vector sub(const Vector& a, const Vector& b) const { return combine_fn(1.0, a, -1.0, b); }
  bool is_zero(const Vector& v) const { return v.is_zero(); }
  bool equal(const Vector& a, const Vector& b) const { return a == b; }

  std::optional<Vector> normalized(const Vector& x, const NormOutcome& nx) const {
    return scale_fn(1.0 / nx.value, x);
  }
};

}  // namespace morrey
