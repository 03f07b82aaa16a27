#pragma once

#include <cmath>
#include <optional>

#include "morrey/errors.hpp"

namespace morrey {

// The (p, q, d) triple behind every norm: 1 <= p <= q < inf, d >= 1.
// exponent() = 1/q - 1/p <= 0 is the cardinality/measure prefactor exponent.
struct MorreyParams {
  double p = 1.0;
  double q = 1.0;
  int d = 1;

  MorreyParams() = default;
  MorreyParams(double p_, double q_, int d_) : p(p_), q(q_), d(d_) { validate(); }

  void validate() const {
    if (!(p >= 1.0) || !(q >= p) || !std::isfinite(q) || d < 1)
      raise(errc::invalid_params, "need 1 <= p <= q < inf and d >= 1");
  }

  double exponent() const { return 1.0 / q - 1.0 / p; }
  bool lebesgue() const { return p == q; }

  std::optional<int> p_int() const { return as_int(p); }
  std::optional<int> q_int() const { return as_int(q); }
  // Exact mode needs integer p and q: only then is value^{pq} rational.
  bool exact_capable() const { return p_int().has_value() && q_int().has_value(); }

private:
  static std::optional<int> as_int(double v) {
    if (v == std::floor(v) && v >= 1.0 && v <= 1e9) return static_cast<int>(v);
    return std::nullopt;
  }
};

}  // namespace morrey
