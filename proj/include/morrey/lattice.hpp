#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "morrey/errors.hpp"
#include "morrey/params.hpp"
#include "morrey/rational.hpp"

namespace morrey {

// A point of Z^d. Lexicographic order gives deterministic iteration and
// tie-breaking everywhere downstream.
struct LatticePoint {
  std::vector<std::int64_t> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }

  auto operator<=>(const LatticePoint&) const = default;
};

inline std::int64_t chebyshev_dist(const LatticePoint& a, const LatticePoint& b) {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    std::int64_t diff = a.coords[i] - b.coords[i];
    if (diff < 0) diff = -diff;
    if (diff > m) m = diff;
  }
  return m;
}

// Discrete cube: the Chebyshev ball of radius N centered at m.
struct Window {
  LatticePoint center;
  std::int64_t radius = 0;  // N >= 0

  bool contains(const LatticePoint& k) const { return chebyshev_dist(center, k) <= radius; }

  friend bool operator==(const Window&, const Window&) = default;
  // (N, m) lexicographic: the canonical argmax tie-break.
  friend bool operator<(const Window& a, const Window& b) {
    if (a.radius != b.radius) return a.radius < b.radius;
    return a.center < b.center;
  }
};

// (2N+1)^d with overflow detection.
inline std::int64_t window_cardinality(std::int64_t radius, int d) {
  if (radius < 0 || d < 1) raise(errc::invalid_params, "window radius/dimension out of range");
  std::int64_t side = 2 * radius + 1;
  std::int64_t card = 1;
  for (int i = 0; i < d; ++i) {
    if (card > std::numeric_limits<std::int64_t>::max() / side)
      raise(errc::input_too_large, "window cardinality overflows int64");
    card *= side;
  }
  return card;
}

inline std::int64_t window_cardinality(const Window& w, int d) {
  return window_cardinality(w.radius, d);
}

// Scalar plumbing shared by the double and exact-rational engines.
template <class S>
struct scalar_ops;

template <>
struct scalar_ops<double> {
  static bool is_zero(double v) { return v == 0.0; }
  static double to_double(double v) { return v; }
  static double abs_pow(double v, const MorreyParams& params) {
    double a = std::fabs(v);
    if (auto pi = params.p_int()) {
      double r = 1.0;
      for (int i = 0; i < *pi; ++i) r *= a;
      return r;
    }
    return std::pow(a, params.p);
  }
};

template <>
struct scalar_ops<Rational> {
  static bool is_zero(const Rational& v) { return v.is_zero(); }
  static double to_double(const Rational& v) { return v.to_double(); }
  static Rational abs_pow(const Rational& v, const MorreyParams& params) {
    auto pi = params.p_int();
    if (!pi) raise(errc::invalid_params, "exact mode requires integer p");
    return v.abs().pow(static_cast<unsigned>(*pi));
  }
};

// Finitely supported map Z^d -> scalars, canonical sparse form (no stored zeros).
template <class S>
struct SparseSequence {
  int d = 1;
  std::map<LatticePoint, S> entries;

  SparseSequence() = default;
  explicit SparseSequence(int dim) : d(dim) {
    if (dim < 1) raise(errc::invalid_params, "dimension must be >= 1");
  }

  bool is_zero() const { return entries.empty(); }

  void set(const LatticePoint& k, const S& v) {
    if (k.dim() != d) raise(errc::dimension_mismatch, "entry key has wrong dimension");
    if (scalar_ops<S>::is_zero(v))
      entries.erase(k);
    else
      entries[k] = v;
  }

  // Support bounding box as (lo, hi) corner points; requires a nonzero sequence.
  std::pair<LatticePoint, LatticePoint> bounding_box() const {
    if (entries.empty()) raise(errc::empty_sequence, "zero sequence has no bounding box");
    std::vector<std::int64_t> lo(d, std::numeric_limits<std::int64_t>::max());
    std::vector<std::int64_t> hi(d, std::numeric_limits<std::int64_t>::min());
    for (const auto& [k, v] : entries) {
      for (int i = 0; i < d; ++i) {
        lo[i] = std::min(lo[i], k.coords[i]);
        hi[i] = std::max(hi[i], k.coords[i]);
      }
    }
    return {LatticePoint(std::move(lo)), LatticePoint(std::move(hi))};
  }

  friend bool operator==(const SparseSequence&, const SparseSequence&) = default;
};

// a*x + b*y in canonical sparse form; exact zeros are dropped.
template <class S>
SparseSequence<S> combine(const S& a, const SparseSequence<S>& x, const S& b,
                          const SparseSequence<S>& y) {
  if (x.d != y.d) raise(errc::dimension_mismatch, "combine on mismatched dimensions");
  SparseSequence<S> r(x.d);
  for (const auto& [k, v] : x.entries) r.set(k, a * v);
  for (const auto& [k, v] : y.entries) {
    auto it = r.entries.find(k);
    S sum = b * v;
    if (it != r.entries.end()) sum = it->second + sum;
    r.set(k, sum);
  }
  return r;
}

template <class S>
SparseSequence<S> scale_seq(const S& a, const SparseSequence<S>& x) {
  return combine(a, x, S(0), SparseSequence<S>(x.d));
}

inline SparseSequence<double> to_double_seq(const SparseSequence<Rational>& x) {
  SparseSequence<double> r(x.d);
  for (const auto& [k, v] : x.entries) r.set(k, v.to_double());
  return r;
}

}  // namespace morrey
