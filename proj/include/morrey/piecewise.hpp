#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "morrey/errors.hpp"
#include "morrey/params.hpp"

namespace morrey {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One radial piece: value c * s^alpha for radius s in [lo, hi).
struct PowerPiece {
  double lo = 0.0;
  double hi = kInf;
  double c = 0.0;
  double alpha = 0.0;

  friend bool operator==(const PowerPiece&, const PowerPiece&) = default;
};

// Radial function sum_i c_i |x|^{alpha_i} on disjoint ascending intervals;
// gaps mean value 0. Canonical form: sorted, no zero coefficients, adjacent
// pieces with identical (c, alpha) merged.
struct PiecewisePowerFn {
  int d = 1;
  std::vector<PowerPiece> pieces;

  PiecewisePowerFn() = default;
  PiecewisePowerFn(int dim, std::vector<PowerPiece> ps) : d(dim), pieces(std::move(ps)) {
    canonicalize();
  }

  bool is_zero() const { return pieces.empty(); }

  double operator()(double radius) const {
    for (const auto& pc : pieces) {
      if (radius >= pc.lo && radius < pc.hi) return pc.c * std::pow(radius, pc.alpha);
    }
    return 0.0;
  }

  void canonicalize() {
    if (d < 1) raise(errc::invalid_params, "dimension must be >= 1");
    std::vector<PowerPiece> keep;
    for (const auto& pc : pieces) {
      if (!(pc.lo >= 0.0) || !(pc.hi > pc.lo)) raise(errc::invalid_params, "piece interval must satisfy 0 <= lo < hi");
      if (pc.c != 0.0) keep.push_back(pc);
    }
    std::sort(keep.begin(), keep.end(),
              [](const PowerPiece& a, const PowerPiece& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < keep.size(); ++i) {
      if (keep[i].lo < keep[i - 1].hi) raise(errc::invalid_params, "pieces overlap");
    }
    std::vector<PowerPiece> merged;
    for (auto& pc : keep) {
      if (!merged.empty() && merged.back().hi == pc.lo && merged.back().c == pc.c &&
          merged.back().alpha == pc.alpha) {
        merged.back().hi = pc.hi;
      } else {
        merged.push_back(pc);
      }
    }
    pieces = std::move(merged);
  }

  friend bool operator==(const PiecewisePowerFn&, const PiecewisePowerFn&) = default;
};

// x -> t^{d/q} fn(t x): piece (lo, hi, c, alpha) maps to
// (lo/t, hi/t, c t^{d/q + alpha}, alpha). The Morrey norm is invariant under
// this map, which is the identity the witness constructions lean on.
inline PiecewisePowerFn scale(const PiecewisePowerFn& fn, double t, const MorreyParams& params) {
  if (!(t > 0.0)) raise(errc::bad_range, "scale factor must be positive");
  PiecewisePowerFn out;
  out.d = fn.d;
  for (const auto& pc : fn.pieces) {
    double factor = std::pow(t, static_cast<double>(fn.d) / params.q + pc.alpha);
    out.pieces.push_back({pc.lo / t, pc.hi / t, pc.c * factor, pc.alpha});
  }
  out.canonicalize();
  return out;
}

// a*u + b*v on the refined joint partition. Overlapping covered segments must
// share the exponent, otherwise the result is not piecewise-power.
inline PiecewisePowerFn combine_fn(double a, const PiecewisePowerFn& u, double b,
                                   const PiecewisePowerFn& v) {
  if (u.d != v.d) raise(errc::dimension_mismatch, "combine_fn on mismatched dimensions");
  std::vector<double> cuts;
  for (const auto& pc : u.pieces) {
    cuts.push_back(pc.lo);
    cuts.push_back(pc.hi);
  }
  for (const auto& pc : v.pieces) {
    cuts.push_back(pc.lo);
    cuts.push_back(pc.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto covering = [](const PiecewisePowerFn& fn, double lo) -> const PowerPiece* {
    for (const auto& pc : fn.pieces) {
      if (pc.lo <= lo && lo < pc.hi) return &pc;
    }
    return nullptr;
  };

  PiecewisePowerFn out;
  out.d = u.d;
  for (std::size_t i = 0; i + 1 <= cuts.size(); ++i) {
    double lo = cuts[i];
    double hi = i + 1 < cuts.size() ? cuts[i + 1] : kInf;
    if (!(hi > lo)) continue;
    const PowerPiece* pu = covering(u, lo);
    const PowerPiece* pv = covering(v, lo);
    double cu = (pu != nullptr) ? a * pu->c : 0.0;
    double cv = (pv != nullptr) ? b * pv->c : 0.0;
    if (cu != 0.0 && cv != 0.0 && pu->alpha != pv->alpha)
      raise(errc::incompatible_pieces, "overlapping pieces with different exponents");
    double c = cu + cv;
    if (c == 0.0) continue;
    double alpha = cu != 0.0 ? pu->alpha : pv->alpha;
    out.pieces.push_back({lo, hi, c, alpha});
  }
  out.canonicalize();
  return out;
}

inline PiecewisePowerFn scale_fn(double a, const PiecewisePowerFn& u) {
  return combine_fn(a, u, 0.0, PiecewisePowerFn{u.d, {}});
}

}  // namespace morrey
