#pragma once

#include <optional>
#include <vector>

#include "morrey/lattice.hpp"

namespace morrey {

// One window term of the discrete Morrey norm:
//   value = (2N+1)^{d(1/q-1/p)} * (sum_{k in S_{m,N}} |x(k)|^p)^{1/p}.
// In exact mode the comparison key (2N+1)^{d(p-q)} * S^q is carried along;
// it equals value^{pq}, so ordering by key is ordering by value.
struct WindowValue {
  Window window;
  double value = 0.0;
  std::optional<Rational> exact_key;
};

struct DiscreteNormResult {
  double value = 0.0;
  std::optional<Window> window;  // one argmax; absent for the zero sequence
  std::optional<Rational> exact_key;
  std::optional<Rational> exact_value;  // present when the key has an exact pq-th root
  std::size_t windows_evaluated = 0;
};

namespace detail {

inline double window_value_double(std::int64_t card, double sum_pow, const MorreyParams& params) {
  if (sum_pow == 0.0) return 0.0;
  double prefactor = std::pow(static_cast<double>(card), params.exponent());
  return prefactor * std::pow(sum_pow, 1.0 / params.p);
}

inline Rational window_key(std::int64_t card, const Rational& sum_pow, const MorreyParams& params) {
  auto pi = params.p_int(), qi = params.q_int();
  if (!pi || !qi) raise(errc::invalid_params, "exact mode requires integer p and q");
  BigInt card_pow = BigInt(card).pow(static_cast<unsigned>(*qi - *pi));
  Rational sq = sum_pow.pow(static_cast<unsigned>(*qi));
  return Rational(sq.num(), sq.den() * card_pow);
}

}  // namespace detail

template <class S>
WindowValue window_value(const SparseSequence<S>& x, const Window& w, const MorreyParams& params) {
  if (w.center.dim() != x.d || params.d != x.d)
    raise(errc::dimension_mismatch, "window/sequence dimensions disagree");
  S sum{0};
  for (const auto& [k, v] : x.entries) {
    if (w.contains(k)) sum = sum + scalar_ops<S>::abs_pow(v, params);
  }
  std::int64_t card = window_cardinality(w, x.d);
  WindowValue out;
  out.window = w;
  out.value = detail::window_value_double(card, scalar_ops<S>::to_double(sum), params);
  if constexpr (std::is_same_v<S, Rational>) {
    out.exact_key = detail::window_key(card, sum, params);
  }
  return out;
}

// All windows that can carry the supremum. Let N0 be the least radius at which
// a single window covers the whole support (half the largest bounding-box side,
// rounded up). For N > N0 the in-window sum is at most the total mass while the
// (2N+1)^{d(1/q-1/p)} prefactor is nonincreasing, so the covering window at N0
// dominates every larger one; windows disjoint from the support contribute 0.
// Hence the returned set {N <= N0, center within Chebyshev N of the support}
// always contains a maximizer. Sorted by (N, center) ascending.
template <class S>
std::vector<Window> candidate_windows(const SparseSequence<S>& x, const MorreyParams& params,
                                      std::size_t max_windows = std::size_t(1) << 26) {
  if (x.is_zero()) raise(errc::empty_sequence, "candidate_windows needs a nonzero sequence");
  if (params.d != x.d) raise(errc::dimension_mismatch, "params/sequence dimensions disagree");
  auto [lo, hi] = x.bounding_box();
  std::int64_t n0 = 0;
  for (int i = 0; i < x.d; ++i) n0 = std::max(n0, (hi.coords[i] - lo.coords[i] + 1) / 2);

  std::vector<Window> out;
  std::vector<std::int64_t> cur(x.d);
  for (std::int64_t n = 0; n <= n0; ++n) {
    for (int i = 0; i < x.d; ++i) cur[i] = lo.coords[i] - n;
    while (true) {
      Window w{LatticePoint(cur), n};
      bool touches = false;
      for (const auto& [k, v] : x.entries) {
        if (w.contains(k)) {
          touches = true;
          break;
        }
      }
      if (touches) {
        if (out.size() >= max_windows)
          raise(errc::input_too_large, "candidate window enumeration exceeds budget");
        out.push_back(std::move(w));
      }
      // odometer over [lo_i - n, hi_i + n], last axis fastest
      int axis = x.d - 1;
      while (axis >= 0) {
        if (++cur[axis] <= hi.coords[axis] + n) break;
        cur[axis] = lo.coords[axis] - n;
        --axis;
      }
      if (axis < 0) break;
    }
  }
  return out;
}

namespace detail {

// Scan in (N, m) order, first-wins among ties, so the reported argmax is the
// lexicographically smallest tied window.
template <class S>
DiscreteNormResult max_over(const SparseSequence<S>& x, const std::vector<Window>& windows,
                            const MorreyParams& params) {
  constexpr double kTieTol = 1e-12;
  DiscreteNormResult best;
  for (const auto& w : windows) {
    WindowValue wv = window_value(x, w, params);
    ++best.windows_evaluated;
    bool better;
    if constexpr (std::is_same_v<S, Rational>) {
      better = !best.window || *wv.exact_key > *best.exact_key;
    } else {
      better = !best.window || wv.value > best.value * (1.0 + kTieTol);
    }
    if (better) {
      best.value = wv.value;
      best.window = wv.window;
      best.exact_key = wv.exact_key;
    }
  }
  if constexpr (std::is_same_v<S, Rational>) {
    if (best.exact_key) {
      int pq = *params.p_int() * *params.q_int();
      best.exact_value = best.exact_key->nth_root_exact(static_cast<unsigned>(pq));
      if (best.exact_value) best.value = best.exact_value->to_double();
    }
  }
  return best;
}

}  // namespace detail

// sup over all windows of the window value; 0 for the zero sequence.
template <class S>
DiscreteNormResult discrete_norm(const SparseSequence<S>& x, const MorreyParams& params) {
  if (x.is_zero()) return {};
  return detail::max_over(x, candidate_windows(x, params), params);
}

// Exhaustive test oracle: every window with N <= n_max and center within
// Chebyshev distance n_max of the support box.
template <class S>
DiscreteNormResult brute_force_norm(const SparseSequence<S>& x, const MorreyParams& params,
                                    std::int64_t n_max,
                                    std::size_t budget = std::size_t(1) << 26) {
  if (x.is_zero()) return {};
  if (params.d != x.d) raise(errc::dimension_mismatch, "params/sequence dimensions disagree");
  auto [lo, hi] = x.bounding_box();

  std::size_t centers = 1;
  for (int i = 0; i < x.d; ++i) {
    std::size_t span = static_cast<std::size_t>(hi.coords[i] - lo.coords[i] + 2 * n_max + 1);
    if (centers > budget / span) raise(errc::input_too_large, "brute force enumeration exceeds budget");
    centers *= span;
  }
  if (centers * static_cast<std::size_t>(n_max + 1) > budget)
    raise(errc::input_too_large, "brute force enumeration exceeds budget");

  std::vector<Window> windows;
  windows.reserve(centers * static_cast<std::size_t>(n_max + 1));
  std::vector<std::int64_t> cur(x.d);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    for (int i = 0; i < x.d; ++i) cur[i] = lo.coords[i] - n_max;
    while (true) {
      windows.push_back(Window{LatticePoint(cur), n});
      int axis = x.d - 1;
      while (axis >= 0) {
        if (++cur[axis] <= hi.coords[axis] + n_max) break;
        cur[axis] = lo.coords[axis] - n_max;
        --axis;
      }
      if (axis < 0) break;
    }
  }
  return detail::max_over(x, windows, params);
}

}  // namespace morrey
