#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "morrey/spaces.hpp"

namespace morrey {

enum class Functional { nj, james, dw };

inline const char* functional_name(Functional f) {
  switch (f) {
    case Functional::nj: return "nj";
    case Functional::james: return "james";
    case Functional::dw: return "dw";
  }
  return "?";
}

struct FunctionalResult {
  double value = 0.0;
  double tolerance = 0.0;
  std::optional<Rational> exact;  // set when the whole evaluation stayed rational
  std::vector<std::pair<std::string, double>> trace;
};

namespace detail {

inline void push_trace(FunctionalResult& r, const std::string& name, const NormOutcome& n) {
  r.trace.emplace_back(name, n.value);
  r.tolerance += n.tolerance;
}

}  // namespace detail

// (||x+y||^2 + ||x-y||^2) / (2(||x||^2 + ||y||^2)).
template <class Space>
FunctionalResult nj_functional(const Space& sp, const typename Space::Vector& x,
                               const typename Space::Vector& y) {
  if (sp.is_zero(x) && sp.is_zero(y)) raise(errc::both_zero, "nj needs a nonzero pair");
  NormOutcome ns = sp.norm(sp.add(x, y));
  NormOutcome nd = sp.norm(sp.sub(x, y));
  NormOutcome nx = sp.norm(x);
  NormOutcome ny = sp.norm(y);
  FunctionalResult r;
  detail::push_trace(r, "norm_x_plus_y", ns);
  detail::push_trace(r, "norm_x_minus_y", nd);
  detail::push_trace(r, "norm_x", nx);
  detail::push_trace(r, "norm_y", ny);
  r.value = (ns.value * ns.value + nd.value * nd.value) /
            (2.0 * (nx.value * nx.value + ny.value * ny.value));
  if (ns.exact && nd.exact && nx.exact && ny.exact) {
    Rational num = ns.exact->pow(2) + nd.exact->pow(2);
    Rational den = Rational(2) * (nx.exact->pow(2) + ny.exact->pow(2));
    r.exact = num / den;
    r.value = r.exact->to_double();
    r.tolerance = 0.0;
  }
  return r;
}

// min(||x^ + y^||, ||x^ - y^||) with x^, y^ the unit-normalized inputs.
template <class Space>
FunctionalResult james_functional(const Space& sp, const typename Space::Vector& x,
                                  const typename Space::Vector& y);

// (||x|| + ||y||)/||x-y|| * ||x/||x|| - y/||y||||.
template <class Space>
FunctionalResult dw_functional(const Space& sp, const typename Space::Vector& x,
                               const typename Space::Vector& y);

namespace detail {

template <class Space>
FunctionalResult james_impl(const Space& sp, const typename Space::Vector& x,
                            const typename Space::Vector& y) {
  if (sp.is_zero(x) || sp.is_zero(y)) raise(errc::zero_vector, "james needs nonzero vectors");
  NormOutcome nx = sp.norm(x);
  NormOutcome ny = sp.norm(y);
  auto xh = sp.normalized(x, nx);
  auto yh = sp.normalized(y, ny);
  if (!xh || !yh) raise(errc::invalid_params, "normalization unavailable");
  NormOutcome ns = sp.norm(sp.add(*xh, *yh));
  NormOutcome nd = sp.norm(sp.sub(*xh, *yh));
  FunctionalResult r;
  push_trace(r, "norm_x", nx);
  push_trace(r, "norm_y", ny);
  push_trace(r, "norm_sum_normalized", ns);
  push_trace(r, "norm_diff_normalized", nd);
  r.value = std::min(ns.value, nd.value);
  if (ns.exact && nd.exact) {
    r.exact = std::min(*ns.exact, *nd.exact);
    r.value = r.exact->to_double();
    r.tolerance = 0.0;
  }
  return r;
}

template <class Space>
FunctionalResult dw_impl(const Space& sp, const typename Space::Vector& x,
                         const typename Space::Vector& y) {
  if (sp.is_zero(x) || sp.is_zero(y)) raise(errc::zero_vector, "dw needs nonzero vectors");
  if (sp.equal(x, y)) raise(errc::equal_vectors, "dw needs x != y");
  NormOutcome nx = sp.norm(x);
  NormOutcome ny = sp.norm(y);
  NormOutcome nxy = sp.norm(sp.sub(x, y));
  auto xh = sp.normalized(x, nx);
  auto yh = sp.normalized(y, ny);
  if (!xh || !yh) raise(errc::invalid_params, "normalization unavailable");
  NormOutcome nd = sp.norm(sp.sub(*xh, *yh));
  FunctionalResult r;
  push_trace(r, "norm_x", nx);
  push_trace(r, "norm_y", ny);
  push_trace(r, "norm_x_minus_y", nxy);
  push_trace(r, "norm_normalized_diff", nd);
  r.value = (nx.value + ny.value) / nxy.value * nd.value;
  if (nx.exact && ny.exact && nxy.exact && nd.exact) {
    r.exact = (*nx.exact + *ny.exact) / *nxy.exact * *nd.exact;
    r.value = r.exact->to_double();
    r.tolerance = 0.0;
  }
  return r;
}

}  // namespace detail

template <class Space>
FunctionalResult james_functional(const Space& sp, const typename Space::Vector& x,
                                  const typename Space::Vector& y) {
  return detail::james_impl(sp, x, y);
}

template <class Space>
FunctionalResult dw_functional(const Space& sp, const typename Space::Vector& x,
                               const typename Space::Vector& y) {
  return detail::dw_impl(sp, x, y);
}

// Exact-mode James/DW fall back to the float engine when a constituent norm is
// not exactly rational (normalization would leave the rational field).
template <>
inline FunctionalResult james_functional<DiscreteSpaceX>(const DiscreteSpaceX& sp,
                                                         const SparseSequence<Rational>& x,
                                                         const SparseSequence<Rational>& y) {
  if (sp.is_zero(x) || sp.is_zero(y)) raise(errc::zero_vector, "james needs nonzero vectors");
  NormOutcome nx = sp.norm(x);
  NormOutcome ny = sp.norm(y);
  if (nx.exact && ny.exact) return detail::james_impl(sp, x, y);
  DiscreteSpaceD fallback(sp.params);
  FunctionalResult r = detail::james_impl(fallback, to_double_seq(x), to_double_seq(y));
  return r;
}

template <>
inline FunctionalResult dw_functional<DiscreteSpaceX>(const DiscreteSpaceX& sp,
                                                      const SparseSequence<Rational>& x,
                                                      const SparseSequence<Rational>& y) {
  if (sp.is_zero(x) || sp.is_zero(y)) raise(errc::zero_vector, "dw needs nonzero vectors");
  if (sp.equal(x, y)) raise(errc::equal_vectors, "dw needs x != y");
  NormOutcome nx = sp.norm(x);
  NormOutcome ny = sp.norm(y);
  if (nx.exact && ny.exact) return detail::dw_impl(sp, x, y);
  DiscreteSpaceD fallback(sp.params);
  return detail::dw_impl(fallback, to_double_seq(x), to_double_seq(y));
}

// Universal Banach-space upper bounds: NJ <= 2, James <= 2, DW <= 4. A searched
// or evaluated value beyond bound + tol signals a norm-engine bug.
inline bool assert_envelope(Functional f, double value, double tol) {
  double bound = f == Functional::dw ? 4.0 : 2.0;
  return value <= bound + tol;
}

}  // namespace morrey
