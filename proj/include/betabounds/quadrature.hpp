#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "betabounds/detail/gauss_kronrod.hpp"
#include "betabounds/errors.hpp"
#include "betabounds/function_model.hpp"
#include "betabounds/special_functions.hpp"

namespace betabounds {

/// Parameters of the weight (x-a)^p (b-x)^q on [a, b]: 0 <= a < b, p, q > 0.
struct WeightParams {
  double a;
  double b;
  double p;
  double q;

  void validate() const {
    if (!(a >= 0.0) || !(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
      throw ParameterError("WeightParams: need 0 <= a < b < inf, got a=" +
                           std::to_string(a) + " b=" + std::to_string(b));
    }
    if (!(p > 0.0) || !(q > 0.0)) {
      throw ParameterError("WeightParams: need p > 0 and q > 0, got p=" +
                           std::to_string(p) + " q=" + std::to_string(q));
    }
  }
};

namespace detail {

constexpr long kMaxQuadratureEvals = 1'000'000;

inline void require_inside_domain(const FunctionSpec& spec,
                                  const WeightParams& w) {
  if (!(w.a >= spec.lo) || !(w.b <= spec.hi)) {
    throw OutOfDomainError("quadrature: [a, b] = [" + std::to_string(w.a) +
                           ", " + std::to_string(w.b) +
                           "] not contained in domain of '" + spec.id + "'");
  }
}

template <class F>
QuadratureResult run_certified(F&& integrand, double lo, double hi, double tol,
                               bool grade_lo, bool grade_hi,
                               const char* what) {
  const auto pre = graded_breakpoints(lo, hi, grade_lo, grade_hi);
  const auto r =
      integrate_adaptive(integrand, lo, hi, tol, kMaxQuadratureEvals, pre);
  if (!r.converged) {
    throw ToleranceNotMet(std::string(what) + ": tolerance not certified",
                          r.value, r.err_estimate, r.evaluations);
  }
  return {r.value, r.err_estimate, r.evaluations};
}

}  // namespace detail

/// int_a^b (x-a)^p (b-x)^q f(x) dx with a certified absolute error estimate.
/// For p < 1 (resp. q < 1) the integrand is bounded but its derivative blows
/// up at a (resp. b); those endpoints get a geometrically graded start mesh.
inline QuadratureResult weighted_integral(const FunctionSpec& spec,
                                          const WeightParams& w, double tol) {
  w.validate();
  detail::require_inside_domain(spec, w);
  if (!(tol > 0.0)) throw ParameterError("weighted_integral: tol must be > 0");

  const double a = w.a, b = w.b, p = w.p, q = w.q;
  const auto& f = spec.eval_fn;
  auto integrand = [=, &f](double x) {
    // max() guards the last-ulp rounding of node placement at the endpoints,
    // where (x-a) or (b-x) could otherwise go negative under a fractional power.
    return std::pow(std::max(x - a, 0.0), p) *
           std::pow(std::max(b - x, 0.0), q) * f(std::clamp(x, a, b));
  };
  return detail::run_certified(integrand, a, b, tol, w.p < 1.0, w.q < 1.0,
                               "weighted_integral");
}

/// The unit-interval form (b-a)^{p+q+1} int_0^1 (1-t)^p t^q f(t a + (1-t) b) dt.
/// Same value as weighted_integral by the change of variables x = t a + (1-t) b;
/// computed on its own node sequence so the two sides stay independent checks.
inline QuadratureResult unit_form_integral(const FunctionSpec& spec,
                                           const WeightParams& w, double tol) {
  w.validate();
  detail::require_inside_domain(spec, w);
  if (!(tol > 0.0)) throw ParameterError("unit_form_integral: tol must be > 0");

  const double a = w.a, b = w.b, p = w.p, q = w.q;
  const double scale = std::pow(b - a, p + q + 1.0);
  const auto& f = spec.eval_fn;
  auto integrand = [=, &f](double t) {
    const double x = std::clamp(t * a + (1.0 - t) * b, a, b);
    return std::pow(std::max(1.0 - t, 0.0), p) * std::pow(std::max(t, 0.0), q) *
           f(x);
  };
  // In t-coordinates the q-exponent sits at t = 0 and the p-exponent at t = 1.
  QuadratureResult r = detail::run_certified(
      integrand, 0.0, 1.0, tol / scale, w.q < 1.0, w.p < 1.0,
      "unit_form_integral");
  r.value *= scale;
  r.err_estimate *= scale;
  return r;
}

/// |weighted_integral - unit_form_integral|; bounded by 2 tol whenever both
/// quadratures certify, since the underlying identity is exact.
inline double lemma_identity_residual(const FunctionSpec& spec,
                                      const WeightParams& w, double tol) {
  const QuadratureResult lhs = weighted_integral(spec, w, tol);
  const QuadratureResult rhs = unit_form_integral(spec, w, tol);
  return std::abs(lhs.value - rhs.value);
}

}  // namespace betabounds
