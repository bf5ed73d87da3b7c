#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "betabounds/errors.hpp"
#include "betabounds/function_model.hpp"

namespace betabounds {

/// Grid point attaining the maximal defect of a failed certification.
struct Witness {
  double x;
  double y;
  double t;
};

/// Outcome of a sampling-based membership check.  `max_violation` is the
/// largest positive defect found (reported as 0 on pass, where everything
/// stayed under the noise tolerance); a witness is present exactly when the
/// verdict is fail.
struct Certificate {
  ClassLabel label;
  bool pass = false;
  int grid_density = 0;
  double max_violation = 0.0;
  std::optional<Witness> witness;
};

namespace detail {

// Evaluation grid: i/n steps including both endpoints, so doubling n yields a
// superset of the points and a recorded violation can never disappear.
inline std::vector<double> axis_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    g[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * (static_cast<double>(i) / n);
  }
  g.back() = hi;
  return g;
}

inline Certificate finish_certificate(ClassLabel label, int n,
                                      double max_defect, double sup_abs_f,
                                      const Witness& arg) {
  Certificate cert;
  cert.label = label;
  cert.grid_density = n;
  const double tol = 1e-9 * (1.0 + sup_abs_f);
  if (max_defect > tol) {
    cert.pass = false;
    cert.max_violation = max_defect;
    cert.witness = arg;
  } else {
    cert.pass = true;
    cert.max_violation = 0.0;
  }
  return cert;
}

}  // namespace detail

/// Checks f(t x + m (1-t) y) <= t^alpha f(x) + m (1 - t^alpha) f(y) over the
/// n^3 sample grid with x, y spanning the spec's full [0, b] domain.  Pass
/// tolerance is 1e-9 scaled by the sup of |f| over everything evaluated, so
/// exact-equality memberships (linear f at alpha = m = 1) survive rounding.
/// Ascending loops with strict '>' keep the first maximiser, which is the
/// lexicographically smallest (x, y, t) regardless of evaluation order.
inline Certificate certify_alpha_m_convex(const FunctionSpec& spec,
                                          double alpha, double m, int n) {
  if (!(alpha > 0.0 && alpha <= 1.0) || !(m > 0.0 && m <= 1.0)) {
    throw ParameterError(
        "certify_alpha_m_convex: (alpha, m) must lie in (0,1]^2");
  }
  if (n < 16) throw ParameterError("certify_alpha_m_convex: n must be >= 16");
  if (spec.lo != 0.0) {
    throw OutOfDomainError("certify_alpha_m_convex: domain of '" + spec.id +
                           "' must start at 0");
  }

  const auto axis = detail::axis_grid(0.0, spec.hi, n);
  const auto ts = detail::axis_grid(0.0, 1.0, n);

  std::vector<double> f_axis(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i)
    f_axis[i] = spec.eval_fn(axis[i]);
  std::vector<double> t_alpha(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k)
    t_alpha[k] = std::pow(ts[k], alpha);

  const double lo = spec.lo, hi = spec.hi;
  const auto& f = spec.eval_fn;

  double sup_abs_f = 0.0;
  double max_defect = -std::numeric_limits<double>::infinity();
  Witness arg{0.0, 0.0, 0.0};

  for (std::size_t i = 0; i < axis.size(); ++i) {
    const double x = axis[i];
    const double fx = f_axis[i];
    sup_abs_f = std::max(sup_abs_f, std::abs(fx));
    for (std::size_t j = 0; j < axis.size(); ++j) {
      const double y = axis[j];
      const double fy = f_axis[j];
      for (std::size_t k = 0; k < ts.size(); ++k) {
        const double t = ts[k];
        const double ta = t_alpha[k];
        // The combination lies in [0, b] mathematically; clamp away the
        // last-ulp rounding so evaluation stays inside the domain.
        const double pt = std::clamp(t * x + m * (1.0 - t) * y, lo, hi);
        const double fpt = f(pt);
        sup_abs_f = std::max(sup_abs_f, std::abs(fpt));
        const double defect = fpt - ta * fx - m * (1.0 - ta) * fy;
        if (defect > max_defect) {
          max_defect = defect;
          arg = {x, y, t};
        }
      }
    }
  }

  return detail::finish_certificate(ClassLabel::alpha_m_convex, n, max_defect,
                                    sup_abs_f, arg);
}

inline Certificate certify_m_convex(const FunctionSpec& spec, double m,
                                    int n) {
  Certificate cert = certify_alpha_m_convex(spec, 1.0, m, n);
  cert.label = ClassLabel::m_convex;
  return cert;
}

/// Checks f(t x + (1-t) y) <= max{f(x), f(y)} over the n^3 grid spanning the
/// spec's domain (any [lo, hi]).
inline Certificate certify_quasi_convex(const FunctionSpec& spec, int n) {
  if (n < 16) throw ParameterError("certify_quasi_convex: n must be >= 16");

  const auto axis = detail::axis_grid(spec.lo, spec.hi, n);
  const auto ts = detail::axis_grid(0.0, 1.0, n);
  std::vector<double> f_axis(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i)
    f_axis[i] = spec.eval_fn(axis[i]);

  const double lo = spec.lo, hi = spec.hi;
  const auto& f = spec.eval_fn;

  double sup_abs_f = 0.0;
  double max_defect = -std::numeric_limits<double>::infinity();
  Witness arg{0.0, 0.0, 0.0};

  for (std::size_t i = 0; i < axis.size(); ++i) {
    const double x = axis[i];
    const double fx = f_axis[i];
    sup_abs_f = std::max(sup_abs_f, std::abs(fx));
    for (std::size_t j = 0; j < axis.size(); ++j) {
      const double y = axis[j];
      const double endpoint_max = std::max(fx, f_axis[j]);
      for (std::size_t k = 0; k < ts.size(); ++k) {
        const double t = ts[k];
        const double pt = std::clamp(t * x + (1.0 - t) * y, lo, hi);
        const double fpt = f(pt);
        sup_abs_f = std::max(sup_abs_f, std::abs(fpt));
        const double defect = fpt - endpoint_max;
        if (defect > max_defect) {
          max_defect = defect;
          arg = {x, y, t};
        }
      }
    }
  }

  return detail::finish_certificate(ClassLabel::quasi_convex, n, max_defect,
                                    sup_abs_f, arg);
}

}  // namespace betabounds
