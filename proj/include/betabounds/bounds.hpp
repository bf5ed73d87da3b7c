#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betabounds/errors.hpp"
#include "betabounds/function_model.hpp"
#include "betabounds/quadrature.hpp"
#include "betabounds/special_functions.hpp"

namespace betabounds {

/// Which expansion of the weighted integrand produced the reported value:
/// `from_a` is the x = t a + (1-t) b route, `from_b` the mirrored one, and
/// `single` marks the one-sided (quasi-convexity) bounds.
enum class Branch { from_a, from_b, single };

inline std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::from_a: return "from_a";
    case Branch::from_b: return "from_b";
    case Branch::single: return "single";
  }
  return "?";
}

/// Restricts a two-branch bound to one of its routes.  Each route is a valid
/// bound on its own, so a missing evaluation point (a/m or b/m outside the
/// domain) can be worked around by requesting the other branch explicitly.
enum class BranchSelect { both, from_a_only, from_b_only };

struct NamedTerm {
  std::string name;
  double value;
};

/// A closed-form right-hand side with its branch bookkeeping and the Beta
/// coefficients / function evaluations it was assembled from.
struct BoundValue {
  double value = 0.0;
  Branch branch = Branch::single;
  std::vector<NamedTerm> terms;
};

enum class MonotoneDirection { increasing, decreasing };

inline std::string_view to_string(MonotoneDirection d) {
  return d == MonotoneDirection::increasing ? "increasing" : "decreasing";
}

namespace detail {

inline void require_unit_params(double alpha, double m) {
  if (!(alpha > 0.0 && alpha <= 1.0) || !(m > 0.0 && m <= 1.0)) {
    throw ParameterError("(alpha, m) must lie in (0,1]^2, got alpha=" +
                         std::to_string(alpha) + " m=" + std::to_string(m));
  }
}

// Ties resolve toward from_a so report streams are reproducible.
inline BoundValue pick_branch(double scale, double branch_a, double branch_b,
                              BranchSelect sel, std::vector<NamedTerm> terms) {
  BoundValue out;
  out.terms = std::move(terms);
  switch (sel) {
    case BranchSelect::from_a_only:
      out.value = scale * branch_a;
      out.branch = Branch::from_a;
      break;
    case BranchSelect::from_b_only:
      out.value = scale * branch_b;
      out.branch = Branch::from_b;
      break;
    case BranchSelect::both:
      if (branch_b < branch_a) {
        out.value = scale * branch_b;
        out.branch = Branch::from_b;
      } else {
        out.value = scale * branch_a;
        out.branch = Branch::from_a;
      }
      break;
  }
  return out;
}

}  // namespace detail

/// m-convex bound:
///   (b-a)^{p+q+1} min{ B(q+2,p+1) f(a) + m B(q+1,p+2) f(b/m),
///                      B(q+1,p+2) f(b) + m B(q+2,p+1) f(a/m) }.
inline BoundValue bound_thm14(const FunctionSpec& spec, const WeightParams& w,
                              double m, BranchSelect sel = BranchSelect::both) {
  w.validate();
  detail::require_unit_params(1.0, m);
  const double b1 = beta(w.q + 2.0, w.p + 1.0);
  const double b2 = beta(w.q + 1.0, w.p + 2.0);
  const double scale = std::pow(w.b - w.a, w.p + w.q + 1.0);

  double branch_a = 0.0, branch_b = 0.0;
  std::vector<NamedTerm> terms{{"beta_q2_p1", b1}, {"beta_q1_p2", b2}};
  if (sel != BranchSelect::from_b_only) {
    const double fa = evaluate(spec, w.a);
    const double fbm = evaluate(spec, w.b / m);
    branch_a = b1 * fa + m * b2 * fbm;
    terms.push_back({"f_a", fa});
    terms.push_back({"f_b_over_m", fbm});
  }
  if (sel != BranchSelect::from_a_only) {
    const double fb = evaluate(spec, w.b);
    const double fam = evaluate(spec, w.a / m);
    branch_b = b2 * fb + m * b1 * fam;
    terms.push_back({"f_b", fb});
    terms.push_back({"f_a_over_m", fam});
  }
  return detail::pick_branch(scale, branch_a, branch_b, sel, std::move(terms));
}

/// Quasi-convex bound: (b-a)^{p+q+1} max{f(a), f(b)} B(p+1, q+1).
inline BoundValue bound_thm15(const FunctionSpec& spec, const WeightParams& w) {
  w.validate();
  const double fa = evaluate(spec, w.a);
  const double fb = evaluate(spec, w.b);
  const double b0 = beta(w.p + 1.0, w.q + 1.0);
  BoundValue out;
  out.value = std::pow(w.b - w.a, w.p + w.q + 1.0) * std::max(fa, fb) * b0;
  out.branch = Branch::single;
  out.terms = {{"beta_p1_q1", b0}, {"f_a", fa}, {"f_b", fb}};
  return out;
}

/// (alpha, m)-convex bound:
///   (b-a)^{p+q+1} min{ B(q+a+1,p+1) f(a) + m [B(q+1,p+1) - B(q+a+1,p+1)] f(b/m),
///                      B(q+1,p+a+1) f(b) + m [B(q+1,p+1) - B(q+1,p+a+1)] f(a/m) }.
inline BoundValue bound_thm21(const FunctionSpec& spec, const WeightParams& w,
                              double alpha, double m,
                              BranchSelect sel = BranchSelect::both) {
  w.validate();
  detail::require_unit_params(alpha, m);
  const double b0 = beta(w.q + 1.0, w.p + 1.0);
  const double ba = beta(w.q + alpha + 1.0, w.p + 1.0);
  const double bb = beta(w.q + 1.0, w.p + alpha + 1.0);
  const double scale = std::pow(w.b - w.a, w.p + w.q + 1.0);

  double branch_a = 0.0, branch_b = 0.0;
  std::vector<NamedTerm> terms{
      {"beta_q1_p1", b0}, {"beta_qa1_p1", ba}, {"beta_q1_pa1", bb}};
  if (sel != BranchSelect::from_b_only) {
    const double fa = evaluate(spec, w.a);
    const double fbm = evaluate(spec, w.b / m);
    branch_a = ba * fa + m * (b0 - ba) * fbm;
    terms.push_back({"f_a", fa});
    terms.push_back({"f_b_over_m", fbm});
  }
  if (sel != BranchSelect::from_a_only) {
    const double fb = evaluate(spec, w.b);
    const double fam = evaluate(spec, w.a / m);
    branch_b = bb * fb + m * (b0 - bb) * fam;
    terms.push_back({"f_b", fb});
    terms.push_back({"f_a_over_m", fam});
  }
  return detail::pick_branch(scale, branch_a, branch_b, sel, std::move(terms));
}

/// Hoelder-route bound for |f|^{k/(k-1)} (alpha, m)-convex:
///   (b-a)^{p+q+1} / (alpha+1)^{(k-1)/k} * B(kp+1, kq+1)^{1/k}
///   * min{ [|f(a)|^{k'} + alpha m |f(b/m)|^{k'}]^{1/k'},
///          [|f(b)|^{k'} + alpha m |f(a/m)|^{k'}]^{1/k'} },  k' = k/(k-1).
inline BoundValue bound_thm22(const FunctionSpec& spec, const WeightParams& w,
                              double alpha, double m, double k,
                              BranchSelect sel = BranchSelect::both) {
  w.validate();
  detail::require_unit_params(alpha, m);
  if (!(k > 1.0)) throw ParameterError("bound_thm22: k must be > 1");
  const double kp = k / (k - 1.0);
  const double bk = beta(k * w.p + 1.0, k * w.q + 1.0);
  const double prefix = std::pow(w.b - w.a, w.p + w.q + 1.0) /
                        std::pow(alpha + 1.0, (k - 1.0) / k) *
                        std::pow(bk, 1.0 / k);

  double branch_a = 0.0, branch_b = 0.0;
  std::vector<NamedTerm> terms{{"beta_kp1_kq1", bk}};
  if (sel != BranchSelect::from_b_only) {
    const double fa = evaluate(spec, w.a);
    const double fbm = evaluate(spec, w.b / m);
    branch_a = std::pow(std::pow(std::abs(fa), kp) +
                            alpha * m * std::pow(std::abs(fbm), kp),
                        (k - 1.0) / k);
    terms.push_back({"f_a", fa});
    terms.push_back({"f_b_over_m", fbm});
  }
  if (sel != BranchSelect::from_a_only) {
    const double fb = evaluate(spec, w.b);
    const double fam = evaluate(spec, w.a / m);
    branch_b = std::pow(std::pow(std::abs(fb), kp) +
                            alpha * m * std::pow(std::abs(fam), kp),
                        (k - 1.0) / k);
    terms.push_back({"f_b", fb});
    terms.push_back({"f_a_over_m", fam});
  }
  return detail::pick_branch(prefix, branch_a, branch_b, sel, std::move(terms));
}

/// Power-mean-route bound for |f|^l (alpha, m)-convex:
///   (b-a)^{p+q+1} B(p+1,q+1)^{(l-1)/l}
///   * min{ [B(q+a+1,p+1)|f(a)|^l + m (B(q+1,p+1)-B(q+a+1,p+1)) |f(b/m)|^l]^{1/l},
///          [B(q+1,p+a+1)|f(b)|^l + m (B(q+1,p+1)-B(q+1,p+a+1)) |f(a/m)|^l]^{1/l} }.
inline BoundValue bound_thm23(const FunctionSpec& spec, const WeightParams& w,
                              double alpha, double m, double l,
                              BranchSelect sel = BranchSelect::both) {
  w.validate();
  detail::require_unit_params(alpha, m);
  if (!(l >= 1.0)) throw ParameterError("bound_thm23: l must be >= 1");
  const double b0 = beta(w.q + 1.0, w.p + 1.0);
  const double ba = beta(w.q + alpha + 1.0, w.p + 1.0);
  const double bb = beta(w.q + 1.0, w.p + alpha + 1.0);
  const double prefix = std::pow(w.b - w.a, w.p + w.q + 1.0) *
                        std::pow(b0, (l - 1.0) / l);

  double branch_a = 0.0, branch_b = 0.0;
  std::vector<NamedTerm> terms{
      {"beta_q1_p1", b0}, {"beta_qa1_p1", ba}, {"beta_q1_pa1", bb}};
  if (sel != BranchSelect::from_b_only) {
    const double fa = evaluate(spec, w.a);
    const double fbm = evaluate(spec, w.b / m);
    branch_a = std::pow(ba * std::pow(std::abs(fa), l) +
                            m * (b0 - ba) * std::pow(std::abs(fbm), l),
                        1.0 / l);
    terms.push_back({"f_a", fa});
    terms.push_back({"f_b_over_m", fbm});
  }
  if (sel != BranchSelect::from_a_only) {
    const double fb = evaluate(spec, w.b);
    const double fam = evaluate(spec, w.a / m);
    branch_b = std::pow(bb * std::pow(std::abs(fb), l) +
                            m * (b0 - bb) * std::pow(std::abs(fam), l),
                        1.0 / l);
    terms.push_back({"f_b", fb});
    terms.push_back({"f_a_over_m", fam});
  }
  return detail::pick_branch(prefix, branch_a, branch_b, sel, std::move(terms));
}

/// Quasi-convex Hoelder bound:
///   (b-a)^{p+q+1} B(kp+1, kq+1)^{1/k} (max{|f(a)|^{k'}, |f(b)|^{k'}})^{1/k'}.
inline BoundValue bound_thm31(const FunctionSpec& spec, const WeightParams& w,
                              double k) {
  w.validate();
  if (!(k > 1.0)) throw ParameterError("bound_thm31: k must be > 1");
  const double kp = k / (k - 1.0);
  const double fa = evaluate(spec, w.a);
  const double fb = evaluate(spec, w.b);
  const double bk = beta(k * w.p + 1.0, k * w.q + 1.0);
  const double mx =
      std::max(std::pow(std::abs(fa), kp), std::pow(std::abs(fb), kp));
  BoundValue out;
  out.value = std::pow(w.b - w.a, w.p + w.q + 1.0) * std::pow(bk, 1.0 / k) *
              std::pow(mx, (k - 1.0) / k);
  out.branch = Branch::single;
  out.terms = {{"beta_kp1_kq1", bk}, {"f_a", fa}, {"f_b", fb}};
  return out;
}

/// Quasi-convex power-mean bound:
///   (b-a)^{p+q+1} B(p+1, q+1) (max{|f(a)|^l, |f(b)|^l})^{1/l}.
inline BoundValue bound_thm32(const FunctionSpec& spec, const WeightParams& w,
                              double l) {
  w.validate();
  if (!(l >= 1.0)) throw ParameterError("bound_thm32: l must be >= 1");
  const double fa = evaluate(spec, w.a);
  const double fb = evaluate(spec, w.b);
  const double b0 = beta(w.p + 1.0, w.q + 1.0);
  const double mx = std::max(std::pow(std::abs(fa), l), std::pow(std::abs(fb), l));
  BoundValue out;
  out.value =
      std::pow(w.b - w.a, w.p + w.q + 1.0) * b0 * std::pow(mx, 1.0 / l);
  out.branch = Branch::single;
  out.terms = {{"beta_p1_q1", b0}, {"f_a", fa}, {"f_b", fb}};
  return out;
}

namespace detail {

struct MonotoneScan {
  std::vector<double> xs;
  std::vector<double> vals;
  double tol = 0.0;

  // First adjacent pair moving against `direction`, if any.
  std::optional<std::pair<double, double>> violation(
      MonotoneDirection direction) const {
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
      const double step = vals[i + 1] - vals[i];
      const bool bad = direction == MonotoneDirection::increasing
                           ? step < -tol
                           : step > tol;
      if (bad) return std::make_pair(xs[i], xs[i + 1]);
    }
    return std::nullopt;
  }

  bool strict_trend(MonotoneDirection direction) const {
    const double span = vals.back() - vals.front();
    return direction == MonotoneDirection::increasing ? span > tol
                                                      : span < -tol;
  }
};

inline MonotoneScan monotone_scan(const FunctionSpec& spec, double lo,
                                  double hi, int samples = 256) {
  MonotoneScan scan;
  scan.xs.resize(static_cast<std::size_t>(samples) + 1);
  scan.vals.resize(static_cast<std::size_t>(samples) + 1);
  double sup = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double x =
        std::clamp(lo + (hi - lo) * (static_cast<double>(i) / samples), lo, hi);
    const double v = spec.eval_fn(x);
    scan.xs[static_cast<std::size_t>(i)] = x;
    scan.vals[static_cast<std::size_t>(i)] = v;
    sup = std::max(sup, std::abs(v));
  }
  scan.tol = 1e-12 * (1.0 + sup);
  return scan;
}

}  // namespace detail

/// Sampled monotonicity scan over [a, b] on a nested 257-point grid.  Strict:
/// a flat function has no usable direction here (see bound_monotone_quasi).
/// Returns the established direction, or nullopt.
inline std::optional<MonotoneDirection> scan_monotone_direction(
    const FunctionSpec& spec, double a, double b, int samples = 256) {
  const double lo = std::max(a, spec.lo), hi = std::min(b, spec.hi);
  if (!(lo < hi)) return std::nullopt;
  const auto scan = detail::monotone_scan(spec, lo, hi, samples);
  if (!scan.violation(MonotoneDirection::increasing) &&
      scan.strict_trend(MonotoneDirection::increasing)) {
    return MonotoneDirection::increasing;
  }
  if (!scan.violation(MonotoneDirection::decreasing) &&
      scan.strict_trend(MonotoneDirection::decreasing)) {
    return MonotoneDirection::decreasing;
  }
  return std::nullopt;
}

/// Corollary forms of the quasi-convex bounds for monotone f: the max term
/// collapses to f(b) (increasing) or f(a) (decreasing).  The claimed
/// direction is re-checked by the sampled scan; a violation is a hard error
/// carrying the offending sample pair.
inline BoundValue bound_monotone_quasi(const FunctionSpec& spec,
                                       const WeightParams& w,
                                       const ExponentParam& variant,
                                       MonotoneDirection direction) {
  w.validate();
  if (variant.kind == ExponentParam::Kind::holder_k && !(variant.value > 1.0)) {
    throw ParameterError("bound_monotone_quasi: k must be > 1");
  }
  if (variant.kind == ExponentParam::Kind::power_l && !(variant.value >= 1.0)) {
    throw ParameterError("bound_monotone_quasi: l must be >= 1");
  }

  if (!(w.a >= spec.lo) || !(w.b <= spec.hi)) {
    throw OutOfDomainError("bound_monotone_quasi: [a, b] not inside domain of '" +
                           spec.id + "'");
  }
  const auto scan = detail::monotone_scan(spec, w.a, w.b);
  if (const auto bad = scan.violation(direction)) {
    throw MonotonicityError("bound_monotone_quasi: '" + spec.id + "' is not " +
                                std::string(to_string(direction)) +
                                " on the interval",
                            bad->first, bad->second);
  }
  if (!scan.strict_trend(direction)) {
    throw MonotonicityError("bound_monotone_quasi: '" + spec.id +
                                "' shows no strict " +
                                std::string(to_string(direction)) + " trend",
                            w.a, w.b);
  }

  const double fe = direction == MonotoneDirection::increasing
                        ? evaluate(spec, w.b)
                        : evaluate(spec, w.a);
  const double scale = std::pow(w.b - w.a, w.p + w.q + 1.0);
  BoundValue out;
  out.branch = Branch::single;
  if (variant.kind == ExponentParam::Kind::holder_k) {
    const double k = variant.value;
    const double bk = beta(k * w.p + 1.0, k * w.q + 1.0);
    out.value = scale * std::pow(bk, 1.0 / k) * fe;
    out.terms = {{"beta_kp1_kq1", bk}, {"f_endpoint", fe}};
  } else {
    const double b0 = beta(w.p + 1.0, w.q + 1.0);
    out.value = scale * b0 * fe;
    out.terms = {{"beta_p1_q1", b0}, {"f_endpoint", fe}};
  }
  return out;
}

// The reduced displays below re-assemble the same Beta coefficients the way
// the specialised statements write them; the reduction audit compares them
// against the general operations.

/// alpha = m = 1 reduction of the Hoelder bound.
inline double thm22_convex_display(const FunctionSpec& spec,
                                   const WeightParams& w, double k) {
  w.validate();
  if (!(k > 1.0)) throw ParameterError("thm22_convex_display: k must be > 1");
  const double kp = k / (k - 1.0);
  const double fa = evaluate(spec, w.a);
  const double fb = evaluate(spec, w.b);
  return std::pow(w.b - w.a, w.p + w.q + 1.0) /
         std::pow(2.0, (k - 1.0) / k) *
         std::pow(beta(k * w.p + 1.0, k * w.q + 1.0), 1.0 / k) *
         std::pow(std::pow(std::abs(fa), kp) + std::pow(std::abs(fb), kp),
                  (k - 1.0) / k);
}

/// alpha = m = 1 reduction of the power-mean bound.
inline double thm23_convex_display(const FunctionSpec& spec,
                                   const WeightParams& w, double l) {
  w.validate();
  if (!(l >= 1.0)) throw ParameterError("thm23_convex_display: l must be >= 1");
  const double fa = evaluate(spec, w.a);
  const double fb = evaluate(spec, w.b);
  return std::pow(w.b - w.a, w.p + w.q + 1.0) *
         std::pow(beta(w.p + 1.0, w.q + 1.0), (l - 1.0) / l) *
         std::pow(beta(w.q + 2.0, w.p + 1.0) * std::pow(std::abs(fa), l) +
                      beta(w.q + 1.0, w.p + 2.0) * std::pow(std::abs(fb), l),
                  1.0 / l);
}

/// p = q instantiation of the (alpha, m)-convex bound, written the way the
/// symmetric-weight corollary displays it.
inline double thm21_symmetric_display(const FunctionSpec& spec, double a,
                                      double b, double p, double alpha,
                                      double m) {
  detail::require_unit_params(alpha, m);
  const double b0 = beta(p + 1.0, p + 1.0);
  const double ba = beta(p + alpha + 1.0, p + 1.0);
  const double bb = beta(p + 1.0, p + alpha + 1.0);
  const double fa = evaluate(spec, a);
  const double fb = evaluate(spec, b);
  const double fbm = evaluate(spec, b / m);
  const double fam = evaluate(spec, a / m);
  const double branch_a = ba * fa + m * (b0 - ba) * fbm;
  const double branch_b = bb * fb + m * (b0 - bb) * fam;
  return std::pow(b - a, 2.0 * p + 1.0) * std::min(branch_a, branch_b);
}

}  // namespace betabounds
