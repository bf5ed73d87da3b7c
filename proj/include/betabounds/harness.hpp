#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "betabounds/bounds.hpp"
#include "betabounds/class_certifier.hpp"
#include "betabounds/errors.hpp"
#include "betabounds/function_model.hpp"
#include "betabounds/quadrature.hpp"

namespace betabounds {

enum class Theorem { T14, T15, T21, T22, T23, T31, T32, C31, C32 };

inline constexpr Theorem kAllTheorems[] = {
    Theorem::T14, Theorem::T15, Theorem::T21, Theorem::T22, Theorem::T23,
    Theorem::T31, Theorem::T32, Theorem::C31, Theorem::C32};

inline std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::T14: return "T14";
    case Theorem::T15: return "T15";
    case Theorem::T21: return "T21";
    case Theorem::T22: return "T22";
    case Theorem::T23: return "T23";
    case Theorem::T31: return "T31";
    case Theorem::T32: return "T32";
    case Theorem::C31: return "C31";
    case Theorem::C32: return "C32";
  }
  return "?";
}

inline std::optional<Theorem> theorem_from_string(std::string_view s) {
  for (Theorem t : kAllTheorems) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

/// Parameters of one verification case; only the fields a theorem uses are
/// engaged.  `branch_select` restricts the two-branch bounds to one route
/// (each route is individually valid) when the other route's evaluation
/// point is unavailable.
struct CaseParams {
  WeightParams w{0.0, 1.0, 1.0, 1.0};
  std::optional<double> alpha;
  std::optional<double> m;
  std::optional<double> k;
  std::optional<double> l;
  std::optional<MonotoneDirection> direction;
  BranchSelect branch_select = BranchSelect::both;
};

enum class Verdict { pass, fail, skipped };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

// Machine-readable skip reasons.
inline constexpr std::string_view kSkipClassCertification =
    "class_certification_failed";
inline constexpr std::string_view kSkipEvaluationPoint =
    "evaluation_point_outside_domain";
inline constexpr std::string_view kSkipParameter = "parameter_out_of_range";
inline constexpr std::string_view kSkipQuadrature = "quadrature_tolerance";

/// One verified case: both sides of the inequality, their gap, and how the
/// comparison went.  slack = rhs - lhs.
struct BoundReport {
  std::string case_id;
  std::string spec_id;
  Theorem theorem = Theorem::T14;
  CaseParams params;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double lhs_err = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double slack = std::numeric_limits<double>::quiet_NaN();
  Branch branch = Branch::single;
  Verdict verdict = Verdict::skipped;
  std::string skip_reason;
};

/// Non-strict comparison with scale-aware noise absorption: the theorems are
/// non-strict inequalities, and at equality cases both sides only agree up to
/// quadrature error and rounding.
inline bool verdict_passes(double lhs, double lhs_err, double rhs) {
  return lhs <= rhs + 1e-9 * std::abs(rhs) + 1e-12 + lhs_err;
}

/// Cartesian sweep axes.  Every entry must satisfy the respective theorem
/// hypotheses (validate() checks).
struct ParamGrid {
  std::vector<std::pair<double, double>> intervals;
  std::vector<double> p_values;
  std::vector<double> q_values;
  std::vector<double> alpha_values;
  std::vector<double> m_values;
  std::vector<double> k_values;
  std::vector<double> l_values;

  void validate() const {
    for (auto [a, b] : intervals) {
      if (!(a >= 0.0) || !(b > a) || !std::isfinite(b)) {
        throw ParameterError("grid: interval must satisfy 0 <= a < b < inf");
      }
    }
    auto all_positive = [](const std::vector<double>& v, const char* name) {
      for (double x : v) {
        if (!(x > 0.0)) {
          throw ParameterError(std::string("grid: ") + name +
                               " values must be > 0");
        }
      }
    };
    all_positive(p_values, "p");
    all_positive(q_values, "q");
    for (double a : alpha_values) {
      if (!(a > 0.0 && a <= 1.0)) {
        throw ParameterError("grid: alpha values must lie in (0, 1]");
      }
    }
    for (double m : m_values) {
      if (!(m > 0.0 && m <= 1.0)) {
        throw ParameterError("grid: m values must lie in (0, 1]");
      }
    }
    for (double k : k_values) {
      if (!(k > 1.0)) throw ParameterError("grid: k values must be > 1");
    }
    for (double l : l_values) {
      if (!(l >= 1.0)) throw ParameterError("grid: l values must be >= 1");
    }
  }
};

inline ParamGrid default_grid() {
  ParamGrid g;
  g.intervals = {{0.0, 1.0}, {1.0, 3.0}, {0.0, 0.5}};
  g.p_values = {0.5, 1.0, 2.0, 3.5};
  g.q_values = {0.5, 1.0, 2.0, 3.5};
  g.alpha_values = {0.25, 0.5, 0.75, 1.0};
  g.m_values = {0.25, 0.5, 0.75, 1.0};
  g.k_values = {1.5, 2.0, 4.0};
  g.l_values = {1.0, 2.0, 3.0};
  return g;
}

struct SweepOptions {
  double tol = 1e-10;
  int grid_density = 64;
  int jobs = 1;
  long max_cases = 100'000;
};

/// Memoized certifications and left-hand-side integrals shared across the
/// cases of one run.  Values are pure functions of their keys, so concurrent
/// fills are race-free in content.
class SweepCache {
public:
  Certificate alpha_m(const FunctionSpec& spec, std::optional<double> transform_r,
                      double alpha, double m, int n) {
    const CertKey key{spec.id, transform_r.value_or(-1.0), alpha, m, n};
    {
      std::lock_guard lock(mutex_);
      if (auto it = certs_.find(key); it != certs_.end()) return it->second;
    }
    Certificate cert =
        transform_r ? certify_alpha_m_convex(power_transform(spec, *transform_r),
                                             alpha, m, n)
                    : certify_alpha_m_convex(spec, alpha, m, n);
    std::lock_guard lock(mutex_);
    return certs_.try_emplace(key, std::move(cert)).first->second;
  }

  Certificate quasi(const FunctionSpec& spec, std::optional<double> transform_r,
                    int n) {
    const CertKey key{spec.id, transform_r.value_or(-1.0), -1.0, -1.0, n};
    {
      std::lock_guard lock(mutex_);
      if (auto it = certs_.find(key); it != certs_.end()) return it->second;
    }
    Certificate cert =
        transform_r ? certify_quasi_convex(power_transform(spec, *transform_r), n)
                    : certify_quasi_convex(spec, n);
    std::lock_guard lock(mutex_);
    return certs_.try_emplace(key, std::move(cert)).first->second;
  }

  struct LhsEntry {
    bool converged = false;
    QuadratureResult result;
  };

  LhsEntry lhs(const FunctionSpec& spec, const WeightParams& w, double tol) {
    const LhsKey key{spec.id, w.a, w.b, w.p, w.q};
    {
      std::lock_guard lock(mutex_);
      if (auto it = lhs_.find(key); it != lhs_.end()) return it->second;
    }
    LhsEntry entry;
    try {
      entry.result = weighted_integral(spec, w, tol);
      entry.converged = true;
    } catch (const ToleranceNotMet& e) {
      entry.result = {e.best_value, e.err_estimate, e.evaluations};
      entry.converged = false;
    }
    std::lock_guard lock(mutex_);
    return lhs_.try_emplace(key, entry).first->second;
  }

private:
  using CertKey = std::tuple<std::string, double, double, double, int>;
  using LhsKey = std::tuple<std::string, double, double, double, double>;
  std::mutex mutex_;
  std::map<CertKey, Certificate> certs_;
  std::map<LhsKey, LhsEntry> lhs_;
};

namespace detail {

inline std::string case_identifier(const FunctionSpec& spec, Theorem theorem,
                                   const CaseParams& cp) {
  std::string id = spec.id;
  id += '|';
  id += to_string(theorem);
  auto add = [&](const char* name, double v) {
    id += '|';
    id += name;
    id += '=';
    id += compact_double(v);
  };
  add("a", cp.w.a);
  add("b", cp.w.b);
  add("p", cp.w.p);
  add("q", cp.w.q);
  if (cp.alpha) add("alpha", *cp.alpha);
  if (cp.m) add("m", *cp.m);
  if (cp.k) add("k", *cp.k);
  if (cp.l) add("l", *cp.l);
  if (cp.direction) {
    id += "|dir=";
    id += to_string(*cp.direction);
  }
  if (cp.branch_select == BranchSelect::from_a_only) id += "|branch=from_a";
  if (cp.branch_select == BranchSelect::from_b_only) id += "|branch=from_b";
  return id;
}

inline bool point_in_domain(const FunctionSpec& spec, double x) {
  return x >= spec.lo && x <= spec.hi;
}

}  // namespace detail

/// Runs the certify -> integrate -> bound -> compare pipeline for one case.
/// Prerequisite failures become skipped verdicts with a machine-readable
/// reason; only cases whose class hypothesis was certified in this run are
/// judged pass/fail.
inline BoundReport verify_case(const FunctionSpec& spec, Theorem theorem,
                               const CaseParams& params, double tol,
                               int grid_density = 64,
                               SweepCache* cache = nullptr) {
  BoundReport report;
  report.spec_id = spec.id;
  report.theorem = theorem;
  report.params = params;
  report.case_id = detail::case_identifier(spec, theorem, params);

  auto skip = [&](std::string_view reason) {
    report.verdict = Verdict::skipped;
    report.skip_reason = std::string(reason);
    return report;
  };

  SweepCache local_cache;
  SweepCache& c = cache ? *cache : local_cache;

  const WeightParams& w = params.w;
  try {
    w.validate();
    switch (theorem) {
      case Theorem::T14:
        if (!params.m) throw ParameterError("T14 requires m");
        break;
      case Theorem::T15:
        break;
      case Theorem::T21:
        if (!params.alpha || !params.m)
          throw ParameterError("T21 requires alpha and m");
        break;
      case Theorem::T22:
        if (!params.alpha || !params.m || !params.k)
          throw ParameterError("T22 requires alpha, m and k");
        break;
      case Theorem::T23:
        if (!params.alpha || !params.m || !params.l)
          throw ParameterError("T23 requires alpha, m and l");
        break;
      case Theorem::T31:
      case Theorem::C31:
        if (!params.k) throw ParameterError("T31/C31 require k");
        break;
      case Theorem::T32:
      case Theorem::C32:
        if (!params.l) throw ParameterError("T32/C32 require l");
        break;
    }
    if (params.alpha && !(*params.alpha > 0.0 && *params.alpha <= 1.0))
      throw ParameterError("alpha outside (0, 1]");
    if (params.m && !(*params.m > 0.0 && *params.m <= 1.0))
      throw ParameterError("m outside (0, 1]");
    if (params.k && !(*params.k > 1.0)) throw ParameterError("k must be > 1");
    if (params.l && !(*params.l >= 1.0)) throw ParameterError("l must be >= 1");
  } catch (const ParameterError&) {
    return skip(kSkipParameter);
  }

  if (!detail::point_in_domain(spec, w.a) || !detail::point_in_domain(spec, w.b)) {
    return skip(kSkipEvaluationPoint);
  }

  const bool needs_over_m = theorem == Theorem::T14 || theorem == Theorem::T21 ||
                            theorem == Theorem::T22 || theorem == Theorem::T23;
  if (needs_over_m) {
    const double m = *params.m;
    const bool need_am = params.branch_select != BranchSelect::from_a_only;
    const bool need_bm = params.branch_select != BranchSelect::from_b_only;
    if ((need_am && !detail::point_in_domain(spec, w.a / m)) ||
        (need_bm && !detail::point_in_domain(spec, w.b / m))) {
      return skip(kSkipEvaluationPoint);
    }
  }

  // Class hypothesis.
  try {
    switch (theorem) {
      case Theorem::T14:
        if (!c.alpha_m(spec, std::nullopt, 1.0, *params.m, grid_density).pass)
          return skip(kSkipClassCertification);
        break;
      case Theorem::T15:
        if (!c.quasi(spec, std::nullopt, grid_density).pass)
          return skip(kSkipClassCertification);
        break;
      case Theorem::T21:
        if (!c.alpha_m(spec, std::nullopt, *params.alpha, *params.m,
                       grid_density).pass)
          return skip(kSkipClassCertification);
        break;
      case Theorem::T22:
        if (!c.alpha_m(spec, *params.k / (*params.k - 1.0), *params.alpha,
                       *params.m, grid_density).pass)
          return skip(kSkipClassCertification);
        break;
      case Theorem::T23:
        if (!c.alpha_m(spec, *params.l, *params.alpha, *params.m, grid_density)
                 .pass)
          return skip(kSkipClassCertification);
        break;
      case Theorem::T31:
        if (!c.quasi(spec, *params.k / (*params.k - 1.0), grid_density).pass)
          return skip(kSkipClassCertification);
        break;
      case Theorem::T32:
        if (!c.quasi(spec, *params.l, grid_density).pass)
          return skip(kSkipClassCertification);
        break;
      case Theorem::C31:
        if (!params.direction) return skip(kSkipClassCertification);
        if (!c.quasi(spec, *params.k / (*params.k - 1.0), grid_density).pass)
          return skip(kSkipClassCertification);
        break;
      case Theorem::C32:
        if (!params.direction) return skip(kSkipClassCertification);
        if (!c.quasi(spec, *params.l, grid_density).pass)
          return skip(kSkipClassCertification);
        break;
    }
  } catch (const OutOfDomainError&) {
    // e.g. domain not anchored at 0: the membership cannot be established.
    return skip(kSkipClassCertification);
  }

  const SweepCache::LhsEntry lhs = c.lhs(spec, w, tol);
  if (!lhs.converged) return skip(kSkipQuadrature);

  BoundValue rhs;
  const BranchSelect sel = params.branch_select;
  try {
    switch (theorem) {
      case Theorem::T14: rhs = bound_thm14(spec, w, *params.m, sel); break;
      case Theorem::T15: rhs = bound_thm15(spec, w); break;
      case Theorem::T21:
        rhs = bound_thm21(spec, w, *params.alpha, *params.m, sel);
        break;
      case Theorem::T22:
        rhs = bound_thm22(spec, w, *params.alpha, *params.m, *params.k, sel);
        break;
      case Theorem::T23:
        rhs = bound_thm23(spec, w, *params.alpha, *params.m, *params.l, sel);
        break;
      case Theorem::T31: rhs = bound_thm31(spec, w, *params.k); break;
      case Theorem::T32: rhs = bound_thm32(spec, w, *params.l); break;
      case Theorem::C31:
        rhs = bound_monotone_quasi(spec, w, ExponentParam::holder_k(*params.k),
                                   *params.direction);
        break;
      case Theorem::C32:
        rhs = bound_monotone_quasi(spec, w, ExponentParam::power_l(*params.l),
                                   *params.direction);
        break;
    }
  } catch (const MonotonicityError&) {
    return skip(kSkipClassCertification);
  } catch (const OutOfDomainError&) {
    return skip(kSkipEvaluationPoint);
  }

  report.lhs = lhs.result.value;
  report.lhs_err = lhs.result.err_estimate;
  report.rhs = rhs.value;
  report.slack = rhs.value - lhs.result.value;
  report.branch = rhs.branch;
  report.verdict = verdict_passes(report.lhs, report.lhs_err, report.rhs)
                       ? Verdict::pass
                       : Verdict::fail;
  return report;
}

namespace detail {

struct PlannedCase {
  const FunctionSpec* spec;
  Theorem theorem;
  CaseParams params;
};

/// Case order is (spec, theorem, interval, p, q, k/l, alpha, m): fixed and
/// documented, so report streams are reproducible byte for byte.
inline std::vector<PlannedCase> plan_cases(std::span<const FunctionSpec> specs,
                                           const ParamGrid& grid,
                                           std::span<const Theorem> theorems) {
  std::vector<PlannedCase> cases;
  for (const FunctionSpec& spec : specs) {
    for (Theorem theorem : theorems) {
      for (auto [a, b] : grid.intervals) {
        for (double p : grid.p_values) {
          for (double q : grid.q_values) {
            CaseParams base;
            base.w = {a, b, p, q};
            switch (theorem) {
              case Theorem::T14:
                for (double m : grid.m_values) {
                  CaseParams cp = base;
                  cp.m = m;
                  cases.push_back({&spec, theorem, cp});
                }
                break;
              case Theorem::T15:
                cases.push_back({&spec, theorem, base});
                break;
              case Theorem::T21:
                for (double alpha : grid.alpha_values) {
                  for (double m : grid.m_values) {
                    CaseParams cp = base;
                    cp.alpha = alpha;
                    cp.m = m;
                    cases.push_back({&spec, theorem, cp});
                  }
                }
                break;
              case Theorem::T22:
                for (double k : grid.k_values) {
                  for (double alpha : grid.alpha_values) {
                    for (double m : grid.m_values) {
                      CaseParams cp = base;
                      cp.k = k;
                      cp.alpha = alpha;
                      cp.m = m;
                      cases.push_back({&spec, theorem, cp});
                    }
                  }
                }
                break;
              case Theorem::T23:
                for (double l : grid.l_values) {
                  for (double alpha : grid.alpha_values) {
                    for (double m : grid.m_values) {
                      CaseParams cp = base;
                      cp.l = l;
                      cp.alpha = alpha;
                      cp.m = m;
                      cases.push_back({&spec, theorem, cp});
                    }
                  }
                }
                break;
              case Theorem::T31:
                for (double k : grid.k_values) {
                  CaseParams cp = base;
                  cp.k = k;
                  cases.push_back({&spec, theorem, cp});
                }
                break;
              case Theorem::T32:
                for (double l : grid.l_values) {
                  CaseParams cp = base;
                  cp.l = l;
                  cases.push_back({&spec, theorem, cp});
                }
                break;
              case Theorem::C31:
                for (double k : grid.k_values) {
                  CaseParams cp = base;
                  cp.k = k;
                  cp.direction = scan_monotone_direction(spec, a, b);
                  cases.push_back({&spec, theorem, cp});
                }
                break;
              case Theorem::C32:
                for (double l : grid.l_values) {
                  CaseParams cp = base;
                  cp.l = l;
                  cp.direction = scan_monotone_direction(spec, a, b);
                  cases.push_back({&spec, theorem, cp});
                }
                break;
            }
          }
        }
      }
    }
  }
  return cases;
}

}  // namespace detail

/// Cartesian sweep in deterministic case order.  Failures of prerequisites
/// surface as skipped/fail verdicts, never as exceptions.  With jobs > 1 the
/// cases run concurrently and the report stream is assembled in case order
/// afterwards, so the output does not depend on scheduling.
inline std::vector<BoundReport> sweep(std::span<const FunctionSpec> specs,
                                      const ParamGrid& grid,
                                      std::span<const Theorem> theorems,
                                      const SweepOptions& options = {}) {
  if (specs.empty()) throw ParameterError("sweep: no function specs given");
  if (theorems.empty()) throw ParameterError("sweep: no theorems given");
  grid.validate();
  if (grid.intervals.empty() || grid.p_values.empty() || grid.q_values.empty()) {
    throw ParameterError("sweep: grid needs intervals, p and q values");
  }

  auto cases = detail::plan_cases(specs, grid, theorems);
  if (static_cast<long>(cases.size()) > options.max_cases) {
    throw ParameterError("sweep: planned " + std::to_string(cases.size()) +
                         " cases exceeds max_cases=" +
                         std::to_string(options.max_cases) +
                         " (raise the cap to run this sweep)");
  }

  std::vector<BoundReport> reports(cases.size());
  SweepCache cache;

  auto run_one = [&](std::size_t i) {
    const auto& pc = cases[i];
    reports[i] = verify_case(*pc.spec, pc.theorem, pc.params, options.tol,
                             options.grid_density, &cache);
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < cases.size();
             i = next.fetch_add(1)) {
          run_one(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return reports;
}

/// Maximal relative residuals of the reduction identities over a grid.
/// All of them are algebraic identities, so anything above rounding noise
/// indicates a formula transcription error.
struct ReductionAudit {
  double beta_identity = 0.0;           // B(q+1,p+1) - B(q+2,p+1) = B(q+1,p+2)
  double beta_identity_companion = 0.0; // B(q+1,p+1) - B(q+1,p+2) = B(q+2,p+1)
  double t21_vs_t14 = 0.0;              // alpha = 1 reduction
  double t22_convex_reduction = 0.0;    // alpha = m = 1 reduction
  double t23_convex_reduction = 0.0;    // alpha = m = 1 reduction
  double corollary_p_eq_q = 0.0;        // p = q display vs general operation

  double max_residual() const {
    return std::max({beta_identity, beta_identity_companion, t21_vs_t14,
                     t22_convex_reduction, t23_convex_reduction,
                     corollary_p_eq_q});
  }
};

inline ReductionAudit reduction_audit(const ParamGrid& grid) {
  grid.validate();
  if (grid.p_values.empty() || grid.q_values.empty()) {
    throw ParameterError("reduction_audit: grid needs p and q values");
  }
  ReductionAudit audit;

  auto rel = [](double x, double y) {
    return std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y)));
  };

  for (double p : grid.p_values) {
    for (double q : grid.q_values) {
      const double b0 = beta(q + 1.0, p + 1.0);
      const double b1 = beta(q + 2.0, p + 1.0);
      const double b2 = beta(q + 1.0, p + 2.0);
      audit.beta_identity = std::max(audit.beta_identity, rel(b0 - b1, b2));
      audit.beta_identity_companion =
          std::max(audit.beta_identity_companion, rel(b0 - b2, b1));
    }
  }

  const auto& catalog = builtin_catalog();
  for (const FunctionSpec& spec : catalog) {
    for (auto [a, b] : grid.intervals) {
      if (!(a >= spec.lo && b <= spec.hi)) continue;
      for (double p : grid.p_values) {
        for (double q : grid.q_values) {
          const WeightParams w{a, b, p, q};
          for (double m : grid.m_values) {
            if (!(b / m <= spec.hi)) continue;
            const double t21 = bound_thm21(spec, w, 1.0, m).value;
            const double t14 = bound_thm14(spec, w, m).value;
            audit.t21_vs_t14 = std::max(audit.t21_vs_t14, rel(t21, t14));
          }
          for (double k : grid.k_values) {
            const double t22 = bound_thm22(spec, w, 1.0, 1.0, k).value;
            audit.t22_convex_reduction =
                std::max(audit.t22_convex_reduction,
                         rel(t22, thm22_convex_display(spec, w, k)));
          }
          for (double l : grid.l_values) {
            const double t23 = bound_thm23(spec, w, 1.0, 1.0, l).value;
            audit.t23_convex_reduction =
                std::max(audit.t23_convex_reduction,
                         rel(t23, thm23_convex_display(spec, w, l)));
          }
          if (p == q) {
            for (double alpha : grid.alpha_values) {
              for (double m : grid.m_values) {
                if (!(b / m <= spec.hi)) continue;
                const double t21 = bound_thm21(spec, w, alpha, m).value;
                audit.corollary_p_eq_q = std::max(
                    audit.corollary_p_eq_q,
                    rel(t21, thm21_symmetric_display(spec, a, b, p, alpha, m)));
              }
            }
          }
        }
      }
    }
  }
  return audit;
}

/// Minimal-slack case of a single theorem over the sweep; deterministic
/// tie-break by case order.
inline BoundReport tightness_search(std::span<const FunctionSpec> specs,
                                    Theorem theorem, const ParamGrid& grid,
                                    const SweepOptions& options = {}) {
  const Theorem single[] = {theorem};
  const auto reports = sweep(specs, grid, single, options);
  const BoundReport* best = nullptr;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::skipped) continue;
    if (!best || r.slack < best->slack) best = &r;
  }
  if (!best) {
    throw ParameterError("tightness_search: theorem " +
                         std::string(to_string(theorem)) +
                         " applies to no given spec");
  }
  return *best;
}

}  // namespace betabounds
