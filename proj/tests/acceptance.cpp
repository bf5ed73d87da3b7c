// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.  Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "betabounds/class_certifier.hpp"
#include "betabounds/function_model.hpp"
#include "betabounds/harness.hpp"
#include "betabounds/quadrature.hpp"
#include "betabounds/report_io.hpp"
#include "betabounds/special_functions.hpp"

using namespace betabounds;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s  [%d] %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double exact_beta_rational(int i, int j) {
  auto factorial = [](int n) {
    unsigned long long f = 1;
    for (int v = 2; v <= n; ++v) f *= static_cast<unsigned long long>(v);
    return f;
  };
  return static_cast<double>(static_cast<long double>(factorial(i - 1)) *
                             static_cast<long double>(factorial(j - 1)) /
                             static_cast<long double>(factorial(i + j - 1)));
}

// Criterion 1: catalog x default grid x all theorems -> zero fail verdicts,
// >= 2000 non-skipped cases, wall clock under 60 s with 4 workers.
std::vector<BoundReport> criterion_inequality_sweep() {
  SweepOptions options;
  options.tol = 1e-10;
  options.jobs = 4;

  const auto start = std::chrono::steady_clock::now();
  const std::vector<Theorem> all(std::begin(kAllTheorems),
                                 std::end(kAllTheorems));
  const auto reports = sweep(builtin_catalog(), default_grid(), all, options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  long fails = 0, non_skipped = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::fail) ++fails;
    if (r.verdict != Verdict::skipped) ++non_skipped;
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "inequality sweep: %zu cases, %ld non-skipped, %ld fails, "
                "%.1f s",
                reports.size(), non_skipped, fails, seconds);
  report(1, fails == 0 && non_skipped >= 2000 && seconds < 60.0, buf);
  return reports;
}

void criterion_equality_cases() {
  bool ok = true;
  std::string detail = "equality cases:";

  CaseParams params;
  params.w = {0.0, 1.0, 1.0, 1.0};
  params.alpha = 1.0;
  params.m = 1.0;
  const auto t21 =
      verify_case(*find_spec("identity"), Theorem::T21, params, 1e-10);
  ok = ok && t21.verdict == Verdict::pass && std::abs(t21.slack) <= 1e-9;

  CaseParams p23 = params;
  p23.l = 1.0;
  const auto t23 =
      verify_case(*find_spec("identity"), Theorem::T23, p23, 1e-10);
  ok = ok && t23.verdict == Verdict::pass && std::abs(t23.slack) <= 1e-9;
  detail += " T21/T23(l=1) slack " + fmt17(std::max(t21.slack, t23.slack));

  double worst_const = 0.0;
  const ParamGrid grid = default_grid();
  for (auto [a, b] : grid.intervals) {
    for (double p : grid.p_values) {
      for (double q : grid.q_values) {
        for (double l : grid.l_values) {
          CaseParams cp;
          cp.w = {a, b, p, q};
          cp.l = l;
          const auto r =
              verify_case(*find_spec("const_one"), Theorem::T32, cp, 1e-10);
          ok = ok && r.verdict == Verdict::pass;
          worst_const = std::max(worst_const, std::abs(r.slack));
        }
      }
    }
  }
  ok = ok && worst_const <= 1e-9;
  detail += ", const T32 max |slack| " + fmt17(worst_const);
  report(2, ok, detail);
}

void criterion_lemma_identity() {
  const double tol = 1e-10;
  bool ok = true;
  long cases = 0;
  double worst = 0.0;

  ParamGrid grid = default_grid();
  std::vector<std::pair<double, double>> pq_pairs;
  for (double p : grid.p_values) {
    for (double q : grid.q_values) pq_pairs.emplace_back(p, q);
  }
  pq_pairs.emplace_back(1.5, 0.5);

  for (const auto& spec : builtin_catalog()) {
    for (auto [a, b] : grid.intervals) {
      if (!(a >= spec.lo && b <= spec.hi)) continue;
      for (auto [p, q] : pq_pairs) {
        const double residual =
            lemma_identity_residual(spec, {a, b, p, q}, tol);
        worst = std::max(worst, residual);
        ok = ok && residual <= 2.0 * tol;
        ++cases;
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "lemma identity: %ld integrals, max residual %.3g (bound %.0e)",
                cases, worst, 2.0 * tol);
  report(3, ok && cases > 0, buf);
}

void criterion_reduction_audit() {
  const auto audit = reduction_audit(default_grid());
  char buf[160];
  std::snprintf(buf, sizeof(buf), "reduction audit: max residual %.3g",
                audit.max_residual());
  report(4, audit.max_residual() <= 1e-12, buf);
}

void criterion_special_functions() {
  bool ok = true;
  double worst_rel = 0.0;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const double rel =
          std::abs(beta(i, j) - exact_beta_rational(i, j)) /
          exact_beta_rational(i, j);
      worst_rel = std::max(worst_rel, rel);
    }
  }
  ok = ok && worst_rel <= 1e-13;

  double worst_quad = 0.0;
  const double tol = 1e-11;
  for (double x = 1.0; x <= 10.0; x += 0.75) {
    for (double y = 1.0; y <= 10.0; y += 0.75) {
      const auto r = beta_by_quadrature(x, y, tol);
      const double gap = std::abs(r.value - beta(x, y));
      worst_quad = std::max(worst_quad, gap);
      ok = ok && gap <= std::max(tol, 1e-10);
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "special functions: rational rel err %.3g, oracle gap %.3g",
                worst_rel, worst_quad);
  report(5, ok, buf);
}

void criterion_certifier_soundness() {
  bool ok = true;
  std::string detail = "certifier:";

  const auto planted = certify_quasi_convex(*find_spec("neg_bump"), 64);
  ok = ok && !planted.pass && planted.witness.has_value() &&
       planted.max_violation >= 0.2;
  detail += " planted defect " + fmt17(planted.max_violation);

  long claims = 0;
  for (const auto& spec : builtin_catalog()) {
    for (const auto& claim : spec.claims) {
      Certificate cert;
      switch (claim.label) {
        case ClassLabel::convex:
          cert = certify_alpha_m_convex(spec, 1.0, 1.0, 64);
          break;
        case ClassLabel::m_convex:
          cert = certify_m_convex(spec, claim.params.m, 64);
          break;
        case ClassLabel::alpha_m_convex:
          cert = certify_alpha_m_convex(spec, claim.params.alpha,
                                        claim.params.m, 64);
          break;
        case ClassLabel::quasi_convex:
          cert = certify_quasi_convex(spec, 64);
          break;
      }
      ok = ok && cert.pass;
      ++claims;
    }
  }
  detail += ", " + std::to_string(claims) + " claims certified at n=64";
  report(6, ok, detail);
}

void criterion_determinism(const std::vector<BoundReport>& first_run) {
  SweepOptions options;
  options.tol = 1e-10;
  options.jobs = 4;
  const std::vector<Theorem> all(std::begin(kAllTheorems),
                                 std::end(kAllTheorems));
  const auto again = sweep(builtin_catalog(), default_grid(), all, options);
  const std::string a = reports_to_ndjson(first_run);
  const std::string b = reports_to_ndjson(again);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "determinism: %zu bytes vs %zu bytes, %s",
                a.size(), b.size(), a == b ? "identical" : "DIFFER");
  report(7, a == b, buf);
}

}  // namespace

int main() {
  const auto reports = criterion_inequality_sweep();
  criterion_equality_cases();
  criterion_lemma_identity();
  criterion_reduction_audit();
  criterion_special_functions();
  criterion_certifier_soundness();
  criterion_determinism(reports);

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
