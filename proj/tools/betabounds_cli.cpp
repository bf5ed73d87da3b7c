// Command-line front end: verify single cases, sweep the catalog against the
// closed-form bounds, certify class memberships, and audit the reduction
// identities.  Records go to --out (default stdout) as NDJSON; the human
// summary goes to stderr.
//
// Exit codes: 0 all pass, 1 at least one fail verdict, 2 usage/config error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "betabounds/class_certifier.hpp"
#include "betabounds/function_model.hpp"
#include "betabounds/grid_file.hpp"
#include "betabounds/harness.hpp"
#include "betabounds/quadrature.hpp"
#include "betabounds/report_io.hpp"

namespace bb = betabounds;

namespace {

struct OutputSink {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw bb::ParameterError("cannot open output file '" + path + "'");
    stream = &file;
  }
  void line(const std::string& s) { (*stream) << s << '\n'; }
};

const bb::FunctionSpec& require_spec(const std::string& id) {
  const bb::FunctionSpec* spec = bb::find_spec(id);
  if (!spec) {
    throw bb::ParameterError("unknown spec '" + id +
                             "' (see the catalog subcommand)");
  }
  return *spec;
}

std::vector<bb::Theorem> parse_theorems(const std::string& list) {
  std::vector<bb::Theorem> out;
  if (list == "all") {
    out.assign(std::begin(bb::kAllTheorems), std::end(bb::kAllTheorems));
    return out;
  }
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto t = bb::theorem_from_string(item);
    if (!t) throw bb::ParameterError("unknown theorem '" + item + "'");
    out.push_back(*t);
  }
  if (out.empty()) throw bb::ParameterError("empty theorem list");
  return out;
}

void print_sweep_summary(std::span<const bb::BoundReport> reports) {
  std::fprintf(stderr, "%-8s %8s %8s %6s %8s %14s\n", "theorem", "cases",
               "passes", "fails", "skips", "min_slack");
  long cases = 0, passes = 0, fails = 0, skips = 0;
  for (const auto& row : bb::summarize(reports)) {
    std::fprintf(stderr, "%-8s %8ld %8ld %6ld %8ld %14.6g\n",
                 std::string(bb::to_string(row.theorem)).c_str(), row.cases,
                 row.passes, row.fails, row.skips, row.min_slack);
    cases += row.cases;
    passes += row.passes;
    fails += row.fails;
    skips += row.skips;
  }
  std::fprintf(stderr, "%-8s %8ld %8ld %6ld %8ld\n", "total", cases, passes,
               fails, skips);
}

int run(int argc, char** argv) {
  CLI::App app{
      "betabounds: numerical verification of Beta-function bounds for "
      "weighted integrals of generalized-convex functions"};
  app.require_subcommand(1);

  // Common knobs.
  std::string out_path;
  double tol = 1e-10;
  int jobs = 1;
  long max_cases = 100'000;
  int density = 64;
  int seed = 0;  // reserved; all operations are deterministic today

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write records to this file");
    cmd->add_option("--tol", tol, "quadrature tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", jobs, "max worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--max-cases", max_cases, "sweep case cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--n", density, "certifier grid density");
    cmd->add_option("--seed", seed, "reserved (deterministic operations)");
  };

  // catalog
  auto* cmd_catalog = app.add_subcommand("catalog", "list built-in specimens");
  add_common(cmd_catalog);

  // certify
  std::string spec_id, class_label;
  double alpha = 1.0, m = 1.0;
  auto* cmd_certify =
      app.add_subcommand("certify", "check one class membership by sampling");
  cmd_certify->add_option("--spec", spec_id, "specimen id")->required();
  cmd_certify->add_option("--class", class_label, "convex | m_convex | alpha_m_convex | quasi_convex")
      ->required();
  cmd_certify->add_option("--alpha", alpha, "alpha in (0,1]");
  cmd_certify->add_option("--m", m, "m in (0,1]");
  add_common(cmd_certify);

  // lemma-check
  std::string grid_name = "default";
  auto* cmd_lemma = app.add_subcommand(
      "lemma-check", "sweep the change-of-variables identity residual");
  cmd_lemma->add_option("--grid", grid_name, "grid file path or 'default'");
  add_common(cmd_lemma);

  // verify
  std::string theorem_name, direction_name, branch_name = "both";
  double wa = 0.0, wb = 1.0, wp = 1.0, wq = 1.0;
  double vk = 2.0, vl = 1.0;
  auto* cmd_verify =
      app.add_subcommand("verify", "verify one (spec, theorem, params) case");
  cmd_verify->add_option("--spec", spec_id, "specimen id")->required();
  cmd_verify->add_option("--theorem", theorem_name, "T14 T15 T21 T22 T23 T31 T32 C31 C32")
      ->required();
  cmd_verify->add_option("--a", wa, "interval start")->required();
  cmd_verify->add_option("--b", wb, "interval end")->required();
  cmd_verify->add_option("--p", wp, "weight exponent p")->required();
  cmd_verify->add_option("--q", wq, "weight exponent q")->required();
  auto* opt_alpha = cmd_verify->add_option("--alpha", alpha, "alpha in (0,1]");
  auto* opt_m = cmd_verify->add_option("--m", m, "m in (0,1]");
  auto* opt_k = cmd_verify->add_option("--k", vk, "Hoelder exponent k > 1");
  auto* opt_l = cmd_verify->add_option("--l", vl, "power-mean exponent l >= 1");
  cmd_verify->add_option("--direction", direction_name,
                         "increasing | decreasing (corollaries; default: scan)");
  cmd_verify->add_option("--branch", branch_name,
                         "both | from_a | from_b (one-branch fallback)");
  add_common(cmd_verify);

  // sweep
  std::string theorems_name = "all", summary_path;
  auto* cmd_sweep =
      app.add_subcommand("sweep", "catalog x grid x theorems verification");
  cmd_sweep->add_option("--grid", grid_name, "grid file path or 'default'");
  cmd_sweep->add_option("--theorems", theorems_name, "'all' or comma list");
  cmd_sweep->add_option("--summary", summary_path, "write CSV summary here");
  add_common(cmd_sweep);

  // reduce-check
  auto* cmd_reduce = app.add_subcommand(
      "reduce-check", "audit the reduction identities over a grid");
  cmd_reduce->add_option("--grid", grid_name, "grid file path or 'default'");
  add_common(cmd_reduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      return app.exit(e);
    }
    app.exit(e);
    return 2;
  }

  OutputSink sink;
  sink.open(out_path);

  if (cmd_catalog->parsed()) {
    for (const auto& spec : bb::builtin_catalog()) {
      sink.line(bb::catalog_record_line(spec));
    }
    return 0;
  }

  if (cmd_certify->parsed()) {
    const auto& spec = require_spec(spec_id);
    bb::Certificate cert;
    if (class_label == "convex") {
      cert = bb::certify_alpha_m_convex(spec, 1.0, 1.0, density);
      cert.label = bb::ClassLabel::convex;
      alpha = 1.0;
      m = 1.0;
    } else if (class_label == "m_convex") {
      cert = bb::certify_m_convex(spec, m, density);
    } else if (class_label == "alpha_m_convex") {
      cert = bb::certify_alpha_m_convex(spec, alpha, m, density);
    } else if (class_label == "quasi_convex") {
      cert = bb::certify_quasi_convex(spec, density);
    } else {
      throw bb::ParameterError("unknown class '" + class_label + "'");
    }
    sink.line(bb::certificate_to_json_line(spec.id, cert, alpha, m));
    std::fprintf(stderr, "%s: %s %s (n=%d, max_violation=%.3g)\n",
                 spec.id.c_str(), std::string(bb::to_string(cert.label)).c_str(),
                 cert.pass ? "pass" : "fail", cert.grid_density,
                 cert.max_violation);
    return cert.pass ? 0 : 1;
  }

  if (cmd_lemma->parsed()) {
    const bb::ParamGrid grid = bb::load_grid(grid_name);
    long fails = 0, records = 0;
    for (const auto& spec : bb::builtin_catalog()) {
      for (auto [a, b] : grid.intervals) {
        if (!(a >= spec.lo && b <= spec.hi)) continue;
        for (double p : grid.p_values) {
          for (double q : grid.q_values) {
            const bb::WeightParams w{a, b, p, q};
            const double residual = bb::lemma_identity_residual(spec, w, tol);
            const bool pass = residual <= 2.0 * tol;
            if (!pass) ++fails;
            ++records;
            sink.line(bb::lemma_record_line(spec.id, w, residual, 2.0 * tol, pass));
          }
        }
      }
    }
    std::fprintf(stderr, "lemma-check: %ld records, %ld fails\n", records, fails);
    return fails == 0 ? 0 : 1;
  }

  if (cmd_verify->parsed()) {
    const auto& spec = require_spec(spec_id);
    const auto theorem = bb::theorem_from_string(theorem_name);
    if (!theorem) throw bb::ParameterError("unknown theorem '" + theorem_name + "'");

    bb::CaseParams params;
    params.w = {wa, wb, wp, wq};
    params.w.validate();
    if (*opt_alpha) params.alpha = alpha;
    if (*opt_m) params.m = m;
    if (*opt_k) params.k = vk;
    if (*opt_l) params.l = vl;

    if (branch_name == "from_a") params.branch_select = bb::BranchSelect::from_a_only;
    else if (branch_name == "from_b") params.branch_select = bb::BranchSelect::from_b_only;
    else if (branch_name != "both") throw bb::ParameterError("unknown --branch value");

    if (!direction_name.empty()) {
      if (direction_name == "increasing") params.direction = bb::MonotoneDirection::increasing;
      else if (direction_name == "decreasing") params.direction = bb::MonotoneDirection::decreasing;
      else throw bb::ParameterError("unknown --direction value");
    } else if (*theorem == bb::Theorem::C31 || *theorem == bb::Theorem::C32) {
      params.direction = bb::scan_monotone_direction(spec, wa, wb);
    }

    // Flags are validated against the theorem hypotheses before any
    // computation; hypothesis violations are usage errors here, not skips.
    switch (*theorem) {
      case bb::Theorem::T14:
        if (!params.m) throw bb::ParameterError("T14 requires --m");
        break;
      case bb::Theorem::T15: break;
      case bb::Theorem::T21:
        if (!params.alpha || !params.m)
          throw bb::ParameterError("T21 requires --alpha and --m");
        break;
      case bb::Theorem::T22:
        if (!params.alpha || !params.m || !params.k)
          throw bb::ParameterError("T22 requires --alpha, --m and --k");
        break;
      case bb::Theorem::T23:
        if (!params.alpha || !params.m || !params.l)
          throw bb::ParameterError("T23 requires --alpha, --m and --l");
        break;
      case bb::Theorem::T31:
      case bb::Theorem::C31:
        if (!params.k) throw bb::ParameterError("T31/C31 require --k");
        break;
      case bb::Theorem::T32:
      case bb::Theorem::C32:
        if (!params.l) throw bb::ParameterError("T32/C32 require --l");
        break;
    }
    if (params.alpha && !(*params.alpha > 0.0 && *params.alpha <= 1.0))
      throw bb::ParameterError("--alpha outside (0,1]");
    if (params.m && !(*params.m > 0.0 && *params.m <= 1.0))
      throw bb::ParameterError("--m outside (0,1]");
    if (params.k && !(*params.k > 1.0)) throw bb::ParameterError("--k must be > 1");
    if (params.l && !(*params.l >= 1.0)) throw bb::ParameterError("--l must be >= 1");

    const bb::BoundReport report =
        bb::verify_case(spec, *theorem, params, tol, density);
    sink.line(bb::to_json_line(report));
    std::fprintf(stderr, "%s: %s%s%s\n", report.case_id.c_str(),
                 std::string(bb::to_string(report.verdict)).c_str(),
                 report.verdict == bb::Verdict::skipped ? " " : "",
                 report.skip_reason.c_str());
    return report.verdict == bb::Verdict::fail ? 1 : 0;
  }

  if (cmd_sweep->parsed()) {
    const bb::ParamGrid grid = bb::load_grid(grid_name);
    const auto theorems = parse_theorems(theorems_name);
    bb::SweepOptions options;
    options.tol = tol;
    options.jobs = jobs;
    options.max_cases = max_cases;
    options.grid_density = density;
    const auto reports =
        bb::sweep(bb::builtin_catalog(), grid, theorems, options);

    long fails = 0;
    for (const auto& r : reports) {
      if (r.verdict == bb::Verdict::fail) ++fails;
    }
    (*sink.stream) << bb::reports_to_ndjson(reports);
    if (!summary_path.empty()) {
      std::ofstream csv(summary_path);
      if (!csv) throw bb::ParameterError("cannot open summary file '" + summary_path + "'");
      csv << bb::summary_csv(reports);
    }
    print_sweep_summary(reports);
    return fails == 0 ? 0 : 1;
  }

  if (cmd_reduce->parsed()) {
    const bb::ParamGrid grid = bb::load_grid(grid_name);
    const bb::ReductionAudit audit = bb::reduction_audit(grid);
    const double threshold = 1e-12;
    sink.line(bb::audit_record_line(audit, threshold));
    std::fprintf(stderr, "reduce-check: max residual %.3g (threshold %.0e)\n",
                 audit.max_residual(), threshold);
    return audit.max_residual() <= threshold ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bb::ParameterError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const bb::OutOfDomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
