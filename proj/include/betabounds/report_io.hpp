#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "betabounds/class_certifier.hpp"
#include "betabounds/function_model.hpp"
#include "betabounds/harness.hpp"

// Structured-text encodings of the record types: NDJSON for per-case records
// (one JSON object per line, floats at 17 significant digits so values
// round-trip), CSV for the per-theorem summary.

namespace betabounds {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline void append_json_string(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
}

class JsonLine {
public:
  JsonLine() { line_ = "{"; }

  void field(std::string_view key, std::string_view value) {
    sep();
    detail::append_json_string(line_, key);
    line_ += ':';
    detail::append_json_string(line_, value);
  }
  void field(std::string_view key, double value) {
    sep();
    detail::append_json_string(line_, key);
    line_ += ':';
    line_ += fmt17(value);
  }
  void field(std::string_view key, long value) {
    sep();
    detail::append_json_string(line_, key);
    line_ += ':';
    line_ += std::to_string(value);
  }
  void raw_field(std::string_view key, std::string_view raw) {
    sep();
    detail::append_json_string(line_, key);
    line_ += ':';
    line_ += raw;
  }

  std::string str() && {
    line_ += '}';
    return std::move(line_);
  }

private:
  void sep() {
    if (line_.size() > 1) line_ += ',';
  }
  std::string line_;
};

}  // namespace detail

inline std::string to_json_line(const BoundReport& r) {
  detail::JsonLine j;
  j.field("case", r.case_id);
  j.field("spec", r.spec_id);
  j.field("theorem", to_string(r.theorem));
  j.field("a", r.params.w.a);
  j.field("b", r.params.w.b);
  j.field("p", r.params.w.p);
  j.field("q", r.params.w.q);
  if (r.params.alpha) j.field("alpha", *r.params.alpha);
  if (r.params.m) j.field("m", *r.params.m);
  if (r.params.k) j.field("k", *r.params.k);
  if (r.params.l) j.field("l", *r.params.l);
  if (r.params.direction) j.field("direction", to_string(*r.params.direction));
  if (r.params.branch_select == BranchSelect::from_a_only)
    j.field("branch_select", "from_a");
  if (r.params.branch_select == BranchSelect::from_b_only)
    j.field("branch_select", "from_b");
  if (r.verdict != Verdict::skipped) {
    j.field("lhs", r.lhs);
    j.field("lhs_err", r.lhs_err);
    j.field("rhs", r.rhs);
    j.field("slack", r.slack);
    j.field("branch", to_string(r.branch));
  }
  j.field("verdict", to_string(r.verdict));
  if (r.verdict == Verdict::skipped) j.field("skip_reason", r.skip_reason);
  return std::move(j).str();
}

/// The full record stream of a sweep, one line per case, trailing newline.
inline std::string reports_to_ndjson(std::span<const BoundReport> reports) {
  std::string out;
  for (const auto& r : reports) {
    out += to_json_line(r);
    out += '\n';
  }
  return out;
}

struct TheoremSummary {
  Theorem theorem;
  long cases = 0;
  long passes = 0;
  long fails = 0;
  long skips = 0;
  double min_slack = std::numeric_limits<double>::quiet_NaN();
};

inline std::vector<TheoremSummary> summarize(
    std::span<const BoundReport> reports) {
  std::map<Theorem, TheoremSummary> rows;
  for (const auto& r : reports) {
    auto& row = rows.try_emplace(r.theorem, TheoremSummary{r.theorem}).first
                    ->second;
    row.cases++;
    switch (r.verdict) {
      case Verdict::pass: row.passes++; break;
      case Verdict::fail: row.fails++; break;
      case Verdict::skipped: row.skips++; break;
    }
    if (r.verdict != Verdict::skipped &&
        (std::isnan(row.min_slack) || r.slack < row.min_slack)) {
      row.min_slack = r.slack;
    }
  }
  std::vector<TheoremSummary> out;
  for (Theorem t : kAllTheorems) {
    if (auto it = rows.find(t); it != rows.end()) out.push_back(it->second);
  }
  return out;
}

inline std::string summary_csv(std::span<const BoundReport> reports) {
  std::string out = "theorem,cases,passes,fails,skips,min_slack\n";
  for (const auto& row : summarize(reports)) {
    out += to_string(row.theorem);
    out += ',' + std::to_string(row.cases);
    out += ',' + std::to_string(row.passes);
    out += ',' + std::to_string(row.fails);
    out += ',' + std::to_string(row.skips);
    out += ',' + fmt17(row.min_slack);
    out += '\n';
  }
  return out;
}

inline std::string certificate_to_json_line(std::string_view spec_id,
                                            const Certificate& cert,
                                            double alpha, double m) {
  detail::JsonLine j;
  j.field("spec", spec_id);
  j.field("class", to_string(cert.label));
  if (cert.label == ClassLabel::alpha_m_convex) j.field("alpha", alpha);
  if (cert.label == ClassLabel::alpha_m_convex ||
      cert.label == ClassLabel::m_convex) {
    j.field("m", m);
  }
  j.field("n", static_cast<long>(cert.grid_density));
  j.field("verdict", cert.pass ? "pass" : "fail");
  j.field("max_violation", cert.max_violation);
  if (cert.witness) {
    std::string w = "{\"x\":" + fmt17(cert.witness->x) +
                    ",\"y\":" + fmt17(cert.witness->y) +
                    ",\"t\":" + fmt17(cert.witness->t) + "}";
    j.raw_field("witness", w);
  }
  return std::move(j).str();
}

inline std::string catalog_record_line(const FunctionSpec& spec) {
  detail::JsonLine j;
  j.field("id", spec.id);
  std::string domain = "[" + fmt17(spec.lo) + "," + fmt17(spec.hi) + "]";
  j.raw_field("domain", domain);
  std::string claims = "[";
  for (const auto& claim : spec.claims) {
    if (claims.size() > 1) claims += ',';
    claims += "{\"label\":\"";
    claims += to_string(claim.label);
    claims += '"';
    if (claim.label == ClassLabel::alpha_m_convex) {
      claims += ",\"alpha\":" + fmt17(claim.params.alpha);
    }
    if (claim.label == ClassLabel::alpha_m_convex ||
        claim.label == ClassLabel::m_convex) {
      claims += ",\"m\":" + fmt17(claim.params.m);
    }
    claims += '}';
  }
  claims += ']';
  j.raw_field("claims", claims);
  return std::move(j).str();
}

inline std::string lemma_record_line(std::string_view spec_id,
                                     const WeightParams& w, double residual,
                                     double bound, bool pass) {
  detail::JsonLine j;
  j.field("spec", spec_id);
  j.field("a", w.a);
  j.field("b", w.b);
  j.field("p", w.p);
  j.field("q", w.q);
  j.field("residual", residual);
  j.field("bound", bound);
  j.field("verdict", pass ? "pass" : "fail");
  return std::move(j).str();
}

inline std::string audit_record_line(const ReductionAudit& audit,
                                     double threshold) {
  detail::JsonLine j;
  j.field("beta_identity", audit.beta_identity);
  j.field("beta_identity_companion", audit.beta_identity_companion);
  j.field("t21_vs_t14", audit.t21_vs_t14);
  j.field("t22_convex_reduction", audit.t22_convex_reduction);
  j.field("t23_convex_reduction", audit.t23_convex_reduction);
  j.field("corollary_p_eq_q", audit.corollary_p_eq_q);
  j.field("max_residual", audit.max_residual());
  j.field("threshold", threshold);
  j.field("verdict", audit.max_residual() <= threshold ? "pass" : "fail");
  return std::move(j).str();
}

}  // namespace betabounds
