// End-to-end checks of the CLI: exit-code contract, record schemas, and
// byte-determinism of repeated sweeps.

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string out_path =
      "cli_test_out_" + std::to_string(counter++) + ".txt";
  const std::string cmd = std::string(BB_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  std::remove(out_path.c_str());
  return r;
}

std::vector<nlohmann::json> parse_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

const char* kSmallGrid =
    "intervals = 0:1\n"
    "p = 1\n"
    "q = 1, 2\n"
    "alpha = 1\n"
    "m = 0.5, 1\n"
    "k = 2\n"
    "l = 2\n";

std::string small_grid_path() {
  static std::string path = [] {
    const std::string p = "cli_test_grid.txt";
    std::ofstream f(p);
    f << kSmallGrid;
    return p;
  }();
  return path;
}

}  // namespace

TEST_CASE("catalog lists parseable records") {
  const auto r = run_cli("catalog");
  CHECK(r.exit_code == 0);
  const auto records = parse_lines(r.out);
  CHECK(records.size() >= 10);
  bool has_identity = false;
  for (const auto& j : records) {
    CHECK(j.contains("id"));
    CHECK(j.contains("domain"));
    CHECK(j.contains("claims"));
    if (j["id"] == "identity") has_identity = true;
  }
  CHECK(has_identity);
}

TEST_CASE("verify the equality case exits 0 with tiny slack") {
  const auto r = run_cli(
      "verify --spec identity --theorem T21 --a 0 --b 1 --p 1 --q 1 "
      "--alpha 1 --m 1");
  REQUIRE(r.exit_code == 0);
  const auto records = parse_lines(r.out);
  REQUIRE(records.size() == 1);
  CHECK(records[0]["verdict"] == "pass");
  CHECK(std::abs(records[0]["slack"].get<double>()) <= 1e-9);
}

TEST_CASE("verify honors the one-branch fallback flag") {
  const auto both = run_cli(
      "verify --spec expm1 --theorem T21 --a 1 --b 3 --p 1 --q 1 "
      "--alpha 1 --m 0.5");
  REQUIRE(both.exit_code == 0);
  CHECK(parse_lines(both.out)[0]["verdict"] == "skipped");

  const auto fb = run_cli(
      "verify --spec expm1 --theorem T21 --a 1 --b 3 --p 1 --q 1 "
      "--alpha 1 --m 0.5 --branch from_b");
  REQUIRE(fb.exit_code == 0);
  const auto rec = parse_lines(fb.out)[0];
  CHECK(rec["verdict"] == "pass");
  CHECK(rec["branch"] == "from_b");
  CHECK(rec["branch_select"] == "from_b");
}

TEST_CASE("certify: planted counterexample exits 1 with a witness") {
  const auto r = run_cli("certify --spec neg_bump --class quasi_convex");
  REQUIRE(r.exit_code == 1);
  const auto rec = parse_lines(r.out)[0];
  CHECK(rec["verdict"] == "fail");
  CHECK(rec["max_violation"].get<double>() >= 0.2);
  CHECK(rec["witness"]["x"].get<double>() == 0.0);
  CHECK(rec["witness"]["y"].get<double>() == 1.0);
  CHECK(rec["witness"]["t"].get<double>() == 0.5);
}

TEST_CASE("certify: claimed membership exits 0") {
  const auto r = run_cli("certify --spec square --class convex");
  CHECK(r.exit_code == 0);
  const auto rec = parse_lines(r.out)[0];
  CHECK(rec["verdict"] == "pass");
  CHECK(rec["max_violation"].get<double>() == 0.0);
}

TEST_CASE("usage and config errors exit 2") {
  CHECK(run_cli("verify --spec identity --theorem T99 --a 0 --b 1 --p 1 --q 1")
            .exit_code == 2);
  CHECK(run_cli("verify --spec nothere --theorem T15 --a 0 --b 1 --p 1 --q 1")
            .exit_code == 2);
  CHECK(run_cli("verify --spec identity --theorem T14 --a 0 --b 1 --p 1 --q 1")
            .exit_code == 2);  // missing --m
  CHECK(run_cli("verify --spec identity --theorem T21 --a 0 --b 1 --p 1 --q 1 "
                "--alpha 1.5 --m 1")
            .exit_code == 2);
  CHECK(run_cli("verify --spec identity").exit_code == 2);  // missing required
  CHECK(run_cli("certify --spec square --class banana").exit_code == 2);
  CHECK(run_cli("sweep --grid /no/such/file").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("sweep --grid " + small_grid_path() + " --max-cases 3")
            .exit_code == 2);
}

TEST_CASE("sweep: clean records, summary file, deterministic bytes") {
  const std::string args = "sweep --grid " + small_grid_path() +
                           " --theorems T14,T15,T32 --summary cli_summary.csv";
  const auto first = run_cli(args);
  REQUIRE(first.exit_code == 0);
  const auto records = parse_lines(first.out);
  CHECK(records.size() > 100);
  for (const auto& j : records) {
    CHECK(j.contains("verdict"));
  }

  const std::string csv = slurp("cli_summary.csv");
  CHECK(csv.find("theorem,cases,passes,fails,skips,min_slack\n") == 0);
  std::remove("cli_summary.csv");

  const auto second = run_cli(args);
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);
  std::remove("cli_summary.csv");
}

TEST_CASE("sweep writes records to --out") {
  const auto r = run_cli("sweep --grid " + small_grid_path() +
                         " --theorems T15 --out cli_records.ndjson");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  const auto records = parse_lines(slurp("cli_records.ndjson"));
  CHECK(!records.empty());
  std::remove("cli_records.ndjson");
}

TEST_CASE("lemma-check and reduce-check pass on the default catalog") {
  const auto lemma = run_cli("lemma-check --grid " + small_grid_path());
  CHECK(lemma.exit_code == 0);
  const auto records = parse_lines(lemma.out);
  CHECK(!records.empty());
  for (const auto& j : records) {
    CHECK(j["verdict"] == "pass");
    CHECK(j["residual"].get<double>() <= j["bound"].get<double>());
  }

  const auto reduce = run_cli("reduce-check --grid " + small_grid_path());
  CHECK(reduce.exit_code == 0);
  const auto rec = parse_lines(reduce.out)[0];
  CHECK(rec["verdict"] == "pass");
  CHECK(rec["max_residual"].get<double>() <= 1e-12);
}
