#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qv/report_io.hpp"

namespace {

std::string qv_bin() {
  const char* p = std::getenv("QV_BIN");
  return p ? p : "";
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_raw(std::string cmd, bool merge_stderr) {
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

// Runs the tool through the shell, capturing stdout. Stderr only carries the
// human summary and diagnostics, so it is dropped unless asked for.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  return run_raw(qv_bin() + " " + args, merge_stderr);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("binary location is provided") {
  REQUIRE(!qv_bin().empty());
}

TEST_CASE("list prints the public roster") {
  RunResult r = run_cli("list");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  CHECK(lines.size() == 74);
  CHECK(r.out.find("jain-watson") != std::string::npos);
  CHECK(r.out.find("thm-p-ex-l1m1") != std::string::npos);
  CHECK(r.out.find("x-corrupt") == std::string::npos);
}

TEST_CASE("verify emits csv with the fixed column set") {
  RunResult r = run_cli("verify --identity thm-a --n-max 2 --points 1 --seed 5 --format csv");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(!lines.empty());
  CHECK(lines[0] ==
        "identity_id,n,ell,m,point_index,status,lhs,rhs_closed,rhs_derived,resamples");
  // 3 values of n times 3 of each shift.
  CHECK(lines.size() == 1 + 27);
  for (std::size_t i = 1; i < lines.size(); ++i)
    CHECK(lines[i].rfind("thm-a,", 0) == 0);
}

TEST_CASE("verify restricted to degree zero") {
  RunResult r = run_cli("verify --identity thm-a --n-max 0 --format csv");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(lines[i].find(",PASS,1,1,1,") != std::string::npos);
    CHECK(lines[i].rfind("thm-a,0,", 0) == 0);
  }
}

TEST_CASE("verify exit codes") {
  CHECK(run_cli("verify --identity no-such-id").exit_code == 2);
  CHECK(run_cli("verify --identity thm-a --n-max 1").exit_code == 0);
  CHECK(run_cli("verify --identity x-corrupt-jain-watson --n-max 2 --seed 3").exit_code == 1);
  CHECK(run_cli("verify --identity thm-a --n-min 4 --n-max 2").exit_code == 2);
  CHECK(run_cli("verify --identity thm-a --format yaml").exit_code == 2);
  CHECK(run_cli("verify --identity thm-a --pool 1,-1").exit_code == 2);
  CHECK(run_cli("verify --identity thm-a --pool bogus").exit_code == 2);
  CHECK(run_cli("verify --identity thm-a --pool 0,1/2").exit_code == 2);
}

TEST_CASE("emitted json parses and re-serializes byte for byte") {
  RunResult r = run_cli(
      "verify --identity watson --n-max 3 --points 2 --seed 42 --stable-output --format json");
  CHECK(r.exit_code == 0);
  std::string payload = r.out;
  REQUIRE(!payload.empty());
  if (payload.back() == '\n') payload.pop_back();

  qv::Report parsed = qv::report_from_json(payload);
  CHECK(qv::report_to_json(parsed) == payload);
  CHECK(parsed.summary.fail == 0);
  CHECK(parsed.summary.discrepant == 0);
  CHECK(parsed.config.sample.seed == 42);
}

TEST_CASE("stable output is deterministic across runs and worker counts") {
  const std::string flags =
      "verify --identity dixon --n-max 2 --points 2 --seed 9 --stable-output --format json";
  RunResult first = run_cli(flags + " --jobs 1");
  RunResult second = run_cli(flags + " --jobs 1");
  RunResult wide = run_cli(flags + " --jobs 8");
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == wide.out);
}

TEST_CASE("markdown format mirrors the document") {
  RunResult r = run_cli("verify --identity prop-a --n-max 1 --format md");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("# verification report", 0) == 0);
  CHECK(r.out.find("## prop-a") != std::string::npos);
}

TEST_CASE("reports can be written to a file") {
  std::string path = "/tmp/qv_cli_test_report.json";
  std::remove(path.c_str());
  RunResult r = run_cli("verify --identity thm-c --n-max 1 --stable-output --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().rfind("{", 0) == 0);
  std::remove(path.c_str());
}

TEST_CASE("point evaluates one identity") {
  RunResult r = run_cli("point --identity jain-whipple --rho 1/2 --alpha 2 --gamma 3 --n 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("-49/32") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);

  RunResult zero = run_cli("point --identity andrews-watson --rho 1/2 --alpha 2 --gamma 3 --n 1");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out.find("lhs         = 0") != std::string::npos);
}

TEST_CASE("point rejects bad input with a usage error") {
  CHECK(run_cli("point --identity nope --rho 1/2 --alpha 2 --gamma 3 --n 1").exit_code == 2);
  CHECK(run_cli("point --identity prop-b --rho 1/2 --alpha 2 --gamma 3 --n 0 --m 1").exit_code ==
        2);
  CHECK(run_cli("point --identity thm-a --rho zzz --alpha 2 --gamma 3 --n 1").exit_code == 2);
  CHECK(run_cli("point --identity thm-a --rho 0 --alpha 2 --gamma 3 --n 1").exit_code == 2);
  CHECK(run_cli("point --identity thm-a --rho 1/2 --alpha 2 --gamma 3").exit_code == 2);
  CHECK(run_cli("point --identity thm-a-ex-l1m0 --rho 1/2 --alpha 2 --gamma 3 --n 1 --ell 2")
            .exit_code == 2);
}

TEST_CASE("point reports disagreement with exit 1") {
  RunResult r =
      run_cli("point --identity x-corrupt-jain-watson --rho 1/2 --alpha 3 --gamma 5 --n 1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors and help") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("verify --no-such-flag").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  RunResult h = run_cli("--help", true);
  CHECK(h.out.find("verify") != std::string::npos);
  CHECK(h.out.find("point") != std::string::npos);
}

TEST_CASE("color obeys the environment") {
  std::string args = "point --identity jain-watson --rho 1/2 --alpha 3 --gamma 5 --n 1";
  RunResult plain = run_raw("NO_COLOR=1 " + qv_bin() + " " + args, true);
  CHECK(plain.out.find("\033[") == std::string::npos);
  CHECK(plain.out.find("PASS") != std::string::npos);

  RunResult colored = run_raw("env -u NO_COLOR " + qv_bin() + " " + args, true);
  CHECK(colored.out.find("\033[") != std::string::npos);
}
