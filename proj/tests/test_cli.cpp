#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef MCB_CLI_PATH
#define MCB_CLI_PATH "mcb"
#endif
#ifndef MCB_GOLDEN_DIR
#define MCB_GOLDEN_DIR "."
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, int threads) {
  const std::string command = "cd " MCB_GOLDEN_DIR " && OMP_NUM_THREADS=" +
                              std::to_string(threads) + " " MCB_CLI_PATH " " +
                              args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(MCB_GOLDEN_DIR "/") + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct GoldenCase {
  std::string args;
  std::string golden;
  int exit_code;
};

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"check --matroid u23.json --degree 1", "check_u23_d1.out", 0},
      {"check --matroid nobd12.json --degree 2", "check_nobd_d2.out", 0},
      {"covers count --a 2 --b 2 --mode both", "covers_2_2_both.out", 0},
      {"construct nobd --n 12 --B 6 --m 2", "construct_nobd.out", 0},
      {"polytope decompose --matroid u23.json", "decompose_u23.out", 0},
      {"graph dirgraph-check --graph triangle_graph.json --r 2",
       "dirgraph_triangle_r2.out", 0},
      {"profile --matroid nobd12.json --k 2", "profile_nobd_k2.out", 0},
      {"check --matroid no_such_file.json --degree 1", "check_missing.out",
       2},
  };
  return cases;
}

}  // namespace

TEST_CASE("CLI output matches the pinned golden files") {
  for (const GoldenCase& c : golden_cases()) {
    CAPTURE(c.args);
    const RunResult result = run_cli(c.args, 1);
    CHECK(result.exit_code == c.exit_code);
    CHECK(result.output == read_golden(c.golden));
  }
}

TEST_CASE("CLI output is byte-identical across runs and thread counts") {
  for (const GoldenCase& c : golden_cases()) {
    CAPTURE(c.args);
    const RunResult once = run_cli(c.args, 1);
    const RunResult again = run_cli(c.args, 1);
    const RunResult wide = run_cli(c.args, 8);
    CHECK(once.output == again.output);
    CHECK(once.output == wide.output);
    CHECK(once.exit_code == wide.exit_code);
  }
}

TEST_CASE("CLI version and usage behavior") {
  CHECK(run_cli("--version", 1).exit_code == 0);
  const RunResult unknown = run_cli("frobnicate", 1);
  CHECK(unknown.exit_code == 2);
  CHECK(run_cli("check --degree 1", 1).exit_code == 2);  // missing --matroid
}

TEST_CASE("scope errors exit with code 3") {
  const RunResult result =
      run_cli("polytope fan-eq --matroid big7.json --other big7.json", 1);
  CHECK(result.exit_code == 3);
  CHECK(result.output.find("\"kind\":\"scope\"") != std::string::npos);
}

TEST_CASE("MCB_BUDGET caps the tuple search") {
  const std::string command =
      "cd " MCB_GOLDEN_DIR
      " && OMP_NUM_THREADS=1 MCB_BUDGET=10 " MCB_CLI_PATH
      " check --matroid big7.json --degree 3 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    output.append(buffer, got);
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 3);
  CHECK(output.find("budget") != std::string::npos);
}

TEST_CASE("profile reports an empty list when no proper cover exists") {
  const RunResult result = run_cli("profile --matroid u23.json --k 2", 1);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"count\":0") != std::string::npos);
}

TEST_CASE("table format renders flat key-value lines") {
  const RunResult result =
      run_cli("--format table check --matroid u23.json --degree 1", 1);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("holds = true") != std::string::npos);
}
