#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Golden tests for the command-line front end: JSON output is compared
// byte-for-byte against committed files, and exit codes follow the contract
// (0 verified, 1 check failed, 2 usage/IO).

namespace {

std::string cli_path() {
  const char* p = std::getenv("KCW_CLI");
  return p ? p : "./kcw";
}

std::string data_dir() {
  const char* p = std::getenv("KCW_DATA_DIR");
  return p ? p : "data";
}

std::string golden_dir() {
  const char* p = std::getenv("KCW_GOLDEN_DIR");
  return p ? p : "tests/golden";
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string read_golden(const std::string& name) {
  std::ifstream in(golden_dir() + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void check_golden(const std::string& args, const std::string& golden, int want_exit) {
  RunResult res = run_cli(args);
  CHECK(res.exit_code == want_exit);
  CHECK(res.output == read_golden(golden));
}

}  // namespace

TEST_CASE("golden JSON outputs are stable") {
  std::string d = data_dir();
  check_golden("--output json fixtures run table1", "fixtures_table1.json", 0);
  check_golden("--output json context enumerate " + d + "/table3.json --kind concepts",
               "enumerate_table3_concepts.json", 0);
  check_golden("--output json kripke report " + d + "/example32.kripke.json",
               "kripke_report_example32.json", 0);
  check_golden("--output json approx pair " + d + "/table1.cxt --extent Leech,Bream,Dog --intent a,c",
               "approx_pair_table1.json", 0);
  check_golden("--output json dba check " + d + "/broken.alg.json --level dba",
               "dba_check_broken.json", 1);
  check_golden("--output json dba represent " + d + "/boolean2.alg.json",
               "dba_represent_boolean2.json", 0);
  check_golden("--output json logic countermodel \"top |- top & top\" --max-g 1 --max-m 1",
               "countermodel_top.json", 0);
  check_golden("--output json logic check-proof " + d + "/prop51_r6.proof.json",
               "check_proof_prop51_r6.json", 0);
}

TEST_CASE("text and JSON carry the same values") {
  std::string d = data_dir();
  RunResult text = run_cli("context derive " + d + "/table1.cxt --set Leech,Bream");
  CHECK(text.exit_code == 0);
  CHECK(text.output == "{a,b,g}\n");
}

TEST_CASE("exit codes") {
  std::string d = data_dir();
  CHECK(run_cli("fixtures run table1").exit_code == 0);
  CHECK(run_cli("dba check " + d + "/broken.alg.json --level dba").exit_code == 1);
  CHECK(run_cli("logic check-proof " + d + "/bad.proof.json").exit_code == 1);
  CHECK(run_cli("context derive no-such-file.cxt --set x").exit_code == 2);
  CHECK(run_cli("context derive " + d + "/table1.cxt --set NotThere").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code != 0);
  // budgets error out instead of truncating silently
  CHECK(run_cli("--enum-budget 4 context enumerate " + d + "/table1.cxt").exit_code == 2);
  CHECK(run_cli("--val-budget 3 logic validate " + d + "/table3.json \"p & q |- p\"").exit_code == 2);
}

TEST_CASE("deterministic output across runs") {
  std::string args = "--output json context enumerate " + data_dir() + "/table3.json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.output == b.output);
  CHECK(a.exit_code == 0);
}
