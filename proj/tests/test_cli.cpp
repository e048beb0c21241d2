#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the built binary with the given arguments, capturing stdout
// (stderr is folded in so failure messages show up in test logs).
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SL12_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cv command reports the expected dimension and clean relations") {
  RunResult r = run_cli("cv --lambda1 3 --xi 2,1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "dim = 32"));
  CHECK(contains(r.out, "character (mass 32)"));
  CHECK(contains(r.out, "relations: 16/16 passed"));
}

TEST_CASE("kac command handles the trivial weight") {
  RunResult r = run_cli("kac --lambda1 0 --lambda2 0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "dim = 1"));
}

TEST_CASE("kac command reports typicality and irreducibility") {
  RunResult r = run_cli("kac --lambda1 7/3 --lambda2 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "dim = 8"));
  CHECK(contains(r.out, "typical = yes"));
  CHECK(contains(r.out, "irreducible = yes"));
}

TEST_CASE("demazure command matches the closed dimension formula") {
  RunResult r = run_cli("demazure --ell 2 --lambda1 1 --lambda2 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "dim = 256"));
}

TEST_CASE("truncated command matches the closed dimension formula") {
  RunResult r = run_cli("truncated --N 2 --lambda1 2 --lambda2 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "dim = 64"));
}

TEST_CASE("verify runs the commutation identity suite clean") {
  RunResult r = run_cli("verify --suite comm");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "PASS  commutation-identities"));
  CHECK(contains(r.out, "PASS 1/1"));
}

TEST_CASE("combinatorics sweep passes and reports per-weight rows") {
  RunResult r = run_cli("combinatorics --check dim-identity --max-n 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "  6  11          ok"));
  CHECK(contains(r.out, "cases pass"));
}

TEST_CASE("repeated runs are byte-identical") {
  RunResult a = run_cli("cv --lambda1 2 --xi 2,1 --format json");
  RunResult b = run_cli("cv --lambda1 2 --xi 2,1 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("json output parses and carries the run parameters") {
  RunResult r = run_cli("weyl --lambda1 1/2 --lambda2 2 --z 0,1/3 --format json");
  CHECK(r.exit_code == 0);
  nlohmann::json d = nlohmann::json::parse(r.out);
  CHECK(d["dim"] == 16);
  CHECK(d["params"]["lambda1"] == "1/2");
  CHECK(d["params"]["z"][1] == "1/3");
  CHECK(d["relations"]["pass"] == true);
}

TEST_CASE("csv output has the fixed header and quotes comma-bearing fields") {
  RunResult r = run_cli("cv --lambda1 3 --xi 2,1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("suite,case,params,expected,computed,pass\n", 0) == 0);
  CHECK(contains(r.out, "cv,\"lambda1=3,xi=(2,1)\",dim,,32,pass"));
}

TEST_CASE("--output writes exactly the stdout text and leaves no temp file") {
  namespace fs = std::filesystem;
  const fs::path target = fs::temp_directory_path() / "sl12_cli_probe.json";
  RunResult direct = run_cli("kac --lambda1 1 --lambda2 1 --format json");
  RunResult filed = run_cli("kac --lambda1 1 --lambda2 1 --format json --output " +
                            target.string());
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(target, std::ios::binary);
  std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == direct.out);
  CHECK(!fs::exists(target.string() + ".tmp"));
  fs::remove(target);
}

TEST_CASE("invalid parameters exit with code 2") {
  CHECK(run_cli("cv --lambda1 1 --xi 1,2").exit_code == 2);
  CHECK(run_cli("kac --lambda1 nope").exit_code == 2);
  CHECK(run_cli("verify --suite nosuch").exit_code == 2);
  CHECK(run_cli("weyl --lambda2 2 --z 0,0").exit_code == 2);
  CHECK(run_cli("weyl --lambda1 3 --lambda2 2 --kappa 1,1").exit_code == 2);
  CHECK(run_cli("demazure --ell 0 --lambda2 1").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  RunResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "verify"));
}
