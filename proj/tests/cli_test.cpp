#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

// Paths injected by the build: the CLI binary and the fixtures directory.
#ifndef GAPLAB_CLI_PATH
#define GAPLAB_CLI_PATH "gaplab"
#endif
#ifndef GAPLAB_FIXTURE_DIR
#define GAPLAB_FIXTURE_DIR "fixtures"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  nlohmann::json report;
};

int run_cli(const std::string& args) {
  const std::string cmd = std::string(GAPLAB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

RunResult run_with_report(const std::string& args, const std::string& out) {
  fs::remove(out);
  RunResult res;
  res.exit_code = run_cli(args + " --out " + out);
  if (fs::exists(out)) {
    std::ifstream in(out);
    in >> res.report;
  }
  return res;
}

std::string fixture(const std::string& name) {
  return std::string(GAPLAB_FIXTURE_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("gaplab_cli_" + name)).string();
}

}  // namespace

TEST_CASE("collapse exit codes") {
  auto good = run_with_report("collapse --program " + fixture("collapse_targets35.program") +
                                  " --spec " + fixture("collapse_targets35.spec"),
                              temp_path("good.json"));
  CHECK(good.exit_code == 0);
  CHECK(good.report.at("results").at("compiled").at("ok") == true);

  auto broken = run_with_report(
      "collapse --program " + fixture("collapse_broken.program") + " --spec " +
          fixture("collapse_targets35.spec") + " --language " +
          fixture("collapse_broken.language"),
      temp_path("broken.json"));
  CHECK(broken.exit_code == 1);
  CHECK(broken.report.at("results").at("original").at("ok") == false);

  CHECK(run_cli("collapse --program " + fixture("malformed.program") + " --spec " +
                fixture("collapse_targets35.spec")) == 2);
}

TEST_CASE("reconstruct exit codes and guards") {
  auto sweep = run_with_report("reconstruct --n-max 5 --q-poly 1",
                               temp_path("sweep.json"));
  CHECK(sweep.exit_code == 0);
  CHECK(sweep.report.at("results").at("max_pcount") == 2);
  CHECK(sweep.report.at("results").at("violations") == 0);

  auto illegit = run_with_report("reconstruct --deck " + fixture("deck_illegitimate.json"),
                                 temp_path("illegit.json"));
  CHECK(illegit.exit_code == 0);
  CHECK(illegit.report.at("results").at("pcount") == 0);

  CHECK(run_cli("reconstruct --n-max 9") == 2);
}

TEST_CASE("encode and diag round through the CLI") {
  auto enc = run_with_report("encode --machine " + fixture("machine_x1.json"),
                             temp_path("enc.json"));
  CHECK(enc.exit_code == 0);
  CHECK(enc.report.at("results").at("oracles_checked") == 2);
  CHECK(enc.report.at("results").at("degree_ok") == true);

  auto diag = run_with_report(
      "diag --stage " + fixture("stage_acc_count.json") + " --variant acc",
      temp_path("diag.json"));
  CHECK(diag.exit_code == 0);
  CHECK(diag.report.at("results").at("found") == true);
  CHECK(diag.report.at("results").at("confirmed") == true);
  CHECK(diag.report.at("results").at("c").size() == 2);

  // Budget guard trips the resource path.
  CHECK(run_cli("diag --stage " + fixture("stage_acc_count.json") +
                " --variant acc --max-candidates 2") == 2);
}

TEST_CASE("fixed seed reproduces reports byte for byte") {
  const std::string out1 = temp_path("seed1.json");
  const std::string out2 = temp_path("seed2.json");
  fs::remove(out1);
  fs::remove(out2);
  REQUIRE(run_cli("collapse --random 10 --seed 42 --max-len 2 --r-exp 1 --out " + out1) == 0);
  REQUIRE(run_cli("collapse --random 10 --seed 42 --max-len 2 --r-exp 1 --out " + out2) == 0);
  std::ifstream a(out1), b(out2);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
}

TEST_CASE("encode universe guard") {
  CHECK(run_cli("encode --machine " + fixture("machine_wide.json")) == 2);
}
