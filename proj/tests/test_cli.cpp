// Copyright 2026 The qadc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>

#include "qadc/serialize.hpp"

using namespace qadc;

namespace {

const std::string kCli = QADC_CLI_PATH;
const std::string kData = QADC_DATA_DIR;
const std::string kFixtures = QADC_FIXTURE_DIR;

struct CliResult {
  int exit_code;
  std::string out_path;
};

std::string scratch_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/qadc_cli_test_XXXXXX";
    return std::string(mkdtemp(tmpl));
  }();
  return dir;
}

CliResult run_cli(const std::string& args, const std::string& tag) {
  std::string out = scratch_dir() + "/" + tag + ".json";
  std::string cmd = kCli + " " + args + " --out " + out + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("validate: shipped model passes with exit 0") {
  auto r = run_cli("validate --model " + kData + "/models/identity_qubit.json", "validate_ok");
  CHECK(r.exit_code == 0);
  auto report = load_json(r.out_path);
  CHECK(report.at("results").at("pass").get<bool>());
}

TEST_CASE("validate: halved-identity Kraus list exits 3 with the residual") {
  // Kraus {I/2}: sum K^dag K = I/4, residual 0.75.
  auto j = load_json(kData + "/models/identity_qubit.json");
  Json eye4 = matrix_to_json(Matrix(0.5 * Matrix::Identity(4, 4)));
  j["comm_channel"]["output"] = Json::array({Json{{"name", "B"}, {"dim", 4}}});
  j["comm_channel"]["kraus"] = Json::array({eye4});
  std::string bad = scratch_dir() + "/bad_tp_model.json";
  write_file(bad, j.dump(1) + "\n");

  auto r = run_cli("validate --model " + bad, "validate_bad");
  CHECK(r.exit_code == 3);
  auto report = load_json(r.out_path);
  bool found = false;
  for (const auto& d : report.at("results").at("diagnostics"))
    if (d.at("check") == "trace-preservation residual" && !d.at("pass").get<bool>()) {
      CHECK(d.at("residual").get<double>() == doctest::Approx(0.75));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("validate: truncated JSON exits 2") {
  std::string path = scratch_dir() + "/truncated.json";
  write_file(path, "{\"metadata\": {");
  auto r = run_cli("validate --model " + path, "validate_trunc");
  CHECK(r.exit_code == 2);
}

TEST_CASE("rate: classical example matches the frozen fixture") {
  auto r = run_cli("rate --model " + kData + "/models/classical_weissman.json --strategy " + kData +
                       "/strategies/classical_weissman.json",
                   "rate_classical");
  REQUIRE(r.exit_code == 0);
  auto report = load_json(r.out_path);
  auto fixture = load_json(kFixtures + "/classical_weissman_expected.json");
  CHECK(std::abs(report.at("results").at("r_low").get<double>() -
                 fixture.at("r_low").get<double>()) < 1e-9);
  CHECK(report.at("results").contains("strategy"));
  CHECK(report.at("results").contains("i_vub"));
  CHECK(report.at("results").contains("i_vs_given_u"));
}

TEST_CASE("verify: lemma suites pass with exit 0") {
  auto r = run_cli("verify --suite lemmas --seed 7 --cases 20", "verify_lemmas");
  CHECK(r.exit_code == 0);
  auto report = load_json(r.out_path);
  CHECK(report.at("results").at("pass").get<bool>());
  for (const char* suite : {"pinching", "hayashi_nagaoka", "lemma1", "lemma2"})
    CHECK(report.at("results").at("suites").contains(suite));
}

TEST_CASE("info: Bell state quantities") {
  auto r = run_cli("info --state " + kData + "/states/bell.json", "info_bell");
  REQUIRE(r.exit_code == 0);
  auto report = load_json(r.out_path);
  const auto& results = report.at("results");
  CHECK(std::abs(results.at("entropy_bits").get<double>()) < 1e-9);
  CHECK(results.at("marginal_entropies_bits").at("A").get<double>() == doctest::Approx(1.0));
  CHECK(results.at("marginal_entropies_bits").at("B").get<double>() == doctest::Approx(1.0));
  CHECK(results.at("mutual_information_bits").get<double>() == doctest::Approx(2.0));
}

TEST_CASE("optimize: default auxiliary sizes come from the model") {
  auto r = run_cli("optimize --model " + kData +
                       "/models/identity_qubit.json --restarts 2 --iterations 6 --seed 3",
                   "optimize_default");
  REQUIRE(r.exit_code == 0);
  auto report = load_json(r.out_path);
  CHECK(report.at("results").at("r_low").get<double>() >= 0.95);
  // dim(S) * dim(A) = 4 for this model.
  CHECK(report.at("results").at("strategy").at("p_vu").size() == 4);
}

TEST_CASE("reports are reproducible byte for byte") {
  auto a = run_cli("rate --model " + kData + "/models/classical_weissman.json --strategy " + kData +
                       "/strategies/classical_weissman.json",
                   "repro_a");
  auto b = run_cli("rate --model " + kData + "/models/classical_weissman.json --strategy " + kData +
                       "/strategies/classical_weissman.json",
                   "repro_b");
  CHECK(read_file(a.out_path) == read_file(b.out_path));
}
