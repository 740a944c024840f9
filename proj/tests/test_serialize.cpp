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

#include "qadc/serialize.hpp"
#include "test_helpers.hpp"

using namespace qadc;
using namespace qadc::testing;

namespace {
const std::string kData = QADC_DATA_DIR;
const std::string kFixtures = QADC_FIXTURE_DIR;
}  // namespace

TEST_CASE("matrix and register round trips") {
  Rng rng(3);
  Matrix m = random_complex_matrix(3, 2, rng);
  Matrix back = matrix_from_json(matrix_to_json(m));
  CHECK(max_abs(back - m) == 0.0);

  Register reg = Register::single("S", 2).concat(Register::single("S0", 3));
  CHECK(register_from_json(register_to_json(reg)) == reg);

  auto rho = random_density(reg, rng);
  auto rho2 = state_from_json(state_to_json(rho));
  CHECK(rho2.reg() == rho.reg());
  CHECK(max_abs(rho2.mat() - rho.mat()) == 0.0);
}

TEST_CASE("channel and strategy round trips") {
  Rng rng(5);
  auto ch = random_channel(Register::single("S0", 2), Register::single("A", 2), 2, rng);
  auto ch2 = channel_from_json(channel_to_json(ch));
  CHECK(ch2.input() == ch.input());
  CHECK(ch2.output() == ch.output());
  REQUIRE(ch2.kraus().size() == ch.kraus().size());
  for (std::size_t i = 0; i < ch.kraus().size(); ++i)
    CHECK(max_abs(ch2.kraus()[i] - ch.kraus()[i]) == 0.0);

  Eigen::MatrixXd p(2, 2);
  p << 0.3, 0.2, 0.25, 0.25;
  std::vector<DensityMatrix> states = {random_density(Register::single("G", 2), rng),
                                       random_density(Register::single("G", 2), rng)};
  std::vector<KrausChannel> encoders = {ch, ch};
  Strategy strat{p, states, encoders};
  Strategy strat2 = strategy_from_json(strategy_to_json(strat));
  CHECK((strat2.p_vu() - strat.p_vu()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(strat2.v_size() == 2);
}

TEST_CASE("shipped model files parse and validate") {
  for (const char* name :
       {"identity_qubit", "depolarizing_qubit", "dephasing_qubit", "classical_weissman",
        "orthogonal_actions"}) {
    auto j = load_json(kData + "/models/" + std::string(name) + ".json");
    auto mf = model_file_from_json(j);
    CHECK(tp_residual(mf.action_channel) < 1e-9);
    CHECK(tp_residual(mf.comm_channel) < 1e-9);
    CHECK(cp_residual(mf.action_channel) < 1e-9);
    auto m = model_from_json(j);
    CHECK(m.b_name() == "B");
  }
}

TEST_CASE("shipped strategies pair with their models") {
  for (const char* name : {"identity_qubit", "classical_weissman", "orthogonal_actions"}) {
    auto model = model_from_json(load_json(kData + "/models/" + std::string(name) + ".json"));
    auto strat = strategy_from_json(load_json(kData + "/strategies/" + std::string(name) + ".json"));
    auto bundle = assemble(model, strat);
    auto report = achievable_rate(bundle);
    CHECK(report.r_low >= -1e-9);
  }
}

TEST_CASE("classical fixture agrees with the library rate") {
  auto model = model_from_json(load_json(kData + "/models/classical_weissman.json"));
  auto strat = strategy_from_json(load_json(kData + "/strategies/classical_weissman.json"));
  auto report = achievable_rate(assemble(model, strat));
  auto fixture = load_json(kFixtures + "/classical_weissman_expected.json");
  CHECK(std::abs(report.r_low - fixture.at("r_low").get<double>()) < 1e-9);
  CHECK(std::abs(report.i_vub - fixture.at("i_vub").get<double>()) < 1e-9);
}

TEST_CASE("bell state file") {
  auto rho = state_from_json(load_json(kData + "/states/bell.json"));
  CHECK(von_neumann_entropy(rho) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(mutual_information(rho, {"A"}, {"B"}) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("digest: stable and content-addressed") {
  CHECK(digest_bytes("hello") == digest_bytes("hello"));
  CHECK(digest_bytes("hello") != digest_bytes("hellp"));
  CHECK(digest_bytes("").rfind("fnv1a:", 0) == 0);
}

TEST_CASE("json_real: 15 significant digits, infinities as strings") {
  CHECK(round15(1.0 / 3.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  Json j = json_real(0.1234567890123456789);
  CHECK(j.is_number());
  CHECK(json_real(std::numeric_limits<double>::infinity()) == Json("inf"));

  // Dumping the same payload twice is byte-identical.
  Json a{{"x", json_real(M_PI)}, {"y", json_real(1e-300)}};
  Json b{{"x", json_real(M_PI)}, {"y", json_real(1e-300)}};
  CHECK(a.dump() == b.dump());
}

TEST_CASE("parse errors carry position information") {
  CHECK_THROWS_AS(parse_json("{\"a\": ", "test"), IoError);
  try {
    parse_json("{\"a\": ", "test");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("test") != std::string::npos);
  }
}
