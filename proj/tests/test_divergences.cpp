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

#include "qadc/channels.hpp"
#include "test_helpers.hpp"

using namespace qadc;
using namespace qadc::testing;

namespace {

// Scalar oracles for the commuting cases.
double binary_entropy(double p) { return -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

double classical_kl(const std::vector<double>& p, const std::vector<double>& q) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0) d += p[i] * std::log2(p[i] / q[i]);
  return d;
}

double classical_renyi(const std::vector<double>& p, const std::vector<double>& q, double alpha) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0 || alpha > 1) acc += std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha);
  return std::log2(acc) / (alpha - 1.0);
}

DensityMatrix rename_state(const DensityMatrix& rho, const std::vector<std::string>& names) {
  return DensityMatrix(rename_subsystems(rho.op(), names));
}

}  // namespace

TEST_CASE("entropy: pure, maximally mixed, and the binary value") {
  Rng rng(3);
  auto pure = random_pure_density(Register::single("X", 3), rng);
  CHECK(von_neumann_entropy(pure) == doctest::Approx(0.0).epsilon(1e-10));

  DensityMatrix mixed{Register::single("X", 4), Matrix(0.25 * Matrix::Identity(4, 4))};
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(2.0));

  DensityMatrix biased{Register::single("X", 2), diag({0.75, 0.25})};
  CHECK(von_neumann_entropy(biased) == doctest::Approx(binary_entropy(0.25)).epsilon(1e-12));
  CHECK(von_neumann_entropy(biased) == doctest::Approx(0.8112781244591328).epsilon(1e-10));
}

TEST_CASE("relative entropy: zero, infinite, and the classical value") {
  Rng rng(5);
  auto rho = random_density(Register::single("X", 3), rng);
  auto same = relative_entropy(rho, rho);
  REQUIRE(!same.infinite);
  CHECK(same.bits == doctest::Approx(0.0).epsilon(1e-9));

  Register q = Register::single("X", 2);
  DensityMatrix zero{q, diag({1, 0})};
  DensityMatrix one{q, diag({0, 1})};
  CHECK(relative_entropy(zero, one).infinite);

  DensityMatrix p{q, diag({0.75, 0.25})};
  DensityMatrix u{q, diag({0.5, 0.5})};
  auto kl = relative_entropy(p, u);
  REQUIRE(!kl.infinite);
  CHECK(kl.bits == doctest::Approx(classical_kl({0.75, 0.25}, {0.5, 0.5})).epsilon(1e-12));
  CHECK(kl.bits == doctest::Approx(0.18872187554086717).epsilon(1e-10));
}

TEST_CASE("relative entropy: nonnegative, zero only at equality") {
  Rng rng(7);
  Register x = Register::single("X", 3);
  for (int rep = 0; rep < 10; ++rep) {
    auto rho = random_full_support_density(x, rng);
    auto sigma = random_full_support_density(x, rng);
    auto d = relative_entropy(rho, sigma);
    REQUIRE(!d.infinite);
    CHECK(d.bits >= -1e-10);
  }
}

TEST_CASE("mutual information: product, Bell, and the relative-entropy form") {
  Rng rng(11);
  auto rho_a = random_density(Register::single("A", 2), rng);
  auto rho_b = random_density(Register::single("B", 3), rng);
  DensityMatrix prod{tensor(rho_a.op(), rho_b.op()).reg(), tensor(rho_a.op(), rho_b.op()).mat()};
  CHECK(mutual_information(prod, {"A"}, {"B"}) == doctest::Approx(0.0).epsilon(1e-10));

  CHECK(mutual_information(bell_state(), {"A"}, {"B"}) == doctest::Approx(2.0).epsilon(1e-10));

  // c-q state: matches D(rho_AB || rho_A (x) rho_B).
  Register ab = Register::single("A", 2).concat(Register::single("B", 2));
  Matrix m = Matrix::Zero(4, 4);
  auto s0 = random_density(Register::single("B", 2), rng);
  auto s1 = random_density(Register::single("B", 2), rng);
  m.block(0, 0, 2, 2) = 0.6 * s0.mat();
  m.block(2, 2, 2, 2) = 0.4 * s1.mat();
  DensityMatrix cq{ab, m};
  auto marg_a = partial_trace(cq, {"A"});
  auto marg_b = partial_trace(cq, {"B"});
  DensityMatrix ref{tensor(marg_a.op(), marg_b.op()).reg(), tensor(marg_a.op(), marg_b.op()).mat()};
  auto dv = relative_entropy(cq, ref);
  REQUIRE(!dv.infinite);
  CHECK(mutual_information(cq, {"A"}, {"B"}) == doctest::Approx(dv.bits).epsilon(1e-8));

  CHECK_THROWS_AS(mutual_information(cq, {"A"}, {"C"}), BadPartition);
  CHECK_THROWS_AS(mutual_information(cq, {"A"}, {"A"}), BadPartition);
}

TEST_CASE("conditional mutual information: product, classical copy, Markov") {
  Rng rng(13);
  // rho_A (x) rho_BC: I(A;B|C) = 0.
  auto rho_a = random_density(Register::single("A", 2), rng);
  auto rho_bc = random_density(Register::single("B", 2).concat(Register::single("C", 2)), rng);
  auto joint = tensor(rho_a.op(), rho_bc.op());
  DensityMatrix rho{joint.reg(), joint.mat()};
  CHECK(conditional_mutual_information(rho, {"A"}, {"B"}, {"C"}) == doctest::Approx(0.0).epsilon(1e-9));

  // Classical: V copies S conditioned on U, so I(V;S|U) = H(V|U).
  Register vus = Register::single("V", 2).concat(Register::single("U", 2)).concat(Register::single("S", 2));
  Eigen::MatrixXd p_vu(2, 2);
  p_vu << 0.3, 0.15, 0.2, 0.35;
  Matrix m = Matrix::Zero(8, 8);
  for (int v = 0; v < 2; ++v)
    for (int u = 0; u < 2; ++u) {
      long idx = (v * 2 + u) * 2 + v;  // S = V
      m(idx, idx) = p_vu(v, u);
    }
  DensityMatrix copy_state{vus, m};
  double h_v_given_u = 0.0;
  for (int u = 0; u < 2; ++u) {
    double pu = p_vu(0, u) + p_vu(1, u);
    h_v_given_u += pu * binary_entropy(p_vu(0, u) / pu);
  }
  CHECK(conditional_mutual_information(copy_state, {"V"}, {"S"}, {"U"}) ==
        doctest::Approx(h_v_given_u).epsilon(1e-10));

  // Markov chain V - U - S: conditional product, zero CMI.
  Matrix mk = Matrix::Zero(8, 8);
  std::vector<DensityMatrix> sigma_u = {random_density(Register::single("S", 2), rng),
                                        random_density(Register::single("S", 2), rng)};
  for (int v = 0; v < 2; ++v)
    for (int u = 0; u < 2; ++u)
      mk.block((v * 2 + u) * 2, (v * 2 + u) * 2, 2, 2) = p_vu(v, u) * sigma_u[u].mat();
  DensityMatrix markov{vus, mk};
  CHECK(conditional_mutual_information(markov, {"V"}, {"S"}, {"U"}) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(conditional_mutual_information(markov, {"V"}, {"S"}, {"U"}) >= -1e-8);

  CHECK_THROWS_AS(conditional_mutual_information(markov, {"V"}, {"V"}, {"U"}), BadPartition);
}

TEST_CASE("sandwiched divergence: zero at equal states") {
  Rng rng(17);
  auto rho = random_full_support_density(Register::single("X", 2), rng);
  for (double alpha : {0.5, 0.9, 1.5}) {
    auto d = sandwiched_renyi(rho, rho, alpha);
    REQUIRE(!d.infinite);
    CHECK(d.bits == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("sandwiched divergence: commuting pair matches the scalar oracle") {
  Register q = Register::single("X", 2);
  DensityMatrix p{q, diag({0.8, 0.2})};
  DensityMatrix s{q, diag({0.4, 0.6})};
  for (double alpha : {0.5, 2.0, 3.0}) {
    auto d = sandwiched_renyi(p, s, alpha);
    REQUIRE(!d.infinite);
    CHECK(d.bits == doctest::Approx(classical_renyi({0.8, 0.2}, {0.4, 0.6}, alpha)).epsilon(1e-12));
  }
}

TEST_CASE("sandwiched divergence: order 1/2 against fidelity") {
  Rng rng(19);
  for (int rep = 0; rep < 20; ++rep) {
    Register x = Register::single("X", 2);
    auto rho = random_density(x, rng);
    auto sigma = random_full_support_density(x, rng);
    auto d = sandwiched_renyi(rho, sigma, 0.5);
    REQUIRE(!d.infinite);
    CHECK(d.bits == doctest::Approx(-2.0 * std::log2(fidelity(rho, sigma))).epsilon(1e-8));
  }
}

TEST_CASE("sandwiched divergence: support conventions") {
  Register q = Register::single("X", 2);
  DensityMatrix zero{q, diag({1, 0})};
  DensityMatrix one{q, diag({0, 1})};
  DensityMatrix mixed{q, diag({0.5, 0.5})};
  CHECK(sandwiched_renyi(zero, one, 1.5).infinite);   // containment fails
  CHECK(sandwiched_renyi(zero, one, 0.5).infinite);   // orthogonal supports
  CHECK(!sandwiched_renyi(zero, mixed, 0.5).infinite);
  CHECK(!sandwiched_renyi(mixed, zero, 0.5).infinite);  // partial overlap, alpha < 1
  CHECK(sandwiched_renyi(mixed, zero, 1.5).infinite);
  CHECK_THROWS_AS(sandwiched_renyi(zero, one, 1.0), BadOrder);
  CHECK_THROWS_AS(sandwiched_renyi(zero, one, -0.3), BadOrder);
}

TEST_CASE("sandwiched divergence: monotone in alpha and additive under tensoring") {
  Rng rng(23);
  Register x = Register::single("X", 2);
  for (int rep = 0; rep < 10; ++rep) {
    auto rho = random_full_support_density(x, rng);
    auto sigma = random_full_support_density(x, rng);
    const double grid[] = {0.3, 0.5, 0.8, 1.2, 2.0, 3.0};
    double prev = -1e300;
    for (double alpha : grid) {
      auto d = sandwiched_renyi(rho, sigma, alpha);
      REQUIRE(!d.infinite);
      CHECK(d.bits >= prev - 1e-9);
      prev = d.bits;
    }

    auto rho2 = DensityMatrix(tensor(rho.op(), rename_state(rho, {"Y"}).op()));
    auto sigma2 = DensityMatrix(tensor(sigma.op(), rename_state(sigma, {"Y"}).op()));
    for (double alpha : {0.6, 1.7}) {
      auto d1 = sandwiched_renyi(rho, sigma, alpha);
      auto d2 = sandwiched_renyi(rho2, sigma2, alpha);
      CHECK(d2.bits == doctest::Approx(2.0 * d1.bits).epsilon(1e-8));
    }
  }
}

TEST_CASE("sandwiched divergence: approaches the relative entropy near order one") {
  Rng rng(29);
  Register x = Register::single("X", 2);
  for (int rep = 0; rep < 5; ++rep) {
    auto rho = random_full_support_density(x, rng);
    auto sigma = random_full_support_density(x, rng);
    double d = relative_entropy(rho, sigma).bits;
    double prev_gap = 1e300;
    for (double eps : {0.1, 0.01, 0.001}) {
      double up = sandwiched_renyi(rho, sigma, 1.0 + eps).bits;
      double down = sandwiched_renyi(rho, sigma, 1.0 - eps).bits;
      double gap = std::max(std::abs(up - d), std::abs(down - d));
      CHECK(gap <= prev_gap + 1e-12);
      prev_gap = gap;
      if (eps == 0.001) CHECK(gap <= 1e-2);
    }
  }
}

TEST_CASE("sandwiched divergence: data processing under random channels") {
  Rng rng(31);
  Register x = Register::single("X", 2);
  Register y = Register::single("Y", 2);
  for (int rep = 0; rep < 10; ++rep) {
    auto rho = random_full_support_density(x, rng);
    auto sigma = random_full_support_density(x, rng);
    auto ch = random_channel(x, y, 2, rng);
    for (double alpha : {0.6, 1.5, 2.0}) {
      double before = sandwiched_renyi(rho, sigma, alpha).bits;
      double after = sandwiched_renyi(apply(ch, rho), apply(ch, sigma), alpha).bits;
      CHECK(after <= before + 1e-8);
    }
  }
}

TEST_CASE("fidelity and purified distance: spec values and identities") {
  Register q = Register::single("X", 2);
  DensityMatrix zero{q, diag({1, 0})};
  DensityMatrix one{q, diag({0, 1})};
  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  DensityMatrix plus_state{q, plus};

  CHECK(fidelity(zero, zero) == doctest::Approx(1.0));
  CHECK(fidelity(zero, one) == doctest::Approx(0.0));
  CHECK(fidelity(zero, plus_state) == doctest::Approx(M_SQRT1_2).epsilon(1e-10));
  CHECK(purified_distance(zero, zero) == doctest::Approx(0.0));
  CHECK(purified_distance(zero, one) == doctest::Approx(1.0));

  Rng rng(37);
  for (int rep = 0; rep < 10; ++rep) {
    auto a = random_density(q, rng);
    auto b = random_density(q, rng);
    auto c = random_density(q, rng);
    double f = fidelity(a, b);
    double p = purified_distance(a, b);
    CHECK(p * p + f * f == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity(b, a) == doctest::Approx(f).epsilon(1e-10));
    CHECK(purified_distance(a, c) <= purified_distance(a, b) + purified_distance(b, c) + 1e-8);
  }
}
