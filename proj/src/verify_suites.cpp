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

#include "qadc/verify_suites.hpp"

#include <algorithm>
#include <cmath>

#include "qadc/random_states.hpp"
#include "qadc/rng.hpp"

namespace qadc {

PinchingSuiteResult pinching_suite(std::uint64_t seed, int cases) {
  Rng rng(seed);
  PinchingSuiteResult result;
  result.cases = cases;
  result.min_inequality_slack = 1e300;

  for (int c = 0; c < cases; ++c) {
    long dim = 2 + rng.next_index(7);
    Register reg = Register::single("X", static_cast<int>(dim));
    LabeledOperator a{reg, random_hermitian(dim, rng)};
    Matrix psd = random_psd(dim, rng);
    LabeledOperator b{reg, Matrix(psd / psd.trace().real())};

    SpectralDecomposition sd = spectral_decompose(a);
    LabeledOperator pb = pinch(a, b);
    double nu = static_cast<double>(sd.cluster_count());
    result.min_inequality_slack =
        std::min(result.min_inequality_slack, min_eigenvalue(nu * pb.mat() - b.mat()));
    result.max_commutator = std::max(
        result.max_commutator, (a.mat() * pb.mat() - pb.mat() * a.mat()).cwiseAbs().maxCoeff());

    Matrix cpsd = random_psd(dim, rng);
    LabeledOperator cc{reg, Matrix(cpsd / cpsd.trace().real())};
    double lhs = std::real((pb.mat() * cc.mat()).trace());
    double rhs = std::real((b.mat() * pinch(a, cc).mat()).trace());
    result.max_selfadjoint_dev = std::max(result.max_selfadjoint_dev, std::abs(lhs - rhs));
  }
  result.pass = result.min_inequality_slack >= -1e-8 && result.max_commutator <= 1e-8 &&
                result.max_selfadjoint_dev <= 1e-10;
  return result;
}

HnSuiteResult hayashi_nagaoka_suite(std::uint64_t seed, int cases) {
  Rng rng(seed);
  HnSuiteResult result;
  result.cases = cases;
  result.min_slack = 1e300;
  for (int c = 0; c < cases; ++c) {
    long dim = 2 + rng.next_index(7);
    Register reg = Register::single("X", static_cast<int>(dim));
    Matrix sp = random_psd(dim, rng);
    double top = max_eigenvalue(sp);
    double shrink = (0.05 + 0.95 * rng.next_double()) / std::max(top, 1e-12);
    LabeledOperator s{reg, Matrix(shrink * sp)};
    Matrix tp = random_psd(dim, rng);
    LabeledOperator t{reg, Matrix((2.0 * rng.next_double() / std::max(tp.trace().real(), 1e-12)) * tp)};
    auto check = hayashi_nagaoka_check(s, t);
    result.min_slack = std::min(result.min_slack, check.min_eig_slack);
  }
  result.pass = result.min_slack >= -1e-8;
  return result;
}

Lemma2SuiteResult lemma2_suite(std::uint64_t seed, int bundles) {
  Rng rng(seed);
  Lemma2SuiteResult result;
  const double alphas[] = {0.1, 0.25, 0.4};
  const std::int64_t splits[][2] = {{2, 1}, {2, 2}, {4, 2}};  // R + R_S = 1, 2, 3

  for (int c = 0; c < bundles; ++c) {
    int nv = 2 + rng.next_index(2);
    int nu = 2 + rng.next_index(2);
    int db = 2 + rng.next_index(2);
    Register b_reg = Register::single("B", db);
    CqFamily fam = random_cq_family(nv, nu, b_reg, rng);
    DensityMatrix rho_vub = fam.rho_vus();  // classical on (V, U), quantum blocks on B

    for (const auto& split : splits)
      for (double alpha : alphas) {
        CodeParams params(split[0], split[1]);
        Lemma2Result r = lemma2_check(rho_vub, {"V", "U"}, {"B"}, params, alpha);
        ++result.cases;
        double scale = std::max(1.0, std::abs(r.rhs));
        result.max_miss_excess = std::max(result.max_miss_excess, (r.lhs_miss - r.rhs) / scale);
        result.max_confusion_excess =
            std::max(result.max_confusion_excess, (r.lhs_confusion - r.rhs) / scale);
      }
  }
  result.pass = result.max_miss_excess <= 1e-9 && result.max_confusion_excess <= 1e-9;
  return result;
}

Lemma1SuiteResult lemma1_suite(std::uint64_t seed, int families, int samples) {
  Lemma1SuiteResult result;
  result.all_within_bound = true;
  result.monotone_in_size = true;
  Rng rng(seed);
  Register s_reg = Register::single("S", 2);
  const std::int64_t sizes[] = {2, 4, 8};
  const double alphas[] = {0.1, 0.25};

  for (int f = 0; f < families; ++f) {
    CqFamily fam = random_cq_family(2 + rng.next_index(2), 2 + rng.next_index(2), s_reg, rng);
    int u_index = rng.next_index(fam.u_size());
    for (double alpha : alphas) {
      double prev = 1e300;
      for (std::int64_t l : sizes) {
        CodeParams params(1, l);
        Lemma1Result r =
            lemma1_check(fam, u_index, params, alpha, samples, child_seed(seed, result.cells.size()));
        Lemma1Cell cell{f, l, alpha, r.empirical_mean, r.bound, r.pass};
        result.cells.push_back(cell);
        result.all_within_bound = result.all_within_bound && r.pass;
        // The mean decays like 1/L; allow the statistical wiggle of the draw.
        if (r.empirical_mean > prev + 3.0 * r.std_error) result.monotone_in_size = false;
        prev = r.empirical_mean;
      }
    }
  }
  result.pass = result.all_within_bound && result.monotone_in_size;
  return result;
}

}  // namespace qadc
