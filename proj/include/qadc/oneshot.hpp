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

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qadc/rate.hpp"
#include "qadc/rng.hpp"

namespace qadc {

/// Code sizes M = 2^R messages and L = 2^{R_S} subcodebook entries.
struct CodeParams {
  std::int64_t message_count = 1;     // M
  std::int64_t subcodebook_size = 1;  // L

  CodeParams(std::int64_t m, std::int64_t l);
  double rate() const { return std::log2(static_cast<double>(message_count)); }
  double subcode_rate() const { return std::log2(static_cast<double>(subcodebook_size)); }
  double total_rate() const { return rate() + subcode_rate(); }
};

struct Codebook {
  std::vector<int> u;               // u(m)
  std::vector<std::vector<int>> v;  // v(m, l)
  std::uint64_t seed = 0;
};

/// u(m) i.i.d. from the U marginal, then v(m, l) conditionally i.i.d. from
/// p(v | u(m)). Deterministic in the seed.
Codebook sample_codebook(const Strategy& strategy, const CodeParams& params, std::uint64_t seed);
Codebook sample_codebook(const Eigen::MatrixXd& p_vu, const CodeParams& params, std::uint64_t seed);

/// Codebook-independent part of the decoder: the pinching projector test on
/// (V, U, B) and the per-(v, u) blocks it induces on B.
struct DecoderBasis {
  LabeledOperator pi_vub;
  int nu1 = 0;
  std::vector<std::vector<Matrix>> block;  // [v][u], dim B
  Register b_reg;
  int v_size = 0, u_size = 0;

  DecoderBasis(const JointStateBundle& bundle, const CodeParams& params);
};

struct DecoderPOVM {
  std::vector<std::vector<LabeledOperator>> beta;  // [m][l], on B
  LabeledOperator completion;                      // projector onto ker of sum gamma
  LabeledOperator pi_vub;
  int nu1 = 0;
  bool trivial = false;  // all gamma vanished; the decoder always fails
};

DecoderPOVM build_decoder(const JointStateBundle& bundle, const Codebook& cb, const CodeParams& params);
DecoderPOVM build_decoder(const DecoderBasis& basis, const Codebook& cb, const CodeParams& params);

enum class EncoderMode { ideal_average, exact_uhlmann };

/// Largest total dimension (S * A * T * K1 * K0 * L) the exact Uhlmann
/// encoder is evaluated at.
inline constexpr long kExactUhlmannDimCap = 64;

struct SimulationReport {
  double avg_error_exact = 0.0;
  double confusion_term = 0.0;         // wrong-message POVM mass
  double purified_distance_term = 0.0; // max_m P(tau_m, sigma_S^{u(m)})^2
  std::map<double, double> bound_rhs_per_alpha;
  double bound_rhs_min = 0.0;
  int nu1 = 0;
  int nu2 = 0;
  EncoderMode encoder_mode = EncoderMode::ideal_average;
  bool decoder_trivial = false;
  std::vector<std::uint64_t> seeds;
};

/// The alpha grid the reported bound is minimized over.
std::vector<double> default_alpha_grid();

/// Exact average error of the decoder. In ideal_average mode message m
/// transmits the subcodebook-averaged output; in exact_uhlmann mode the
/// transmitted state comes from the explicit purified encoding (dimension
/// capped, throws TooLarge beyond it). Success means landing anywhere in the
/// transmitted message's subcodebook; completion outcomes count as errors.
SimulationReport evaluate_error(const ActionModel& model, const Strategy& strategy, const Codebook& cb,
                                const DecoderPOVM& decoder, EncoderMode mode);
/// With compute_bounds the report also carries the expected-error bound over
/// the default alpha grid (a bundle-level quantity, independent of the
/// sampled codebook).
SimulationReport evaluate_error(const ActionModel& model, const Strategy& strategy,
                                const JointStateBundle& bundle, const Codebook& cb,
                                const DecoderPOVM& decoder, EncoderMode mode,
                                bool compute_bounds = true);

struct Prop1Bound {
  double value = 0.0;
  double miss_term = 0.0;       // 12 nu1^a 2^{a (R + R_S - D_{1-a})}
  double subcode_term = 0.0;    // (2/a) nu2^a 2^{-a R_S} 2^{a D_{1+a}}
  double d_one_minus = 0.0;     // D_{1-a}(rho_VUB || rho_VU (x) rho_B)
  double d_one_plus = 0.0;      // D_{1+a}(rho_VUS || rho_{V-U-S})
  int nu1 = 0;
  int nu2 = 0;
  bool vacuous = false;         // value >= 1
};

/// One-shot expected-error bound at order alpha in (0, 1/2).
Prop1Bound proposition1_bound(const JointStateBundle& bundle, const CodeParams& params, double alpha);

struct MonteCarloReport {
  double mean_error = 0.0;
  double std_error = 0.0;   // standard error of the mean
  double mean_correction = 0.0;
  double corrected_mean = 0.0;
  double corrected_std_error = 0.0;
  std::vector<double> per_trial_error;
  std::vector<double> per_trial_corrected;
  std::vector<std::uint64_t> trial_seeds;
  std::map<double, double> bound_per_alpha;
  double bound_min = 0.0;
  bool bound_vacuous = false;
  int nu1 = 0;
  int nu2 = 0;
  /// Expectation-level comparison: corrected mean <= bound + 3 stderr, or
  /// the bound is vacuous. Per-codebook errors may exceed the bound.
  bool comparison_pass = true;
};

/// Expected error over random codebooks: per trial, sample a codebook with
/// seed mix(master_seed, trial), build the decoder, and evaluate exactly in
/// ideal_average mode with the purified-distance correction added. Trials
/// are independent and may run on several workers; results are identical
/// for any worker count.
MonteCarloReport monte_carlo_expected_error(const ActionModel& model, const Strategy& strategy,
                                            const CodeParams& params, int trials,
                                            std::uint64_t master_seed, int workers = 1,
                                            const std::vector<double>& alpha_grid = default_alpha_grid());

/// A classical-quantum family: p(v, u) together with states on S per (v, u).
/// sigma(u) is the p(v|u)-average; Theorem-1 strategies induce the degenerate
/// family whose states equal sigma(u) for every v.
struct CqFamily {
  Eigen::MatrixXd p_vu;
  std::vector<std::vector<DensityMatrix>> states;  // [v][u]

  int v_size() const { return static_cast<int>(p_vu.rows()); }
  int u_size() const { return static_cast<int>(p_vu.cols()); }
  Eigen::VectorXd p_u() const { return p_vu.colwise().sum().transpose(); }
  DensityMatrix sigma(int u) const;
  DensityMatrix rho_vus() const;
  DensityMatrix rho_markov() const;
};

CqFamily cq_family_from_strategy(const ActionModel& model, const Strategy& strategy);
CqFamily random_cq_family(int v_size, int u_size, const Register& s_reg, Rng& rng);

struct Lemma1Result {
  double empirical_mean = 0.0;
  double std_error = 0.0;
  double bound = 0.0;
  int trials = 0;
  bool pass = false;
};

/// Subcodebook-average divergence bound: sample `trials` subcodebooks of
/// size L from p(v | u), average the divergence of the empirical mixture
/// from sigma(u), and compare with the analytic bound.
Lemma1Result lemma1_check(const CqFamily& family, int u_index, const CodeParams& params, double alpha,
                          int trials, std::uint64_t seed);

struct Lemma2Result {
  double lhs_miss = 0.0;      // Tr[(1 - Pi) rho_VUB]
  double lhs_confusion = 0.0; // 2^{R+R_S} Tr[Pi (rho_VU (x) rho_B)]
  double rhs = 0.0;
  bool pass = false;
};

/// Projector bounds for the pinching test operator, evaluated exactly.
Lemma2Result lemma2_check(const DensityMatrix& rho_vub, const std::vector<std::string>& vu_names,
                          const std::vector<std::string>& b_names, const CodeParams& params, double alpha);
Lemma2Result lemma2_check(const JointStateBundle& bundle, const CodeParams& params, double alpha);

struct HayashiNagaokaResult {
  double min_eig_slack = 0.0;
  bool pass = false;
};

/// Operator inequality 1 - (S+T)^{-1/2} S (S+T)^{-1/2} <= 2(1-S) + 4T for
/// 0 <= S <= 1 and T >= 0, with the pseudo-inverse square root on supp(S+T).
HayashiNagaokaResult hayashi_nagaoka_check(const LabeledOperator& s, const LabeledOperator& t);

}  // namespace qadc
