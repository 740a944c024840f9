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

#include <cstdint>
#include <string>
#include <vector>

#include "qadc/channels.hpp"
#include "qadc/linalg.hpp"

namespace qadc {

/// The channel model: an action channel G -> (S, S0) producing the
/// environment and the transmitter side information, and a communication
/// channel (S, A) -> B. The environment subsystem of both channels must
/// agree by name and dimension.
class ActionModel {
 public:
  ActionModel(KrausChannel action_channel, KrausChannel comm_channel);

  const KrausChannel& action() const { return action_; }
  const KrausChannel& comm() const { return comm_; }

  const std::string& g_name() const { return action_.input()[0].name; }
  const std::string& s_name() const { return action_.output()[0].name; }
  const std::string& s0_name() const { return action_.output()[1].name; }
  const std::string& a_name() const { return comm_.input()[1].name; }
  const std::string& b_name() const { return comm_.output()[0].name; }

  int g_dim() const { return action_.input()[0].dim; }
  int s_dim() const { return action_.output()[0].dim; }
  int s0_dim() const { return action_.output()[1].dim; }
  int a_dim() const { return comm_.input()[1].dim; }
  int b_dim() const { return comm_.output()[0].dim; }

 private:
  KrausChannel action_;
  KrausChannel comm_;
};

/// Theorem-1 optimization variables: the classical auxiliary distribution
/// p_VU, the per-u action states on G, and the per-v encoding channels
/// S0 -> A.
class Strategy {
 public:
  Strategy(Eigen::MatrixXd p_vu, std::vector<DensityMatrix> action_states,
           std::vector<KrausChannel> encoders);

  int v_size() const { return static_cast<int>(p_vu_.rows()); }
  int u_size() const { return static_cast<int>(p_vu_.cols()); }
  const Eigen::MatrixXd& p_vu() const { return p_vu_; }
  Eigen::VectorXd p_u() const { return p_vu_.colwise().sum().transpose(); }
  /// p(v | u); throws BadDistribution when u has no mass.
  Eigen::VectorXd p_v_given_u(int u) const;
  const std::vector<DensityMatrix>& action_states() const { return action_states_; }
  const std::vector<KrausChannel>& encoders() const { return encoders_; }

 private:
  Eigen::MatrixXd p_vu_;
  std::vector<DensityMatrix> action_states_;
  std::vector<KrausChannel> encoders_;
};

/// The joint states of Theorem 1 assembled from a model and a strategy,
/// with the per-(v,u) conditional channel outputs kept for the one-shot
/// machinery.
struct JointStateBundle {
  DensityMatrix rho_vusa;   // on (V, U, S, A)
  DensityMatrix rho_vub;    // on (V, U, B)
  DensityMatrix rho_vus;    // on (V, U, S)
  DensityMatrix rho_markov; // sum_u p_U(u) rho_V^u (x) |u><u| (x) sigma_S^u
  std::vector<DensityMatrix> sigma_ss0_per_u;
  std::vector<DensityMatrix> sigma_s_per_u;
  std::vector<std::vector<DensityMatrix>> rho_b_vu;  // [v][u], on B
  Eigen::MatrixXd p_vu;
  std::string s_name, b_name;
};

ActionModel parse_model_checked(KrausChannel action_channel, KrausChannel comm_channel);

JointStateBundle assemble(const ActionModel& model, const Strategy& strategy);

struct RateReport {
  double r_low = 0.0;
  double i_vub = 0.0;
  double i_vs_given_u = 0.0;
  std::string strategy_digest;
  std::string model_digest;
};

RateReport achievable_rate(const JointStateBundle& bundle);

struct OptimizerConfig {
  int restarts = 16;
  int iterations = 40;
  std::uint64_t seed = 0;
  int workers = 1;
  double initial_step = 0.3;
  int encoder_env_dim = 0;  // 0: min(dim(S0) * dim(A), 4)
};

struct OptimizeResult {
  Strategy strategy;
  RateReport report;
  /// Best objective after each iteration of the winning restart
  /// (nondecreasing by construction).
  std::vector<double> history;
  int winning_restart = -1;
};

/// Derivative-free maximization of the achievable rate over strategies with
/// auxiliary sizes |V|, |U|: projected pattern search on the p_VU simplex,
/// random-direction line search on purification vectors for the action
/// states, and perturbed re-orthonormalized Stinespring isometries for the
/// encoders. Seeded restarts run independently; the result is deterministic
/// in (seed, dims, model) regardless of worker count, and never worse than
/// the best initial candidate.
OptimizeResult optimize_rate(const ActionModel& model, int v_size, int u_size,
                             const OptimizerConfig& config);

}  // namespace qadc
