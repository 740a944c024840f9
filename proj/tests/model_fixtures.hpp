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

#include "qadc/oneshot.hpp"
#include "qadc/rate.hpp"

namespace qadc::testing {

/// Channel (S, A) -> B that discards the environment and forwards the
/// transmission: Kraus K_s = <s| (x) I.
inline KrausChannel discard_env_channel(int s_dim, int a_dim, const std::string& s = "S",
                                        const std::string& a = "A", const std::string& b = "B") {
  Register in = Register::single(s, s_dim).concat(Register::single(a, a_dim));
  Register out = Register::single(b, a_dim);
  std::vector<Matrix> kraus;
  for (int sv = 0; sv < s_dim; ++sv) {
    Matrix k = Matrix::Zero(a_dim, s_dim * a_dim);
    for (int av = 0; av < a_dim; ++av) k(av, sv * a_dim + av) = 1.0;
    kraus.push_back(std::move(k));
  }
  return {in, out, std::move(kraus)};
}

/// G of dimension 4 relabeled as (S, S0) qubits; the comm channel ignores S
/// and forwards A. The analytic optimum at |V| = 1, |U| = 2 is one bit via
/// orthogonal side-information states.
inline ActionModel identity_qubit_model() {
  Register g = Register::single("G", 4);
  Register out = Register::single("S", 2).concat(Register::single("S0", 2));
  return {KrausChannel::identity(g, out), discard_env_channel(2, 2)};
}

inline ActionModel depolarizing_qubit_model() {
  Register g = Register::single("G", 4);
  Register out = Register::single("S", 2).concat(Register::single("S0", 2));
  Register comm_in = Register::single("S", 2).concat(Register::single("A", 2));
  return {KrausChannel::identity(g, out),
          KrausChannel::completely_depolarizing(comm_in, Register::single("B", 2))};
}

inline Strategy identity_qubit_strategy() {
  Eigen::MatrixXd p(1, 2);
  p << 0.5, 0.5;
  Register g = Register::single("G", 4);
  std::vector<DensityMatrix> states;
  for (int u = 0; u < 2; ++u) {
    Matrix m = Matrix::Zero(4, 4);
    m(u, u) = 1.0;  // |0>_S (x) |u>_S0
    states.emplace_back(g, std::move(m));
  }
  std::vector<KrausChannel> encoders = {
      KrausChannel::identity(Register::single("S0", 2), Register::single("A", 2))};
  return {p, std::move(states), std::move(encoders)};
}

/// All-diagonal binary action-dependent instance. Every matrix is diagonal,
/// so the joint distribution factorizes classically.
struct ClassicalInstance {
  // p(s|g), p(s0|s), p(b|s xor a effectively), p(a|s0; v), p(g|u)
  double s_given_g = 0.9;
  double s0_given_s = 0.85;
  double b_correct = 0.9;
  double a_follow[2] = {0.8, 0.25};  // P(a = s0 | v): v=0 follows, v=1 mostly flips
  double g_one[2] = {0.3, 0.6};      // P(g = 1 | u)
  Eigen::MatrixXd p_vu = (Eigen::MatrixXd(2, 2) << 0.3, 0.2, 0.25, 0.25).finished();

  ActionModel model() const {
    Register g = Register::single("G", 2);
    Register ss0 = Register::single("S", 2).concat(Register::single("S0", 2));
    Eigen::MatrixXd t_action(4, 2);
    for (int gv = 0; gv < 2; ++gv)
      for (int s = 0; s < 2; ++s)
        for (int s0 = 0; s0 < 2; ++s0) {
          double ps = s == gv ? s_given_g : 1.0 - s_given_g;
          double ps0 = s0 == s ? s0_given_s : 1.0 - s0_given_s;
          t_action(s * 2 + s0, gv) = ps * ps0;
        }
    Register sa = Register::single("S", 2).concat(Register::single("A", 2));
    Eigen::MatrixXd t_comm(2, 4);
    for (int s = 0; s < 2; ++s)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          t_comm(b, s * 2 + a) = b == (a ^ s) ? b_correct : 1.0 - b_correct;
    return {KrausChannel::classical_stochastic(g, ss0, t_action),
            KrausChannel::classical_stochastic(sa, Register::single("B", 2), t_comm)};
  }

  Strategy strategy() const {
    std::vector<DensityMatrix> states;
    Register g = Register::single("G", 2);
    for (int u = 0; u < 2; ++u) {
      Matrix m = Matrix::Zero(2, 2);
      m(0, 0) = 1.0 - g_one[u];
      m(1, 1) = g_one[u];
      states.emplace_back(g, std::move(m));
    }
    std::vector<KrausChannel> encoders;
    for (int v = 0; v < 2; ++v) {
      Eigen::MatrixXd t(2, 2);
      for (int s0 = 0; s0 < 2; ++s0)
        for (int a = 0; a < 2; ++a) t(a, s0) = a == s0 ? a_follow[v] : 1.0 - a_follow[v];
      encoders.push_back(KrausChannel::classical_stochastic(Register::single("S0", 2),
                                                            Register::single("A", 2), t));
    }
    return {p_vu, std::move(states), std::move(encoders)};
  }

  /// Exhaustive-summation rate: I(VU;B) - I(V;S|U) over the classical joint.
  double brute_force_rate() const {
    double joint[2][2][2][2][2][2][2] = {};  // v u g s s0 a b
    for (int v = 0; v < 2; ++v)
      for (int u = 0; u < 2; ++u)
        for (int gv = 0; gv < 2; ++gv)
          for (int s = 0; s < 2; ++s)
            for (int s0 = 0; s0 < 2; ++s0)
              for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                  double pg = gv == 1 ? g_one[u] : 1.0 - g_one[u];
                  double ps = s == gv ? s_given_g : 1.0 - s_given_g;
                  double ps0 = s0 == s ? s0_given_s : 1.0 - s0_given_s;
                  double pa = a == s0 ? a_follow[v] : 1.0 - a_follow[v];
                  double pb = b == (a ^ s) ? b_correct : 1.0 - b_correct;
                  joint[v][u][gv][s][s0][a][b] = p_vu(v, u) * pg * ps * ps0 * pa * pb;
                }

    double p_vub[2][2][2] = {}, p_vus[2][2][2] = {}, p_b[2] = {}, p_us[2][2] = {}, p_uv[2][2] = {},
           p_u[2] = {};
    for (int v = 0; v < 2; ++v)
      for (int u = 0; u < 2; ++u)
        for (int gv = 0; gv < 2; ++gv)
          for (int s = 0; s < 2; ++s)
            for (int s0 = 0; s0 < 2; ++s0)
              for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                  double p = joint[v][u][gv][s][s0][a][b];
                  p_vub[v][u][b] += p;
                  p_vus[v][u][s] += p;
                  p_b[b] += p;
                  p_us[u][s] += p;
                  p_uv[u][v] += p;
                  p_u[u] += p;
                }

    double i_vub = 0.0;
    for (int v = 0; v < 2; ++v)
      for (int u = 0; u < 2; ++u)
        for (int b = 0; b < 2; ++b)
          if (p_vub[v][u][b] > 0)
            i_vub += p_vub[v][u][b] * std::log2(p_vub[v][u][b] / (p_uv[u][v] * p_b[b]));

    double i_vs_u = 0.0;
    for (int v = 0; v < 2; ++v)
      for (int u = 0; u < 2; ++u)
        for (int s = 0; s < 2; ++s)
          if (p_vus[v][u][s] > 0)
            i_vs_u += p_vus[v][u][s] *
                      std::log2(p_u[u] * p_vus[v][u][s] / (p_uv[u][v] * p_us[u][s]));
    return i_vub - i_vs_u;
  }
};

/// Orthogonal-action design: eight action values indexed by u, a trivial
/// environment, and a noiseless channel, so distinct u codewords give
/// orthogonal outputs. Exact per-codebook error is 0 when u(1) != u(2) and
/// 1/2 on a collision.
inline ActionModel orthogonal_actions_model() {
  Register g = Register::single("G", 8);
  Register out = Register::single("S", 1).concat(Register::single("S0", 8));
  Register comm_in = Register::single("S", 1).concat(Register::single("A", 8));
  return {KrausChannel::identity(g, out),
          KrausChannel::identity(comm_in, Register::single("B", 8))};
}

inline Strategy orthogonal_actions_strategy() {
  Eigen::MatrixXd p = Eigen::MatrixXd::Constant(1, 8, 1.0 / 8.0);
  Register g = Register::single("G", 8);
  std::vector<DensityMatrix> states;
  for (int u = 0; u < 8; ++u) {
    Matrix m = Matrix::Zero(8, 8);
    m(u, u) = 1.0;
    states.emplace_back(g, std::move(m));
  }
  std::vector<KrausChannel> encoders = {
      KrausChannel::identity(Register::single("S0", 8), Register::single("A", 8))};
  return {p, std::move(states), std::move(encoders)};
}

}  // namespace qadc::testing
