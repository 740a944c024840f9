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

#include <string>
#include <vector>

#include "qadc/linalg.hpp"

namespace qadc {

/// Raw channel data as parsed from disk: Kraus operators plus input/output
/// registers, with no completeness assumed. Diagnostics run on this form.
struct ChannelData {
  Register input;
  Register output;
  std::vector<Matrix> kraus;
};

/// Trace-preservation residual: max-abs of (sum K^dag K - I).
double tp_residual(const ChannelData& ch);
/// Complete-positivity residual: max(0, -min eigenvalue of the Choi matrix).
double cp_residual(const ChannelData& ch);

/// Choi matrix sum_ij |i><j| (x) ch(|i><j|) on register (input copy, output).
/// Input subsystems are renamed with an "_in" suffix.
LabeledOperator choi(const ChannelData& ch);

/// A CPTP map as a finite Kraus family with declared input/output registers.
/// Construction enforces completeness within tol::isometry.
class KrausChannel {
 public:
  KrausChannel(Register input, Register output, std::vector<Matrix> kraus);
  static KrausChannel from_data(ChannelData data);

  const Register& input() const { return data_.input; }
  const Register& output() const { return data_.output; }
  const std::vector<Matrix>& kraus() const { return data_.kraus; }
  const ChannelData& data() const { return data_; }
  LabeledOperator choi() const { return qadc::choi(data_); }

  // Named examples.
  static KrausChannel identity(const Register& reg);
  static KrausChannel identity(const Register& in, const Register& out);
  static KrausChannel completely_depolarizing(const Register& in, const Register& out);
  static KrausChannel dephasing(const Register& reg, double strength = 1.0);
  /// Classical stochastic map: column g of `transition` is the distribution of
  /// the output given basis input g. Off-diagonal input coherences are killed.
  static KrausChannel classical_stochastic(const Register& in, const Register& out,
                                           const Eigen::MatrixXd& transition);
  /// Canonical embedding/truncation between dimensions: an isometry when the
  /// output is at least as large, a block partition channel otherwise.
  static KrausChannel embedding(const Register& in, const Register& out);

 private:
  explicit KrausChannel(ChannelData data);
  ChannelData data_;
};

/// Apply the channel to the named sub-register of x. The channel's input
/// subsystems must appear contiguously in x's register (matched by name);
/// all other subsystems pass through identically.
LabeledOperator apply(const KrausChannel& ch, const LabeledOperator& x);
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

struct StinespringIsometry {
  Matrix isometry;    // (output dim * env dim) x (input dim)
  Register input;
  Register output;    // channel output register
  Register env;       // single appended environment subsystem
  Register output_with_env() const { return output.concat(env); }
};

/// V = sum_j K_j (x) |j>_E. Tracing out E after conjugation by V recovers
/// the Kraus action.
StinespringIsometry kraus_to_stinespring(const KrausChannel& ch, const std::string& env_name);

/// A pure state on system+reference subsystems whose reference-marginal trace
/// reproduces a given state on the system.
struct Purification {
  Vector vec;
  Register reg;
  std::vector<std::string> system;
  std::vector<std::string> reference;

  long reference_dim() const;
  DensityMatrix system_marginal() const;
  LabeledOperator projector() const;  // |v><v| on reg
};

/// Canonical purification: reference dimension equals the rank of rho,
/// amplitudes are sqrt of eigenvalues in descending order, and each
/// eigenvector's first nonzero entry is made real positive.
Purification purify(const DensityMatrix& rho, const std::string& reference_name);

/// Uhlmann isometry from the reference of phi into the reference of psi such
/// that F(psi, (I (x) W) phi) equals the fidelity of the system marginals.
/// Built from the SVD polar part of the purification overlap, completed on
/// the orthogonal complement by Gram-Schmidt over standard basis vectors in
/// index order.
Matrix uhlmann_isometry(const Purification& phi, const Purification& psi);

/// Overlap <psi| (I (x) W) |phi>; |overlap| is the achieved fidelity.
Complex uhlmann_overlap(const Purification& phi, const Purification& psi, const Matrix& w);

/// The per-message purified encoding: the action purification, its image
/// under the dilated action channel, the equal-amplitude superposition over
/// the subcodebook with an index subsystem L, and the isometry on the side
/// information realizing it.
struct PurifiedEncoding {
  Purification psi;           // on (S, S0, K1, K0)
  Purification superposed;    // phi, on (S, A, T, K1, K0, L)
  std::string index_register; // name of the L subsystem
  Matrix uhlmann;             // S0 -> (A, T, L), bases in register order
  Vector encoded;             // (I (x) uhlmann) psi, on (S, A, T, L, K1, K0)
  Register encoded_reg;
  std::vector<DensityMatrix> rho_s_per_index;  // Tr over everything but S, per l

  double purified_distance_lhs = 0.0;  // P(phi, W psi W^dag)
  double purified_distance_rhs = 0.0;  // P(avg_l rho_S^(l), sigma_S)
};

/// Build the purified encoding for one message: `sigma_g` is the action state
/// for the message's action index and `encoders` lists the encoding channel of
/// each subcodebook entry (length = subcodebook size).
PurifiedEncoding build_purified_encoding(const KrausChannel& action_channel, const DensityMatrix& sigma_g,
                                         const std::vector<KrausChannel>& encoders);

}  // namespace qadc
