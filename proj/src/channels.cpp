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

#include "qadc/channels.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "qadc/divergences.hpp"

namespace qadc {
namespace {

struct MultiIndex {
  std::vector<int> dims;
  std::vector<long> strides;

  explicit MultiIndex(std::vector<int> d) : dims(std::move(d)), strides(dims.size(), 1) {
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
      strides[i] = strides[i + 1] * dims[i + 1];
  }
  long compose(const std::vector<int>& digits) const {
    long idx = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) idx += digits[i] * strides[i];
    return idx;
  }
  void decompose(long idx, std::vector<int>& digits) const {
    for (std::size_t i = 0; i < dims.size(); ++i) {
      digits[i] = static_cast<int>(idx / strides[i]);
      idx %= strides[i];
    }
  }
};

Vector permute_vector(const Vector& vec, const Register& reg, const std::vector<std::string>& order) {
  if (order.size() != reg.size()) throw BadPartition("vector permutation must list every subsystem");
  std::vector<std::size_t> src_pos;
  for (const auto& n : order) {
    auto p = reg.find(n);
    if (!p) throw UnknownSubsystem("no subsystem named '" + n + "'");
    src_pos.push_back(*p);
  }
  std::vector<Subsystem> subs;
  for (auto p : src_pos) subs.push_back(reg[p]);
  Register out_reg{subs};

  MultiIndex src(reg.dims());
  MultiIndex dst(out_reg.dims());
  Vector out(vec.size());
  std::vector<int> sd(reg.size()), dd(reg.size());
  for (long i = 0; i < vec.size(); ++i) {
    src.decompose(i, sd);
    for (std::size_t k = 0; k < src_pos.size(); ++k) dd[k] = sd[src_pos[k]];
    out(dst.compose(dd)) = vec(i);
  }
  return out;
}

/// Position of the channel input names as a contiguous run in reg; checks dims.
std::size_t find_contiguous(const Register& reg, const Register& target) {
  if (target.size() == 0 || target.size() > reg.size())
    throw RegisterMismatch("target register " + to_string(target) + " not contained in " + to_string(reg));
  for (std::size_t p = 0; p + target.size() <= reg.size(); ++p) {
    bool match = true;
    for (std::size_t k = 0; k < target.size(); ++k) {
      if (reg[p + k].name != target[k].name || reg[p + k].dim != target[k].dim) {
        match = false;
        break;
      }
    }
    if (match) return p;
  }
  throw RegisterMismatch("register " + to_string(reg) + " does not contain " + to_string(target) +
                         " as a contiguous sub-register");
}

struct BlockSplit {
  long left = 1, mid_in = 1, right = 1;
};

BlockSplit split_dims(const Register& reg, std::size_t pos, std::size_t count) {
  BlockSplit s;
  for (std::size_t i = 0; i < pos; ++i) s.left *= reg[i].dim;
  for (std::size_t i = pos; i < pos + count; ++i) s.mid_in *= reg[i].dim;
  for (std::size_t i = pos + count; i < reg.size(); ++i) s.right *= reg[i].dim;
  return s;
}

Register splice_register(const Register& reg, std::size_t pos, std::size_t count, const Register& repl) {
  std::vector<Subsystem> subs;
  for (std::size_t i = 0; i < pos; ++i) subs.push_back(reg[i]);
  for (const auto& s : repl.subsystems()) subs.push_back(s);
  for (std::size_t i = pos + count; i < reg.size(); ++i) subs.push_back(reg[i]);
  return Register(std::move(subs));  // throws DuplicateSubsystem on collisions
}

/// out[(l, o, r)] = sum_i V(o, i) in[(l, i, r)]
Vector apply_block_isometry(const Vector& in, const BlockSplit& s, const Matrix& v) {
  long mid_out = v.rows();
  Vector out = Vector::Zero(s.left * mid_out * s.right);
  for (long l = 0; l < s.left; ++l)
    for (long o = 0; o < mid_out; ++o)
      for (long r = 0; r < s.right; ++r) {
        Complex acc = 0.0;
        for (long i = 0; i < s.mid_in; ++i) acc += v(o, i) * in((l * s.mid_in + i) * s.right + r);
        out((l * mid_out + o) * s.right + r) = acc;
      }
  return out;
}

Matrix lift_block(const Matrix& k, const BlockSplit& s) {
  Matrix left = Matrix::Identity(s.left, s.left);
  Matrix right = Matrix::Identity(s.right, s.right);
  return kron(kron(left, k), right);
}

/// Gram-Schmidt completion of an orthonormal column set to `target` columns,
/// sweeping standard basis vectors in index order.
Matrix complete_columns(const Matrix& cols, long target) {
  long n = cols.rows();
  Matrix out(n, target);
  long have = cols.cols();
  out.leftCols(have) = cols;
  for (long e = 0; e < n && have < target; ++e) {
    Vector v = Vector::Zero(n);
    v(e) = 1.0;
    for (long c = 0; c < have; ++c) v -= out.col(c).dot(v) * out.col(c);
    double norm = v.norm();
    if (norm > 1e-6) {
      out.col(have) = v / norm;
      ++have;
    }
  }
  if (have < target) throw ValidationError("failed to complete orthonormal basis");
  return out;
}

std::vector<std::string> in_register_order(const Register& reg, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& s : reg.subsystems())
    if (std::find(names.begin(), names.end(), s.name) != names.end()) out.push_back(s.name);
  if (out.size() != names.size()) throw UnknownSubsystem("purification names not all present in register");
  return out;
}

Purification make_purification(Vector vec, Register reg, const std::vector<std::string>& system_names) {
  Purification p;
  p.system = in_register_order(reg, system_names);
  std::vector<std::string> reference;
  for (const auto& s : reg.subsystems())
    if (std::find(p.system.begin(), p.system.end(), s.name) == p.system.end()) reference.push_back(s.name);
  p.reference = std::move(reference);
  p.vec = std::move(vec);
  p.reg = std::move(reg);
  return p;
}

/// Reshape a purification to a (system x reference) coefficient matrix, with
/// the system subsystems in the given order.
Matrix coefficient_matrix(const Purification& p, const std::vector<std::string>& sys_order) {
  std::vector<std::string> order = sys_order;
  order.insert(order.end(), p.reference.begin(), p.reference.end());
  Vector v = permute_vector(p.vec, p.reg, order);
  long r = p.reference_dim();
  long d = v.size() / r;
  Matrix m(d, r);
  for (long s = 0; s < d; ++s)
    for (long i = 0; i < r; ++i) m(s, i) = v(s * r + i);
  return m;
}

}  // namespace

double tp_residual(const ChannelData& ch) {
  long din = ch.input.dim();
  Matrix acc = Matrix::Zero(din, din);
  for (const auto& k : ch.kraus) acc += k.adjoint() * k;
  return (acc - Matrix::Identity(din, din)).cwiseAbs().maxCoeff();
}

double cp_residual(const ChannelData& ch) {
  return std::max(0.0, -min_eigenvalue(choi(ch).mat()));
}

LabeledOperator choi(const ChannelData& ch) {
  long din = ch.input.dim();
  long dout = ch.output.dim();
  Matrix c = Matrix::Zero(din * dout, din * dout);
  for (const auto& k : ch.kraus)
    for (long i = 0; i < din; ++i)
      for (long j = 0; j < din; ++j)
        c.block(i * dout, j * dout, dout, dout) += k.col(i) * k.col(j).adjoint();
  std::vector<Subsystem> subs;
  for (const auto& s : ch.input.subsystems()) subs.push_back({s.name + "_in", s.dim});
  Register reg = Register(subs).concat(ch.output);
  return {std::move(reg), std::move(c)};
}

KrausChannel::KrausChannel(ChannelData data) : data_(std::move(data)) {
  if (data_.kraus.empty()) throw ValidationError("channel needs at least one Kraus operator");
  for (const auto& k : data_.kraus)
    if (k.rows() != data_.output.dim() || k.cols() != data_.input.dim())
      throw ValidationError("Kraus operator shape does not match channel registers");
  double res = tp_residual(data_);
  if (res > tol::isometry) {
    std::ostringstream msg;
    msg << "trace-preservation residual " << res;
    throw ValidationError(msg.str());
  }
}

KrausChannel::KrausChannel(Register input, Register output, std::vector<Matrix> kraus)
    : KrausChannel(ChannelData{std::move(input), std::move(output), std::move(kraus)}) {}

KrausChannel KrausChannel::from_data(ChannelData data) { return KrausChannel(std::move(data)); }

KrausChannel KrausChannel::identity(const Register& reg) { return identity(reg, reg); }

KrausChannel KrausChannel::identity(const Register& in, const Register& out) {
  if (in.dim() != out.dim())
    throw RegisterMismatch("identity channel requires equal input/output dimensions");
  return {in, out, {Matrix::Identity(in.dim(), in.dim())}};
}

KrausChannel KrausChannel::completely_depolarizing(const Register& in, const Register& out) {
  long din = in.dim(), dout = out.dim();
  std::vector<Matrix> kraus;
  kraus.reserve(din * dout);
  double amp = 1.0 / std::sqrt(static_cast<double>(dout));
  for (long o = 0; o < dout; ++o)
    for (long i = 0; i < din; ++i) {
      Matrix k = Matrix::Zero(dout, din);
      k(o, i) = amp;
      kraus.push_back(std::move(k));
    }
  return {in, out, std::move(kraus)};
}

KrausChannel KrausChannel::dephasing(const Register& reg, double strength) {
  long d = reg.dim();
  std::vector<Matrix> kraus;
  if (d == 2) {
    Matrix z = Matrix::Identity(2, 2);
    z(1, 1) = -1.0;
    kraus.push_back(std::sqrt(1.0 - strength / 2.0) * Matrix::Identity(2, 2));
    kraus.push_back(std::sqrt(strength / 2.0) * z);
  } else {
    kraus.push_back(std::sqrt(1.0 - strength) * Matrix::Identity(d, d));
    for (long i = 0; i < d; ++i) {
      Matrix k = Matrix::Zero(d, d);
      k(i, i) = std::sqrt(strength);
      kraus.push_back(std::move(k));
    }
  }
  return {reg, reg, std::move(kraus)};
}

KrausChannel KrausChannel::classical_stochastic(const Register& in, const Register& out,
                                                const Eigen::MatrixXd& transition) {
  long din = in.dim(), dout = out.dim();
  if (transition.rows() != dout || transition.cols() != din)
    throw ValidationError("transition matrix shape does not match registers");
  for (long i = 0; i < din; ++i) {
    double col = transition.col(i).sum();
    if (std::abs(col - 1.0) > 1e-12)
      throw ValidationError("transition matrix columns must sum to 1");
  }
  std::vector<Matrix> kraus;
  for (long o = 0; o < dout; ++o)
    for (long i = 0; i < din; ++i) {
      if (transition(o, i) <= 0.0) continue;
      Matrix k = Matrix::Zero(dout, din);
      k(o, i) = std::sqrt(transition(o, i));
      kraus.push_back(std::move(k));
    }
  return {in, out, std::move(kraus)};
}

KrausChannel KrausChannel::embedding(const Register& in, const Register& out) {
  long din = in.dim(), dout = out.dim();
  std::vector<Matrix> kraus;
  if (dout >= din) {
    Matrix v = Matrix::Zero(dout, din);
    v.topLeftCorner(din, din) = Matrix::Identity(din, din);
    kraus.push_back(std::move(v));
  } else {
    long blocks = (din + dout - 1) / dout;
    for (long b = 0; b < blocks; ++b) {
      Matrix k = Matrix::Zero(dout, din);
      for (long r = 0; r < dout && b * dout + r < din; ++r) k(r, b * dout + r) = 1.0;
      kraus.push_back(std::move(k));
    }
  }
  return {in, out, std::move(kraus)};
}

LabeledOperator apply(const KrausChannel& ch, const LabeledOperator& x) {
  std::size_t pos = find_contiguous(x.reg(), ch.input());
  BlockSplit s = split_dims(x.reg(), pos, ch.input().size());
  Register out_reg = splice_register(x.reg(), pos, ch.input().size(), ch.output());
  Matrix out = Matrix::Zero(out_reg.dim(), out_reg.dim());
  for (const auto& k : ch.kraus()) {
    Matrix lifted = lift_block(k, s);
    out += lifted * x.mat() * lifted.adjoint();
  }
  return {std::move(out_reg), std::move(out)};
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply(ch, rho.op()));
}

StinespringIsometry kraus_to_stinespring(const KrausChannel& ch, const std::string& env_name) {
  long din = ch.input().dim();
  long dout = ch.output().dim();
  long denv = static_cast<long>(ch.kraus().size());
  Matrix v = Matrix::Zero(dout * denv, din);
  for (long e = 0; e < denv; ++e)
    for (long o = 0; o < dout; ++o)
      for (long i = 0; i < din; ++i) v(o * denv + e, i) = ch.kraus()[e](o, i);
  StinespringIsometry st;
  st.isometry = std::move(v);
  st.input = ch.input();
  st.output = ch.output();
  st.env = Register::single(env_name, static_cast<int>(denv));
  return st;
}

long Purification::reference_dim() const {
  long d = 1;
  for (const auto& n : reference) d *= reg[*reg.find(n)].dim;
  return d;
}

DensityMatrix Purification::system_marginal() const {
  return DensityMatrix(partial_trace(projector(), system));
}

LabeledOperator Purification::projector() const {
  return {reg, Matrix(vec * vec.adjoint())};
}

Purification purify(const DensityMatrix& rho, const std::string& reference_name) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho.mat() + rho.mat().adjoint()));
  const auto& vals = es.eigenvalues();
  long d = rho.dim();
  double tau = tol::support_rel * std::max(vals(d - 1), 0.0);

  std::vector<long> kept;  // descending
  for (long i = d - 1; i >= 0; --i)
    if (vals(i) > tau) kept.push_back(i);
  long r = std::max<long>(1, static_cast<long>(kept.size()));

  Register reg = rho.reg().concat(Register::single(reference_name, static_cast<int>(r)));
  Vector vec = Vector::Zero(d * r);
  for (long idx = 0; idx < static_cast<long>(kept.size()); ++idx) {
    Vector v = es.eigenvectors().col(kept[idx]);
    for (long s = 0; s < d; ++s) {
      if (std::abs(v(s)) > 1e-9) {
        v *= std::conj(v(s)) / std::abs(v(s));
        break;
      }
    }
    double amp = std::sqrt(vals(kept[idx]));
    for (long s = 0; s < d; ++s) vec(s * r + idx) = amp * v(s);
  }
  return make_purification(std::move(vec), std::move(reg), rho.reg().names());
}

Matrix uhlmann_isometry(const Purification& phi, const Purification& psi) {
  std::set<std::string> a(phi.system.begin(), phi.system.end());
  std::set<std::string> b(psi.system.begin(), psi.system.end());
  if (a != b) throw RegisterMismatch("purifications must share the same system subsystems");
  for (const auto& n : phi.system)
    if (phi.reg[*phi.reg.find(n)].dim != psi.reg[*psi.reg.find(n)].dim)
      throw RegisterMismatch("system subsystem '" + n + "' has mismatched dimensions");

  long r1 = phi.reference_dim();
  long r2 = psi.reference_dim();
  if (r1 > r2)
    throw ReferenceTooLarge("reference of the first purification exceeds that of the second");

  Matrix cphi = coefficient_matrix(phi, phi.system);
  Matrix cpsi = coefficient_matrix(psi, phi.system);
  Matrix overlap = cphi.transpose() * cpsi.conjugate();  // r1 x r2

  Eigen::JacobiSVD<Matrix> svd(overlap, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = sv.size() > 0 ? 1e-12 * sv(0) : 0.0;
  long rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;

  Matrix u = complete_columns(svd.matrixU().leftCols(rank), r1);
  Matrix v = complete_columns(svd.matrixV().leftCols(rank), r1);
  return v * u.adjoint();  // r2 x r1
}

Complex uhlmann_overlap(const Purification& phi, const Purification& psi, const Matrix& w) {
  Matrix cphi = coefficient_matrix(phi, phi.system);
  Matrix cpsi = coefficient_matrix(psi, phi.system);
  Matrix overlap = cphi.transpose() * cpsi.conjugate();
  return (w * overlap).trace();
}

PurifiedEncoding build_purified_encoding(const KrausChannel& action_channel, const DensityMatrix& sigma_g,
                                         const std::vector<KrausChannel>& encoders) {
  if (action_channel.input().size() != 1 || action_channel.output().size() != 2)
    throw RegisterMismatch("action channel must map one subsystem to (environment, side information)");
  if (encoders.empty()) throw ValidationError("need at least one encoder");
  if (!(sigma_g.reg() == action_channel.input()))
    throw RegisterMismatch("action state register does not match the action channel input");

  const std::string s_name = action_channel.output()[0].name;
  const std::string s0_name = action_channel.output()[1].name;
  const Register s0_reg = Register::single(s0_name, action_channel.output()[1].dim);
  for (const auto& enc : encoders) {
    if (!(enc.input() == s0_reg))
      throw RegisterMismatch("encoder input register must be the side-information subsystem");
    if (!(enc.input() == encoders.front().input()) || !(enc.output() == encoders.front().output()))
      throw RegisterMismatch("all encoders must share input/output registers");
  }
  const std::string a_name = encoders.front().output()[0].name;
  for (const char* reserved : {"K0", "K1", "T", "L"})
    if (action_channel.input().has(reserved) || action_channel.output().has(reserved) ||
        encoders.front().output().has(reserved))
      throw RegisterMismatch(std::string("subsystem name '") + reserved + "' is reserved for the encoder");

  PurifiedEncoding enc;

  Purification p0 = purify(sigma_g, "K0");
  StinespringIsometry t_dil = kraus_to_stinespring(action_channel, "K1");
  {
    std::size_t pos = find_contiguous(p0.reg, action_channel.input());
    BlockSplit s = split_dims(p0.reg, pos, 1);
    Register reg = splice_register(p0.reg, pos, 1, t_dil.output_with_env());
    Vector psi_vec = apply_block_isometry(p0.vec, s, t_dil.isometry);
    enc.psi = make_purification(std::move(psi_vec), std::move(reg), {s_name, "K1", "K0"});
  }

  const long l_count = static_cast<long>(encoders.size());
  long t_dim = 0;
  for (const auto& e : encoders) t_dim = std::max<long>(t_dim, static_cast<long>(e.kraus().size()));

  // Per-entry encoded pure states chi_l on (S, A, T, K1, K0); all dilations
  // are padded to a common environment dimension so they superpose.
  std::vector<Vector> chi(l_count);
  Register chi_reg;
  {
    std::size_t pos = *enc.psi.reg.find(s0_name);
    BlockSplit s = split_dims(enc.psi.reg, pos, 1);
    Register at_reg = encoders.front().output().concat(Register::single("T", static_cast<int>(t_dim)));
    chi_reg = splice_register(enc.psi.reg, pos, 1, at_reg);
    long da = encoders.front().output().dim();
    long ds0 = s0_reg.dim();
    for (long l = 0; l < l_count; ++l) {
      Matrix v = Matrix::Zero(da * t_dim, ds0);
      const auto& kraus = encoders[l].kraus();
      for (long e = 0; e < static_cast<long>(kraus.size()); ++e)
        for (long o = 0; o < da; ++o)
          for (long i = 0; i < ds0; ++i) v(o * t_dim + e, i) = kraus[e](o, i);
      chi[l] = apply_block_isometry(enc.psi.vec, s, v);
    }
  }

  Register phi_reg = chi_reg.concat(Register::single("L", static_cast<int>(l_count)));
  Vector phi_vec = Vector::Zero(phi_reg.dim());
  double amp = 1.0 / std::sqrt(static_cast<double>(l_count));
  for (long l = 0; l < l_count; ++l)
    for (long x = 0; x < chi[l].size(); ++x) phi_vec(x * l_count + l) = amp * chi[l](x);
  enc.superposed = make_purification(std::move(phi_vec), phi_reg, {s_name, "K1", "K0"});
  enc.index_register = "L";

  enc.uhlmann = uhlmann_isometry(enc.psi, enc.superposed);

  {
    std::size_t pos = *enc.psi.reg.find(s0_name);
    BlockSplit s = split_dims(enc.psi.reg, pos, 1);
    Register atl = encoders.front().output()
                       .concat(Register::single("T", static_cast<int>(t_dim)))
                       .concat(Register::single("L", static_cast<int>(l_count)));
    enc.encoded_reg = splice_register(enc.psi.reg, pos, 1, atl);
    enc.encoded = apply_block_isometry(enc.psi.vec, s, enc.uhlmann);
  }

  // Both sides of the purified-distance identity. The left side compares the
  // superposition with the isometry-encoded state; the right side compares the
  // subcodebook-averaged environment marginal with the action marginal.
  {
    std::vector<std::string> enc_order = enc.encoded_reg.names();
    Vector phi_perm = permute_vector(enc.superposed.vec, enc.superposed.reg, enc_order);
    double f = std::min(1.0, std::abs(phi_perm.dot(enc.encoded)));
    enc.purified_distance_lhs = std::sqrt(std::max(0.0, 1.0 - f * f));
  }
  {
    Matrix tau_acc;
    for (long l = 0; l < l_count; ++l) {
      LabeledOperator proj{chi_reg, Matrix(chi[l] * chi[l].adjoint())};
      DensityMatrix rho_s = DensityMatrix(partial_trace(proj, {s_name}));
      if (l == 0)
        tau_acc = rho_s.mat();
      else
        tau_acc += rho_s.mat();
      enc.rho_s_per_index.push_back(std::move(rho_s));
    }
    DensityMatrix tau{enc.rho_s_per_index.front().reg(), Matrix(tau_acc / static_cast<double>(l_count))};
    DensityMatrix sigma_s = DensityMatrix(partial_trace(enc.psi.projector(), {s_name}));
    enc.purified_distance_rhs = purified_distance(tau, sigma_s);
  }
  return enc;
}

}  // namespace qadc
