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

#include "qadc/oneshot.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "qadc/divergences.hpp"
#include "qadc/random_states.hpp"
#include "qadc/rng.hpp"

namespace qadc {
namespace {

bool is_power_of_two(std::int64_t n) { return n >= 1 && (n & (n - 1)) == 0; }

double real_trace_product(const Matrix& a, const Matrix& b) {
  return std::real((a * b).trace());
}

void run_partitioned(int jobs, int workers, const std::function<void(int)>& fn) {
  workers = std::max(1, std::min(workers, jobs));
  if (workers == 1) {
    for (int i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < jobs; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

int nu2_of(const Eigen::VectorXd& p_u, const std::vector<DensityMatrix>& sigma_s) {
  int nu2 = 0;
  double tau = tol::support_rel;
  for (long u = 0; u < p_u.size(); ++u)
    if (p_u(u) > tau) nu2 = std::max(nu2, distinct_eigenvalue_count(sigma_s[u].op()));
  return nu2;
}

}  // namespace

CodeParams::CodeParams(std::int64_t m, std::int64_t l) : message_count(m), subcodebook_size(l) {
  if (!is_power_of_two(m) || !is_power_of_two(l))
    throw ValidationError("message count and subcodebook size must be powers of two");
}

Codebook sample_codebook(const Strategy& strategy, const CodeParams& params, std::uint64_t seed) {
  return sample_codebook(strategy.p_vu(), params, seed);
}

Codebook sample_codebook(const Eigen::MatrixXd& p_vu, const CodeParams& params, std::uint64_t seed) {
  const int nv = static_cast<int>(p_vu.rows());
  const int nu = static_cast<int>(p_vu.cols());
  std::vector<double> pu(nu, 0.0);
  for (int u = 0; u < nu; ++u) pu[u] = p_vu.col(u).sum();
  double total = 0.0;
  for (double w : pu) total += w;
  if (!(total > 0.0)) throw BadDistribution("p_U has no mass");

  Rng rng(seed);
  Codebook cb;
  cb.seed = seed;
  const long m_count = params.message_count;
  const long l_count = params.subcodebook_size;
  cb.u.resize(m_count);
  for (long m = 0; m < m_count; ++m) cb.u[m] = sample_discrete(pu, rng);
  cb.v.assign(m_count, std::vector<int>(l_count));
  for (long m = 0; m < m_count; ++m) {
    std::vector<double> pv(nv);
    for (int v = 0; v < nv; ++v) pv[v] = p_vu(v, cb.u[m]);
    for (long l = 0; l < l_count; ++l) cb.v[m][l] = sample_discrete(pv, rng);
  }
  return cb;
}

DecoderBasis::DecoderBasis(const JointStateBundle& bundle, const CodeParams& params)
    : pi_vub(LabeledOperator::zero(bundle.rho_vub.reg())) {
  const DensityMatrix& rho_vub = bundle.rho_vub;
  LabeledOperator rho_vu = partial_trace(rho_vub.op(), {"V", "U"});
  LabeledOperator rho_b = partial_trace(rho_vub.op(), {bundle.b_name});
  LabeledOperator product = tensor(rho_vu, rho_b);

  LabeledOperator pinched = pinch(product, rho_vub.op());
  double scale = std::pow(2.0, params.total_rate());
  pi_vub = order_projector(pinched, product.with_matrix(Matrix(scale * product.mat())));
  nu1 = distinct_eigenvalue_count(product);

  v_size = static_cast<int>(bundle.p_vu.rows());
  u_size = static_cast<int>(bundle.p_vu.cols());
  b_reg = rho_vub.reg().keep({bundle.b_name});
  long db = b_reg.dim();
  block.assign(v_size, std::vector<Matrix>(u_size));
  for (int v = 0; v < v_size; ++v)
    for (int u = 0; u < u_size; ++u) {
      long off = (static_cast<long>(v) * u_size + u) * db;
      block[v][u] = pi_vub.mat().block(off, off, db, db);
    }
}

DecoderPOVM build_decoder(const JointStateBundle& bundle, const Codebook& cb, const CodeParams& params) {
  return build_decoder(DecoderBasis(bundle, params), cb, params);
}

DecoderPOVM build_decoder(const DecoderBasis& basis, const Codebook& cb, const CodeParams& params) {
  const long m_count = params.message_count;
  const long l_count = params.subcodebook_size;
  long db = basis.b_reg.dim();

  Matrix gamma_sum = Matrix::Zero(db, db);
  for (long m = 0; m < m_count; ++m)
    for (long l = 0; l < l_count; ++l) gamma_sum += basis.block[cb.v[m][l]][cb.u[m]];

  LabeledOperator gamma_total{basis.b_reg, 0.5 * (gamma_sum + gamma_sum.adjoint())};
  Matrix inv_sqrt = support_power(gamma_total, -0.5).mat();

  DecoderPOVM povm{.beta = {},
                   .completion = LabeledOperator::identity(basis.b_reg),
                   .pi_vub = basis.pi_vub,
                   .nu1 = basis.nu1,
                   .trivial = gamma_total.mat().cwiseAbs().maxCoeff() < 1e-14};

  Matrix running = Matrix::Zero(db, db);
  povm.beta.resize(m_count);
  for (long m = 0; m < m_count; ++m) {
    povm.beta[m].reserve(l_count);
    for (long l = 0; l < l_count; ++l) {
      Matrix b = inv_sqrt * basis.block[cb.v[m][l]][cb.u[m]] * inv_sqrt;
      b = 0.5 * (b + b.adjoint());
      running += b;
      povm.beta[m].emplace_back(basis.b_reg, std::move(b));
    }
  }
  Matrix comp = Matrix::Identity(db, db) - running;
  povm.completion = LabeledOperator{basis.b_reg, 0.5 * (comp + comp.adjoint())};
  return povm;
}

std::vector<double> default_alpha_grid() {
  return {0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45};
}

SimulationReport evaluate_error(const ActionModel& model, const Strategy& strategy, const Codebook& cb,
                                const DecoderPOVM& decoder, EncoderMode mode) {
  return evaluate_error(model, strategy, assemble(model, strategy), cb, decoder, mode);
}

SimulationReport evaluate_error(const ActionModel& model, const Strategy& strategy,
                                const JointStateBundle& bundle, const Codebook& cb,
                                const DecoderPOVM& decoder, EncoderMode mode, bool compute_bounds) {
  const long m_count = static_cast<long>(cb.u.size());
  const long l_count = static_cast<long>(cb.v.empty() ? 0 : cb.v[0].size());

  SimulationReport report;
  report.encoder_mode = mode;
  report.decoder_trivial = decoder.trivial;
  report.nu1 = decoder.nu1;
  report.nu2 = nu2_of(Eigen::VectorXd(bundle.p_vu.colwise().sum().transpose()), bundle.sigma_s_per_u);
  report.seeds = {cb.seed};

  // Transmitted state per message.
  std::vector<Matrix> theta(m_count);
  if (mode == EncoderMode::ideal_average) {
    for (long m = 0; m < m_count; ++m) {
      Matrix acc = Matrix::Zero(decoder.completion.dim(), decoder.completion.dim());
      for (long l = 0; l < l_count; ++l) acc += bundle.rho_b_vu[cb.v[m][l]][cb.u[m]].mat();
      theta[m] = acc / static_cast<double>(l_count);
    }
  } else {
    for (long m = 0; m < m_count; ++m) {
      std::vector<KrausChannel> row;
      row.reserve(l_count);
      for (long l = 0; l < l_count; ++l) row.push_back(strategy.encoders()[cb.v[m][l]]);
      long t_dim = 0;
      for (const auto& e : row) t_dim = std::max<long>(t_dim, static_cast<long>(e.kraus().size()));
      long k1 = static_cast<long>(model.action().kraus().size());
      long k0 = std::lround(
          std::real(support_projector(strategy.action_states()[cb.u[m]].op()).mat().trace()));
      long total = static_cast<long>(model.s_dim()) * model.a_dim() * t_dim * k1 * k0 * l_count;
      if (total > kExactUhlmannDimCap)
        throw TooLarge("exact encoder dimension " + std::to_string(total) + " exceeds cap " +
                       std::to_string(kExactUhlmannDimCap));
      PurifiedEncoding enc =
          build_purified_encoding(model.action(), strategy.action_states()[cb.u[m]], row);
      LabeledOperator full{enc.encoded_reg, Matrix(enc.encoded * enc.encoded.adjoint())};
      LabeledOperator out = apply(model.comm(), full);
      theta[m] = partial_trace(out, {model.b_name()}).mat();
    }
  }

  double success_sum = 0.0;
  double confusion_sum = 0.0;
  for (long m = 0; m < m_count; ++m) {
    for (long mp = 0; mp < m_count; ++mp)
      for (long l = 0; l < l_count; ++l) {
        double mass = real_trace_product(decoder.beta[mp][l].mat(), theta[m]);
        if (mp == m)
          success_sum += mass;
        else
          confusion_sum += mass;
      }
  }
  report.avg_error_exact = 1.0 - success_sum / static_cast<double>(m_count);
  report.confusion_term = confusion_sum / static_cast<double>(m_count);

  // tau_{S|C_m} from the per-(v,u) environment marginals; with Theorem-1
  // strategies these all equal sigma_S^{u(m)}.
  double max_p2 = 0.0;
  for (long m = 0; m < m_count; ++m) {
    Matrix tau = Matrix::Zero(bundle.sigma_s_per_u[0].dim(), bundle.sigma_s_per_u[0].dim());
    for (long l = 0; l < l_count; ++l) tau += bundle.sigma_s_per_u[cb.u[m]].mat();
    tau /= static_cast<double>(l_count);
    DensityMatrix tau_dm{bundle.sigma_s_per_u[0].reg(), std::move(tau)};
    double p = purified_distance(tau_dm, bundle.sigma_s_per_u[cb.u[m]]);
    max_p2 = std::max(max_p2, p * p);
  }
  report.purified_distance_term = max_p2;

  if (compute_bounds) {
    CodeParams params(m_count, l_count);
    report.bound_rhs_min = std::numeric_limits<double>::infinity();
    for (double a : default_alpha_grid()) {
      Prop1Bound b = proposition1_bound(bundle, params, a);
      report.bound_rhs_per_alpha[a] = b.value;
      report.bound_rhs_min = std::min(report.bound_rhs_min, b.value);
    }
  }
  return report;
}

Prop1Bound proposition1_bound(const JointStateBundle& bundle, const CodeParams& params, double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) throw BadOrder("proposition bound needs alpha in (0, 1/2)");

  Prop1Bound out;
  LabeledOperator rho_vu = partial_trace(bundle.rho_vub.op(), {"V", "U"});
  LabeledOperator rho_b = partial_trace(bundle.rho_vub.op(), {bundle.b_name});
  DensityMatrix product{tensor(rho_vu, rho_b).reg(), tensor(rho_vu, rho_b).mat()};

  out.nu1 = distinct_eigenvalue_count(product.op());
  out.nu2 = nu2_of(Eigen::VectorXd(bundle.p_vu.colwise().sum().transpose()), bundle.sigma_s_per_u);

  DivergenceValue d_minus = sandwiched_renyi(bundle.rho_vub, product, 1.0 - alpha);
  DivergenceValue d_plus = sandwiched_renyi(bundle.rho_vus, bundle.rho_markov, 1.0 + alpha);
  out.d_one_minus = d_minus.infinite ? std::numeric_limits<double>::infinity() : d_minus.bits;
  out.d_one_plus = d_plus.infinite ? std::numeric_limits<double>::infinity() : d_plus.bits;

  out.miss_term = 12.0 * std::pow(static_cast<double>(out.nu1), alpha) *
                  std::pow(2.0, alpha * (params.total_rate() - out.d_one_minus));
  out.subcode_term = (2.0 / alpha) * std::pow(static_cast<double>(out.nu2), alpha) *
                     std::pow(2.0, alpha * (out.d_one_plus - params.subcode_rate()));
  out.value = out.miss_term + out.subcode_term;
  out.vacuous = !(out.value < 1.0);
  return out;
}

MonteCarloReport monte_carlo_expected_error(const ActionModel& model, const Strategy& strategy,
                                            const CodeParams& params, int trials,
                                            std::uint64_t master_seed, int workers,
                                            const std::vector<double>& alpha_grid) {
  if (trials < 1) throw ValidationError("need at least one trial");
  JointStateBundle bundle = assemble(model, strategy);
  DecoderBasis basis(bundle, params);

  MonteCarloReport report;
  report.per_trial_error.resize(trials);
  report.per_trial_corrected.resize(trials);
  report.trial_seeds.resize(trials);

  run_partitioned(trials, workers, [&](int t) {
    std::uint64_t seed = child_seed(master_seed, static_cast<std::uint64_t>(t));
    Codebook cb = sample_codebook(strategy, params, seed);
    DecoderPOVM decoder = build_decoder(basis, cb, params);
    SimulationReport sim = evaluate_error(model, strategy, bundle, cb, decoder,
                                          EncoderMode::ideal_average, /*compute_bounds=*/false);
    report.per_trial_error[t] = sim.avg_error_exact;
    report.per_trial_corrected[t] = sim.avg_error_exact + 2.0 * sim.purified_distance_term;
    report.trial_seeds[t] = seed;
  });

  // Pairwise summation keeps the aggregate bit-stable and order-independent.
  std::function<double(const std::vector<double>&, int, int)> pairwise =
      [&](const std::vector<double>& xs, int lo, int hi) -> double {
    if (hi - lo == 1) return xs[lo];
    int mid = lo + (hi - lo) / 2;
    return pairwise(xs, lo, mid) + pairwise(xs, mid, hi);
  };
  report.mean_error = pairwise(report.per_trial_error, 0, trials) / trials;
  report.corrected_mean = pairwise(report.per_trial_corrected, 0, trials) / trials;
  report.mean_correction = report.corrected_mean - report.mean_error;

  auto stderr_of = [&](const std::vector<double>& xs, double mean) {
    if (trials < 2) return 0.0;
    double acc = 0.0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / (static_cast<double>(trials) - 1.0) / static_cast<double>(trials));
  };
  report.std_error = stderr_of(report.per_trial_error, report.mean_error);
  report.corrected_std_error = stderr_of(report.per_trial_corrected, report.corrected_mean);

  report.bound_min = std::numeric_limits<double>::infinity();
  for (double a : alpha_grid) {
    Prop1Bound b = proposition1_bound(bundle, params, a);
    report.bound_per_alpha[a] = b.value;
    report.bound_min = std::min(report.bound_min, b.value);
    report.nu1 = b.nu1;
    report.nu2 = b.nu2;
  }
  report.bound_vacuous = !(report.bound_min < 1.0);
  report.comparison_pass =
      report.bound_vacuous ||
      report.corrected_mean <= report.bound_min + 3.0 * report.corrected_std_error;
  return report;
}

DensityMatrix CqFamily::sigma(int u) const {
  double mass = p_vu.col(u).sum();
  if (mass <= 0.0) throw BadDistribution("u value has no probability mass");
  Matrix acc = Matrix::Zero(states[0][u].dim(), states[0][u].dim());
  for (int v = 0; v < v_size(); ++v) acc += (p_vu(v, u) / mass) * states[v][u].mat();
  return {states[0][u].reg(), std::move(acc)};
}

DensityMatrix CqFamily::rho_vus() const {
  Register reg = Register::single("V", v_size())
                     .concat(Register::single("U", u_size()))
                     .concat(states[0][0].reg());
  long ds = states[0][0].dim();
  Matrix m = Matrix::Zero(reg.dim(), reg.dim());
  for (int v = 0; v < v_size(); ++v)
    for (int u = 0; u < u_size(); ++u) {
      long off = (static_cast<long>(v) * u_size() + u) * ds;
      m.block(off, off, ds, ds) = p_vu(v, u) * states[v][u].mat();
    }
  return {std::move(reg), std::move(m)};
}

DensityMatrix CqFamily::rho_markov() const {
  Register reg = Register::single("V", v_size())
                     .concat(Register::single("U", u_size()))
                     .concat(states[0][0].reg());
  long ds = states[0][0].dim();
  Matrix m = Matrix::Zero(reg.dim(), reg.dim());
  for (int u = 0; u < u_size(); ++u) {
    double mass = p_vu.col(u).sum();
    if (mass <= 0.0) continue;
    Matrix sig = sigma(u).mat();
    for (int v = 0; v < v_size(); ++v) {
      long off = (static_cast<long>(v) * u_size() + u) * ds;
      m.block(off, off, ds, ds) = p_vu(v, u) * sig;
    }
  }
  return {std::move(reg), std::move(m)};
}

CqFamily cq_family_from_strategy(const ActionModel& model, const Strategy& strategy) {
  JointStateBundle bundle = assemble(model, strategy);
  CqFamily family;
  family.p_vu = strategy.p_vu();
  family.states.assign(strategy.v_size(), {});
  for (int v = 0; v < strategy.v_size(); ++v)
    for (int u = 0; u < strategy.u_size(); ++u) family.states[v].push_back(bundle.sigma_s_per_u[u]);
  return family;
}

CqFamily random_cq_family(int v_size, int u_size, const Register& s_reg, Rng& rng) {
  CqFamily family;
  family.p_vu = Eigen::MatrixXd(v_size, u_size);
  auto w = random_simplex(v_size * u_size, rng);
  for (int v = 0; v < v_size; ++v)
    for (int u = 0; u < u_size; ++u) family.p_vu(v, u) = w[v * u_size + u];
  family.states.assign(v_size, {});
  for (int v = 0; v < v_size; ++v)
    for (int u = 0; u < u_size; ++u) family.states[v].push_back(random_density(s_reg, rng));
  return family;
}

Lemma1Result lemma1_check(const CqFamily& family, int u_index, const CodeParams& params, double alpha,
                          int trials, std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha < 0.5)) throw BadOrder("lemma needs alpha in (0, 1/2)");
  if (trials < 1) throw ValidationError("need at least one trial");

  DensityMatrix sigma_u = family.sigma(u_index);
  std::vector<double> pv(family.v_size());
  for (int v = 0; v < family.v_size(); ++v) pv[v] = family.p_vu(v, u_index);

  const long l_count = params.subcodebook_size;
  Lemma1Result result;
  result.trials = trials;
  std::vector<double> values(trials);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Matrix acc = Matrix::Zero(sigma_u.dim(), sigma_u.dim());
    for (long l = 0; l < l_count; ++l) acc += family.states[sample_discrete(pv, rng)][u_index].mat();
    DensityMatrix tau{sigma_u.reg(), Matrix(acc / static_cast<double>(l_count))};
    DivergenceValue d = sandwiched_renyi(tau, sigma_u, 1.0 + alpha);
    values[t] = d.infinite ? std::numeric_limits<double>::infinity() : d.bits;
  }
  double mean = 0.0;
  for (double x : values) mean += x;
  mean /= trials;
  double var = 0.0;
  for (double x : values) var += (x - mean) * (x - mean);
  result.empirical_mean = mean;
  result.std_error = trials > 1 ? std::sqrt(var / (trials - 1.0) / trials) : 0.0;

  int nu2 = 0;
  Eigen::VectorXd pu = family.p_u();
  for (int u = 0; u < family.u_size(); ++u)
    if (pu(u) > tol::support_rel) nu2 = std::max(nu2, distinct_eigenvalue_count(family.sigma(u).op()));
  DivergenceValue d_plus = sandwiched_renyi(family.rho_vus(), family.rho_markov(), 1.0 + alpha);
  double d_bits = d_plus.infinite ? std::numeric_limits<double>::infinity() : d_plus.bits;
  result.bound = (1.0 / (alpha * std::log(2.0))) * std::pow(static_cast<double>(nu2), alpha) *
                 std::pow(2.0, alpha * (d_bits - params.subcode_rate()));
  result.pass = std::isfinite(result.empirical_mean) &&
                result.empirical_mean <= result.bound + 3.0 * result.std_error;
  return result;
}

Lemma2Result lemma2_check(const DensityMatrix& rho_vub, const std::vector<std::string>& vu_names,
                          const std::vector<std::string>& b_names, const CodeParams& params,
                          double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) throw BadOrder("lemma needs alpha in (0, 1/2)");
  if (params.total_rate() <= 0.0) throw ValidationError("lemma needs R + R_S > 0");

  LabeledOperator rho_vu = partial_trace(rho_vub.op(), vu_names);
  LabeledOperator rho_b = partial_trace(rho_vub.op(), b_names);
  LabeledOperator product = tensor(rho_vu, rho_b);
  LabeledOperator aligned = permute(product, rho_vub.reg().names());

  LabeledOperator pinched = pinch(aligned, rho_vub.op());
  double scale = std::pow(2.0, params.total_rate());
  LabeledOperator pi = order_projector(pinched, aligned.with_matrix(Matrix(scale * aligned.mat())));

  Lemma2Result result;
  long d = rho_vub.dim();
  result.lhs_miss = std::real(((Matrix::Identity(d, d) - pi.mat()) * rho_vub.mat()).trace());
  result.lhs_confusion = scale * std::real((pi.mat() * aligned.mat()).trace());

  DensityMatrix product_dm{aligned.reg(), aligned.mat()};
  DivergenceValue dv = sandwiched_renyi(rho_vub, product_dm, 1.0 - alpha);
  double d_bits = dv.infinite ? std::numeric_limits<double>::infinity() : dv.bits;
  result.rhs = std::pow(static_cast<double>(distinct_eigenvalue_count(aligned)), alpha) *
               std::pow(2.0, alpha * (params.total_rate() - d_bits));
  double slack = 1e-9 * std::max(1.0, std::abs(result.rhs)) + 1e-12;
  result.pass = result.lhs_miss <= result.rhs + slack && result.lhs_confusion <= result.rhs + slack;
  return result;
}

Lemma2Result lemma2_check(const JointStateBundle& bundle, const CodeParams& params, double alpha) {
  return lemma2_check(bundle.rho_vub, {"V", "U"}, {bundle.b_name}, params, alpha);
}

HayashiNagaokaResult hayashi_nagaoka_check(const LabeledOperator& s, const LabeledOperator& t) {
  if (!(s.reg() == t.reg())) throw RegisterMismatch("operators must share one register");
  double s_min = min_eigenvalue(s.mat());
  double s_max = max_eigenvalue(s.mat());
  if (s_min < -1e-9 || s_max > 1.0 + 1e-9)
    throw BadOperatorRange("first operator must satisfy 0 <= S <= 1");
  if (min_eigenvalue(t.mat()) < -1e-9) throw BadOperatorRange("second operator must be PSD");

  long d = s.dim();
  LabeledOperator sum{s.reg(), Matrix(s.mat() + t.mat())};
  Matrix inv_sqrt = support_power(sum, -0.5).mat();
  Matrix inner = Matrix::Identity(d, d) - inv_sqrt * s.mat() * inv_sqrt;
  Matrix rhs = 2.0 * (Matrix::Identity(d, d) - s.mat()) + 4.0 * t.mat();
  HayashiNagaokaResult result;
  result.min_eig_slack = min_eigenvalue(rhs - inner);
  result.pass = result.min_eig_slack >= -1e-8;
  return result;
}

}  // namespace qadc
