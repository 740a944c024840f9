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

#include "qadc/rate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "qadc/divergences.hpp"
#include "qadc/random_states.hpp"
#include "qadc/rng.hpp"

namespace qadc {
namespace {

void run_partitioned(int jobs, int workers, const std::function<void(int)>& fn) {
  workers = std::max(1, std::min(workers, jobs));
  if (workers == 1) {
    for (int i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < jobs; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

ActionModel::ActionModel(KrausChannel action_channel, KrausChannel comm_channel)
    : action_(std::move(action_channel)), comm_(std::move(comm_channel)) {
  if (action_.input().size() != 1)
    throw RegisterMismatch("action channel input must be a single subsystem");
  if (action_.output().size() != 2)
    throw RegisterMismatch("action channel output must be (environment, side information)");
  if (comm_.input().size() != 2)
    throw RegisterMismatch("communication channel input must be (environment, transmission)");
  if (comm_.output().size() != 1)
    throw RegisterMismatch("communication channel output must be a single subsystem");
  if (!(comm_.input()[0] == action_.output()[0]))
    throw RegisterMismatch("environment subsystem of the two channels must agree by name and dimension");

  std::set<std::string> names{g_name(), s_name(), s0_name(), a_name(), b_name()};
  if (names.size() != 5) throw RegisterMismatch("model subsystem names must be distinct");
  for (const char* reserved : {"V", "U", "K0", "K1", "T", "L"})
    if (names.count(reserved))
      throw RegisterMismatch(std::string("subsystem name '") + reserved + "' is reserved");
}

Strategy::Strategy(Eigen::MatrixXd p_vu, std::vector<DensityMatrix> action_states,
                   std::vector<KrausChannel> encoders)
    : p_vu_(std::move(p_vu)), action_states_(std::move(action_states)), encoders_(std::move(encoders)) {
  if (p_vu_.rows() < 1 || p_vu_.cols() < 1) throw ValidationError("p_vu must be nonempty");
  double total = 0.0;
  for (long v = 0; v < p_vu_.rows(); ++v)
    for (long u = 0; u < p_vu_.cols(); ++u) {
      if (p_vu_(v, u) < 0.0) throw ValidationError("p_vu entries must be nonnegative");
      total += p_vu_(v, u);
    }
  if (std::abs(total - 1.0) > 1e-12) throw ValidationError("p_vu must sum to 1");
  if (static_cast<long>(action_states_.size()) != p_vu_.cols())
    throw ValidationError("need one action state per u value");
  if (static_cast<long>(encoders_.size()) != p_vu_.rows())
    throw ValidationError("need one encoder per v value");
  for (std::size_t u = 1; u < action_states_.size(); ++u)
    if (!(action_states_[u].reg() == action_states_[0].reg()))
      throw RegisterMismatch("action states must share one register");
  for (std::size_t v = 1; v < encoders_.size(); ++v)
    if (!(encoders_[v].input() == encoders_[0].input()) || !(encoders_[v].output() == encoders_[0].output()))
      throw RegisterMismatch("encoders must share input/output registers");
}

Eigen::VectorXd Strategy::p_v_given_u(int u) const {
  double mass = p_vu_.col(u).sum();
  if (mass <= 0.0) throw BadDistribution("u value has no probability mass");
  return p_vu_.col(u) / mass;
}

JointStateBundle assemble(const ActionModel& model, const Strategy& strategy) {
  const int nv = strategy.v_size();
  const int nu = strategy.u_size();

  if (!(strategy.action_states()[0].reg() == model.action().input()))
    throw RegisterMismatch("action states must live on the action channel input register");
  Register s0_reg = Register::single(model.s0_name(), model.s0_dim());
  Register a_reg = Register::single(model.a_name(), model.a_dim());
  if (!(strategy.encoders()[0].input() == s0_reg) || !(strategy.encoders()[0].output() == a_reg))
    throw RegisterMismatch("encoders must map the side-information subsystem to the transmission subsystem");

  JointStateBundle bundle{.rho_vusa = DensityMatrix(Register(), Matrix::Identity(1, 1)),
                          .rho_vub = DensityMatrix(Register(), Matrix::Identity(1, 1)),
                          .rho_vus = DensityMatrix(Register(), Matrix::Identity(1, 1)),
                          .rho_markov = DensityMatrix(Register(), Matrix::Identity(1, 1)),
                          .sigma_ss0_per_u = {},
                          .sigma_s_per_u = {},
                          .rho_b_vu = {},
                          .p_vu = strategy.p_vu(),
                          .s_name = model.s_name(),
                          .b_name = model.b_name()};

  for (int u = 0; u < nu; ++u) {
    bundle.sigma_ss0_per_u.push_back(apply(model.action(), strategy.action_states()[u]));
    bundle.sigma_s_per_u.push_back(partial_trace(bundle.sigma_ss0_per_u.back(), {model.s_name()}));
  }

  std::vector<std::vector<DensityMatrix>> rho_sa(nv);
  bundle.rho_b_vu.resize(nv);
  for (int v = 0; v < nv; ++v)
    for (int u = 0; u < nu; ++u) {
      rho_sa[v].push_back(apply(strategy.encoders()[v], bundle.sigma_ss0_per_u[u]));
      bundle.rho_b_vu[v].push_back(apply(model.comm(), rho_sa[v][u]));
    }

  Register vu_reg = Register::single("V", nv).concat(Register::single("U", nu));
  Register sa_reg = rho_sa[0][0].reg();
  Register vusa_reg = vu_reg.concat(sa_reg);
  long dsa = sa_reg.dim();
  Matrix vusa = Matrix::Zero(vusa_reg.dim(), vusa_reg.dim());
  for (int v = 0; v < nv; ++v)
    for (int u = 0; u < nu; ++u) {
      long off = (static_cast<long>(v) * nu + u) * dsa;
      vusa.block(off, off, dsa, dsa) = strategy.p_vu()(v, u) * rho_sa[v][u].mat();
    }
  bundle.rho_vusa = DensityMatrix(vusa_reg, std::move(vusa));

  bundle.rho_vub = apply(model.comm(), bundle.rho_vusa);
  bundle.rho_vus = partial_trace(bundle.rho_vusa, {"V", "U", model.s_name()});

  Register vus_reg = bundle.rho_vus.reg();
  long ds = model.s_dim();
  Matrix markov = Matrix::Zero(vus_reg.dim(), vus_reg.dim());
  for (int v = 0; v < nv; ++v)
    for (int u = 0; u < nu; ++u) {
      long off = (static_cast<long>(v) * nu + u) * ds;
      markov.block(off, off, ds, ds) = strategy.p_vu()(v, u) * bundle.sigma_s_per_u[u].mat();
    }
  bundle.rho_markov = DensityMatrix(vus_reg, std::move(markov));
  return bundle;
}

RateReport achievable_rate(const JointStateBundle& bundle) {
  RateReport report;
  report.i_vub = mutual_information(bundle.rho_vub, {"V", "U"}, {bundle.b_name});
  report.i_vs_given_u = conditional_mutual_information(bundle.rho_vus, {"V"}, {bundle.s_name}, {"U"});
  report.r_low = report.i_vub - report.i_vs_given_u;
  return report;
}

// ---------------------------------------------------------------------------
// Optimizer
// ---------------------------------------------------------------------------

namespace {

struct StrategyParams {
  Eigen::MatrixXd p;                 // unnormalized nonnegative table
  std::vector<Vector> purifications; // per u, on G (x) G
  std::vector<Matrix> isometries;    // per v, (dim A * env) x dim S0

  int v_size() const { return static_cast<int>(p.rows()); }
  int u_size() const { return static_cast<int>(p.cols()); }
};

Eigen::MatrixXd normalized_table(Eigen::MatrixXd p) {
  p = p.cwiseMax(0.0);
  double total = p.sum();
  if (total <= 0.0)
    p.setConstant(1.0 / static_cast<double>(p.size()));
  else
    p /= total;
  return p;
}

Matrix reorthonormalize(const Matrix& m) {
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
  Matrix r = qr.matrixQR().topLeftCorner(m.cols(), m.cols()).triangularView<Eigen::Upper>();
  for (long c = 0; c < m.cols(); ++c) {
    Complex d = r(c, c);
    if (std::abs(d) > 1e-12) q.col(c) *= d / std::abs(d);
  }
  return q;
}

Strategy realize(const ActionModel& model, const StrategyParams& params) {
  Register g_reg = model.action().input();
  long dg = g_reg.dim();
  std::vector<DensityMatrix> states;
  for (const auto& w : params.purifications) {
    Matrix full = w * w.adjoint();
    LabeledOperator op{g_reg.concat(Register::single("_ref", static_cast<int>(dg))), std::move(full)};
    states.push_back(DensityMatrix(partial_trace(op, g_reg.names())));
  }
  Register s0_reg = Register::single(model.s0_name(), model.s0_dim());
  Register a_reg = Register::single(model.a_name(), model.a_dim());
  long da = a_reg.dim();
  std::vector<KrausChannel> encoders;
  for (const auto& v : params.isometries) {
    long env = v.rows() / da;
    std::vector<Matrix> kraus(env, Matrix::Zero(da, s0_reg.dim()));
    for (long o = 0; o < da; ++o)
      for (long e = 0; e < env; ++e)
        for (long i = 0; i < s0_reg.dim(); ++i) kraus[e](o, i) = v(o * env + e, i);
    encoders.push_back(KrausChannel(s0_reg, a_reg, std::move(kraus)));
  }
  return Strategy(normalized_table(params.p), std::move(states), std::move(encoders));
}

double evaluate(const ActionModel& model, const StrategyParams& params) {
  Strategy strat = realize(model, params);
  return achievable_rate(assemble(model, strat)).r_low;
}

StrategyParams canonical_params(const ActionModel& model, int nv, int nu, long env_dim, int variant) {
  long dg = model.g_dim();
  StrategyParams params;
  params.p = Eigen::MatrixXd::Constant(nv, nu, 1.0);
  for (int u = 0; u < nu; ++u) {
    Vector w = Vector::Zero(dg * dg);
    if (variant == 0) {
      // Pointer basis state |u mod dg> on G.
      long g = u % dg;
      w(g * dg + 0) = 1.0;
    } else {
      // Maximally mixed on G.
      for (long g = 0; g < dg; ++g) w(g * dg + g) = 1.0 / std::sqrt(static_cast<double>(dg));
    }
    params.purifications.push_back(std::move(w));
  }
  long ds0 = model.s0_dim();
  long da = model.a_dim();
  for (int v = 0; v < nv; ++v) {
    Matrix iso = Matrix::Zero(da * env_dim, ds0);
    for (long i = 0; i < ds0; ++i) {
      // Cyclic shift by v, filling distinct outputs first and spilling into
      // the environment only when the side information is larger.
      long target = (i + v) % (da * env_dim);
      long o = target % da;
      long e = target / da;
      iso(o * env_dim + e, i) = 1.0;
    }
    params.isometries.push_back(std::move(iso));
  }
  return params;
}

StrategyParams random_params(const ActionModel& model, int nv, int nu, long env_dim, Rng& rng) {
  StrategyParams params;
  params.p = Eigen::MatrixXd(nv, nu);
  auto w = random_simplex(nv * nu, rng);
  for (int v = 0; v < nv; ++v)
    for (int u = 0; u < nu; ++u) params.p(v, u) = w[v * nu + u];
  long dg = model.g_dim();
  for (int u = 0; u < nu; ++u) params.purifications.push_back(random_unit_vector(dg * dg, rng));
  long ds0 = model.s0_dim();
  long da = model.a_dim();
  for (int v = 0; v < nv; ++v) params.isometries.push_back(random_isometry(da * env_dim, ds0, rng));
  return params;
}

struct RestartResult {
  StrategyParams params;
  double value = -1e300;
  std::vector<double> history;
};

RestartResult hill_climb(const ActionModel& model, StrategyParams params, double step, int iterations,
                         Rng& rng) {
  RestartResult result;
  result.value = evaluate(model, params);
  result.params = params;

  for (int it = 0; it < iterations; ++it) {
    bool improved = false;

    // (i) p_VU: projected pattern search on the simplex.
    for (int v = 0; v < params.v_size(); ++v)
      for (int u = 0; u < params.u_size(); ++u)
        for (double sign : {+1.0, -1.0}) {
          StrategyParams cand = result.params;
          cand.p = normalized_table(cand.p);
          cand.p(v, u) = std::max(0.0, cand.p(v, u) + sign * step);
          double val = evaluate(model, cand);
          if (val > result.value + 1e-12) {
            result.value = val;
            result.params = cand;
            improved = true;
          }
        }

    // (ii) action states: random-direction line search on the purification sphere.
    for (int u = 0; u < params.u_size(); ++u)
      for (int probe = 0; probe < 2; ++probe) {
        Vector dir(result.params.purifications[u].size());
        for (long i = 0; i < dir.size(); ++i) dir(i) = rng.next_complex_gaussian();
        for (double scale : {step, 0.25 * step}) {
          StrategyParams cand = result.params;
          Vector w = cand.purifications[u] + scale * dir;
          cand.purifications[u] = w / w.norm();
          double val = evaluate(model, cand);
          if (val > result.value + 1e-12) {
            result.value = val;
            result.params = cand;
            improved = true;
          }
        }
      }

    // (iii) encoders: Gaussian perturbation, re-orthonormalized columns.
    for (int v = 0; v < params.v_size(); ++v)
      for (int probe = 0; probe < 2; ++probe) {
        Matrix dir = random_complex_matrix(result.params.isometries[v].rows(),
                                           result.params.isometries[v].cols(), rng);
        for (double scale : {step, 0.25 * step}) {
          StrategyParams cand = result.params;
          cand.isometries[v] = reorthonormalize(cand.isometries[v] + scale * dir);
          double val = evaluate(model, cand);
          if (val > result.value + 1e-12) {
            result.value = val;
            result.params = cand;
            improved = true;
          }
        }
      }

    if (!improved) {
      step *= 0.5;
      if (step < 1e-4) {
        result.history.push_back(result.value);
        break;
      }
    }
    result.history.push_back(result.value);
  }
  return result;
}

}  // namespace

OptimizeResult optimize_rate(const ActionModel& model, int v_size, int u_size,
                             const OptimizerConfig& config) {
  if (v_size < 1 || u_size < 1) throw RegisterMismatch("auxiliary sizes must be at least 1");
  long env_dim = config.encoder_env_dim > 0
                     ? config.encoder_env_dim
                     : std::min<long>(static_cast<long>(model.s0_dim()) * model.a_dim(), 4);

  // Deterministic initial candidates, then seeded random restarts. Restart
  // results are reduced in index order so worker scheduling cannot change
  // the outcome.
  std::vector<RestartResult> results(config.restarts + 2);
  run_partitioned(static_cast<int>(results.size()), config.workers, [&](int r) {
    Rng rng(child_seed(config.seed, static_cast<std::uint64_t>(r)));
    StrategyParams init = r < 2 ? canonical_params(model, v_size, u_size, env_dim, r)
                                : random_params(model, v_size, u_size, env_dim, rng);
    results[r] = hill_climb(model, std::move(init), config.initial_step, config.iterations, rng);
  });

  int best = 0;
  for (int r = 1; r < static_cast<int>(results.size()); ++r)
    if (results[r].value > results[best].value + 1e-15) best = r;

  Strategy strategy = realize(model, results[best].params);
  RateReport report = achievable_rate(assemble(model, strategy));
  return OptimizeResult{std::move(strategy), report, results[best].history, best};
}

}  // namespace qadc
