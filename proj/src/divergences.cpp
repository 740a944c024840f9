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

#include "qadc/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qadc {
namespace {

Eigen::VectorXd eigenvalues_of(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

void check_same_register(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (!(rho.reg() == sigma.reg()))
    throw RegisterMismatch("states live on different registers: " + to_string(rho.reg()) + " vs " +
                           to_string(sigma.reg()));
}

void check_groups_disjoint(const std::vector<std::vector<std::string>>& groups) {
  std::set<std::string> seen;
  for (const auto& g : groups)
    for (const auto& n : g)
      if (!seen.insert(n).second) throw BadPartition("subsystem '" + n + "' appears in two groups");
}

double entropy_of_marginal(const DensityMatrix& rho, const std::vector<std::string>& keep) {
  if (keep.empty()) return 0.0;
  return von_neumann_entropy(partial_trace(rho, keep));
}

std::vector<std::string> concat_names(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::VectorXd vals = eigenvalues_of(rho.mat());
  double tau = tol::support_rel * std::max(vals.maxCoeff(), 0.0);
  double h = 0.0;
  for (long i = 0; i < vals.size(); ++i)
    if (vals(i) > tau) h -= vals(i) * std::log2(vals(i));
  return h;
}

bool support_contained(const LabeledOperator& a, const LabeledOperator& b) {
  Matrix pa = support_projector(a).mat();
  Matrix pb = support_projector(b).mat();
  Matrix leak = (Matrix::Identity(pb.rows(), pb.cols()) - pb) * pa;
  Eigen::JacobiSVD<Matrix> svd(leak);
  double norm = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  return norm <= tol::support_overlap;
}

DivergenceValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_register(rho, sigma);
  if (!support_contained(rho.op(), sigma.op())) return DivergenceValue::inf();

  Eigen::SelfAdjointEigenSolver<Matrix> er(0.5 * (rho.mat() + rho.mat().adjoint()));
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (sigma.mat() + sigma.mat().adjoint()));
  double tau_r = tol::support_rel * std::max(er.eigenvalues().maxCoeff(), 0.0);
  double tau_s = tol::support_rel * std::max(es.eigenvalues().maxCoeff(), 0.0);

  double t1 = 0.0;
  for (long i = 0; i < er.eigenvalues().size(); ++i) {
    double lam = er.eigenvalues()(i);
    if (lam > tau_r) t1 += lam * std::log2(lam);
  }
  double t2 = 0.0;
  for (long j = 0; j < es.eigenvalues().size(); ++j) {
    double mu = es.eigenvalues()(j);
    if (mu <= tau_s) continue;
    Vector f = es.eigenvectors().col(j);
    double weight = std::real(f.dot(rho.mat() * f));
    t2 += weight * std::log2(mu);
  }
  return DivergenceValue::finite(t1 - t2);
}

double mutual_information(const DensityMatrix& rho, const std::vector<std::string>& group_a,
                          const std::vector<std::string>& group_b) {
  if (group_a.empty() || group_b.empty()) throw BadPartition("both groups must be nonempty");
  check_groups_disjoint({group_a, group_b});
  if (group_a.size() + group_b.size() != rho.reg().size())
    throw BadPartition("cut must partition the register");
  for (const auto& n : concat_names(group_a, group_b))
    if (!rho.reg().has(n)) throw BadPartition("unknown subsystem '" + n + "' in cut");
  double ha = entropy_of_marginal(rho, group_a);
  double hb = entropy_of_marginal(rho, group_b);
  double hab = von_neumann_entropy(rho);
  return ha + hb - hab;
}

double conditional_mutual_information(const DensityMatrix& rho, const std::vector<std::string>& group_a,
                                      const std::vector<std::string>& group_b,
                                      const std::vector<std::string>& group_c) {
  check_groups_disjoint({group_a, group_b, group_c});
  for (const auto& n : concat_names(concat_names(group_a, group_b), group_c))
    if (!rho.reg().has(n)) throw BadPartition("unknown subsystem '" + n + "' in group");
  if (group_a.empty() || group_b.empty()) throw BadPartition("groups A and B must be nonempty");

  double h_ac = entropy_of_marginal(rho, concat_names(group_a, group_c));
  double h_bc = entropy_of_marginal(rho, concat_names(group_b, group_c));
  double h_c = entropy_of_marginal(rho, group_c);
  double h_abc = entropy_of_marginal(rho, concat_names(concat_names(group_a, group_b), group_c));
  return h_ac + h_bc - h_c - h_abc;
}

DivergenceValue sandwiched_renyi(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0) throw BadOrder("sandwiched divergence needs alpha > 0, alpha != 1");
  check_same_register(rho, sigma);
  if (alpha > 1.0 && !support_contained(rho.op(), sigma.op())) return DivergenceValue::inf();

  double p = (1.0 - alpha) / (2.0 * alpha);
  Matrix sp = support_power(sigma.op(), p).mat();
  Matrix x = sp * rho.mat() * sp;
  Eigen::VectorXd vals = eigenvalues_of(x);
  double tau = tol::support_rel * std::max(vals.maxCoeff(), 0.0);
  double trace = 0.0;
  for (long i = 0; i < vals.size(); ++i)
    if (vals(i) > tau) trace += std::pow(vals(i), alpha);
  if (trace <= 0.0) {
    // Orthogonal supports. For alpha < 1 this is the +infinity case; for
    // alpha > 1 containment already failed above.
    return DivergenceValue::inf();
  }
  return DivergenceValue::finite(std::log2(trace) / (alpha - 1.0));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_register(rho, sigma);
  Matrix prod = matrix_sqrt(rho.op()).mat() * matrix_sqrt(sigma.op()).mat();
  Eigen::JacobiSVD<Matrix> svd(prod);
  double f = svd.singularValues().sum();
  return std::clamp(f, 0.0, 1.0);
}

double purified_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  double f = fidelity(rho, sigma);
  return std::sqrt(std::max(0.0, 1.0 - f * f));
}

}  // namespace qadc
