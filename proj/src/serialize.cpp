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

#include "qadc/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qadc {
namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw ValidationError("malformed document: " + what);
}

}  // namespace

Json register_to_json(const Register& reg) {
  Json out = Json::array();
  for (const auto& s : reg.subsystems()) out.push_back({{"name", s.name}, {"dim", s.dim}});
  return out;
}

Register register_from_json(const Json& j) {
  expect(j.is_array(), "register must be an array of name/dim entries");
  std::vector<Subsystem> subs;
  for (const auto& e : j) {
    expect(e.contains("name") && e.contains("dim"), "register entry needs name and dim");
    subs.push_back({e.at("name").get<std::string>(), e.at("dim").get<int>()});
  }
  return Register(std::move(subs));
}

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) data.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j) {
  expect(j.contains("rows") && j.contains("cols") && j.contains("data"), "matrix needs rows/cols/data");
  long rows = j.at("rows").get<long>();
  long cols = j.at("cols").get<long>();
  const Json& data = j.at("data");
  expect(data.is_array() && static_cast<long>(data.size()) == rows * cols,
         "matrix data length must equal rows*cols");
  Matrix m(rows, cols);
  long k = 0;
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c, ++k) {
      const Json& cell = data.at(k);
      expect(cell.is_array() && cell.size() == 2, "matrix entries are [re, im] pairs");
      m(r, c) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  return m;
}

Json real_table_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (long r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (long c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd real_table_from_json(const Json& j) {
  expect(j.is_array() && !j.empty() && j.at(0).is_array(), "table must be an array of rows");
  long rows = static_cast<long>(j.size());
  long cols = static_cast<long>(j.at(0).size());
  Eigen::MatrixXd m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    expect(static_cast<long>(j.at(r).size()) == cols, "table rows must have equal length");
    for (long c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<double>();
  }
  return m;
}

Json operator_to_json(const LabeledOperator& op) {
  return Json{{"register", register_to_json(op.reg())}, {"matrix", matrix_to_json(op.mat())}};
}

LabeledOperator operator_from_json(const Json& j) {
  expect(j.contains("register") && j.contains("matrix"), "operator needs register and matrix");
  return {register_from_json(j.at("register")), matrix_from_json(j.at("matrix"))};
}

Json state_to_json(const DensityMatrix& rho) { return operator_to_json(rho.op()); }

DensityMatrix state_from_json(const Json& j) { return DensityMatrix(operator_from_json(j)); }

Json channel_to_json(const ChannelData& ch) {
  Json kraus = Json::array();
  for (const auto& k : ch.kraus) kraus.push_back(matrix_to_json(k));
  return Json{{"input", register_to_json(ch.input)},
              {"output", register_to_json(ch.output)},
              {"kraus", std::move(kraus)}};
}

ChannelData channel_data_from_json(const Json& j) {
  expect(j.contains("input") && j.contains("output") && j.contains("kraus"),
         "channel needs input/output/kraus");
  ChannelData ch;
  ch.input = register_from_json(j.at("input"));
  ch.output = register_from_json(j.at("output"));
  for (const auto& k : j.at("kraus")) ch.kraus.push_back(matrix_from_json(k));
  return ch;
}

Json channel_to_json(const KrausChannel& ch) { return channel_to_json(ch.data()); }

KrausChannel channel_from_json(const Json& j) {
  return KrausChannel::from_data(channel_data_from_json(j));
}

Json model_to_json(const ModelFile& m) {
  return Json{{"metadata", {{"name", m.name}, {"description", m.description}}},
              {"action_channel", channel_to_json(m.action_channel)},
              {"comm_channel", channel_to_json(m.comm_channel)}};
}

ModelFile model_file_from_json(const Json& j) {
  expect(j.contains("action_channel") && j.contains("comm_channel"),
         "model needs action_channel and comm_channel");
  ModelFile m;
  if (j.contains("metadata")) {
    m.name = j.at("metadata").value("name", "");
    m.description = j.at("metadata").value("description", "");
  }
  m.action_channel = channel_data_from_json(j.at("action_channel"));
  m.comm_channel = channel_data_from_json(j.at("comm_channel"));
  return m;
}

ActionModel model_from_json(const Json& j) {
  ModelFile m = model_file_from_json(j);
  return ActionModel(KrausChannel::from_data(std::move(m.action_channel)),
                     KrausChannel::from_data(std::move(m.comm_channel)));
}

Json model_to_json(const ActionModel& m, const std::string& name, const std::string& description) {
  ModelFile f{name, description, m.action().data(), m.comm().data()};
  return model_to_json(f);
}

Json strategy_to_json(const Strategy& s) {
  Json states = Json::array();
  for (const auto& st : s.action_states()) states.push_back(state_to_json(st));
  Json encoders = Json::array();
  for (const auto& e : s.encoders()) encoders.push_back(channel_to_json(e));
  return Json{{"p_vu", real_table_to_json(s.p_vu())},
              {"action_states", std::move(states)},
              {"encoders", std::move(encoders)}};
}

Strategy strategy_from_json(const Json& j) {
  expect(j.contains("p_vu") && j.contains("action_states") && j.contains("encoders"),
         "strategy needs p_vu/action_states/encoders");
  Eigen::MatrixXd p = real_table_from_json(j.at("p_vu"));
  std::vector<DensityMatrix> states;
  for (const auto& st : j.at("action_states")) states.push_back(state_from_json(st));
  std::vector<KrausChannel> encoders;
  for (const auto& e : j.at("encoders")) encoders.push_back(channel_from_json(e));
  return Strategy(std::move(p), std::move(states), std::move(encoders));
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::strtod(buf, nullptr);
}

Json json_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return round15(x);
}

Json simulation_report_to_json(const SimulationReport& r) {
  Json alphas = Json::object();
  for (const auto& [a, v] : r.bound_rhs_per_alpha) {
    char key[24];
    std::snprintf(key, sizeof(key), "%.2f", a);
    alphas[key] = json_real(v);
  }
  Json seeds = Json::array();
  for (auto s : r.seeds) seeds.push_back(s);
  return Json{{"avg_error_exact", json_real(r.avg_error_exact)},
              {"confusion_term", json_real(r.confusion_term)},
              {"purified_distance_term", json_real(r.purified_distance_term)},
              {"bound_rhs_per_alpha", std::move(alphas)},
              {"bound_rhs_min", json_real(r.bound_rhs_min)},
              {"nu1", r.nu1},
              {"nu2", r.nu2},
              {"encoder_mode", r.encoder_mode == EncoderMode::ideal_average ? "ideal_average" : "exact_uhlmann"},
              {"decoder_trivial", r.decoder_trivial},
              {"seeds", std::move(seeds)}};
}

Json monte_carlo_report_to_json(const MonteCarloReport& r) {
  Json per_trial = Json::array();
  for (double x : r.per_trial_error) per_trial.push_back(json_real(x));
  Json per_trial_corrected = Json::array();
  for (double x : r.per_trial_corrected) per_trial_corrected.push_back(json_real(x));
  Json seeds = Json::array();
  for (auto s : r.trial_seeds) seeds.push_back(s);
  Json alphas = Json::object();
  for (const auto& [a, v] : r.bound_per_alpha) {
    char key[24];
    std::snprintf(key, sizeof(key), "%.2f", a);
    alphas[key] = json_real(v);
  }
  return Json{{"mean_error", json_real(r.mean_error)},
              {"std_error", json_real(r.std_error)},
              {"mean_correction", json_real(r.mean_correction)},
              {"corrected_mean", json_real(r.corrected_mean)},
              {"corrected_std_error", json_real(r.corrected_std_error)},
              {"per_trial_error", std::move(per_trial)},
              {"per_trial_corrected", std::move(per_trial_corrected)},
              {"trial_seeds", std::move(seeds)},
              {"bound_per_alpha", std::move(alphas)},
              {"bound_min", json_real(r.bound_min)},
              {"bound_vacuous", r.bound_vacuous},
              {"comparison", r.bound_vacuous ? "vacuous (expectation-level bound >= 1)"
                                             : "expectation-level"},
              {"comparison_pass", r.comparison_pass},
              {"nu1", r.nu1},
              {"nu2", r.nu2}};
}

Json rate_report_to_json(const RateReport& r) {
  return Json{{"i_vub", json_real(r.i_vub)},
              {"i_vs_given_u", json_real(r.i_vs_given_u)},
              {"r_low", json_real(r.r_low)},
              {"capacity_lower_bound", json_real(std::max(0.0, r.r_low))}};
}

std::string digest_bytes(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

std::string digest_file(const std::string& path) { return digest_bytes(read_file(path)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << contents;
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("parse error in " + origin + ": " + e.what());
  }
}

Json load_json(const std::string& path) { return parse_json(read_file(path), path); }

}  // namespace qadc
