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

#include <json.hpp>

#include "qadc/oneshot.hpp"
#include "qadc/rate.hpp"

namespace qadc {

// One file format for states, channels, strategies, models, and reports:
// complex matrices are flat row-major arrays of [re, im] pairs, registers
// are ordered name/dim lists. ordered_json keeps report bytes stable.
using Json = nlohmann::ordered_json;

Json register_to_json(const Register& reg);
Register register_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json real_table_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd real_table_from_json(const Json& j);

Json operator_to_json(const LabeledOperator& op);
LabeledOperator operator_from_json(const Json& j);
Json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& j);

Json channel_to_json(const ChannelData& ch);
ChannelData channel_data_from_json(const Json& j);
Json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const Json& j);

struct ModelFile {
  std::string name;
  std::string description;
  ChannelData action_channel;
  ChannelData comm_channel;
};

Json model_to_json(const ModelFile& m);
ModelFile model_file_from_json(const Json& j);
ActionModel model_from_json(const Json& j);
Json model_to_json(const ActionModel& m, const std::string& name = "",
                   const std::string& description = "");

Json strategy_to_json(const Strategy& s);
Strategy strategy_from_json(const Json& j);

Json simulation_report_to_json(const SimulationReport& r);
Json monte_carlo_report_to_json(const MonteCarloReport& r);
Json rate_report_to_json(const RateReport& r);

/// Round a double through 15 significant digits; report payloads pass
/// every float through this so emitted numbers carry exactly that much.
double round15(double x);
Json json_real(double x);

/// FNV-1a 64-bit content hash, hex encoded.
std::string digest_bytes(const std::string& bytes);
std::string digest_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// Parse with position information preserved in the IoError message.
Json parse_json(const std::string& text, const std::string& origin);
Json load_json(const std::string& path);

}  // namespace qadc
