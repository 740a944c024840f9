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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qadc/divergences.hpp"
#include "qadc/serialize.hpp"
#include "qadc/verify_suites.hpp"
#include "qadc/version.hpp"

namespace py = pybind11;
using namespace qadc;

namespace {

Register make_register(const std::vector<std::pair<std::string, int>>& subs) {
  std::vector<Subsystem> out;
  for (const auto& [name, dim] : subs) out.push_back({name, dim});
  return Register(out);
}

std::vector<std::pair<std::string, int>> register_tuples(const Register& reg) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& s : reg.subsystems()) out.emplace_back(s.name, s.dim);
  return out;
}

double divergence_or_inf(const DivergenceValue& d) {
  return d.infinite ? std::numeric_limits<double>::infinity() : d.bits;
}

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

}  // namespace

PYBIND11_MODULE(_qadc, m) {
  m.doc() = "Achievable rates and one-shot coding for quantum action-dependent channels";
  m.attr("__version__") = kVersion;
  m.attr("generator_name") = kGeneratorName;

  py::register_exception<Error>(m, "QadcError");

  py::class_<Register>(m, "Register")
      .def(py::init(&make_register), py::arg("subsystems"))
      .def_property_readonly("dim", &Register::dim)
      .def("names", &Register::names)
      .def("subsystems", &register_tuples)
      .def("__repr__", [](const Register& r) { return to_string(r); });

  py::class_<LabeledOperator>(m, "LabeledOperator")
      .def(py::init<Register, Matrix>(), py::arg("register"), py::arg("matrix"))
      .def_property_readonly("register", &LabeledOperator::reg)
      .def_property_readonly("matrix", [](const LabeledOperator& x) { return x.mat(); })
      .def_static("identity", &LabeledOperator::identity);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<Register, Matrix>(), py::arg("register"), py::arg("matrix"))
      .def_property_readonly("register", &DensityMatrix::reg)
      .def_property_readonly("matrix", [](const DensityMatrix& x) { return x.mat(); })
      .def_property_readonly("op", &DensityMatrix::op);

  m.def("tensor", &tensor);
  m.def("partial_trace", py::overload_cast<const LabeledOperator&, const std::vector<std::string>&>(
                             &partial_trace));
  m.def("partial_trace_state",
        py::overload_cast<const DensityMatrix&, const std::vector<std::string>&>(&partial_trace));
  m.def("permute", &permute);
  m.def("pinch", &pinch);
  m.def("order_projector", &order_projector);
  m.def("support_power", &support_power);
  m.def("distinct_eigenvalue_count", &distinct_eigenvalue_count, py::arg("h"),
        py::arg("rel_tol") = tol::cluster_rel);
  m.def(
      "spectral_decompose",
      [](const LabeledOperator& h, double rel_tol) {
        auto sd = spectral_decompose(h, rel_tol);
        std::vector<std::tuple<double, Matrix, int>> out;
        for (const auto& c : sd.clusters) out.emplace_back(c.eigenvalue, c.projector, c.multiplicity);
        return out;
      },
      py::arg("h"), py::arg("rel_tol") = tol::cluster_rel);

  m.def("von_neumann_entropy", &von_neumann_entropy);
  m.def("relative_entropy",
        [](const DensityMatrix& r, const DensityMatrix& s) { return divergence_or_inf(relative_entropy(r, s)); });
  m.def("mutual_information", &mutual_information);
  m.def("conditional_mutual_information", &conditional_mutual_information);
  m.def("sandwiched_renyi", [](const DensityMatrix& r, const DensityMatrix& s, double alpha) {
    return divergence_or_inf(sandwiched_renyi(r, s, alpha));
  });
  m.def("fidelity", &fidelity);
  m.def("purified_distance", &purified_distance);

  py::class_<KrausChannel>(m, "KrausChannel")
      .def(py::init<Register, Register, std::vector<Matrix>>(), py::arg("input"), py::arg("output"),
           py::arg("kraus"))
      .def_property_readonly("input", &KrausChannel::input)
      .def_property_readonly("output", &KrausChannel::output)
      .def_property_readonly("kraus", [](const KrausChannel& c) { return c.kraus(); })
      .def("choi", [](const KrausChannel& c) { return c.choi(); })
      .def_static("identity", py::overload_cast<const Register&, const Register&>(&KrausChannel::identity))
      .def_static("completely_depolarizing", &KrausChannel::completely_depolarizing)
      .def_static("dephasing", &KrausChannel::dephasing, py::arg("register"), py::arg("strength") = 1.0)
      .def_static("classical_stochastic", &KrausChannel::classical_stochastic);

  m.def("apply_channel",
        py::overload_cast<const KrausChannel&, const DensityMatrix&>(&apply));
  m.def("apply_channel_op",
        py::overload_cast<const KrausChannel&, const LabeledOperator&>(&apply));
  m.def("tp_residual", [](const KrausChannel& c) { return tp_residual(c.data()); });
  m.def("cp_residual", [](const KrausChannel& c) { return cp_residual(c.data()); });
  m.def("kraus_to_stinespring", [](const KrausChannel& c, const std::string& env) {
    auto st = kraus_to_stinespring(c, env);
    return py::make_tuple(st.isometry, st.env.dim());
  });

  py::class_<Purification>(m, "Purification")
      .def_property_readonly("vector", [](const Purification& p) { return p.vec; })
      .def_property_readonly("register", [](const Purification& p) { return p.reg; })
      .def_readonly("system", &Purification::system)
      .def_readonly("reference", &Purification::reference)
      .def("system_marginal", &Purification::system_marginal);

  m.def("purify", &purify);
  m.def("uhlmann_isometry", &uhlmann_isometry);
  m.def("uhlmann_overlap", &uhlmann_overlap);

  py::class_<PurifiedEncoding>(m, "PurifiedEncoding")
      .def_readonly("uhlmann", &PurifiedEncoding::uhlmann)
      .def_readonly("purified_distance_lhs", &PurifiedEncoding::purified_distance_lhs)
      .def_readonly("purified_distance_rhs", &PurifiedEncoding::purified_distance_rhs)
      .def_property_readonly("encoded", [](const PurifiedEncoding& e) { return e.encoded; });
  m.def("build_purified_encoding", &build_purified_encoding);

  py::class_<ActionModel>(m, "ActionModel")
      .def(py::init<KrausChannel, KrausChannel>(), py::arg("action_channel"), py::arg("comm_channel"))
      .def_property_readonly("action", &ActionModel::action)
      .def_property_readonly("comm", &ActionModel::comm);

  py::class_<Strategy>(m, "Strategy")
      .def(py::init<Eigen::MatrixXd, std::vector<DensityMatrix>, std::vector<KrausChannel>>(),
           py::arg("p_vu"), py::arg("action_states"), py::arg("encoders"))
      .def_property_readonly("p_vu", &Strategy::p_vu)
      .def_property_readonly("action_states", &Strategy::action_states)
      .def_property_readonly("encoders", &Strategy::encoders);

  py::class_<JointStateBundle>(m, "JointStateBundle")
      .def_readonly("rho_vusa", &JointStateBundle::rho_vusa)
      .def_readonly("rho_vub", &JointStateBundle::rho_vub)
      .def_readonly("rho_vus", &JointStateBundle::rho_vus)
      .def_readonly("rho_markov", &JointStateBundle::rho_markov)
      .def_readonly("sigma_s_per_u", &JointStateBundle::sigma_s_per_u);

  m.def("assemble", &assemble);
  m.def("achievable_rate", [](const JointStateBundle& b) {
    auto r = achievable_rate(b);
    return py::dict(py::arg("r_low") = r.r_low, py::arg("i_vub") = r.i_vub,
                    py::arg("i_vs_given_u") = r.i_vs_given_u);
  });
  m.def(
      "optimize_rate",
      [](const ActionModel& model, int v_size, int u_size, int restarts, int iterations,
         std::uint64_t seed, int workers) {
        OptimizerConfig config;
        config.restarts = restarts;
        config.iterations = iterations;
        config.seed = seed;
        config.workers = workers;
        auto result = optimize_rate(model, v_size, u_size, config);
        return py::make_tuple(result.strategy,
                              py::dict(py::arg("r_low") = result.report.r_low,
                                       py::arg("i_vub") = result.report.i_vub,
                                       py::arg("i_vs_given_u") = result.report.i_vs_given_u,
                                       py::arg("history") = result.history));
      },
      py::arg("model"), py::arg("v_size"), py::arg("u_size"), py::arg("restarts") = 16,
      py::arg("iterations") = 40, py::arg("seed") = 0, py::arg("workers") = 1);

  py::class_<CodeParams>(m, "CodeParams")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("message_count"), py::arg("subcodebook_size"))
      .def_readonly("message_count", &CodeParams::message_count)
      .def_readonly("subcodebook_size", &CodeParams::subcodebook_size)
      .def_property_readonly("rate", &CodeParams::rate)
      .def_property_readonly("subcode_rate", &CodeParams::subcode_rate);

  py::class_<Codebook>(m, "Codebook")
      .def_readonly("u", &Codebook::u)
      .def_readonly("v", &Codebook::v)
      .def_readonly("seed", &Codebook::seed);

  m.def("sample_codebook",
        py::overload_cast<const Strategy&, const CodeParams&, std::uint64_t>(&sample_codebook));

  py::class_<DecoderPOVM>(m, "DecoderPOVM")
      .def_readonly("nu1", &DecoderPOVM::nu1)
      .def_readonly("trivial", &DecoderPOVM::trivial)
      .def_property_readonly("completion", [](const DecoderPOVM& d) { return d.completion.mat(); })
      .def_property_readonly("pi_vub", [](const DecoderPOVM& d) { return d.pi_vub.mat(); })
      .def("beta", [](const DecoderPOVM& d, int m, int l) { return d.beta.at(m).at(l).mat(); });

  m.def("build_decoder",
        py::overload_cast<const JointStateBundle&, const Codebook&, const CodeParams&>(&build_decoder));

  py::enum_<EncoderMode>(m, "EncoderMode")
      .value("ideal_average", EncoderMode::ideal_average)
      .value("exact_uhlmann", EncoderMode::exact_uhlmann);

  m.def("evaluate_error",
        [](const ActionModel& model, const Strategy& strat, const Codebook& cb, const DecoderPOVM& dec,
           EncoderMode mode) { return json_to_py(simulation_report_to_json(evaluate_error(model, strat, cb, dec, mode))); });

  m.def("proposition1_bound", [](const JointStateBundle& b, const CodeParams& p, double alpha) {
    auto r = proposition1_bound(b, p, alpha);
    return py::dict(py::arg("value") = r.value, py::arg("miss_term") = r.miss_term,
                    py::arg("subcode_term") = r.subcode_term, py::arg("nu1") = r.nu1,
                    py::arg("nu2") = r.nu2, py::arg("vacuous") = r.vacuous);
  });

  m.def(
      "monte_carlo_expected_error",
      [](const ActionModel& model, const Strategy& strat, const CodeParams& params, int trials,
         std::uint64_t seed, int workers) {
        return json_to_py(monte_carlo_report_to_json(
            monte_carlo_expected_error(model, strat, params, trials, seed, workers)));
      },
      py::arg("model"), py::arg("strategy"), py::arg("params"), py::arg("trials"), py::arg("seed"),
      py::arg("workers") = 1);

  py::class_<CqFamily>(m, "CqFamily")
      .def(py::init([](Eigen::MatrixXd p, std::vector<std::vector<DensityMatrix>> states) {
             return CqFamily{std::move(p), std::move(states)};
           }),
           py::arg("p_vu"), py::arg("states"))
      .def_readonly("p_vu", &CqFamily::p_vu)
      .def("sigma", &CqFamily::sigma);
  m.def("cq_family_from_strategy", &cq_family_from_strategy);

  m.def("lemma1_check", [](const CqFamily& fam, int u, const CodeParams& p, double alpha, int trials,
                           std::uint64_t seed) {
    auto r = lemma1_check(fam, u, p, alpha, trials, seed);
    return py::dict(py::arg("empirical_mean") = r.empirical_mean, py::arg("std_error") = r.std_error,
                    py::arg("bound") = r.bound, py::arg("pass_") = r.pass);
  });
  m.def("lemma2_check", [](const DensityMatrix& rho, const std::vector<std::string>& vu,
                           const std::vector<std::string>& b, const CodeParams& p, double alpha) {
    auto r = lemma2_check(rho, vu, b, p, alpha);
    return py::dict(py::arg("lhs_miss") = r.lhs_miss, py::arg("lhs_confusion") = r.lhs_confusion,
                    py::arg("rhs") = r.rhs, py::arg("pass_") = r.pass);
  });
  m.def("hayashi_nagaoka_check", [](const LabeledOperator& s, const LabeledOperator& t) {
    auto r = hayashi_nagaoka_check(s, t);
    return py::dict(py::arg("min_eig_slack") = r.min_eig_slack, py::arg("pass_") = r.pass);
  });

  m.def("load_model", [](const std::string& path) { return model_from_json(load_json(path)); });
  m.def("load_strategy", [](const std::string& path) { return strategy_from_json(load_json(path)); });
  m.def("load_state", [](const std::string& path) { return state_from_json(load_json(path)); });

  m.def("default_alpha_grid", &default_alpha_grid);
  m.def("child_seed", &child_seed);
}
