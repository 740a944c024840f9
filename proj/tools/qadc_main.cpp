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

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include <CLI11.hpp>

#include "qadc/divergences.hpp"
#include "qadc/serialize.hpp"
#include "qadc/verify_suites.hpp"
#include "qadc/version.hpp"

namespace {

using qadc::Json;

bool g_json_errors = false;

int log_level() {
  const char* env = std::getenv("QADC_LOG");
  return env && *env ? std::atoi(env) : 0;
}

void log_info(const std::string& msg) {
  if (log_level() > 0) std::cerr << "[qadc] " << msg << "\n";
}

// Exit-code contract (also shown in --help):
//   0 success            2 file parse error       3 semantic/validation error
//   4 register mismatch  5 domain error (order, partition, distribution, range)
//   6 dimension cap      7 file I/O error         9 internal error
int exit_code_for(const qadc::Error& e) {
  const std::string& code = e.code();
  if (code == "Io") return std::string(e.what()).find("parse error") != std::string::npos ? 2 : 7;
  if (code == "Validation") return 3;
  if (code == "RegisterMismatch" || code == "DuplicateSubsystem" || code == "UnknownSubsystem" ||
      code == "NotHermitian")
    return 4;
  if (code == "BadOrder" || code == "BadPartition" || code == "BadDistribution" ||
      code == "BadOperatorRange" || code == "SingularFunction")
    return 5;
  if (code == "TooLarge" || code == "ReferenceTooLarge") return 6;
  return 9;
}

void emit_error(const std::string& code, const std::string& message) {
  if (g_json_errors) {
    Json j{{"error", {{"code", code}, {"message", message}}}};
    std::cout << j.dump(1) << "\n";
  } else {
    std::cerr << "error [" << code << "]: " << message << "\n";
  }
}

void emit_report(const Json& report, const std::string& out_path) {
  std::string text = report.dump(1) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    qadc::write_file(out_path, text);
}

Json report_skeleton(const std::string& command) {
  return Json{{"command", command},
              {"inputs", Json::object()},
              {"seeds", Json::array()},
              {"version", qadc::kVersion},
              {"generator", qadc::kGeneratorName},
              {"results", Json::object()}};
}

std::vector<double> parse_alpha_grid(const std::string& spec) {
  if (spec.empty()) return qadc::default_alpha_grid();
  std::vector<double> grid;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    grid.push_back(std::stod(spec.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  for (double a : grid)
    if (!(a > 0.0 && a < 0.5)) throw qadc::BadOrder("alpha grid values must lie in (0, 1/2)");
  return grid;
}

std::pair<int, int> parse_dims(const std::string& spec) {
  int v = -1, u = -1;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    std::string part = spec.substr(pos, comma - pos);
    std::size_t eq = part.find('=');
    if (eq == std::string::npos) throw qadc::ValidationError("--dims expects V=<n>,U=<n>");
    std::string key = part.substr(0, eq);
    int value = std::stoi(part.substr(eq + 1));
    if (key == "V" || key == "v")
      v = value;
    else if (key == "U" || key == "u")
      u = value;
    else
      throw qadc::ValidationError("--dims keys must be V and U");
    pos = comma + 1;
  }
  if (v < 1 || u < 1) throw qadc::ValidationError("--dims must set both V and U to at least 1");
  return {v, u};
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int run_validate(const std::string& model_path, const std::string& strategy_path,
                 const std::string& state_path, const std::string& out_path) {
  Json report = report_skeleton("validate");
  Json diagnostics = Json::array();
  bool ok = true;

  auto check = [&](const std::string& kind, const std::string& what, double residual, double tol) {
    bool pass = residual <= tol;
    ok = ok && pass;
    diagnostics.push_back(Json{{"kind", kind},
                               {"check", what},
                               {"residual", qadc::json_real(residual)},
                               {"tolerance", qadc::json_real(tol)},
                               {"pass", pass}});
  };

  if (!model_path.empty()) {
    report["inputs"]["model"] = qadc::digest_file(model_path);
    auto mf = qadc::model_file_from_json(qadc::load_json(model_path));
    for (const auto* ch : {&mf.action_channel, &mf.comm_channel}) {
      std::string kind = ch == &mf.action_channel ? "action_channel" : "comm_channel";
      check(kind, "trace-preservation residual", qadc::tp_residual(*ch), qadc::tol::isometry);
      check(kind, "complete-positivity residual", qadc::cp_residual(*ch), qadc::tol::isometry);
    }
    if (ok) {
      qadc::ActionModel model = qadc::model_from_json(qadc::model_to_json(mf));
      diagnostics.push_back(Json{{"kind", "model"},
                                 {"check", "register consistency"},
                                 {"pass", true},
                                 {"subsystems",
                                  Json{{"G", model.g_dim()},
                                       {"S", model.s_dim()},
                                       {"S0", model.s0_dim()},
                                       {"A", model.a_dim()},
                                       {"B", model.b_dim()}}}});
    }
  }
  if (!strategy_path.empty()) {
    report["inputs"]["strategy"] = qadc::digest_file(strategy_path);
    qadc::Strategy strat = qadc::strategy_from_json(qadc::load_json(strategy_path));
    diagnostics.push_back(Json{{"kind", "strategy"},
                               {"check", "distribution and channel invariants"},
                               {"pass", true},
                               {"v_size", strat.v_size()},
                               {"u_size", strat.u_size()}});
  }
  if (!state_path.empty()) {
    report["inputs"]["state"] = qadc::digest_file(state_path);
    auto op = qadc::operator_from_json(qadc::load_json(state_path));
    double asym = qadc::hermiticity_defect(op.mat());
    double trace_dev = std::abs(op.mat().trace().real() - 1.0);
    double min_eig = qadc::min_eigenvalue(op.mat());
    check("state", "hermiticity residual", asym, qadc::tol::density_hermitian);
    check("state", "trace residual", trace_dev, qadc::tol::density_trace);
    check("state", "negativity", std::max(0.0, -min_eig), qadc::tol::density_psd);
  }

  report["results"] = Json{{"pass", ok}, {"diagnostics", std::move(diagnostics)}};
  emit_report(report, out_path);
  if (!ok) {
    emit_error("Validation", "validation failed; see diagnostics");
    return 3;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// info
// ---------------------------------------------------------------------------

int run_info(const std::string& state_path, const std::string& out_path) {
  Json report = report_skeleton("info");
  report["inputs"]["state"] = qadc::digest_file(state_path);
  qadc::DensityMatrix rho = qadc::state_from_json(qadc::load_json(state_path));

  Json results;
  results["register"] = qadc::register_to_json(rho.reg());
  results["entropy_bits"] = qadc::json_real(qadc::von_neumann_entropy(rho));
  results["purity"] = qadc::json_real(std::real((rho.mat() * rho.mat()).trace()));

  Json marginals = Json::object();
  for (const auto& sub : rho.reg().subsystems()) {
    auto marginal = qadc::partial_trace(rho, {sub.name});
    marginals[sub.name] = qadc::json_real(qadc::von_neumann_entropy(marginal));
  }
  results["marginal_entropies_bits"] = std::move(marginals);

  if (rho.reg().size() == 2) {
    results["mutual_information_bits"] = qadc::json_real(qadc::mutual_information(
        rho, {rho.reg()[0].name}, {rho.reg()[1].name}));
  }

  auto sd = qadc::spectral_decompose(rho.op());
  Json spectrum = Json::array();
  for (const auto& c : sd.clusters)
    spectrum.push_back(Json{{"eigenvalue", qadc::json_real(c.eigenvalue)}, {"multiplicity", c.multiplicity}});
  results["spectrum"] = std::move(spectrum);

  report["results"] = std::move(results);
  emit_report(report, out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// rate
// ---------------------------------------------------------------------------

int run_rate(const std::string& model_path, const std::string& strategy_path,
             const std::string& out_path) {
  Json report = report_skeleton("rate");
  report["inputs"]["model"] = qadc::digest_file(model_path);
  report["inputs"]["strategy"] = qadc::digest_file(strategy_path);

  auto model = qadc::model_from_json(qadc::load_json(model_path));
  auto strat = qadc::strategy_from_json(qadc::load_json(strategy_path));
  log_info("assembling joint states");
  auto bundle = qadc::assemble(model, strat);
  auto rate = qadc::achievable_rate(bundle);
  rate.model_digest = report["inputs"]["model"].get<std::string>();
  rate.strategy_digest = report["inputs"]["strategy"].get<std::string>();

  Json results = qadc::rate_report_to_json(rate);
  results["strategy"] = qadc::strategy_to_json(strat);
  report["results"] = std::move(results);
  emit_report(report, out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// optimize
// ---------------------------------------------------------------------------

int run_optimize(const std::string& model_path, const std::string& dims_spec, int restarts,
                 int iterations, std::uint64_t seed, int workers, const std::string& out_path) {
  Json report = report_skeleton("optimize");
  report["inputs"]["model"] = qadc::digest_file(model_path);
  report["seeds"].push_back(seed);

  auto model = qadc::model_from_json(qadc::load_json(model_path));
  int v_size, u_size;
  if (dims_spec.empty()) {
    // Heuristic ceiling: no cardinality bound is known for the auxiliaries.
    v_size = u_size = model.s_dim() * model.a_dim();
  } else {
    std::tie(v_size, u_size) = parse_dims(dims_spec);
  }
  qadc::OptimizerConfig config;
  config.restarts = restarts;
  config.iterations = iterations;
  config.seed = seed;
  config.workers = workers;
  log_info("optimizing over " + std::to_string(restarts) + " restarts");
  auto result = qadc::optimize_rate(model, v_size, u_size, config);

  Json results = qadc::rate_report_to_json(result.report);
  results["winning_restart"] = result.winning_restart;
  Json history = Json::array();
  for (double h : result.history) history.push_back(qadc::json_real(h));
  results["history"] = std::move(history);
  results["strategy"] = qadc::strategy_to_json(result.strategy);
  report["results"] = std::move(results);
  emit_report(report, out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

int run_simulate(const std::string& model_path, const std::string& strategy_path, std::int64_t m_count,
                 std::int64_t l_count, int trials, std::uint64_t seed, const std::string& mode,
                 int workers, const std::string& alpha_spec, const std::string& out_path) {
  Json report = report_skeleton("simulate");
  report["inputs"]["model"] = qadc::digest_file(model_path);
  report["inputs"]["strategy"] = qadc::digest_file(strategy_path);
  report["seeds"].push_back(seed);

  auto model = qadc::model_from_json(qadc::load_json(model_path));
  auto strat = qadc::strategy_from_json(qadc::load_json(strategy_path));
  qadc::CodeParams params(m_count, l_count);
  auto grid = parse_alpha_grid(alpha_spec);

  Json results;
  results["M"] = m_count;
  results["L"] = l_count;
  results["trials"] = trials;
  results["mode"] = mode;

  if (mode == "ideal_average") {
    log_info("running " + std::to_string(trials) + " codebook trials");
    auto mc = qadc::monte_carlo_expected_error(model, strat, params, trials, seed, workers, grid);
    results["monte_carlo"] = qadc::monte_carlo_report_to_json(mc);
  } else if (mode == "exact_uhlmann") {
    auto bundle = qadc::assemble(model, strat);
    qadc::DecoderBasis basis(bundle, params);
    Json per_trial = Json::array();
    for (int t = 0; t < trials; ++t) {
      std::uint64_t trial_seed = qadc::child_seed(seed, static_cast<std::uint64_t>(t));
      auto cb = qadc::sample_codebook(strat, params, trial_seed);
      auto decoder = qadc::build_decoder(basis, cb, params);
      auto sim = qadc::evaluate_error(model, strat, bundle, cb, decoder,
                                      qadc::EncoderMode::exact_uhlmann);
      per_trial.push_back(qadc::simulation_report_to_json(sim));
    }
    results["per_trial"] = std::move(per_trial);
  } else {
    throw qadc::ValidationError("--mode must be ideal_average or exact_uhlmann");
  }

  report["results"] = std::move(results);
  emit_report(report, out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const std::string& suite, std::uint64_t seed, int cases, const std::string& out_path) {
  Json report = report_skeleton("verify");
  report["seeds"].push_back(seed);
  bool all_pass = true;
  Json suites = Json::object();

  auto want = [&](const std::string& name) {
    return suite == name || suite == "lemmas" || suite == "all";
  };

  if (want("pinching")) {
    log_info("pinching suite");
    auto r = qadc::pinching_suite(seed, cases > 0 ? cases : 200);
    suites["pinching"] = Json{{"cases", r.cases},
                              {"min_inequality_slack", qadc::json_real(r.min_inequality_slack)},
                              {"max_commutator", qadc::json_real(r.max_commutator)},
                              {"max_selfadjoint_dev", qadc::json_real(r.max_selfadjoint_dev)},
                              {"pass", r.pass}};
    all_pass = all_pass && r.pass;
  }
  if (want("hayashi_nagaoka") || suite == "hn") {
    log_info("hayashi-nagaoka suite");
    auto r = qadc::hayashi_nagaoka_suite(seed, cases > 0 ? cases : 500);
    suites["hayashi_nagaoka"] =
        Json{{"cases", r.cases}, {"min_slack", qadc::json_real(r.min_slack)}, {"pass", r.pass}};
    all_pass = all_pass && r.pass;
  }
  if (want("lemma2")) {
    log_info("lemma2 suite");
    auto r = qadc::lemma2_suite(seed, cases > 0 ? cases : 50);
    suites["lemma2"] = Json{{"cases", r.cases},
                            {"max_miss_excess", qadc::json_real(r.max_miss_excess)},
                            {"max_confusion_excess", qadc::json_real(r.max_confusion_excess)},
                            {"pass", r.pass}};
    all_pass = all_pass && r.pass;
  }
  if (want("lemma1")) {
    log_info("lemma1 suite");
    auto r = qadc::lemma1_suite(seed, cases > 0 ? std::max(1, cases / 5) : 10, 500);
    Json cells = Json::array();
    for (const auto& c : r.cells)
      cells.push_back(Json{{"family", c.family},
                           {"L", c.subcodebook_size},
                           {"alpha", qadc::json_real(c.alpha)},
                           {"empirical_mean", qadc::json_real(c.empirical_mean)},
                           {"bound", qadc::json_real(c.bound)},
                           {"pass", c.pass}});
    suites["lemma1"] = Json{{"cells", std::move(cells)},
                            {"all_within_bound", r.all_within_bound},
                            {"monotone_in_size", r.monotone_in_size},
                            {"pass", r.pass}};
    all_pass = all_pass && r.pass;
  }
  if (suites.empty())
    throw qadc::ValidationError("unknown suite '" + suite +
                                "' (use pinching, hayashi_nagaoka, lemma1, lemma2, lemmas, all)");

  report["results"] = Json{{"pass", all_pass}, {"suites", std::move(suites)}};
  emit_report(report, out_path);
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qadc - achievable rates and one-shot coding for quantum action-dependent channels\n"
      "\n"
      "Exit codes: 0 success, 2 file parse error, 3 semantic/validation failure,\n"
      "4 register mismatch, 5 domain error (order/partition/distribution/range),\n"
      "6 dimension cap exceeded, 7 file I/O error, 9 internal error.\n"
      "Set QADC_LOG=1 for progress logging on stderr."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json-errors", g_json_errors, "Emit errors as JSON on stdout");

  std::string model_path, strategy_path, state_path, out_path, dims;
  std::string mode = "ideal_average", suite = "lemmas", alpha_grid;
  std::int64_t m_count = 2, l_count = 2;
  int trials = 100, restarts = 16, iterations = 40, workers = 1, cases = 0;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "Check model/strategy/state files");
  validate->add_option("--model", model_path, "Model JSON file");
  validate->add_option("--strategy", strategy_path, "Strategy JSON file");
  validate->add_option("--state", state_path, "State JSON file");
  validate->add_option("--out", out_path, "Write the report to a file");

  auto* info = app.add_subcommand("info", "Entropic quantities of a state file");
  info->add_option("--state", state_path, "State JSON file")->required();
  info->add_option("--out", out_path, "Write the report to a file");

  auto* rate = app.add_subcommand("rate", "Achievable rate of a model/strategy pair");
  rate->add_option("--model", model_path, "Model JSON file")->required();
  rate->add_option("--strategy", strategy_path, "Strategy JSON file")->required();
  rate->add_option("--out", out_path, "Write the report to a file");

  auto* optimize = app.add_subcommand("optimize", "Search for a high-rate strategy");
  optimize->add_option("--model", model_path, "Model JSON file")->required();
  optimize->add_option("--dims", dims,
                       "Auxiliary sizes, e.g. V=2,U=2 (default: dim(S)*dim(A) each)");
  optimize->add_option("--restarts", restarts, "Seeded restarts");
  optimize->add_option("--iterations", iterations, "Iterations per restart");
  optimize->add_option("--seed", seed, "Master seed");
  optimize->add_option("--workers", workers, "Worker threads (must not change results)");
  optimize->add_option("--out", out_path, "Write the report to a file");

  auto* simulate = app.add_subcommand("simulate", "One-shot random-coding simulation");
  simulate->add_option("--model", model_path, "Model JSON file")->required();
  simulate->add_option("--strategy", strategy_path, "Strategy JSON file")->required();
  simulate->add_option("--M", m_count, "Message count (power of two)");
  simulate->add_option("--L", l_count, "Subcodebook size (power of two)");
  simulate->add_option("--trials", trials, "Codebook trials");
  simulate->add_option("--seed", seed, "Master seed");
  simulate->add_option("--mode", mode, "ideal_average or exact_uhlmann");
  simulate->add_option("--workers", workers, "Worker threads (must not change results)");
  simulate->add_option("--alpha-grid", alpha_grid, "Comma-separated alphas in (0, 1/2)");
  simulate->add_option("--out", out_path, "Write the report to a file");

  auto* verify = app.add_subcommand("verify", "Randomized verification suites");
  verify->add_option("--suite", suite, "pinching, hayashi_nagaoka, lemma1, lemma2, lemmas, all");
  verify->add_option("--seed", seed, "Master seed");
  verify->add_option("--cases", cases, "Override the per-suite case count");
  verify->add_option("--out", out_path, "Write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return run_validate(model_path, strategy_path, state_path, out_path);
    if (*info) return run_info(state_path, out_path);
    if (*rate) return run_rate(model_path, strategy_path, out_path);
    if (*optimize)
      return run_optimize(model_path, dims, restarts, iterations, seed, workers, out_path);
    if (*simulate)
      return run_simulate(model_path, strategy_path, m_count, l_count, trials, seed, mode, workers,
                          alpha_grid, out_path);
    if (*verify) return run_verify(suite, seed, cases, out_path);
  } catch (const qadc::Error& e) {
    emit_error(e.code(), e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    emit_error("Internal", e.what());
    return 9;
  }
  return 0;
}
