#include "rqdyn/scenario_config.hpp"

#include <cmath>

namespace rqdyn {

namespace {

using nlohmann::json;

json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

json eigenvalues_json(const ComplexVector& values) {
  json out = json::array();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    out.push_back({{"re", values(i).real()}, {"im", values(i).imag()}});
  }
  return out;
}

json oscillation_json(const std::vector<OscillationMode>& modes) {
  json out = json::array();
  for (const auto& mode : modes) {
    out.push_back({{"damping", mode.damping},
                   {"frequency", mode.frequency},
                   {"period", mode.period}});
  }
  return out;
}

bool wants(const json& config, const std::string& series) {
  if (!config.contains("outputs")) return true;
  for (const auto& name : config.at("outputs")) {
    if (name == series) return true;
  }
  return false;
}

double param(const json& config, const std::string& key, double fallback) {
  if (!config.contains("parameters")) return fallback;
  const auto& p = config.at("parameters");
  if (!p.contains(key)) return fallback;
  if (!p.at(key).is_number()) {
    throw ConfigError("parameter '" + key + "' must be a number");
  }
  return p.at(key).get<double>();
}

bool flag(const json& config, const std::string& key, bool fallback) {
  if (!config.contains("parameters") || !config.at("parameters").contains(key)) {
    return fallback;
  }
  const auto& v = config.at("parameters").at(key);
  if (!v.is_boolean()) throw ConfigError("parameter '" + key + "' must be a boolean");
  return v.get<bool>();
}

void apply_time(const json& config, double& t_end, int& samples) {
  if (!config.contains("time")) return;
  const auto& t = config.at("time");
  if (t.contains("t_end")) {
    if (!t.at("t_end").is_number()) throw ConfigError("'time.t_end' must be a number");
    t_end = t.at("t_end").get<double>();
  }
  if (t.contains("samples")) {
    if (!t.at("samples").is_number_integer()) {
      throw ConfigError("'time.samples' must be an integer");
    }
    samples = t.at("samples").get<int>();
  }
}

Matrix with_time_column(const Vector& times, const Matrix& values) {
  Matrix out(values.rows(), values.cols() + 1);
  out.col(0) = times;
  out.rightCols(values.cols()) = values;
  return out;
}

ScenarioBundle bundle_mass_action_comparison(const json& config) {
  MassActionComparisonOptions options;
  options.k_f = param(config, "k_f", options.k_f);
  options.K_eq = param(config, "K_eq", options.K_eq);
  options.total_concentration =
      param(config, "total_concentration", options.total_concentration);
  if (config.contains("parameters") &&
      config.at("parameters").contains("initial_quotients")) {
    const Vector q0 =
        vector_from_json(config.at("parameters").at("initial_quotients"),
                         "initial_quotients");
    options.initial_quotients.assign(q0.begin(), q0.end());
  }
  apply_time(config, options.t_end, options.samples);

  const MassActionComparisonResult result = run_mass_action_comparison(options);

  ScenarioBundle bundle;
  bundle.scenario = "mass_action_comparison";

  std::vector<std::string> q_columns{"t"};
  for (double q0 : result.options.initial_quotients) {
    q_columns.push_back("Q_q0_" + format_double(q0));
  }
  if (wants(config, "log_linear")) {
    bundle.series.push_back(
        {"log_linear", q_columns, with_time_column(result.times, result.log_linear_Q)});
  }
  if (wants(config, "mass_action")) {
    bundle.series.push_back({"mass_action", q_columns,
                             with_time_column(result.times, result.mass_action_Q)});
  }
  if (wants(config, "network_oracle")) {
    bundle.series.push_back({"network_oracle", q_columns,
                             with_time_column(result.times, result.network_Q)});
  }
  if (wants(config, "concentrations")) {
    std::vector<std::string> c_columns{"t"};
    const Eigen::Index n_q0 =
        static_cast<Eigen::Index>(result.options.initial_quotients.size());
    Matrix c(result.times.size(), 2 * n_q0);
    for (Eigen::Index j = 0; j < n_q0; ++j) {
      const std::string suffix = format_double(result.options.initial_quotients[j]);
      c_columns.push_back("A_q0_" + suffix);
      c_columns.push_back("B_q0_" + suffix);
      c.col(2 * j) = result.species_a.col(j);
      c.col(2 * j + 1) = result.species_b.col(j);
    }
    bundle.series.push_back(
        {"concentrations", c_columns, with_time_column(result.times, c)});
  }

  bundle.summary = {
      {"scenario", bundle.scenario},
      {"matched_k", result.matched_k},
      {"K_eq", result.options.K_eq},
      {"k_f", result.options.k_f},
      {"initial_quotients", result.options.initial_quotients},
      {"max_rel_deviation", to_json(result.max_rel_deviation)},
      {"near_equilibrium_max_rel_deviation", result.near_equilibrium_max_rel_deviation},
      {"crossing_time_log_linear", to_json(result.crossing_time_log_linear)},
      {"crossing_time_mass_action", to_json(result.crossing_time_mass_action)},
  };
  return bundle;
}

ScenarioBundle bundle_feedback(const json& config) {
  FeedbackOptions options;
  options.k = param(config, "k", options.k);
  options.K_eq = param(config, "K_eq", options.K_eq);
  options.alpha = param(config, "alpha", options.alpha);
  options.u = param(config, "u", options.u);
  options.total_concentration =
      param(config, "total_concentration", options.total_concentration);
  options.Q0 = param(config, "Q0", options.Q0);
  options.u_sweep_max = param(config, "u_sweep_max", options.u_sweep_max);
  options.u_sweep_points =
      static_cast<int>(param(config, "u_sweep_points", options.u_sweep_points));
  apply_time(config, options.t_end, options.samples);

  const FeedbackResult result = run_feedback(options);

  ScenarioBundle bundle;
  bundle.scenario = "feedback";
  if (wants(config, "trajectory")) {
    Matrix values(result.times.size(), 3);
    values.col(0) = result.times;
    values.col(1) = result.Q;
    values.col(2) = result.B;
    bundle.series.push_back({"trajectory", {"t", "Q", "B"}, values});
  }
  if (wants(config, "steady_state_curve")) {
    Matrix curve(result.u_grid.size(), 2);
    curve.col(0) = result.u_grid;
    curve.col(1) = result.Q_ss_curve;
    bundle.series.push_back({"steady_state_curve", {"u", "Q_ss"}, curve});
  }
  bundle.summary = {
      {"scenario", bundle.scenario},
      {"k", result.options.k},
      {"K_eq", result.options.K_eq},
      {"alpha", result.options.alpha},
      {"u", result.options.u},
      {"total_concentration", result.options.total_concentration},
      {"Q_ss", result.Q_ss},
      {"B_ss", result.B_ss},
      {"sensitivity", result.sensitivity},
  };
  return bundle;
}

ScenarioBundle bundle_hexokinase(const json& config) {
  HexokinaseOptions options;
  options.k = param(config, "k", options.k);
  options.K_eq = param(config, "K_eq", options.K_eq);
  options.k_atp = param(config, "k_atp", options.k_atp);
  options.atp_adp_ratio = param(config, "atp_adp_ratio", options.atp_adp_ratio);
  options.total_concentration =
      param(config, "total_concentration", options.total_concentration);
  options.Q0 = param(config, "Q0", options.Q0);
  options.ratio_sweep_min = param(config, "ratio_sweep_min", options.ratio_sweep_min);
  options.ratio_sweep_max = param(config, "ratio_sweep_max", options.ratio_sweep_max);
  options.ratio_sweep_points =
      static_cast<int>(param(config, "ratio_sweep_points", options.ratio_sweep_points));
  apply_time(config, options.t_end, options.samples);

  const HexokinaseResult result = run_hexokinase(options);

  ScenarioBundle bundle;
  bundle.scenario = "hexokinase";
  if (wants(config, "trajectory")) {
    Matrix values(result.times.size(), 4);
    values.col(0) = result.times;
    values.col(1) = result.Q;
    values.col(2) = result.glucose;
    values.col(3) = result.g6p;
    bundle.series.push_back({"trajectory", {"t", "Q", "glucose", "g6p"}, values});
  }
  if (wants(config, "efficiency_curve")) {
    Matrix curve(result.ratio_grid.size(), 3);
    curve.col(0) = result.ratio_grid;
    curve.col(1) = result.Q_ss_curve;
    curve.col(2) = result.efficiency_curve;
    bundle.series.push_back(
        {"efficiency_curve", {"atp_adp_ratio", "Q_ss", "efficiency"}, curve});
  }
  bundle.summary = {
      {"scenario", bundle.scenario},
      {"k", result.options.k},
      {"K_eq", result.options.K_eq},
      {"k_atp", result.options.k_atp},
      {"atp_adp_ratio", result.options.atp_adp_ratio},
      {"drive", result.drive},
      {"Q_ss", result.Q_ss},
      {"efficiency", result.efficiency},
  };
  return bundle;
}

ScenarioBundle bundle_coupled_transport(const json& config) {
  CoupledTransportOptions options;
  if (config.contains("parameters")) {
    const auto& p = config.at("parameters");
    if (p.contains("x0")) options.x0 = vector_from_json(p.at("x0"), "x0");
    if (p.contains("totals")) options.totals = vector_from_json(p.at("totals"), "totals");
  }
  apply_time(config, options.t_end, options.samples);

  const CoupledTransportResult result = run_coupled_transport(options);

  ScenarioBundle bundle;
  bundle.scenario = "coupled_transport";
  if (wants(config, "trajectory")) {
    Matrix values(result.trajectory.samples(), 5);
    values.col(0) = result.trajectory.times;
    values.col(1) = result.trajectory.x.col(0);
    values.col(2) = result.trajectory.x.col(1);
    values.col(3) = result.trajectory.Q.col(0);
    values.col(4) = result.trajectory.Q.col(1);
    bundle.series.push_back({"trajectory", {"t", "x_1", "x_2", "Q_1", "Q_2"}, values});
  }
  if (wants(config, "concentrations")) {
    bundle.series.push_back(
        {"concentrations",
         {"t", "Na_out", "Na_in", "H_in", "H_out"},
         with_time_column(result.trajectory.times, result.concentrations)});
  }
  bundle.summary = {
      {"scenario", bundle.scenario},
      {"eigenvalues", eigenvalues_json(result.modes.eigenvalues)},
      {"overshoot_q2", result.overshoot_q2},
      {"monotone_q1", result.monotone_q1},
      {"overshoot_time", number_or_null(result.overshoot_time)},
      {"overshoot_extremum", number_or_null(result.overshoot_extremum)},
      {"x0", to_json(result.options.x0)},
      {"totals", to_json(result.options.totals)},
  };
  return bundle;
}

ScenarioBundle bundle_glycolysis(const json& config) {
  GlycolysisOptions options;
  options.u0 = param(config, "u0", options.u0);
  options.driven = flag(config, "driven", options.driven);
  options.total_concentration =
      param(config, "total_concentration", options.total_concentration);
  if (config.contains("parameters") && config.at("parameters").contains("x0")) {
    options.x0 = vector_from_json(config.at("parameters").at("x0"), "x0");
  }
  apply_time(config, options.t_end, options.samples);

  const GlycolysisResult result = run_glycolysis(options);

  ScenarioBundle bundle;
  bundle.scenario = "glycolysis";
  if (wants(config, "trajectory")) {
    Matrix values(result.trajectory.samples(), 5);
    values.col(0) = result.trajectory.times;
    values.col(1) = result.trajectory.x.col(0);
    values.col(2) = result.trajectory.x.col(1);
    values.col(3) = result.trajectory.Q.col(0);
    values.col(4) = result.trajectory.Q.col(1);
    bundle.series.push_back({"trajectory", {"t", "x_1", "x_2", "Q_1", "Q_2"}, values});
  }
  if (wants(config, "phase_portrait")) {
    Matrix phase(result.trajectory.samples(), 2);
    phase.col(0) = result.trajectory.x.col(0);
    phase.col(1) = result.trajectory.x.col(1);
    bundle.series.push_back({"phase_portrait", {"x_1", "x_2"}, phase});
  }
  if (wants(config, "concentrations")) {
    bundle.series.push_back(
        {"concentrations",
         {"t", "F6P", "FBP", "Products"},
         with_time_column(result.trajectory.times, result.concentrations)});
  }
  json oscillation = oscillation_json(result.oscillation);
  bundle.summary = {
      {"scenario", bundle.scenario},
      {"eigenvalues", eigenvalues_json(eigenmodes(result.system).eigenvalues)},
      {"oscillation", oscillation},
      {"driven", result.options.driven},
      {"u0", result.options.u0},
      {"steady_amplitude_x1", number_or_null(result.steady_amplitude_x1)},
      {"total_concentration", result.options.total_concentration},
  };
  return bundle;
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"mass_action_comparison", "feedback", "hexokinase", "coupled_transport",
          "glycolysis"};
}

nlohmann::json default_scenario_config(const std::string& name) {
  if (name == "mass_action_comparison") {
    return {{"scenario", name},
            {"parameters",
             {{"k_f", 1.0},
              {"K_eq", 2.0},
              {"initial_quotients", {0.5, 1.0, 4.0, 8.0}},
              {"total_concentration", 1.0}}},
            {"time", {{"t_end", 0.0}, {"samples", 500}}},
            {"outputs",
             {"log_linear", "mass_action", "network_oracle", "concentrations"}}};
  }
  if (name == "feedback") {
    return {{"scenario", name},
            {"parameters",
             {{"k", 1.0},
              {"K_eq", 1.0},
              {"alpha", 1.0},
              {"u", 3.0},
              {"total_concentration", 1.0},
              {"Q0", 1.0},
              {"u_sweep_max", 6.0},
              {"u_sweep_points", 61}}},
            {"time", {{"t_end", 8.0}, {"samples", 500}}},
            {"outputs", {"trajectory", "steady_state_curve"}}};
  }
  if (name == "hexokinase") {
    return {{"scenario", name},
            {"parameters",
             {{"k", 1.0},
              {"K_eq", 0.5},
              {"k_atp", 2.0},
              {"atp_adp_ratio", 10.0},
              {"total_concentration", 1.0},
              {"Q0", 0.5},
              {"ratio_sweep_min", 0.01},
              {"ratio_sweep_max", 100.0},
              {"ratio_sweep_points", 81}}},
            {"time", {{"t_end", 8.0}, {"samples", 500}}},
            {"outputs", {"trajectory", "efficiency_curve"}}};
  }
  if (name == "coupled_transport") {
    return {{"scenario", name},
            {"parameters", {{"x0", {2.0, 0.5}}, {"totals", {1.0, 1.0}}}},
            {"time", {{"t_end", 10.0}, {"samples", 500}}},
            {"outputs", {"trajectory", "concentrations"}}};
  }
  if (name == "glycolysis") {
    return {{"scenario", name},
            {"parameters",
             {{"u0", 1.0},
              {"driven", true},
              {"x0", {1.0, 0.0}},
              {"total_concentration", 3.0}}},
            {"time", {{"t_end", 30.0}, {"samples", 3000}}},
            {"outputs", {"trajectory", "phase_portrait", "concentrations"}}};
  }
  throw ConfigError("unknown scenario '" + name + "'");
}

ScenarioBundle run_scenario(const nlohmann::json& config) {
  if (!config.contains("scenario") || !config.at("scenario").is_string()) {
    throw ConfigError("scenario config needs a 'scenario' name");
  }
  const std::string name = config.at("scenario").get<std::string>();
  try {
    if (name == "mass_action_comparison") return bundle_mass_action_comparison(config);
    if (name == "feedback") return bundle_feedback(config);
    if (name == "hexokinase") return bundle_hexokinase(config);
    if (name == "coupled_transport") return bundle_coupled_transport(config);
    if (name == "glycolysis") return bundle_glycolysis(config);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown scenario '" + name + "'");
}

}  // namespace rqdyn
