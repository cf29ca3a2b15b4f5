// Command-line front end: loads network/system/scenario configs, runs the
// solvers, and emits CSV series plus machine-readable JSON summaries.

#include "rqdyn/io.hpp"
#include "rqdyn/reconstruct.hpp"
#include "rqdyn/scenario_config.hpp"
#include "rqdyn/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

void compare_json(const json& fresh, const json& stored, const std::string& path,
                  std::vector<std::string>& issues) {
  if (fresh.is_number() && stored.is_number()) {
    const double a = fresh.get<double>();
    const double b = stored.get<double>();
    if (std::abs(a - b) > 1e-9 * std::max({1.0, std::abs(a), std::abs(b)})) {
      issues.push_back(path + ": " + rqdyn::format_double(b) + " -> " +
                       rqdyn::format_double(a));
    }
    return;
  }
  if (fresh.type() != stored.type()) {
    issues.push_back(path + ": type changed");
    return;
  }
  if (fresh.is_object()) {
    for (const auto& [key, value] : fresh.items()) {
      if (!stored.contains(key)) {
        issues.push_back(path + "." + key + ": missing from stored summary");
      } else {
        compare_json(value, stored.at(key), path + "." + key, issues);
      }
    }
    for (const auto& [key, value] : stored.items()) {
      if (!fresh.contains(key)) issues.push_back(path + "." + key + ": stale key");
    }
    return;
  }
  if (fresh.is_array()) {
    if (fresh.size() != stored.size()) {
      issues.push_back(path + ": length changed");
      return;
    }
    for (size_t i = 0; i < fresh.size(); ++i) {
      compare_json(fresh[i], stored[i], path + "[" + std::to_string(i) + "]", issues);
    }
    return;
  }
  if (fresh != stored) issues.push_back(path + ": value changed");
}

/// Collects output files and writes summary + manifest; in validate mode it
/// writes nothing and instead compares the fresh summary against the stored one.
class RunOutput {
 public:
  RunOutput(std::string command, fs::path dir, bool validate, json resolved_config)
      : command_(std::move(command)),
        dir_(std::move(dir)),
        validate_(validate),
        config_(std::move(resolved_config)),
        start_(std::chrono::steady_clock::now()) {
    if (!validate_) fs::create_directories(dir_);
  }

  void emit_csv(const std::string& name, const std::vector<std::string>& columns,
                const rqdyn::Matrix& values) {
    if (validate_) return;
    rqdyn::write_csv(dir_ / name, columns, values);
    files_.push_back(name);
  }

  void emit_text(const std::string& name, const std::string& content) {
    if (validate_) return;
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw rqdyn::ConfigError("cannot write file: " + (dir_ / name).string());
    out << content;
    files_.push_back(name);
  }

  int finish(const json& summary) {
    if (validate_) {
      const json stored = rqdyn::load_json_file(dir_ / "summary.json");
      std::vector<std::string> issues;
      compare_json(summary, stored, "summary", issues);
      if (issues.empty()) {
        std::cout << "validation passed: " << (dir_ / "summary.json").string() << "\n";
        return 0;
      }
      std::cerr << "validation failed (" << issues.size() << " mismatches):\n";
      for (const auto& issue : issues) std::cerr << "  " << issue << "\n";
      return kExitNumericalError;
    }

    {
      std::ofstream out(dir_ / "summary.json", std::ios::binary);
      if (!out) throw rqdyn::ConfigError("cannot write summary.json");
      out << summary.dump(2) << "\n";
      files_.push_back("summary.json");
    }
    const double duration =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    files_.push_back("manifest.json");
    const json manifest = {{"command", command_},   {"version", rqdyn::kVersion},
                           {"config", config_},     {"output_dir", dir_.string()},
                           {"files", files_},       {"duration_seconds", duration}};
    std::ofstream out(dir_ / "manifest.json", std::ios::binary);
    if (!out) throw rqdyn::ConfigError("cannot write manifest.json");
    out << manifest.dump(2) << "\n";
    return 0;
  }

 private:
  std::string command_;
  fs::path dir_;
  bool validate_;
  json config_;
  std::vector<std::string> files_;
  std::chrono::steady_clock::time_point start_;
};

json eigen_report(const rqdyn::LogLinearSystem& sys) {
  const auto modes = rqdyn::eigenmodes(sys);
  json values = json::array();
  for (Eigen::Index i = 0; i < modes.eigenvalues.size(); ++i) {
    values.push_back({{"re", modes.eigenvalues(i).real()},
                      {"im", modes.eigenvalues(i).imag()}});
  }
  json mode_list = json::array();
  for (Eigen::Index c = 0; c < modes.modes.cols(); ++c) {
    json column = json::array();
    for (Eigen::Index r = 0; r < modes.modes.rows(); ++r) {
      column.push_back({{"re", modes.modes(r, c).real()},
                        {"im", modes.modes(r, c).imag()}});
    }
    mode_list.push_back(column);
  }
  json oscillation = json::array();
  for (const auto& mode : rqdyn::oscillation_parameters(sys)) {
    oscillation.push_back({{"damping", mode.damping},
                           {"frequency", mode.frequency},
                           {"period", mode.period}});
  }
  return {{"eigenvalues", values},
          {"modes", mode_list},
          {"symmetric", modes.symmetric},
          {"oscillation", oscillation}};
}

struct SystemConfig {
  rqdyn::LogLinearSystem system;
  rqdyn::Vector x0;
  rqdyn::ControlInput control;
  double t_end;
  int samples;
  double dt_max;
};

SystemConfig resolve_system_config(const json& config, double t_end_override,
                                   int samples_override, double dt_max_override) {
  if (!config.contains("system")) {
    throw rqdyn::ConfigError("config needs a 'system' object");
  }
  rqdyn::LogLinearSystem system = rqdyn::system_from_json(config.at("system"));
  const int r = system.size();

  rqdyn::Vector x0;
  if (config.contains("x0") && config.contains("Q0")) {
    throw rqdyn::ConfigError("give either 'x0' or 'Q0', not both");
  }
  if (config.contains("x0")) {
    x0 = rqdyn::vector_from_json(config.at("x0"), "x0");
  } else if (config.contains("Q0")) {
    const rqdyn::Vector q0 = rqdyn::vector_from_json(config.at("Q0"), "Q0");
    if (q0.size() != r) throw rqdyn::ConfigError("'Q0' dimension mismatch");
    if ((q0.array() <= 0.0).any()) {
      throw rqdyn::ConfigError("'Q0' entries must be positive");
    }
    x0 = (q0.array() / system.K_eq.array()).log();
  } else {
    throw rqdyn::ConfigError("config needs an initial state 'x0' or 'Q0'");
  }
  if (x0.size() != r) throw rqdyn::ConfigError("'x0' dimension mismatch");

  rqdyn::ControlInput control = config.contains("control")
                                    ? rqdyn::control_from_json(config.at("control"), r)
                                    : rqdyn::ControlInput::zero(r);
  if (control.dim() != r) throw rqdyn::ConfigError("control dimension mismatch");

  double t_end = 10.0;
  int samples = 500;
  if (config.contains("time")) {
    const auto& t = config.at("time");
    try {
      if (t.contains("t_end")) t_end = t.at("t_end").get<double>();
      if (t.contains("samples")) samples = t.at("samples").get<int>();
    } catch (const json::exception& e) {
      throw rqdyn::ConfigError(std::string("malformed 'time' object: ") + e.what());
    }
  }
  if (t_end_override >= 0.0) t_end = t_end_override;
  if (samples_override > 0) samples = samples_override;

  double dt_max = config.value("dt_max", 0.0);
  if (dt_max_override > 0.0) dt_max = dt_max_override;

  if (!(t_end >= 0.0) || samples < 1) {
    throw rqdyn::ConfigError("'time' must satisfy t_end >= 0 and samples >= 1");
  }
  return {std::move(system), std::move(x0), std::move(control), t_end, samples, dt_max};
}

json system_json(const rqdyn::LogLinearSystem& sys) {
  return {{"K", rqdyn::to_json(sys.K)}, {"K_eq", rqdyn::to_json(sys.K_eq)}};
}

void deep_merge(json& base, const json& patch) {
  if (!base.is_object() || !patch.is_object()) {
    base = patch;
    return;
  }
  for (const auto& [key, value] : patch.items()) {
    if (base.contains(key) && base.at(key).is_object() && value.is_object()) {
      deep_merge(base.at(key), value);
    } else {
      base[key] = value;
    }
  }
}

std::vector<std::string> trajectory_columns(int r) {
  std::vector<std::string> columns{"t"};
  for (int i = 1; i <= r; ++i) columns.push_back("x_" + std::to_string(i));
  for (int i = 1; i <= r; ++i) columns.push_back("Q_" + std::to_string(i));
  return columns;
}

rqdyn::Matrix trajectory_table(const rqdyn::Trajectory& traj) {
  const int r = static_cast<int>(traj.x.cols());
  rqdyn::Matrix table(traj.samples(), 1 + 2 * r);
  table.col(0) = traj.times;
  table.middleCols(1, r) = traj.x;
  table.middleCols(1 + r, r) = traj.Q;
  return table;
}

int cmd_simulate(const std::string& config_path, const fs::path& out_dir,
                 bool validate, double t_end, int samples, double dt_max) {
  json config = rqdyn::load_json_file(config_path);
  SystemConfig resolved = resolve_system_config(config, t_end, samples, dt_max);

  config["time"] = {{"t_end", resolved.t_end}, {"samples", resolved.samples}};
  RunOutput output("simulate", out_dir, validate, config);

  const bool stable = resolved.system.stable();
  if (!stable) {
    std::cerr << "warning: K has eigenvalues with non-positive real part; "
                 "the trajectory may grow\n";
  }

  const rqdyn::Vector grid = rqdyn::make_time_grid(resolved.t_end, resolved.samples);
  rqdyn::SimulateOptions options;
  options.dt_max = resolved.dt_max;
  const rqdyn::Trajectory traj =
      rqdyn::simulate(resolved.system, resolved.x0, resolved.control, grid, options);

  output.emit_csv("trajectory.csv", trajectory_columns(resolved.system.size()),
                  trajectory_table(traj));

  const json summary = {
      {"command", "simulate"},
      {"system", system_json(resolved.system)},
      {"stable", stable},
      {"x0", rqdyn::to_json(resolved.x0)},
      {"t_end", resolved.t_end},
      {"samples", traj.samples()},
      {"final_x", rqdyn::to_json(rqdyn::Vector(traj.x.row(traj.samples() - 1)))},
      {"final_Q", rqdyn::to_json(rqdyn::Vector(traj.Q.row(traj.samples() - 1)))},
  };
  return output.finish(summary);
}

int cmd_steady_state(const std::string& config_path, const std::string& u_text,
                     const fs::path& out_dir, bool validate) {
  json config = rqdyn::load_json_file(config_path);
  if (!config.contains("system")) {
    throw rqdyn::ConfigError("config needs a 'system' object");
  }
  const rqdyn::LogLinearSystem system = rqdyn::system_from_json(config.at("system"));

  rqdyn::Vector u;
  if (!u_text.empty()) {
    u = rqdyn::parse_vector(u_text);
  } else if (config.contains("control")) {
    const rqdyn::ControlInput control =
        rqdyn::control_from_json(config.at("control"), system.size());
    if (!control.is_constant()) {
      throw rqdyn::ConfigError("steady-state needs a constant drive");
    }
    u = control.constant_value();
  } else {
    u = rqdyn::Vector::Zero(system.size());
  }
  if (u.size() != system.size()) {
    throw rqdyn::ConfigError("drive dimension does not match the system");
  }

  json config_resolved = config;
  config_resolved["u"] = rqdyn::to_json(u);
  RunOutput output("steady-state", out_dir, validate, config_resolved);

  const rqdyn::SteadyState ss = rqdyn::steady_state(system, u);
  std::cout << "x_ss =";
  for (Eigen::Index i = 0; i < ss.x_ss.size(); ++i) {
    std::cout << " " << rqdyn::format_double(ss.x_ss(i));
  }
  std::cout << "\nQ_ss =";
  for (Eigen::Index i = 0; i < ss.Q_ss.size(); ++i) {
    std::cout << " " << rqdyn::format_double(ss.Q_ss(i));
  }
  std::cout << "\n";

  const json summary = {{"command", "steady-state"},
                        {"system", system_json(system)},
                        {"u", rqdyn::to_json(u)},
                        {"x_ss", rqdyn::to_json(ss.x_ss)},
                        {"Q_ss", rqdyn::to_json(ss.Q_ss)}};
  return output.finish(summary);
}

int cmd_eigen(const std::string& config_path, const fs::path& out_dir, bool validate) {
  const json config = rqdyn::load_json_file(config_path);
  if (!config.contains("system")) {
    throw rqdyn::ConfigError("config needs a 'system' object");
  }
  const rqdyn::LogLinearSystem system = rqdyn::system_from_json(config.at("system"));
  RunOutput output("eigen", out_dir, validate, config);

  const json report = eigen_report(system);
  for (const auto& value : report.at("eigenvalues")) {
    std::cout << "lambda = " << rqdyn::format_double(value.at("re").get<double>());
    const double im = value.at("im").get<double>();
    if (im != 0.0) {
      std::cout << (im > 0 ? " + " : " - ") << rqdyn::format_double(std::abs(im))
                << "i";
    }
    std::cout << "\n";
  }
  for (const auto& mode : report.at("oscillation")) {
    std::cout << "oscillation: damping "
              << rqdyn::format_double(mode.at("damping").get<double>())
              << " 1/s, frequency "
              << rqdyn::format_double(mode.at("frequency").get<double>())
              << " rad/s, period "
              << rqdyn::format_double(mode.at("period").get<double>()) << " s\n";
  }

  json summary = {{"command", "eigen"},
                  {"system", system_json(system)},
                  {"stable", system.stable()}};
  summary.update(report);
  return output.finish(summary);
}

int cmd_reconstruct(const std::string& network_path, const std::string& x_text,
                    const std::string& y_text, const fs::path& out_dir, bool validate) {
  const json network_doc = rqdyn::load_json_file(network_path);
  const rqdyn::Network net = rqdyn::network_from_json(network_doc);

  rqdyn::ReconstructionProblem problem;
  problem.net = net;
  problem.x_star = rqdyn::parse_vector(x_text);
  problem.y_star = y_text.empty() ? rqdyn::Vector(0) : rqdyn::parse_vector(y_text);
  if (problem.x_star.size() != net.reaction_count()) {
    throw rqdyn::ConfigError("--x-star length must equal the reaction count");
  }
  const int m = rqdyn::conservation_basis(net).dimension();
  if (problem.y_star.size() != m) {
    throw rqdyn::ConfigError("--y-star length must equal the conservation dimension (" +
                             std::to_string(m) + ")");
  }

  const json config = {{"network", network_doc},
                       {"x_star", rqdyn::to_json(problem.x_star)},
                       {"y_star", rqdyn::to_json(problem.y_star)}};
  RunOutput output("reconstruct", out_dir, validate, config);

  const rqdyn::ReconstructionResult result = rqdyn::reconstruct_concentrations(problem);

  std::string csv = "species,concentration\n";
  json named;
  for (int i = 0; i < net.species_count(); ++i) {
    csv += net.species[i] + "," + rqdyn::format_double(result.c_star(i)) + "\n";
    named[net.species[i]] = result.c_star(i);
    std::cout << net.species[i] << " = " << rqdyn::format_double(result.c_star(i))
              << "\n";
  }
  output.emit_text("concentrations.csv", csv);

  const json summary = {{"command", "reconstruct"},
                        {"concentrations", named},
                        {"c_star", rqdyn::to_json(result.c_star)},
                        {"alpha_star", rqdyn::to_json(result.alpha_star)},
                        {"iterations", result.iterations},
                        {"residual_totals", result.residual_totals},
                        {"residual_quotients", result.residual_quotients}};
  return output.finish(summary);
}

int cmd_check(const std::string& network_path, const std::string& keq_text,
              const std::string& x_text, const fs::path& out_dir, bool validate) {
  const json network_doc = rqdyn::load_json_file(network_path);
  const rqdyn::Network net = rqdyn::network_from_json(network_doc);
  const rqdyn::Vector k_eq = rqdyn::parse_vector(keq_text);
  if (k_eq.size() != net.reaction_count()) {
    throw rqdyn::ConfigError("--keq length must equal the reaction count");
  }
  if ((k_eq.array() <= 0.0).any()) {
    throw rqdyn::ConfigError("--keq entries must be positive");
  }

  json config = {{"network", network_doc}, {"K_eq", rqdyn::to_json(k_eq)}};
  if (!x_text.empty()) config["x"] = rqdyn::to_json(rqdyn::parse_vector(x_text));
  RunOutput output("check", out_dir, validate, config);

  const rqdyn::WegscheiderCheck cycles = rqdyn::wegscheider_check(net, k_eq);
  const rqdyn::AchievabilityCheck keq_achievable =
      rqdyn::check_quotient_achievable(net, k_eq.array().log());

  std::cout << (cycles.consistent ? "consistent" : "inconsistent") << "\n";
  std::cout << "worst cycle violation |nu . ln K_eq| = "
            << rqdyn::format_double(cycles.worst_violation) << "\n";

  json summary = {{"command", "check"},
                  {"consistent", cycles.consistent},
                  {"worst_cycle_violation", cycles.worst_violation},
                  {"conservation_dimension", rqdyn::conservation_basis(net).dimension()},
                  {"ln_keq_achievable", keq_achievable.achievable},
                  {"ln_keq_residual", keq_achievable.residual}};

  if (!x_text.empty()) {
    const rqdyn::Vector x = rqdyn::parse_vector(x_text);
    if (x.size() != net.reaction_count()) {
      throw rqdyn::ConfigError("--x length must equal the reaction count");
    }
    const rqdyn::AchievabilityCheck ach = rqdyn::check_quotient_achievable(net, x);
    std::cout << "x " << (ach.achievable ? "achievable" : "not achievable")
              << " (residual " << rqdyn::format_double(ach.residual) << ")\n";
    summary["x_achievable"] = ach.achievable;
    summary["x_residual"] = ach.residual;
  }
  return output.finish(summary);
}

int cmd_scenario(const std::string& name, const std::string& config_path,
                 const std::vector<std::string>& sets, const fs::path& out_dir,
                 bool validate, double t_end, int samples) {
  json config = rqdyn::default_scenario_config(name);
  if (!config_path.empty()) {
    const json patch = rqdyn::load_json_file(config_path);
    deep_merge(config, patch);
  }
  for (const auto& assignment : sets) {
    const auto pos = assignment.find('=');
    if (pos == std::string::npos) {
      throw rqdyn::ConfigError("--set expects key=value, got '" + assignment + "'");
    }
    const std::string key = assignment.substr(0, pos);
    const std::string value = assignment.substr(pos + 1);
    if (value == "true" || value == "false") {
      config["parameters"][key] = (value == "true");
    } else {
      config["parameters"][key] = rqdyn::parse_vector(value)(0);
    }
  }
  if (t_end >= 0.0) config["time"]["t_end"] = t_end;
  if (samples > 0) config["time"]["samples"] = samples;
  if (config.at("scenario").get<std::string>() != name) {
    throw rqdyn::ConfigError("config file targets scenario '" +
                             config.at("scenario").get<std::string>() + "', not '" +
                             name + "'");
  }

  RunOutput output("scenario " + name, out_dir, validate, config);
  const rqdyn::ScenarioBundle bundle = rqdyn::run_scenario(config);
  for (const auto& series : bundle.series) {
    output.emit_csv(series.name + ".csv", series.columns, series.values);
  }
  std::cout << bundle.summary.dump(2) << "\n";
  return output.finish(bundle.summary);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log-linear reaction-quotient dynamics toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rqdyn::kVersion));
  int seed = 0;
  app.add_option("--seed", seed, "reserved; the tool uses no randomness");

  std::string config_path;
  std::string network_path;
  std::string out_dir = ".";
  std::string u_text;
  std::string x_star_text;
  std::string y_star_text;
  std::string keq_text;
  std::string x_text;
  std::string scenario_name;
  std::string scenario_config;
  std::vector<std::string> sets;
  bool validate = false;
  double t_end = -1.0;
  int samples = -1;
  double dt_max = 0.0;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
    cmd->add_flag("--validate", validate,
                  "recompute and compare against the stored summary.json");
  };

  auto* sim = app.add_subcommand("simulate", "integrate d ln Q/dt = -K ln(Q/K_eq) + u");
  sim->add_option("--config", config_path, "system config JSON")->required();
  sim->add_option("--t-end", t_end, "override time horizon (s)");
  sim->add_option("--samples", samples, "override sample count");
  sim->add_option("--dt-max", dt_max, "override internal RK4 step bound (s)");
  add_common(sim);

  auto* ss = app.add_subcommand("steady-state", "solve K x = u and report Q_ss");
  ss->add_option("--config", config_path, "system config JSON")->required();
  ss->add_option("--u", u_text, "constant drive (comma-separated)");
  add_common(ss);

  auto* eigen_cmd = app.add_subcommand("eigen", "eigenmode and oscillation report");
  eigen_cmd->add_option("--config", config_path, "system config JSON")->required();
  add_common(eigen_cmd);

  auto* rec = app.add_subcommand(
      "reconstruct", "concentrations from log-quotients and conserved totals");
  rec->add_option("--network", network_path, "network JSON")->required();
  rec->add_option("--x-star", x_star_text, "target log-quotients (comma-separated)")
      ->required();
  rec->add_option("--y-star", y_star_text, "target conserved totals (comma-separated)");
  add_common(rec);

  auto* scen = app.add_subcommand("scenario", "run a built-in scenario preset");
  scen->add_option("name", scenario_name,
                   "one of: mass_action_comparison, feedback, hexokinase, "
                   "coupled_transport, glycolysis")
      ->required();
  scen->add_option("--config", scenario_config,
                   "scenario config JSON (merged over the preset defaults)");
  scen->add_option("--set", sets, "override one parameter, e.g. --set atp_adp_ratio=10");
  scen->add_option(
      "--ratio",
      [&sets](const std::vector<std::string>& v) {
        sets.push_back("atp_adp_ratio=" + v[0]);
        return true;
      },
      "hexokinase ATP/ADP ratio");
  scen->add_option(
      "--alpha",
      [&sets](const std::vector<std::string>& v) {
        sets.push_back("alpha=" + v[0]);
        return true;
      },
      "feedback strength");
  scen->add_option(
      "--u",
      [&sets](const std::vector<std::string>& v) {
        sets.push_back("u=" + v[0]);
        return true;
      },
      "constant drive");
  scen->add_option(
      "--u0",
      [&sets](const std::vector<std::string>& v) {
        sets.push_back("u0=" + v[0]);
        return true;
      },
      "drive amplitude");
  scen->add_option(
      "--c-total",
      [&sets](const std::vector<std::string>& v) {
        sets.push_back("total_concentration=" + v[0]);
        return true;
      },
      "conserved pool total");
  scen->add_flag_callback("--driven", [&sets] { sets.push_back("driven=true"); },
                          "enable the sinusoidal drive (glycolysis)");
  scen->add_flag_callback("--undriven", [&sets] { sets.push_back("driven=false"); },
                          "disable the drive (glycolysis)");
  scen->add_option("--t-end", t_end, "override time horizon (s)");
  scen->add_option("--samples", samples, "override sample count");
  add_common(scen);

  auto* check = app.add_subcommand("check", "thermodynamic consistency report");
  check->add_option("--network", network_path, "network JSON")->required();
  check->add_option("--keq", keq_text, "equilibrium constants (comma-separated)")
      ->required();
  check->add_option("--x", x_text, "log-quotient target to test for achievability");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (app.got_subcommand(sim)) {
      return cmd_simulate(config_path, out_dir, validate, t_end, samples, dt_max);
    }
    if (app.got_subcommand(ss)) {
      return cmd_steady_state(config_path, u_text, out_dir, validate);
    }
    if (app.got_subcommand(eigen_cmd)) {
      return cmd_eigen(config_path, out_dir, validate);
    }
    if (app.got_subcommand(rec)) {
      return cmd_reconstruct(network_path, x_star_text, y_star_text, out_dir, validate);
    }
    if (app.got_subcommand(scen)) {
      return cmd_scenario(scenario_name, scenario_config, sets, out_dir, validate,
                          t_end, samples);
    }
    if (app.got_subcommand(check)) {
      return cmd_check(network_path, keq_text, x_text, out_dir, validate);
    }
  } catch (const rqdyn::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const rqdyn::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalError;
  }
  return 0;
}
