#include "rqdyn/scenarios.hpp"

#include <algorithm>
#include <cmath>

namespace rqdyn {

namespace {

/// First time the series reaches `target`, linearly interpolated between
/// samples; NaN when it never does.
double first_crossing_time(const Vector& times, const Vector& q, double target) {
  const double tol = 1e-12 * std::max(1.0, std::abs(target));
  if (std::abs(q(0) - target) <= tol) return times(0);
  const bool from_above = q(0) > target;
  for (Eigen::Index i = 1; i < q.size(); ++i) {
    if (std::abs(q(i) - target) <= tol) return times(i);
    if ((q(i) < target) == from_above) {
      const double w = (target - q(i - 1)) / (q(i) - q(i - 1));
      return times(i - 1) + w * (times(i) - times(i - 1));
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

/// Concentrations along a trajectory for fixed conserved totals.
Matrix reconstruct_along(const Network& net, const Matrix& L, const Vector& y_star,
                         const Matrix& x_samples) {
  Matrix c(x_samples.rows(), net.species_count());
  for (Eigen::Index i = 0; i < x_samples.rows(); ++i) {
    const Vector c0 = base_point(net, x_samples.row(i).transpose());
    c.row(i) = reconstruct_from_base(net, L, c0, y_star, {}).c_star.transpose();
  }
  return c;
}

double steady_amplitude(const Trajectory& traj, int column, double period) {
  const double t_from = traj.times(traj.samples() - 1) - period;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (Eigen::Index i = 0; i < traj.samples(); ++i) {
    if (traj.times(i) >= t_from - 1e-12) {
      lo = std::min(lo, traj.x(i, column));
      hi = std::max(hi, traj.x(i, column));
    }
  }
  return 0.5 * (hi - lo);
}

}  // namespace

MassActionComparisonResult run_mass_action_comparison(
    const MassActionComparisonOptions& options) {
  if (options.initial_quotients.empty()) {
    throw std::invalid_argument("mass_action_comparison: no initial quotients");
  }
  if (!(options.total_concentration > 0.0)) {
    throw std::invalid_argument("mass_action_comparison: total concentration must be positive");
  }
  const MassActionAB ab(options.k_f, options.k_f / options.K_eq);
  const double k = matched_rate(ab);

  MassActionComparisonResult result;
  result.options = options;
  result.matched_k = k;
  const double t_end = options.t_end > 0.0 ? options.t_end : 10.0 / k;
  result.times = make_time_grid(t_end, options.samples);

  const Network net = build_network(
      {"A", "B"}, {{"forward", {{"A", -1.0}, {"B", 1.0}}}});
  const Vector kf = Vector::Constant(1, options.k_f);
  const Vector kr = Vector::Constant(1, ab.k_r);

  const int n_q0 = static_cast<int>(options.initial_quotients.size());
  const int n_t = static_cast<int>(result.times.size());
  result.log_linear_Q.resize(n_t, n_q0);
  result.mass_action_Q.resize(n_t, n_q0);
  result.network_Q.resize(n_t, n_q0);
  result.species_a.resize(n_t, n_q0);
  result.species_b.resize(n_t, n_q0);
  result.max_rel_deviation.resize(n_q0);
  result.crossing_time_log_linear.resize(n_q0);
  result.crossing_time_mass_action.resize(n_q0);

  const auto deviation = [&](double q0) {
    const QuotientTrajectory ma = simulate_ab_quotient(ab, q0, result.times);
    double dev = 0.0;
    for (int i = 0; i < n_t; ++i) {
      const double ll = single_solution(k, options.K_eq, q0, result.times(i));
      dev = std::max(dev, std::abs(ll - ma.Q(i)) / ma.Q(i));
    }
    return dev;
  };

  for (int j = 0; j < n_q0; ++j) {
    const double q0 = options.initial_quotients[j];
    if (!(q0 > 0.0)) {
      throw std::invalid_argument("mass_action_comparison: initial quotients must be positive");
    }
    for (int i = 0; i < n_t; ++i) {
      result.log_linear_Q(i, j) = single_solution(k, options.K_eq, q0, result.times(i));
    }
    result.mass_action_Q.col(j) = simulate_ab_quotient(ab, q0, result.times).Q;

    const double c_total = options.total_concentration;
    Vector c0(2);
    c0 << c_total / (1.0 + q0), c_total * q0 / (1.0 + q0);
    const MassActionTrajectory nt = simulate_mass_action_network(net, kf, kr, c0, result.times);
    result.network_Q.col(j) = nt.Q.col(0);
    result.species_a.col(j) = nt.c.col(0);
    result.species_b.col(j) = nt.c.col(1);

    result.max_rel_deviation(j) =
        ((result.log_linear_Q.col(j) - result.mass_action_Q.col(j)).array().abs() /
         result.mass_action_Q.col(j).array())
            .maxCoeff();
    const double midpoint = std::sqrt(q0 * options.K_eq);
    result.crossing_time_log_linear(j) =
        first_crossing_time(result.times, result.log_linear_Q.col(j), midpoint);
    result.crossing_time_mass_action(j) =
        first_crossing_time(result.times, result.mass_action_Q.col(j), midpoint);
  }

  result.near_equilibrium_max_rel_deviation =
      std::max(deviation(0.9 * options.K_eq), deviation(1.1 * options.K_eq));
  return result;
}

FeedbackResult run_feedback(const FeedbackOptions& options) {
  if (!(options.k + options.alpha > 0.0)) {
    throw std::invalid_argument("feedback: effective rate k + alpha must be positive");
  }
  if (!(options.total_concentration > 0.0)) {
    throw std::invalid_argument("feedback: total concentration must be positive");
  }
  if (!(options.Q0 > 0.0) || !(options.K_eq > 0.0)) {
    throw std::invalid_argument("feedback: Q0 and K_eq must be positive");
  }
  const double k_eff = options.k + options.alpha;

  FeedbackResult result;
  result.options = options;
  result.times = make_time_grid(options.t_end, options.samples);

  const LogLinearSystem sys(Matrix::Constant(1, 1, k_eff),
                            Vector::Constant(1, options.K_eq));
  Vector x0(1);
  x0 << std::log(options.Q0 / options.K_eq);
  const Trajectory traj =
      simulate(sys, x0, ControlInput::constant(Vector::Constant(1, options.u)),
               result.times);
  result.Q = traj.Q.col(0);
  result.B = options.total_concentration * result.Q.array() / (1.0 + result.Q.array());

  result.u_grid = Vector::LinSpaced(options.u_sweep_points, 0.0, options.u_sweep_max);
  result.Q_ss_curve = options.K_eq * (result.u_grid / k_eff).array().exp();
  result.Q_ss = options.K_eq * std::exp(options.u / k_eff);
  result.B_ss = options.total_concentration * result.Q_ss / (1.0 + result.Q_ss);
  result.sensitivity = result.Q_ss / k_eff;
  return result;
}

HexokinaseResult run_hexokinase(const HexokinaseOptions& options) {
  if (!(options.atp_adp_ratio > 0.0)) {
    throw std::invalid_argument("hexokinase: ATP/ADP ratio must be positive");
  }
  if (!(options.k > 0.0) || !(options.K_eq > 0.0) || !(options.Q0 > 0.0)) {
    throw std::invalid_argument("hexokinase: k, K_eq and Q0 must be positive");
  }
  if (!(options.total_concentration > 0.0)) {
    throw std::invalid_argument("hexokinase: total concentration must be positive");
  }

  HexokinaseResult result;
  result.options = options;
  result.drive = options.k_atp * std::log(options.atp_adp_ratio);
  result.Q_ss = options.K_eq * std::exp(result.drive / options.k);
  result.efficiency = result.Q_ss / (1.0 + result.Q_ss);

  result.times = make_time_grid(options.t_end, options.samples);
  const LogLinearSystem sys(Matrix::Constant(1, 1, options.k),
                            Vector::Constant(1, options.K_eq));
  Vector x0(1);
  x0 << std::log(options.Q0 / options.K_eq);
  const Trajectory traj =
      simulate(sys, x0, ControlInput::constant(Vector::Constant(1, result.drive)),
               result.times);
  result.Q = traj.Q.col(0);
  result.glucose = options.total_concentration / (1.0 + result.Q.array());
  result.g6p = options.total_concentration * result.Q.array() / (1.0 + result.Q.array());

  const int points = std::max(2, options.ratio_sweep_points);
  result.ratio_grid.resize(points);
  result.Q_ss_curve.resize(points);
  result.efficiency_curve.resize(points);
  const double log_min = std::log(options.ratio_sweep_min);
  const double log_max = std::log(options.ratio_sweep_max);
  for (int i = 0; i < points; ++i) {
    const double ratio = std::exp(log_min + (log_max - log_min) * i / (points - 1));
    const double q_ss =
        options.K_eq * std::exp(options.k_atp * std::log(ratio) / options.k);
    result.ratio_grid(i) = ratio;
    result.Q_ss_curve(i) = q_ss;
    result.efficiency_curve(i) = q_ss / (1.0 + q_ss);
  }
  return result;
}

CoupledTransportResult run_coupled_transport(const CoupledTransportOptions& options) {
  if (options.x0.size() != 2 || options.totals.size() != 2) {
    throw std::invalid_argument("coupled_transport: x0 and totals must have two entries");
  }
  if ((options.totals.array() <= 0.0).any()) {
    throw std::invalid_argument("coupled_transport: ion pools must be positive");
  }
  Matrix k(2, 2);
  k << 1.0, 0.5, 0.5, 2.0;
  LogLinearSystem system(k, Vector::Ones(2));

  const Vector times = make_time_grid(options.t_end, options.samples);
  Trajectory trajectory = simulate(system, options.x0, ControlInput::zero(2), times);

  // Overshoot: x2 crosses its steady value (zero) and relaxes back.
  const Vector x2 = trajectory.x.col(1);
  const double tiny = 1e-12 * std::max(1.0, x2.cwiseAbs().maxCoeff());
  const double s0 = x2(0) >= 0.0 ? 1.0 : -1.0;
  Eigen::Index crossed_at = -1;
  for (Eigen::Index i = 1; i < x2.size(); ++i) {
    if (s0 * x2(i) < -tiny) {
      crossed_at = i;
      break;
    }
  }
  bool overshoot_q2 = false;
  double overshoot_time = 0.0;
  double overshoot_extremum = 0.0;
  if (crossed_at > 0) {
    const double w = (0.0 - x2(crossed_at - 1)) / (x2(crossed_at) - x2(crossed_at - 1));
    overshoot_time =
        times(crossed_at - 1) + w * (times(crossed_at) - times(crossed_at - 1));
    Eigen::Index peak = crossed_at;
    for (Eigen::Index i = crossed_at; i < x2.size(); ++i) {
      if (std::abs(x2(i)) > std::abs(x2(peak))) peak = i;
    }
    overshoot_extremum = x2(peak);
    overshoot_q2 = std::abs(x2(x2.size() - 1)) < std::abs(overshoot_extremum);
  }

  const Vector x1 = trajectory.x.col(0);
  const double dtiny = 1e-12 * (1.0 + x1.cwiseAbs().maxCoeff());
  bool saw_up = false;
  bool saw_down = false;
  for (Eigen::Index i = 1; i < x1.size(); ++i) {
    const double d = x1(i) - x1(i - 1);
    if (d > dtiny) saw_up = true;
    if (d < -dtiny) saw_down = true;
  }

  Network network = build_network(
      {"Na_out", "Na_in", "H_in", "H_out"},
      {{"na_import", {{"Na_out", -1.0}, {"Na_in", 1.0}}},
       {"h_export", {{"H_in", -1.0}, {"H_out", 1.0}}}});
  const Matrix L = conservation_basis(network).L;
  Vector c_ref(4);
  c_ref << options.totals(0) / 2, options.totals(0) / 2, options.totals(1) / 2,
      options.totals(1) / 2;
  Matrix concentrations =
      reconstruct_along(network, L, L.transpose() * c_ref, trajectory.x);
  EigenmodeDecomposition modes = eigenmodes(system);

  return {.options = options,
          .system = std::move(system),
          .trajectory = std::move(trajectory),
          .modes = std::move(modes),
          .overshoot_q2 = overshoot_q2,
          .monotone_q1 = !(saw_up && saw_down),
          .overshoot_time = overshoot_time,
          .overshoot_extremum = overshoot_extremum,
          .network = std::move(network),
          .concentrations = std::move(concentrations)};
}

GlycolysisResult run_glycolysis(const GlycolysisOptions& options) {
  if (!(options.u0 >= 0.0)) {
    throw std::invalid_argument("glycolysis: drive amplitude must be >= 0");
  }
  if (options.x0.size() != 2) {
    throw std::invalid_argument("glycolysis: x0 must have two entries");
  }
  if (!(options.total_concentration > 0.0)) {
    throw std::invalid_argument("glycolysis: pool total must be positive");
  }
  Matrix k(2, 2);
  k << 0.5, -2.0, 2.0, 0.5;
  LogLinearSystem system(k, Vector::Ones(2));
  std::vector<OscillationMode> oscillation = oscillation_parameters(system);

  const Vector times = make_time_grid(options.t_end, options.samples);
  ControlInput drive = ControlInput::zero(2);
  if (options.driven) {
    Vector amplitude(2);
    amplitude << options.u0, 0.0;
    const double omega = oscillation.empty() ? 2.0 : oscillation[0].frequency;
    drive = ControlInput::sinusoidal(amplitude, omega);
  }
  Trajectory trajectory = simulate(system, options.x0, drive, times);

  double amplitude_x1 = std::numeric_limits<double>::quiet_NaN();
  if (options.driven && !oscillation.empty()) {
    amplitude_x1 = steady_amplitude(trajectory, 0, oscillation[0].period);
  }

  Network network = build_network(
      {"F6P", "FBP", "Products"},
      {{"f6p_fbp", {{"F6P", -1.0}, {"FBP", 1.0}}},
       {"fbp_products", {{"FBP", -1.0}, {"Products", 1.0}}}});
  const Matrix L = conservation_basis(network).L;
  const Vector c_ref = Vector::Constant(3, options.total_concentration / 3.0);
  Matrix concentrations =
      reconstruct_along(network, L, L.transpose() * c_ref, trajectory.x);

  return {.options = options,
          .system = std::move(system),
          .trajectory = std::move(trajectory),
          .oscillation = std::move(oscillation),
          .steady_amplitude_x1 = amplitude_x1,
          .network = std::move(network),
          .concentrations = std::move(concentrations)};
}

}  // namespace rqdyn
