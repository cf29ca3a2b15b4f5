#pragma once

#include "rqdyn/dynamics.hpp"
#include "rqdyn/mass_action.hpp"
#include "rqdyn/reconstruct.hpp"

#include <vector>

namespace rqdyn {

// ---------------------------------------------------------------------------
// A <=> B: matched log-linear model vs exact mass-action quotient dynamics.
// ---------------------------------------------------------------------------

struct MassActionComparisonOptions {
  double k_f = 1.0;
  double K_eq = 2.0;
  std::vector<double> initial_quotients = {0.5, 1.0, 4.0, 8.0};
  /// A+B pool used for the concentration-level cross run.
  double total_concentration = 1.0;
  double t_end = 0.0;  // 0 = auto: ten relaxation times of the matched rate
  int samples = 500;
};

struct MassActionComparisonResult {
  MassActionComparisonOptions options;
  double matched_k = 0.0;
  Vector times;
  Matrix log_linear_Q;   // samples x n_q0
  Matrix mass_action_Q;  // samples x n_q0 (quotient-equation oracle)
  Matrix network_Q;      // samples x n_q0 (concentration-level oracle)
  Matrix species_a;      // samples x n_q0 concentrations from the network run
  Matrix species_b;
  /// max_t |log_linear - mass_action| / mass_action, per initial quotient.
  Vector max_rel_deviation;
  /// Same measure over extra runs started at 0.9 and 1.1 x K_eq.
  double near_equilibrium_max_rel_deviation = 0.0;
  /// First time each model crosses the log-midpoint sqrt(Q0 K_eq), per Q0
  /// (linear interpolation between samples; 0 when starting at the midpoint).
  Vector crossing_time_log_linear;
  Vector crossing_time_mass_action;
};

MassActionComparisonResult run_mass_action_comparison(
    const MassActionComparisonOptions& options = {});

// ---------------------------------------------------------------------------
// Feedback inhibition: d ln Q/dt = -(k + alpha) ln(Q/K_eq) + u on A -> B.
// ---------------------------------------------------------------------------

struct FeedbackOptions {
  double k = 1.0;
  double K_eq = 1.0;
  double alpha = 1.0;  // feedback strength
  double u = 3.0;      // constant drive
  double total_concentration = 1.0;
  double Q0 = 1.0;
  double t_end = 8.0;
  int samples = 500;
  double u_sweep_max = 6.0;
  int u_sweep_points = 61;
};

struct FeedbackResult {
  FeedbackOptions options;
  Vector times;
  Vector Q;
  Vector B;  // product concentration C Q / (1 + Q)
  Vector u_grid;
  Vector Q_ss_curve;       // K_eq exp(u / (k + alpha)) over u_grid
  double Q_ss = 0.0;       // at the configured drive
  double B_ss = 0.0;
  double sensitivity = 0.0;  // dQ_ss/du = Q_ss / (k + alpha)
};

FeedbackResult run_feedback(const FeedbackOptions& options = {});

// ---------------------------------------------------------------------------
// ATP-driven glucose phosphorylation (hexokinase).
// ---------------------------------------------------------------------------

struct HexokinaseOptions {
  double k = 1.0;  // base relaxation rate; fixes drive/rate ratio k_atp/k = 2
  double K_eq = 0.5;
  double k_atp = 2.0;
  double atp_adp_ratio = 10.0;
  double total_concentration = 1.0;
  double Q0 = 0.5;  // start at chemical equilibrium
  double t_end = 8.0;
  int samples = 500;
  double ratio_sweep_min = 0.01;
  double ratio_sweep_max = 100.0;
  int ratio_sweep_points = 81;  // log-spaced
};

struct HexokinaseResult {
  HexokinaseOptions options;
  double drive = 0.0;       // u = k_atp ln(ratio)
  double Q_ss = 0.0;        // K_eq ratio^{k_atp/k}
  double efficiency = 0.0;  // Q_ss / (1 + Q_ss)
  Vector times;
  Vector Q;
  Vector glucose;  // C / (1 + Q)
  Vector g6p;      // C Q / (1 + Q)
  Vector ratio_grid;
  Vector Q_ss_curve;
  Vector efficiency_curve;
};

HexokinaseResult run_hexokinase(const HexokinaseOptions& options = {});

// ---------------------------------------------------------------------------
// Coupled membrane transport, K = [[1, 0.5], [0.5, 2]].
// ---------------------------------------------------------------------------

struct CoupledTransportOptions {
  /// Default picked by scanning initial conditions for a Q2 overshoot with
  /// monotone Q1 (x2 dips to about -0.165 near t = 1.14 s).
  Vector x0 = (Vector(2) << 2.0, 0.5).finished();
  /// Ion pools (Na total, H total) for the reconstructed concentration output.
  Vector totals = (Vector(2) << 1.0, 1.0).finished();
  double t_end = 10.0;
  int samples = 500;
};

struct CoupledTransportResult {
  CoupledTransportOptions options;
  LogLinearSystem system;
  Trajectory trajectory;
  EigenmodeDecomposition modes;
  bool overshoot_q2 = false;  // x2 crosses zero and relaxes back
  bool monotone_q1 = true;
  double overshoot_time = 0.0;      // first zero crossing of x2
  double overshoot_extremum = 0.0;  // most negative x2 after the crossing
  Network network;                  // out/in species per transporter
  Matrix concentrations;            // samples x 4, reconstructed from totals
};

CoupledTransportResult run_coupled_transport(const CoupledTransportOptions& options = {});

// ---------------------------------------------------------------------------
// Glycolytic oscillations, K = [[0.5, -2], [2, 0.5]].
// ---------------------------------------------------------------------------

struct GlycolysisOptions {
  double u0 = 1.0;  // drive amplitude on channel 1
  bool driven = true;
  Vector x0 = (Vector(2) << 1.0, 0.0).finished();
  double total_concentration = 3.0;  // F6P + FBP + downstream pool
  double t_end = 30.0;
  int samples = 3000;
};

struct GlycolysisResult {
  GlycolysisOptions options;
  LogLinearSystem system;
  Trajectory trajectory;
  std::vector<OscillationMode> oscillation;  // damping 0.5, omega 2, period pi
  /// Half peak-to-peak swing of x1 over the final period (driven runs; NaN
  /// otherwise).
  double steady_amplitude_x1 = 0.0;
  Network network;        // F6P -> FBP -> products chain
  Matrix concentrations;  // samples x 3, reconstructed from the pool total
};

GlycolysisResult run_glycolysis(const GlycolysisOptions& options = {});

}  // namespace rqdyn
