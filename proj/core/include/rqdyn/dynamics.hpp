#pragma once

#include "rqdyn/control.hpp"
#include "rqdyn/numerics.hpp"

#include <vector>

namespace rqdyn {

/// Coupled log-linear quotient dynamics d/dt ln Q = -K ln(Q / K_eq) + u.
/// In the log-deviation variable x = ln(Q / K_eq) this is dx/dt = -Kx + u.
struct LogLinearSystem {
  Matrix K;      // r x r relaxation rate matrix, 1/s
  Vector K_eq;   // r positive equilibrium constants

  LogLinearSystem(Matrix k, Vector k_eq);

  int size() const { return static_cast<int>(K_eq.size()); }

  /// True iff every eigenvalue of K has positive real part (decay).
  bool stable() const;
};

struct Trajectory {
  Vector times;  // strictly increasing sample grid
  Matrix x;      // samples x r log-deviations
  Matrix Q;      // samples x r quotients, K_eq .* exp(x)

  int samples() const { return static_cast<int>(times.size()); }
};

/// Builds a trajectory from log-deviation samples, recovering Q = K_eq.*exp(x).
/// Throws NumericalError if any quotient over- or underflows.
Trajectory make_trajectory(Vector times, Matrix x, const Vector& K_eq);

/// Evenly spaced grid over [0, t_end] with `samples` points; t_end == 0
/// degenerates to the single point {0}.
Vector make_time_grid(double t_end, int samples);

/// Closed form for one reaction: Q(t) = K_eq (Q0/K_eq)^{exp(-k t)}.
double single_solution(double k, double K_eq, double Q0, double t);

/// Closed form with constant drive u:
/// Q(t) = K_eq exp{[ln(Q0/K_eq) - u/k] e^{-kt} + u/k}; Q_ss = K_eq e^{u/k}.
double single_controlled_solution(double k, double K_eq, double Q0, double u,
                                  double t);

/// x(t) = expm(-K t) x0 evaluated on the grid (valid for stable or unstable K).
Trajectory analytic_solution(const LogLinearSystem& sys, const Vector& x0,
                             const Vector& times);

/// Affine closed form for constant drive and invertible K:
/// x(t) = expm(-K t)(x0 - K^{-1} u) + K^{-1} u.
Trajectory analytic_solution(const LogLinearSystem& sys, const Vector& x0,
                             const Vector& u, const Vector& times);

struct SimulateOptions {
  /// Internal RK4 step bound; 0 selects min(1e-3 * (t_end - t_0), 1e-3 s).
  double dt_max = 0.0;
};

/// Fixed-step RK4 integration of dx/dt = -Kx + u(t) sampled on the grid.
Trajectory simulate(const LogLinearSystem& sys, const Vector& x0,
                    const ControlInput& u, const Vector& times,
                    const SimulateOptions& options = {});

struct SteadyState {
  Vector x_ss;  // K^{-1} u
  Vector Q_ss;  // K_eq .* exp(x_ss)
};

/// Steady state under constant drive; throws SingularMatrixError (with a
/// condition-number diagnostic) when K is not invertible.
SteadyState steady_state(const LogLinearSystem& sys, const Vector& u);

struct EigenmodeDecomposition {
  ComplexVector eigenvalues;
  ComplexMatrix modes;     // column i pairs with eigenvalues[i]
  bool symmetric = false;  // real orthonormal modes when true

  /// Mode coordinates z = V^{-1} x (V^T x in the symmetric case).
  ComplexVector mode_coordinates(const Vector& x) const;
};

EigenmodeDecomposition eigenmodes(const LogLinearSystem& sys);

/// Damping/frequency of one complex eigenvalue pair a +- i omega.
struct OscillationMode {
  double damping = 0.0;    // 1/s
  double frequency = 0.0;  // rad/s
  double period = 0.0;     // 2 pi / omega, s
};

/// One entry per complex-conjugate eigenvalue pair of K; empty for an
/// all-real spectrum.
std::vector<OscillationMode> oscillation_parameters(const LogLinearSystem& sys);

/// dG_i = R T x_i (J/mol); temperature must be positive.
Vector gibbs_deviation(const Vector& x, double gas_constant, double temperature);

}  // namespace rqdyn
