#pragma once

#include "rqdyn/network.hpp"

namespace rqdyn {

/// A <=> B with elementary rate constants.
struct MassActionAB {
  double k_f = 0.0;  // 1/s
  double k_r = 0.0;  // 1/s

  MassActionAB(double forward, double reverse);

  double equilibrium_constant() const { return k_f / k_r; }
};

/// Relaxation rate k = k_r (1 + K_eq) that matches the log-linear model to
/// the mass-action quotient dynamics near equilibrium.
double matched_rate(const MassActionAB& m);

struct QuotientTrajectory {
  Vector times;
  Vector Q;
};

/// RK4 integration of the exact A <=> B quotient dynamics
/// dQ/dt = k_r (1 + Q)(K_eq - Q). dt_max = 0 selects the simulate() default.
QuotientTrajectory simulate_ab_quotient(const MassActionAB& m, double Q0,
                                        const Vector& times, double dt_max = 0.0);

struct MassActionTrajectory {
  Vector times;
  Matrix c;  // samples x n concentrations
  Matrix Q;  // samples x r quotients computed from c
};

/// Generic reversible mass-action oracle: dc/dt = S v(c) with
/// v_j = k_f,j prod_{S_ij<0} c_i^{-S_ij} - k_r,j prod_{S_ij>0} c_i^{S_ij}.
MassActionTrajectory simulate_mass_action_network(const Network& net,
                                                  const Vector& k_forward,
                                                  const Vector& k_reverse,
                                                  const Vector& c0,
                                                  const Vector& times,
                                                  double dt_max = 0.0);

}  // namespace rqdyn
