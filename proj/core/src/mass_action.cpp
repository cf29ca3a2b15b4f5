#include "rqdyn/mass_action.hpp"

#include <cmath>

namespace rqdyn {

namespace {

double default_dt(const Vector& times, double dt_max) {
  if (dt_max > 0.0) return dt_max;
  const double span = times(times.size() - 1) - times(0);
  return std::min(1e-3 * span, 1e-3);
}

}  // namespace

MassActionAB::MassActionAB(double forward, double reverse)
    : k_f(forward), k_r(reverse) {
  if (!(k_f > 0.0) || !(k_r > 0.0)) {
    throw std::invalid_argument("MassActionAB: rate constants must be positive");
  }
}

double matched_rate(const MassActionAB& m) {
  return m.k_r * (1.0 + m.equilibrium_constant());
}

QuotientTrajectory simulate_ab_quotient(const MassActionAB& m, double Q0,
                                        const Vector& times, double dt_max) {
  if (!(Q0 > 0.0)) {
    throw std::invalid_argument("simulate_ab_quotient: Q0 must be positive");
  }
  if (times.size() == 0) {
    throw std::invalid_argument("simulate_ab_quotient: empty time grid");
  }
  QuotientTrajectory out;
  out.times = times;
  if (times.size() == 1) {
    out.Q = Vector::Constant(1, Q0);
    return out;
  }
  const double k_r = m.k_r;
  const double K_eq = m.equilibrium_constant();
  const auto rhs = [k_r, K_eq](double, const Vector& q) -> Vector {
    Vector dq(1);
    dq(0) = k_r * (1.0 + q(0)) * (K_eq - q(0));
    return dq;
  };
  Vector q0(1);
  q0(0) = Q0;
  out.Q = rk4(rhs, q0, times, default_dt(times, dt_max)).col(0);
  return out;
}

MassActionTrajectory simulate_mass_action_network(const Network& net,
                                                  const Vector& k_forward,
                                                  const Vector& k_reverse,
                                                  const Vector& c0,
                                                  const Vector& times,
                                                  double dt_max) {
  const int n = net.species_count();
  const int r = net.reaction_count();
  if (k_forward.size() != r || k_reverse.size() != r) {
    throw std::invalid_argument(
        "simulate_mass_action_network: rate vectors must match the reaction count");
  }
  if ((k_forward.array() <= 0.0).any() || (k_reverse.array() <= 0.0).any()) {
    throw std::invalid_argument("simulate_mass_action_network: rates must be positive");
  }
  if (c0.size() != n) {
    throw std::invalid_argument("simulate_mass_action_network: c0 dimension mismatch");
  }
  if ((c0.array() <= 0.0).any()) {
    throw std::invalid_argument("simulate_mass_action_network: c0 must be positive");
  }
  if (times.size() == 0) {
    throw std::invalid_argument("simulate_mass_action_network: empty time grid");
  }

  const Matrix& S = net.S;
  const auto rhs = [&S, &k_forward, &k_reverse, n, r](double, const Vector& c) -> Vector {
    Vector v(r);
    for (int j = 0; j < r; ++j) {
      double fwd = k_forward(j);
      double rev = k_reverse(j);
      for (int i = 0; i < n; ++i) {
        const double s = S(i, j);
        if (s < 0.0) {
          fwd *= std::pow(c(i), -s);
        } else if (s > 0.0) {
          rev *= std::pow(c(i), s);
        }
      }
      v(j) = fwd - rev;
    }
    return S * v;
  };

  MassActionTrajectory out;
  out.times = times;
  if (times.size() == 1) {
    out.c = c0.transpose();
  } else {
    out.c = rk4(rhs, c0, times, default_dt(times, dt_max));
  }
  if ((out.c.array() <= 0.0).any()) {
    throw NumericalError(
        "simulate_mass_action_network: a concentration left the positive orthant; "
        "reduce dt_max");
  }
  out.Q.resize(times.size(), r);
  for (Eigen::Index i = 0; i < times.size(); ++i) {
    out.Q.row(i) = net.quotients(out.c.row(i).transpose()).transpose();
  }
  return out;
}

}  // namespace rqdyn
