#include "rqdyn/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace rqdyn {

LogLinearSystem::LogLinearSystem(Matrix k, Vector k_eq)
    : K(std::move(k)), K_eq(std::move(k_eq)) {
  if (K.rows() != K.cols()) {
    throw std::invalid_argument("LogLinearSystem: K must be square");
  }
  if (K.rows() != K_eq.size()) {
    throw std::invalid_argument("LogLinearSystem: K and K_eq dimensions disagree");
  }
  if (!K.allFinite()) {
    throw std::invalid_argument("LogLinearSystem: K has non-finite entries");
  }
  if (!K_eq.allFinite() || (K_eq.array() <= 0.0).any()) {
    throw std::invalid_argument("LogLinearSystem: K_eq must be positive and finite");
  }
}

bool LogLinearSystem::stable() const {
  const auto decomposition = eig(K);
  return (decomposition.values.real().array() > 0.0).all();
}

Trajectory make_trajectory(Vector times, Matrix x, const Vector& K_eq) {
  if (times.size() != x.rows()) {
    throw std::invalid_argument("make_trajectory: sample count mismatch");
  }
  if (x.cols() != K_eq.size()) {
    throw std::invalid_argument("make_trajectory: reaction dimension mismatch");
  }
  for (Eigen::Index i = 1; i < times.size(); ++i) {
    if (!(times(i) > times(i - 1))) {
      throw std::invalid_argument("make_trajectory: time grid must be strictly increasing");
    }
  }
  if (!x.allFinite()) {
    throw NumericalError("make_trajectory: non-finite log-deviation sample");
  }
  Trajectory traj;
  traj.Q = x.array().exp().rowwise() * K_eq.transpose().array();
  if (!traj.Q.allFinite() || (traj.Q.array() <= 0.0).any()) {
    throw NumericalError(
        "make_trajectory: quotient sample under- or overflowed the double range");
  }
  traj.times = std::move(times);
  traj.x = std::move(x);
  return traj;
}

Vector make_time_grid(double t_end, int samples) {
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("make_time_grid: t_end must be finite and >= 0");
  }
  if (samples < 1) {
    throw std::invalid_argument("make_time_grid: samples must be >= 1");
  }
  if (t_end == 0.0 || samples == 1) {
    return Vector::Zero(1);
  }
  return Vector::LinSpaced(samples, 0.0, t_end);
}

namespace {

void require_single_reaction_args(double k, double K_eq, double Q0) {
  if (!(k > 0.0)) throw std::invalid_argument("single reaction: rate k must be positive");
  if (!(K_eq > 0.0)) throw std::invalid_argument("single reaction: K_eq must be positive");
  if (!(Q0 > 0.0)) throw std::invalid_argument("single reaction: Q0 must be positive");
}

double default_dt_max(const Vector& times) {
  const double span = times(times.size() - 1) - times(0);
  return std::min(1e-3 * span, 1e-3);
}

}  // namespace

double single_solution(double k, double K_eq, double Q0, double t) {
  require_single_reaction_args(k, K_eq, Q0);
  if (!(t >= 0.0)) throw std::invalid_argument("single_solution: t must be >= 0");
  return K_eq * std::exp(std::log(Q0 / K_eq) * std::exp(-k * t));
}

double single_controlled_solution(double k, double K_eq, double Q0, double u,
                                  double t) {
  require_single_reaction_args(k, K_eq, Q0);
  if (!std::isfinite(u)) throw std::invalid_argument("single_controlled_solution: non-finite drive");
  const double lift = u / k;
  return K_eq * std::exp((std::log(Q0 / K_eq) - lift) * std::exp(-k * t) + lift);
}

Trajectory analytic_solution(const LogLinearSystem& sys, const Vector& x0,
                             const Vector& times) {
  if (x0.size() != sys.size()) {
    throw std::invalid_argument("analytic_solution: x0 dimension mismatch");
  }
  if (!x0.allFinite()) {
    throw std::invalid_argument("analytic_solution: non-finite x0");
  }
  if (times.size() == 0) {
    throw std::invalid_argument("analytic_solution: empty time grid");
  }
  Matrix x(times.size(), sys.size());
  for (Eigen::Index i = 0; i < times.size(); ++i) {
    if (times(i) == 0.0) {
      x.row(i) = x0.transpose();
    } else {
      x.row(i) = (expm(-sys.K * times(i)) * x0).transpose();
    }
  }
  return make_trajectory(times, std::move(x), sys.K_eq);
}

Trajectory analytic_solution(const LogLinearSystem& sys, const Vector& x0,
                             const Vector& u, const Vector& times) {
  if (u.size() != sys.size()) {
    throw std::invalid_argument("analytic_solution: drive dimension mismatch");
  }
  Vector x_ss;
  try {
    x_ss = solve(sys.K, u);
  } catch (const SingularMatrixError& e) {
    throw SingularMatrixError(e.condition_number, "analytic_solution");
  }
  Matrix x(times.size(), sys.size());
  const Vector offset = x0 - x_ss;
  for (Eigen::Index i = 0; i < times.size(); ++i) {
    x.row(i) = (expm(-sys.K * times(i)) * offset + x_ss).transpose();
  }
  return make_trajectory(times, std::move(x), sys.K_eq);
}

Trajectory simulate(const LogLinearSystem& sys, const Vector& x0,
                    const ControlInput& u, const Vector& times,
                    const SimulateOptions& options) {
  if (x0.size() != sys.size()) {
    throw std::invalid_argument("simulate: x0 dimension mismatch");
  }
  if (u.dim() != sys.size()) {
    throw std::invalid_argument("simulate: drive dimension mismatch");
  }
  if (times.size() == 0) {
    throw std::invalid_argument("simulate: empty time grid");
  }
  if (times.size() == 1) {
    Matrix x = x0.transpose();
    return make_trajectory(times, std::move(x), sys.K_eq);
  }
  const double dt_max = options.dt_max > 0.0 ? options.dt_max : default_dt_max(times);
  const Matrix& K = sys.K;
  const auto rhs = [&K, &u](double t, const Vector& x) -> Vector {
    return -(K * x) + u.at(t);
  };
  Matrix x = rk4(rhs, x0, times, dt_max, u.breakpoints());
  return make_trajectory(times, std::move(x), sys.K_eq);
}

SteadyState steady_state(const LogLinearSystem& sys, const Vector& u) {
  if (u.size() != sys.size()) {
    throw std::invalid_argument("steady_state: drive dimension mismatch");
  }
  if (!u.allFinite()) {
    throw std::invalid_argument("steady_state: non-finite drive");
  }
  SteadyState ss;
  try {
    ss.x_ss = solve(sys.K, u);
  } catch (const SingularMatrixError& e) {
    throw SingularMatrixError(e.condition_number, "steady_state");
  }
  ss.Q_ss = sys.K_eq.array() * ss.x_ss.array().exp();
  return ss;
}

EigenmodeDecomposition eigenmodes(const LogLinearSystem& sys) {
  EigenmodeDecomposition out;
  const double asym = (sys.K - sys.K.transpose()).norm();
  if (asym <= 1e-12 * std::max(1.0, sys.K.norm())) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sys.K);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("eigenmodes: symmetric eigen solver failed");
    }
    out.eigenvalues = solver.eigenvalues().cast<std::complex<double>>();
    out.modes = solver.eigenvectors().cast<std::complex<double>>();
    out.symmetric = true;
    return out;
  }
  const auto decomposition = eig(sys.K);
  out.eigenvalues = decomposition.values;
  out.modes = decomposition.vectors;
  out.symmetric = false;
  return out;
}

ComplexVector EigenmodeDecomposition::mode_coordinates(const Vector& x) const {
  if (x.size() != eigenvalues.size()) {
    throw std::invalid_argument("mode_coordinates: dimension mismatch");
  }
  if (symmetric) {
    return modes.adjoint() * x.cast<std::complex<double>>();
  }
  return modes.fullPivLu().solve(x.cast<std::complex<double>>());
}

std::vector<OscillationMode> oscillation_parameters(const LogLinearSystem& sys) {
  const auto decomposition = eigenmodes(sys);
  std::vector<OscillationMode> out;
  const double scale = std::max(1.0, sys.K.norm());
  for (Eigen::Index i = 0; i < decomposition.eigenvalues.size(); ++i) {
    const double im = decomposition.eigenvalues(i).imag();
    // One entry per conjugate pair.
    if (im > 1e-12 * scale) {
      out.push_back({decomposition.eigenvalues(i).real(), im, 2.0 * M_PI / im});
    }
  }
  return out;
}

Vector gibbs_deviation(const Vector& x, double gas_constant, double temperature) {
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("gibbs_deviation: temperature must be positive");
  }
  if (!(gas_constant > 0.0)) {
    throw std::invalid_argument("gibbs_deviation: gas constant must be positive");
  }
  return gas_constant * temperature * x;
}

}  // namespace rqdyn
