#include "rqdyn/reconstruct.hpp"

#include <cmath>
#include <sstream>

namespace rqdyn {

namespace {

// exp((L alpha)_i + ln c0_i) stays representable below this exponent.
constexpr double kExpOverflow = 700.0;

}  // namespace

UnachievableQuotientError::UnachievableQuotientError(double resid,
                                                     const std::string& what)
    : NumericalError(what), residual(resid) {}

Vector base_point(const Network& net, const Vector& x_star) {
  if (x_star.size() != net.reaction_count()) {
    throw std::invalid_argument("base_point: x_star dimension mismatch");
  }
  if (!x_star.allFinite()) {
    throw std::invalid_argument("base_point: non-finite x_star");
  }
  const Matrix st = net.S.transpose();
  const Vector u0 = lstsq_min_norm(st, x_star);
  const double residual = (st * u0 - x_star).norm();
  if (residual > 1e-9 * std::max(1.0, x_star.norm())) {
    std::ostringstream msg;
    msg << "base_point: target log-quotients are not achievable; the component "
           "outside Im(S^T) has norm "
        << residual << " (a reaction-cycle constraint is violated)";
    throw UnachievableQuotientError(residual, msg.str());
  }
  return u0.array().exp();
}

ObjectiveEval objective(const Matrix& L, const Vector& c0, const Vector& y_star,
                        const Vector& alpha) {
  if (L.rows() != c0.size() || L.cols() != alpha.size() ||
      y_star.size() != alpha.size()) {
    throw std::invalid_argument("objective: dimension mismatch");
  }
  ObjectiveEval eval;
  const Vector exponent = (L * alpha).array() + c0.array().log();
  if ((exponent.array() > kExpOverflow).any()) {
    eval.value = std::numeric_limits<double>::infinity();
    return eval;
  }
  const Vector weights = exponent.array().exp();  // exp(L alpha) .* c0
  eval.value = weights.sum() - y_star.dot(alpha);
  eval.gradient = L.transpose() * weights - y_star;
  eval.hessian = L.transpose() * weights.asDiagonal() * L;
  return eval;
}

ObjectiveEval objective(const Network& net, const Vector& c0, const Vector& y_star,
                        const Vector& alpha) {
  return objective(conservation_basis(net).L, c0, y_star, alpha);
}

ReconstructionResult reconstruct_from_base(const Network& net, const Matrix& L,
                                           const Vector& c0, const Vector& y_star,
                                           const ReconstructOptions& options) {
  const Eigen::Index m = L.cols();
  if (L.rows() != net.species_count() || c0.size() != net.species_count()) {
    throw std::invalid_argument(
        "reconstruct: basis and base point must match the species count");
  }
  if (y_star.size() != m) {
    throw std::invalid_argument(
        "reconstruct: y_star must match the conservation-basis dimension");
  }
  if (!y_star.allFinite()) {
    throw std::invalid_argument("reconstruct: non-finite y_star");
  }

  ReconstructionResult result;
  const auto finish = [&](const Vector& alpha, int iterations) {
    result.alpha_star = alpha;
    result.iterations = iterations;
    result.c_star = ((L * alpha).array() + c0.array().log()).exp();
    result.residual_totals = (L.transpose() * result.c_star - y_star).norm();
    return result;
  };

  if (m == 0) {
    // Trivial kernel: the quotients fully determine the concentrations.
    return finish(Vector::Zero(0), 0);
  }

  NewtonProblem problem;
  problem.value = [&](const Vector& a) { return objective(L, c0, y_star, a).value; };
  problem.gradient = [&](const Vector& a) { return objective(L, c0, y_star, a).gradient; };
  problem.hessian = [&](const Vector& a) { return objective(L, c0, y_star, a).hessian; };

  const double y_scale = std::max(1.0, y_star.norm());
  NewtonOptions newton;
  newton.gradient_tol = options.gradient_tol_scale * y_scale;
  newton.max_iterations = options.max_iterations;
  newton.divergence_norm = options.divergence_norm;

  NewtonResult solved = newton_minimize(problem, Vector::Zero(m), newton);
  // A gradient parked far above the tolerance after the iteration cap means the
  // totals are unreachable; a gradient at the floating-point floor of f merely
  // means the descent phase cannot resolve further progress.
  const bool vanished = solved.gradient_norm <= 1e-6 * y_scale;
  if (solved.diverged || (!solved.converged && !vanished)) {
    std::ostringstream msg;
    msg << "reconstruct: infeasible totals (no positive concentrations with the "
           "requested quotients reach them); ";
    if (solved.diverged) {
      msg << "iterates diverged beyond |alpha| = " << options.divergence_norm;
    } else {
      msg << "gradient stayed at " << solved.gradient_norm << " after "
          << solved.iterations << " iterations";
    }
    throw InfeasibleTotalsError(msg.str());
  }

  // Polish with full Newton steps, accepted on gradient-norm descent. Near the
  // optimum f-differences underflow double resolution while the optimality
  // residual F(alpha) - y* still contracts quadratically.
  Vector alpha = solved.x;
  int iterations = solved.iterations;
  double grad_norm = solved.gradient_norm;
  for (int p = 0; p < options.polish_steps; ++p) {
    if (grad_norm <= 1e-15 * y_scale) break;
    const ObjectiveEval eval = objective(L, c0, y_star, alpha);
    const Vector step = eval.hessian.ldlt().solve(-eval.gradient);
    const Vector trial = alpha + step;
    const Vector trial_gradient = objective(L, c0, y_star, trial).gradient;
    if (!trial_gradient.allFinite() || trial_gradient.norm() >= grad_norm) break;
    alpha = trial;
    grad_norm = trial_gradient.norm();
    ++iterations;
  }
  return finish(alpha, iterations);
}

ReconstructionResult reconstruct_concentrations(const ReconstructionProblem& problem,
                                                const ReconstructOptions& options) {
  const Vector c0 = base_point(problem.net, problem.x_star);
  const Matrix L = conservation_basis(problem.net).L;
  ReconstructionResult result =
      reconstruct_from_base(problem.net, L, c0, problem.y_star, options);
  result.residual_quotients =
      (problem.net.log_quotients(result.c_star) - problem.x_star).norm();
  return result;
}

}  // namespace rqdyn
