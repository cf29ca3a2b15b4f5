#pragma once

#include "rqdyn/network.hpp"

namespace rqdyn {

/// The requested log-quotient target lies outside Im(S^T).
struct UnachievableQuotientError : NumericalError {
  double residual;
  UnachievableQuotientError(double resid, const std::string& what);
};

/// The requested totals cannot be met by any positive concentration vector
/// with the given quotients (iterates diverged or the gradient stagnated).
struct InfeasibleTotalsError : NumericalError {
  using NumericalError::NumericalError;
};

/// Recover positive concentrations c with S^T ln c = x_star and L^T c = y_star.
struct ReconstructionProblem {
  Network net;
  Vector x_star;  // r target log-quotients, must lie in Im(S^T)
  Vector y_star;  // m target conserved totals
};

struct ReconstructOptions {
  /// Converged when |gradient| <= gradient_tol_scale * max(1, |y_star|).
  double gradient_tol_scale = 1e-10;
  int max_iterations = 200;
  /// |alpha| beyond this is treated as divergence (infeasible totals).
  double divergence_norm = 1e3;
  /// Extra full Newton steps taken after convergence to push the totals
  /// residual to machine precision.
  int polish_steps = 2;
};

struct ReconstructionResult {
  Vector c_star;      // positive concentrations
  Vector alpha_star;  // kernel coordinates of the multiplicative correction
  int iterations = 0;
  double residual_totals = 0.0;     // |L^T c* - y*|
  double residual_quotients = 0.0;  // |S^T ln c* - x*|
};

/// Positive base point c0 = exp(u0) with S^T u0 = x_star, u0 the minimum-norm
/// solution. Throws UnachievableQuotientError when x_star is not in Im(S^T).
Vector base_point(const Network& net, const Vector& x_star);

struct ObjectiveEval {
  double value = 0.0;
  Vector gradient;
  Matrix hessian;
};

/// f(alpha) = sum_i c0_i exp((L alpha)_i) - y*^T alpha with exact gradient
/// L^T (exp(L alpha) .* c0) - y* and Hessian L^T Diag(exp(L alpha) .* c0) L.
/// Overflow in the exponential yields value = +inf (a line-search rejection).
ObjectiveEval objective(const Matrix& L, const Vector& c0, const Vector& y_star,
                        const Vector& alpha);
ObjectiveEval objective(const Network& net, const Vector& c0, const Vector& y_star,
                        const Vector& alpha);

/// Newton solve from a caller-supplied base point (must satisfy
/// S^T ln c0 = x_star for every column of L in ker S^T).
ReconstructionResult reconstruct_from_base(const Network& net, const Matrix& L,
                                           const Vector& c0, const Vector& y_star,
                                           const ReconstructOptions& options = {});

ReconstructionResult reconstruct_concentrations(const ReconstructionProblem& problem,
                                                const ReconstructOptions& options = {});

}  // namespace rqdyn
