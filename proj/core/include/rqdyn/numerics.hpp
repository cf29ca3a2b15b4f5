#pragma once

#include <Eigen/Dense>

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rqdyn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Base class for runtime numerical failures (as opposed to invalid inputs,
/// which raise std::invalid_argument).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Linear solve rejected because the matrix is numerically singular.
struct SingularMatrixError : NumericalError {
  double condition_number;
  explicit SingularMatrixError(double cond, const std::string& context = {});
};

/// An iterative kernel failed to converge.
struct ConvergenceError : NumericalError {
  using NumericalError::NumericalError;
};

/// Relative singular-value cutoff used for all rank decisions.
inline constexpr double kRankCutoff = 1e-10;

bool all_finite(const Matrix& a);
bool all_finite(const Vector& v);

/// Matrix exponential of a square matrix (scaling-and-squaring with a
/// norm-selected Pade approximant).
Matrix expm(const Matrix& a);

struct EigenDecomposition {
  ComplexVector values;
  ComplexMatrix vectors;  // column i pairs with values[i], unit norm
};

EigenDecomposition eig(const Matrix& a);

/// Solves a*x = b for square a. Throws SingularMatrixError with the condition
/// estimate when sigma_min < kRankCutoff * sigma_max.
Vector solve(const Matrix& a, const Vector& b);

/// Minimum-norm least-squares solution of a*x ~= b (any shape).
Vector lstsq_min_norm(const Matrix& a, const Vector& b);

/// Orthonormal basis of ker(a); the result has a.cols() rows and may have
/// zero columns when the kernel is trivial.
Matrix null_space(const Matrix& a, double rel_cutoff = kRankCutoff);

int numerical_rank(const Matrix& a, double rel_cutoff = kRankCutoff);

using OdeRhs = std::function<Vector(double, const Vector&)>;

/// Classic fixed-step RK4 sampled on `grid` (strictly increasing, at least one
/// point; grid[0] carries x0). Interior steps never exceed dt_max and split at
/// `breakpoints` so piecewise right-hand sides are integrated segment by
/// segment at full order.
Matrix rk4(const OdeRhs& f, const Vector& x0, const Vector& grid, double dt_max,
           const std::vector<double>& breakpoints = {});

struct NewtonProblem {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  std::function<Matrix(const Vector&)> hessian;
};

struct NewtonOptions {
  double gradient_tol = 1e-10;
  int max_iterations = 100;
  double armijo_slope = 1e-4;
  double backtrack_factor = 0.5;
  double divergence_norm = std::numeric_limits<double>::infinity();
};

struct NewtonResult {
  Vector x;
  int iterations = 0;  // accepted steps
  double gradient_norm = 0.0;
  bool converged = false;
  bool diverged = false;
};

/// Damped Newton descent with Armijo backtracking. A non-finite trial value is
/// a line-search rejection, not an error; a non-descent Newton direction falls
/// back to steepest descent.
NewtonResult newton_minimize(const NewtonProblem& problem, Vector x0,
                             const NewtonOptions& options = {});

}  // namespace rqdyn
