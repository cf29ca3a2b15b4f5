#include "rqdyn/numerics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rqdyn {

SingularMatrixError::SingularMatrixError(double cond, const std::string& context)
    : NumericalError([&] {
        std::ostringstream msg;
        if (!context.empty()) msg << context << ": ";
        msg << "matrix is numerically singular (condition estimate "
            << cond << ")";
        return msg.str();
      }()),
      condition_number(cond) {}

bool all_finite(const Matrix& a) { return a.allFinite(); }
bool all_finite(const Vector& v) { return v.allFinite(); }

Matrix expm(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("expm: matrix must be square");
  }
  if (!a.allFinite()) {
    throw std::invalid_argument("expm: matrix has non-finite entries");
  }
  return a.exp();
}

EigenDecomposition eig(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("eig: matrix must be square");
  }
  if (!a.allFinite()) {
    throw std::invalid_argument("eig: matrix has non-finite entries");
  }
  Eigen::EigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eig: QR iteration failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Vector solve(const Matrix& a, const Vector& b) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("solve: matrix must be square");
  }
  if (a.rows() != b.size()) {
    throw std::invalid_argument("solve: dimension mismatch");
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  const double sigma_min = sigma.size() > 0 ? sigma(sigma.size() - 1) : 0.0;
  if (sigma_min <= kRankCutoff * sigma_max || sigma_max == 0.0) {
    const double cond =
        sigma_min > 0.0 ? sigma_max / sigma_min : std::numeric_limits<double>::infinity();
    throw SingularMatrixError(cond);
  }
  return svd.solve(b);
}

Vector lstsq_min_norm(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) {
    throw std::invalid_argument("lstsq_min_norm: dimension mismatch");
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(kRankCutoff);
  // SVD-based solve zeroes the kernel directions, which is exactly the
  // minimum-norm least-squares solution.
  return svd.solve(b);
}

Matrix null_space(const Matrix& a, double rel_cutoff) {
  const Eigen::Index q = a.cols();
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > rel_cutoff * sigma_max) ++rank;
  }
  return svd.matrixV().rightCols(q - rank);
}

int numerical_rank(const Matrix& a, double rel_cutoff) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > rel_cutoff * sigma_max) ++rank;
  }
  return rank;
}

namespace {

// When the interval ends on a declared discontinuity the final stage must see
// the left-limit of f, so its evaluation time is nudged one ulp inside.
void rk4_advance(const OdeRhs& f, Vector& x, double t_begin, double t_end,
                 double dt_max, bool right_endpoint_is_break) {
  const double span = t_end - t_begin;
  const int steps = std::max(1, static_cast<int>(std::ceil(span / dt_max - 1e-12)));
  const double h = span / steps;
  double t = t_begin;
  for (int s = 0; s < steps; ++s) {
    double t4 = t + h;
    if (s == steps - 1 && right_endpoint_is_break) {
      t4 = std::nextafter(t_end, t_begin);
    }
    const Vector k1 = f(t, x);
    const Vector k2 = f(t + 0.5 * h, x + 0.5 * h * k1);
    const Vector k3 = f(t + 0.5 * h, x + 0.5 * h * k2);
    const Vector k4 = f(t4, x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = t_begin + (s + 1) * h;
  }
}

}  // namespace

Matrix rk4(const OdeRhs& f, const Vector& x0, const Vector& grid, double dt_max,
           const std::vector<double>& breakpoints) {
  if (grid.size() == 0) {
    throw std::invalid_argument("rk4: empty time grid");
  }
  for (Eigen::Index i = 1; i < grid.size(); ++i) {
    if (!(grid(i) > grid(i - 1))) {
      throw std::invalid_argument("rk4: time grid must be strictly increasing");
    }
  }
  if (!(dt_max > 0.0)) {
    throw std::invalid_argument("rk4: dt_max must be positive");
  }
  if (!x0.allFinite()) {
    throw std::invalid_argument("rk4: non-finite initial state");
  }

  std::vector<double> knots(breakpoints);
  std::sort(knots.begin(), knots.end());
  const auto is_knot = [&knots](double t) {
    for (double knot : knots) {
      if (std::abs(knot - t) <= 1e-12 * std::max(1.0, std::abs(t))) return true;
    }
    return false;
  };

  Matrix out(grid.size(), x0.size());
  Vector x = x0;
  out.row(0) = x.transpose();
  for (Eigen::Index i = 1; i < grid.size(); ++i) {
    const double ta = grid(i - 1);
    const double tb = grid(i);
    const double eps = 1e-12 * std::max(1.0, std::abs(tb));
    double a = ta;
    for (double knot : knots) {
      if (knot > a + eps && knot < tb - eps) {
        rk4_advance(f, x, a, knot, dt_max, true);
        a = knot;
      }
    }
    rk4_advance(f, x, a, tb, dt_max, is_knot(tb));
    if (!x.allFinite()) {
      throw NumericalError("rk4: state became non-finite near t = " +
                           std::to_string(tb));
    }
    out.row(i) = x.transpose();
  }
  return out;
}

NewtonResult newton_minimize(const NewtonProblem& problem, Vector x0,
                             const NewtonOptions& options) {
  NewtonResult result;
  Vector x = std::move(x0);
  double fx = problem.value(x);
  if (!std::isfinite(fx)) {
    throw std::invalid_argument("newton_minimize: objective not finite at start");
  }

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const Vector g = problem.gradient(x);
    result.gradient_norm = g.norm();
    if (result.gradient_norm <= options.gradient_tol) {
      result.converged = true;
      break;
    }

    const Matrix h = problem.hessian(x);
    Vector direction;
    Eigen::LDLT<Matrix> ldlt(h);
    if (ldlt.info() == Eigen::Success) {
      direction = ldlt.solve(-g);
    }
    double slope = direction.size() == g.size() ? g.dot(direction) : 0.0;
    if (direction.size() != g.size() || !direction.allFinite() || !(slope < 0.0)) {
      direction = -g;
      slope = -g.squaredNorm();
    }

    double step = 1.0;
    bool accepted = false;
    bool progressed = false;
    while (step > 1e-14) {
      const Vector trial = x + step * direction;
      const double ft = problem.value(trial);
      if (std::isfinite(ft) && ft <= fx + options.armijo_slope * step * slope) {
        progressed = ft < fx;
        x = trial;
        fx = ft;
        accepted = true;
        break;
      }
      step *= options.backtrack_factor;
    }
    if (!accepted) {
      // Stalled, typically at the floating-point floor of f.
      break;
    }
    result.iterations = iter + 1;
    if (!progressed) {
      // The decrease fell below double resolution; further steps cannot help.
      break;
    }
    if (x.norm() > options.divergence_norm) {
      result.diverged = true;
      break;
    }
  }

  if (!result.converged && !result.diverged) {
    result.gradient_norm = problem.gradient(x).norm();
    result.converged = result.gradient_norm <= options.gradient_tol;
  }
  result.x = std::move(x);
  return result;
}

}  // namespace rqdyn
