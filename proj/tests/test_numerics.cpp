#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rqdyn/numerics.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <random>

using namespace rqdyn;

TEST_CASE("expm of zero and diagonal matrices") {
  CHECK((expm(Matrix::Zero(3, 3)) - Matrix::Identity(3, 3)).norm() == 0.0);

  Vector d(3);
  d << -1.5, 0.25, 2.0;
  const Matrix e = expm(Matrix(d.asDiagonal()));
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(e(i, i) - std::exp(d(i))) <= 1e-14 * std::exp(d(i)));
  }
  CHECK_THROWS_AS(expm(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("expm matches the rotation closed form") {
  Matrix gen(2, 2);
  gen << 0.0, -2.0, 2.0, 0.0;
  for (double t : {0.1, 0.7, 1.9, 3.2}) {
    const Matrix e = expm(gen * t);
    Matrix rot(2, 2);
    rot << std::cos(2 * t), -std::sin(2 * t), std::sin(2 * t), std::cos(2 * t);
    CHECK((e - rot).norm() <= 1e-10 * rot.norm());
  }
}

TEST_CASE("expm is multiplicative on commuting pairs") {
  std::mt19937 rng(421);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix m(4, 4);
    for (int i = 0; i < 16; ++i) m(i / 4, i % 4) = dist(rng);
    // Polynomials in the same matrix commute.
    const Matrix a = 0.4 * m + 0.1 * m * m;
    const Matrix b = -0.3 * m + 0.05 * m * m;
    const Matrix lhs = expm(a + b);
    const Matrix rhs = expm(a) * expm(b);
    CHECK((lhs - rhs).norm() <= 1e-10 * lhs.norm());
  }
}

TEST_CASE("eig residuals stay below 1e-9 of the matrix norm") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::vector<Matrix> cases;
  Matrix coupled(2, 2);
  coupled << 1.0, 0.5, 0.5, 2.0;
  cases.push_back(coupled);
  Matrix rotating(2, 2);
  rotating << 0.5, -2.0, 2.0, 0.5;
  cases.push_back(rotating);
  for (int trial = 0; trial < 4; ++trial) {
    Matrix m(5, 5);
    for (int i = 0; i < 25; ++i) m(i / 5, i % 5) = dist(rng);
    cases.push_back(m);
  }
  for (const auto& a : cases) {
    const EigenDecomposition ed = eig(a);
    for (Eigen::Index i = 0; i < ed.values.size(); ++i) {
      const ComplexVector residual =
          a.cast<std::complex<double>>() * ed.vectors.col(i) -
          ed.values(i) * ed.vectors.col(i);
      CHECK(residual.norm() <= 1e-9 * a.norm());
    }
  }
}

TEST_CASE("solve handles identity and rejects singular input") {
  Vector b(3);
  b << 1.0, -2.0, 0.5;
  CHECK((solve(Matrix::Identity(3, 3), b) - b).norm() == 0.0);

  Matrix a(2, 2);
  a << 1.0, 0.5, 0.5, 2.0;
  Vector u = Vector::Ones(2);
  const Vector x = solve(a, u);
  CHECK(std::abs(x(0) - 6.0 / 7.0) <= 1e-14);
  CHECK(std::abs(x(1) - 2.0 / 7.0) <= 1e-14);

  Matrix singular(2, 2);
  singular << 1.0, 1.0, 1.0, 1.0;
  CHECK_THROWS_AS(solve(singular, u), SingularMatrixError);
  try {
    solve(singular, u);
  } catch (const SingularMatrixError& e) {
    CHECK(e.condition_number > 1e10);
  }
}

TEST_CASE("lstsq_min_norm returns the kernel-orthogonal solution") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix a(2, 5);
  for (int i = 0; i < 10; ++i) a(i / 5, i % 5) = dist(rng);
  Vector w(5);
  for (int i = 0; i < 5; ++i) w(i) = dist(rng);
  const Vector b = a * w;

  const Vector x = lstsq_min_norm(a, b);
  CHECK((a * x - b).norm() <= 1e-12 * b.norm());
  const Matrix kernel = null_space(a);
  CHECK((kernel.transpose() * x).norm() <= 1e-9 * (1.0 + x.norm()));
  CHECK(x.norm() <= w.norm() + 1e-12);
}

TEST_CASE("null_space dimension complements the rank") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix a(3, 6);
    for (int i = 0; i < 18; ++i) a(i / 6, i % 6) = dist(rng);
    const Matrix kernel = null_space(a);
    CHECK(numerical_rank(a) + kernel.cols() == a.cols());
    if (kernel.cols() > 0) {
      CHECK((a * kernel).norm() <= 1e-12 * std::max(1.0, a.norm() * kernel.norm()));
    }
  }
}

TEST_CASE("rk4 reproduces the scalar oracle on the sample grid") {
  const OdeRhs f = [](double, const Vector& x) -> Vector { return -0.8 * x; };
  Vector x0(1);
  x0 << 2.0;
  const Vector grid = Vector::LinSpaced(7, 0.0, 3.0);
  const Matrix samples = rk4(f, x0, grid, 1e-3);
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double expected = oracle::rk4_scalar(
        [](double, double y) { return -0.8 * y; }, 2.0, 0.0, grid(i),
        std::max(1, static_cast<int>(std::ceil(grid(i) / 1e-3))));
    CHECK(std::abs(samples(i, 0) - expected) <= 1e-9 * std::max(1.0, expected));
  }
}

TEST_CASE("rk4 empirical convergence order is four") {
  const OdeRhs f = [](double, const Vector& x) -> Vector { return -x; };
  Vector x0(1);
  x0 << 1.0;
  Vector grid(2);
  grid << 0.0, 1.0;
  const double exact = std::exp(-1.0);
  const double e1 = std::abs(rk4(f, x0, grid, 0.02)(1, 0) - exact);
  const double e2 = std::abs(rk4(f, x0, grid, 0.01)(1, 0) - exact);
  const double order = std::log2(e1 / e2);
  CHECK(order >= 3.8);
  CHECK(order <= 4.2);
}

TEST_CASE("rk4 splits exactly at breakpoints") {
  // dx/dt jumps from 1 to 0 at t = 0.4; with the breakpoint declared the
  // integral is exact despite the discontinuity.
  const OdeRhs f = [](double t, const Vector&) -> Vector {
    Vector v(1);
    v << (t < 0.4 ? 1.0 : 0.0);
    return v;
  };
  Vector x0 = Vector::Zero(1);
  Vector grid(2);
  grid << 0.0, 1.0;
  const Matrix samples = rk4(f, x0, grid, 0.13, {0.4});
  CHECK(std::abs(samples(1, 0) - 0.4) <= 1e-14);
}

TEST_CASE("rk4 validates its inputs") {
  const OdeRhs f = [](double, const Vector& x) -> Vector { return x; };
  Vector x0 = Vector::Zero(1);
  CHECK_THROWS_AS(rk4(f, x0, Vector(), 0.1), std::invalid_argument);
  Vector bad(2);
  bad << 1.0, 0.5;
  CHECK_THROWS_AS(rk4(f, x0, bad, 0.1), std::invalid_argument);
  Vector grid(2);
  grid << 0.0, 1.0;
  CHECK_THROWS_AS(rk4(f, x0, grid, 0.0), std::invalid_argument);
}

TEST_CASE("newton_minimize solves a quadratic in one step") {
  NewtonProblem p;
  p.value = [](const Vector& x) { return 0.5 * x.squaredNorm(); };
  p.gradient = [](const Vector& x) { return x; };
  p.hessian = [](const Vector& x) { return Matrix::Identity(x.size(), x.size()); };
  Vector x0(2);
  x0 << 3.0, -2.0;
  const NewtonResult r = newton_minimize(p, x0);
  CHECK(r.converged);
  CHECK(r.iterations == 1);
  CHECK(r.x.norm() <= 1e-12);
}

TEST_CASE("newton_minimize treats overflow as a line-search rejection") {
  // f(x) = exp(x) - 2x with an artificial overflow wall, minimum at ln 2.
  NewtonProblem p;
  p.value = [](const Vector& x) {
    if (x(0) > 30.0) return std::numeric_limits<double>::infinity();
    return std::exp(x(0)) - 2.0 * x(0);
  };
  p.gradient = [](const Vector& x) {
    Vector g(1);
    g << std::exp(x(0)) - 2.0;
    return g;
  };
  p.hessian = [](const Vector& x) {
    Matrix h(1, 1);
    h << std::exp(x(0));
    return h;
  };
  Vector x0(1);
  x0 << 0.0;
  const NewtonResult r = newton_minimize(p, x0);
  CHECK(r.converged);
  CHECK(std::abs(r.x(0) - std::log(2.0)) <= 1e-9);
}

TEST_CASE("newton_minimize reports divergence on an unbounded objective") {
  NewtonProblem p;
  p.value = [](const Vector& x) { return std::exp(x(0)) + x(0); };
  p.gradient = [](const Vector& x) {
    Vector g(1);
    g << std::exp(x(0)) + 1.0;
    return g;
  };
  p.hessian = [](const Vector& x) {
    Matrix h(1, 1);
    h << std::exp(x(0));
    return h;
  };
  NewtonOptions options;
  options.divergence_norm = 50.0;
  options.max_iterations = 500;
  const NewtonResult r = newton_minimize(p, Vector::Zero(1), options);
  CHECK(r.diverged);
}
