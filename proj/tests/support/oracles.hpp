// Test-only oracles, independent of the library's numerical kernels: plain
// RK4 loops, central finite differences, and seeded random problem generators.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Classic RK4 with n equal steps from t0 to t1; written from scratch so it
/// shares no code with the implementation under test.
inline double rk4_scalar(const std::function<double(double, double)>& f, double y0,
                         double t0, double t1, int steps) {
  double y = y0;
  const double h = (t1 - t0) / steps;
  for (int s = 0; s < steps; ++s) {
    const double t = t0 + s * h;
    const double k1 = f(t, y);
    const double k2 = f(t + h / 2, y + h / 2 * k1);
    const double k3 = f(t + h / 2, y + h / 2 * k2);
    const double k4 = f(t + h, y + h * k3);
    y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return y;
}

inline Vector rk4_vector(const std::function<Vector(double, const Vector&)>& f,
                         Vector y, double t0, double t1, int steps) {
  const double h = (t1 - t0) / steps;
  for (int s = 0; s < steps; ++s) {
    const double t = t0 + s * h;
    const Vector k1 = f(t, y);
    const Vector k2 = f(t + h / 2, y + h / 2 * k1);
    const Vector k3 = f(t + h / 2, y + h / 2 * k2);
    const Vector k4 = f(t + h, y + h * k3);
    y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return y;
}

inline Vector central_diff_gradient(const std::function<double(const Vector&)>& f,
                                    const Vector& x, double h = 1e-6) {
  Vector g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Vector hi = x, lo = x;
    hi(i) += h;
    lo(i) -= h;
    g(i) = (f(hi) - f(lo)) / (2 * h);
  }
  return g;
}

inline Matrix central_diff_jacobian(const std::function<Vector(const Vector&)>& f,
                                    const Vector& x, double h = 1e-6) {
  const Vector f0 = f(x);
  Matrix j(f0.size(), x.size());
  for (Eigen::Index c = 0; c < x.size(); ++c) {
    Vector hi = x, lo = x;
    hi(c) += h;
    lo(c) -= h;
    j.col(c) = (f(hi) - f(lo)) / (2 * h);
  }
  return j;
}

/// Random reversible network in the builder's input form: every reaction gets
/// disjoint reactant/product sets, so no column is zero.
struct RandomNetworkSpec {
  std::vector<std::string> species;
  // name, list of (species index, signed coefficient)
  std::vector<std::vector<std::pair<int, double>>> reactions;
};

inline RandomNetworkSpec random_network_spec(std::mt19937& rng, int max_species = 8,
                                             int max_reactions = 6) {
  std::uniform_int_distribution<int> n_dist(2, max_species);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> r_dist(1, max_reactions);
  const int r = r_dist(rng);

  RandomNetworkSpec spec;
  for (int i = 0; i < n; ++i) spec.species.push_back("s" + std::to_string(i));

  std::uniform_int_distribution<int> coeff_dist(1, 2);
  for (int j = 0; j < r; ++j) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<int> side_dist(1, std::min(3, n - 1));
    const int reactants = side_dist(rng);
    std::uniform_int_distribution<int> prod_dist(1, std::min(3, n - reactants));
    const int products = prod_dist(rng);
    std::vector<std::pair<int, double>> stoich;
    for (int i = 0; i < reactants; ++i) {
      stoich.emplace_back(order[i], -static_cast<double>(coeff_dist(rng)));
    }
    for (int i = 0; i < products; ++i) {
      stoich.emplace_back(order[reactants + i], static_cast<double>(coeff_dist(rng)));
    }
    spec.reactions.push_back(std::move(stoich));
  }
  return spec;
}

/// Log-uniform concentrations in (lo, hi).
inline Vector random_concentrations(std::mt19937& rng, int n, double lo = 0.01,
                                    double hi = 100.0) {
  std::uniform_real_distribution<double> dist(std::log(lo), std::log(hi));
  Vector c(n);
  for (int i = 0; i < n; ++i) c(i) = std::exp(dist(rng));
  return c;
}

}  // namespace oracle
