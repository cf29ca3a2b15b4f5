#include "rqdyn/network.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace rqdyn {

int Network::species_index(const std::string& name) const {
  for (size_t i = 0; i < species.size(); ++i) {
    if (species[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Vector Network::log_quotients(const Vector& concentrations) const {
  if (concentrations.size() != species_count()) {
    throw std::invalid_argument("log_quotients: concentration dimension mismatch");
  }
  if ((concentrations.array() <= 0.0).any()) {
    throw std::invalid_argument("log_quotients: concentrations must be positive");
  }
  return S.transpose() * concentrations.array().log().matrix();
}

Vector Network::quotients(const Vector& concentrations) const {
  return log_quotients(concentrations).array().exp();
}

Network build_network(std::vector<std::string> species,
                      const std::vector<ReactionSpec>& reactions) {
  if (species.empty()) {
    throw std::invalid_argument("build_network: at least one species required");
  }
  if (reactions.empty()) {
    throw std::invalid_argument("build_network: at least one reaction required");
  }
  std::set<std::string> seen;
  for (const auto& name : species) {
    if (!seen.insert(name).second) {
      throw std::invalid_argument("build_network: duplicate species name '" + name + "'");
    }
  }

  Network net;
  net.species = std::move(species);
  const int n = net.species_count();
  const int r = static_cast<int>(reactions.size());
  net.S = Matrix::Zero(n, r);

  std::set<std::string> reaction_seen;
  for (int j = 0; j < r; ++j) {
    const auto& spec = reactions[j];
    if (!reaction_seen.insert(spec.name).second) {
      throw std::invalid_argument("build_network: duplicate reaction name '" +
                                  spec.name + "'");
    }
    net.reactions.push_back(spec.name);
    for (const auto& [species_name, coeff] : spec.stoichiometry) {
      const int i = net.species_index(species_name);
      if (i < 0) {
        throw std::invalid_argument("build_network: reaction '" + spec.name +
                                    "' references unknown species '" + species_name + "'");
      }
      if (!std::isfinite(coeff)) {
        throw std::invalid_argument("build_network: non-finite coefficient in reaction '" +
                                    spec.name + "'");
      }
      net.S(i, j) = coeff;
    }
    if (net.S.col(j).isZero(0.0)) {
      throw std::invalid_argument("build_network: reaction '" + spec.name +
                                  "' has an all-zero stoichiometric column");
    }
  }
  return net;
}

namespace {

// Rescale basis columns to unit largest-magnitude entry (positive), so an
// elementary conservation law or cycle reads off in natural units.
void rescale_columns_to_unit_peak(Matrix& basis) {
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    Eigen::Index at = 0;
    const double peak = basis.col(c).cwiseAbs().maxCoeff(&at);
    if (peak > 0.0) basis.col(c) /= basis(at, c);
  }
}

}  // namespace

ConservationBasis conservation_basis(const Network& net) {
  // ker(S^T); m = n - rank(S). With the peak normalization a two-species pool
  // appears as the plain sum of its members.
  Matrix basis = null_space(net.S.transpose());
  rescale_columns_to_unit_peak(basis);
  return {std::move(basis)};
}

AchievabilityCheck check_quotient_achievable(const Network& net, const Vector& x,
                                             double tol) {
  if (x.size() != net.reaction_count()) {
    throw std::invalid_argument("check_quotient_achievable: dimension mismatch");
  }
  if (!x.allFinite()) {
    throw std::invalid_argument("check_quotient_achievable: non-finite target");
  }
  const Matrix st = net.S.transpose();
  const Vector u = lstsq_min_norm(st, x);
  const double residual = (st * u - x).norm();
  return {residual <= tol * std::max(1.0, x.norm()), residual};
}

WegscheiderCheck wegscheider_check(const Network& net, const Vector& K_eq,
                                   double tol) {
  if (K_eq.size() != net.reaction_count()) {
    throw std::invalid_argument("wegscheider_check: K_eq dimension mismatch");
  }
  if ((K_eq.array() <= 0.0).any() || !K_eq.allFinite()) {
    throw std::invalid_argument("wegscheider_check: K_eq must be positive and finite");
  }

  WegscheiderCheck result;
  Matrix cycles = null_space(net.S);  // r x k
  // An elementary cycle then reports |ln prod K_eq| directly.
  rescale_columns_to_unit_peak(cycles);
  result.cycle_basis = cycles;

  const Vector log_keq = K_eq.array().log();
  const double scale = std::max(1.0, log_keq.norm());
  for (Eigen::Index c = 0; c < cycles.cols(); ++c) {
    const double violation = std::abs(cycles.col(c).dot(log_keq));
    result.worst_violation = std::max(result.worst_violation, violation);
    if (violation > tol * cycles.col(c).norm() * scale) {
      result.consistent = false;
    }
  }
  return result;
}

}  // namespace rqdyn
