#pragma once

#include "rqdyn/numerics.hpp"

#include <map>
#include <string>
#include <vector>

namespace rqdyn {

/// One reversible reaction given as signed per-species coefficients,
/// products positive and reactants negative, so that
/// Q_j(c) = prod_i c_i^{S_ij}.
struct ReactionSpec {
  std::string name;
  std::map<std::string, double> stoichiometry;
};

struct Network {
  std::vector<std::string> species;    // n unique names
  std::vector<std::string> reactions;  // r unique names
  Matrix S;                            // n x r stoichiometric matrix

  int species_count() const { return static_cast<int>(species.size()); }
  int reaction_count() const { return static_cast<int>(reactions.size()); }

  /// Index of a species name, -1 if absent.
  int species_index(const std::string& name) const;

  /// x = S^T ln c for strictly positive concentrations.
  Vector log_quotients(const Vector& concentrations) const;

  /// Q_j = prod_i c_i^{S_ij}.
  Vector quotients(const Vector& concentrations) const;
};

/// Assembles and validates a Network. Throws std::invalid_argument on
/// duplicate names, all-zero reaction columns, unknown species in a
/// stoichiometry map, or non-finite coefficients.
Network build_network(std::vector<std::string> species,
                      const std::vector<ReactionSpec>& reactions);

struct ConservationBasis {
  /// n x m basis of ker(S^T); mutually orthogonal columns, each rescaled to a
  /// unit largest-magnitude entry so a simple pool reads as a plain sum.
  Matrix L;
  int dimension() const { return static_cast<int>(L.cols()); }
};

/// Basis of the conserved-totals space; m = n - rank(S). A trivial kernel
/// yields an n x 0 matrix, which is a valid result.
ConservationBasis conservation_basis(const Network& net);

struct AchievabilityCheck {
  bool achievable = false;
  double residual = 0.0;  // norm of the component of x outside Im(S^T)
};

/// True iff x lies in Im(S^T) up to tol * max(1, |x|).
AchievabilityCheck check_quotient_achievable(const Network& net, const Vector& x,
                                             double tol = 1e-9);

struct WegscheiderCheck {
  bool consistent = true;
  double worst_violation = 0.0;  // |nu^T ln K_eq| for the worst cycle vector
  Matrix cycle_basis;            // r x k basis of ker(S), scaled to unit max-entry
};

/// Thermodynamic cycle condition: every nu with S nu = 0 must satisfy
/// nu^T ln K_eq = 0. Violations are reported for cycle vectors rescaled so
/// their largest-magnitude entry is 1 (an elementary cycle then reports the
/// log of its K_eq product directly).
WegscheiderCheck wegscheider_check(const Network& net, const Vector& K_eq,
                                   double tol = 1e-9);

}  // namespace rqdyn
