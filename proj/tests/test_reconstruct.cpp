#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rqdyn/reconstruct.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <random>

using namespace rqdyn;

namespace {

Network isomerization() {
  return build_network({"A", "B"}, {{"forward", {{"A", -1.0}, {"B", 1.0}}}});
}

Network three_cycle() {
  return build_network({"A", "B", "C"},
                       {{"ab", {{"A", -1.0}, {"B", 1.0}}},
                        {"bc", {{"B", -1.0}, {"C", 1.0}}},
                        {"ca", {{"C", -1.0}, {"A", 1.0}}}});
}

Network from_spec(const oracle::RandomNetworkSpec& spec) {
  std::vector<ReactionSpec> reactions;
  for (size_t j = 0; j < spec.reactions.size(); ++j) {
    ReactionSpec r;
    r.name = "r" + std::to_string(j);
    for (const auto& [species_index, coeff] : spec.reactions[j]) {
      r.stoichiometry[spec.species[species_index]] = coeff;
    }
    reactions.push_back(std::move(r));
  }
  return build_network(spec.species, reactions);
}

}  // namespace

TEST_CASE("base point of the isomerization is the minimum-norm lift") {
  const Network net = isomerization();
  Vector x_star(1);
  x_star << std::log(2.0);
  const Vector c0 = base_point(net, x_star);
  CHECK(std::abs(c0(0) - 1.0 / std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(c0(1) - std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(net.log_quotients(c0)(0) - std::log(2.0)) <= 1e-12);
}

TEST_CASE("zero target gives the all-ones base point") {
  const Network net = three_cycle();
  const Vector c0 = base_point(net, Vector::Zero(3));
  CHECK((c0 - Vector::Ones(3)).norm() <= 1e-12);
}

TEST_CASE("unachievable targets are rejected by name") {
  const Network net = three_cycle();
  Vector bad = Vector::Ones(3);  // pure cycle direction
  CHECK_THROWS_AS(base_point(net, bad), UnachievableQuotientError);
  try {
    base_point(net, bad);
  } catch (const UnachievableQuotientError& e) {
    CHECK(e.residual > 1.0);
  }

  ReconstructionProblem problem{net, bad, Vector::Zero(1)};
  CHECK_THROWS_AS(reconstruct_concentrations(problem), UnachievableQuotientError);
}

TEST_CASE("objective at alpha = 0 reproduces the direct substitution") {
  const Network net = three_cycle();
  const Matrix L = conservation_basis(net).L;
  REQUIRE(L.cols() == 1);
  Vector c0(3);
  c0 << 0.4, 1.1, 2.5;
  Vector y_star(1);
  y_star << 3.0;
  const ObjectiveEval eval = objective(L, c0, y_star, Vector::Zero(1));
  CHECK(std::abs(eval.value - c0.sum()) <= 1e-14 * c0.sum());
  CHECK((eval.gradient - (L.transpose() * c0 - y_star)).norm() <= 1e-14);
  // The net-based overload computes the same thing.
  const ObjectiveEval via_net = objective(net, c0, y_star, Vector::Zero(1));
  CHECK(std::abs(via_net.value - eval.value) <= 1e-14);
}

TEST_CASE("objective derivatives match central finite differences") {
  const Network net = build_network(
      {"Na_out", "Na_in", "H_in", "H_out"},
      {{"na", {{"Na_out", -1.0}, {"Na_in", 1.0}}},
       {"h", {{"H_in", -1.0}, {"H_out", 1.0}}}});
  const Matrix L = conservation_basis(net).L;
  REQUIRE(L.cols() == 2);
  Vector x_star(2);
  x_star << 0.4, -0.1;
  const Vector c0 = base_point(net, x_star);
  Vector y_star(2);
  y_star << 1.5, 0.7;
  Vector alpha(2);
  alpha << 0.3, -0.2;

  const ObjectiveEval eval = objective(L, c0, y_star, alpha);
  const Vector fd_gradient = oracle::central_diff_gradient(
      [&](const Vector& a) { return objective(L, c0, y_star, a).value; }, alpha);
  CHECK((eval.gradient - fd_gradient).norm() <=
        1e-6 * std::max(1.0, eval.gradient.norm()));

  const Matrix fd_hessian = oracle::central_diff_jacobian(
      [&](const Vector& a) { return objective(L, c0, y_star, a).gradient; }, alpha);
  CHECK((eval.hessian - fd_hessian).norm() <= 1e-5 * std::max(1.0, eval.hessian.norm()));
  // Symmetric positive definite.
  CHECK((eval.hessian - eval.hessian.transpose()).norm() <= 1e-12);
  CHECK(Eigen::LLT<Matrix>(eval.hessian).info() == Eigen::Success);
}

TEST_CASE("isomerization reconstruction matches the conservation formulas") {
  const Network net = isomerization();
  for (const auto& [q, c_total] : {std::pair{2.0, 3.0}, std::pair{0.5, 1.0},
                                  std::pair{10.0, 7.3}, std::pair{1.0, 2.0}}) {
    ReconstructionProblem problem;
    problem.net = net;
    problem.x_star = Vector::Constant(1, std::log(q));
    problem.y_star = Vector::Constant(1, c_total);
    const ReconstructionResult result = reconstruct_concentrations(problem);
    CHECK(std::abs(result.c_star(0) - c_total / (1.0 + q)) <= 1e-10);
    CHECK(std::abs(result.c_star(1) - c_total * q / (1.0 + q)) <= 1e-10);
  }
}

TEST_CASE("random round trips recover the generating concentrations") {
  std::mt19937 rng(7001);
  for (int trial = 0; trial < 25; ++trial) {
    const Network net = from_spec(oracle::random_network_spec(rng));
    const Vector c = oracle::random_concentrations(rng, net.species_count());
    const ConservationBasis basis = conservation_basis(net);

    ReconstructionProblem problem;
    problem.net = net;
    problem.x_star = net.log_quotients(c);
    problem.y_star = basis.L.transpose() * c;
    const ReconstructionResult result = reconstruct_concentrations(problem);

    CHECK(((result.c_star - c).cwiseAbs().array() / c.array()).maxCoeff() <= 1e-8);
    CHECK(result.iterations <= 30);
    CHECK(result.residual_quotients <= 1e-8 * std::max(1.0, problem.x_star.norm()));
    CHECK(result.residual_totals <= 1e-8 * std::max(1.0, problem.y_star.norm()));
  }
}

TEST_CASE("quotients are invariant along the kernel family") {
  const Network net = build_network(
      {"A", "B", "C", "D"},
      {{"r1", {{"A", -1.0}, {"B", 1.0}}}, {"r2", {{"C", -2.0}, {"D", 1.0}}}});
  const Matrix L = conservation_basis(net).L;
  Vector x_star(2);
  x_star << 0.7, -1.2;
  const Vector c0 = base_point(net, x_star);
  std::mt19937 rng(15);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    Vector alpha(L.cols());
    for (Eigen::Index i = 0; i < alpha.size(); ++i) alpha(i) = dist(rng);
    const Vector c = ((L * alpha).array() + c0.array().log()).exp();
    CHECK((net.log_quotients(c) - x_star).norm() <= 1e-10);
  }
}

TEST_CASE("the result does not depend on the base point") {
  const Network net = three_cycle();
  const Matrix L = conservation_basis(net).L;
  std::mt19937 rng(31);
  const Vector c = oracle::random_concentrations(rng, 3, 0.1, 10.0);
  const Vector x_star = net.log_quotients(c);
  const Vector y_star = L.transpose() * c;

  const Vector c0 = base_point(net, x_star);
  const ReconstructionResult from_min_norm =
      reconstruct_from_base(net, L, c0, y_star, {});

  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vector beta(L.cols());
  for (Eigen::Index i = 0; i < beta.size(); ++i) beta(i) = dist(rng);
  const Vector shifted = ((L * beta).array() + c0.array().log()).exp();
  const ReconstructionResult from_shifted =
      reconstruct_from_base(net, L, shifted, y_star, {});

  CHECK(((from_min_norm.c_star - from_shifted.c_star).cwiseAbs().array() /
         from_min_norm.c_star.array())
            .maxCoeff() <= 1e-8);
}

TEST_CASE("achieved quotients do not depend on which feasible totals are used") {
  const Network net = three_cycle();
  const Matrix L = conservation_basis(net).L;
  std::mt19937 rng(53);
  Vector x_star = net.log_quotients(oracle::random_concentrations(rng, 3, 0.1, 10.0));
  for (int trial = 0; trial < 5; ++trial) {
    const Vector c_any = oracle::random_concentrations(rng, 3, 0.1, 10.0);
    ReconstructionProblem problem{net, x_star, L.transpose() * c_any};
    const ReconstructionResult result = reconstruct_concentrations(problem);
    CHECK((net.log_quotients(result.c_star) - x_star).norm() <=
          1e-8 * std::max(1.0, x_star.norm()));
  }
}

TEST_CASE("newton descent strictly improves the objective") {
  const Network net = three_cycle();
  const Matrix L = conservation_basis(net).L;
  Vector x_star(3);
  x_star << 0.3, -0.5, 0.2;
  const Vector c0 = base_point(net, x_star);
  Vector y_star(1);
  y_star << 9.0;
  const ReconstructionResult result = reconstruct_from_base(net, L, c0, y_star, {});
  CHECK(objective(L, c0, y_star, result.alpha_star).value <
        objective(L, c0, y_star, Vector::Zero(1)).value);
}

TEST_CASE("negative totals are reported as infeasible") {
  ReconstructionProblem problem;
  problem.net = isomerization();
  problem.x_star = Vector::Constant(1, std::log(2.0));
  problem.y_star = Vector::Constant(1, -1.0);
  CHECK_THROWS_AS(reconstruct_concentrations(problem), InfeasibleTotalsError);
}

TEST_CASE("a trivial kernel returns the base point directly") {
  const Network net = build_network(
      {"A", "B"},
      {{"r1", {{"A", -1.0}, {"B", 1.0}}}, {"r2", {{"B", -1.0}}}});
  REQUIRE(conservation_basis(net).dimension() == 0);
  ReconstructionProblem problem;
  problem.net = net;
  Vector c(2);
  c << 0.7, 1.9;
  problem.x_star = net.log_quotients(c);
  problem.y_star = Vector(0);
  const ReconstructionResult result = reconstruct_concentrations(problem);
  CHECK(result.iterations == 0);
  CHECK(result.residual_totals == 0.0);
  CHECK(((result.c_star - c).cwiseAbs().array() / c.array()).maxCoeff() <= 1e-9);
}

TEST_CASE("dimension mismatches are invalid arguments, not numerical failures") {
  ReconstructionProblem problem;
  problem.net = isomerization();
  problem.x_star = Vector::Constant(1, 0.1);
  problem.y_star = Vector::Ones(2);
  CHECK_THROWS_AS(reconstruct_concentrations(problem), std::invalid_argument);
}
