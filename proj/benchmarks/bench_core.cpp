#include "rqdyn/dynamics.hpp"
#include "rqdyn/mass_action.hpp"
#include "rqdyn/reconstruct.hpp"
#include "rqdyn/scenarios.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace rqdyn;

namespace {

Matrix random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(n, n);
  for (int i = 0; i < n * n; ++i) m(i / n, i % n) = dist(rng);
  return m;
}

LogLinearSystem glycolysis_system() {
  Matrix k(2, 2);
  k << 0.5, -2.0, 2.0, 0.5;
  return {k, Vector::Ones(2)};
}

void BM_MatrixExponential(benchmark::State& state) {
  const Matrix a = random_matrix(static_cast<int>(state.range(0)), 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expm(a));
  }
}
BENCHMARK(BM_MatrixExponential)->Arg(2)->Arg(6)->Arg(10);

void BM_Eigenmodes(benchmark::State& state) {
  const LogLinearSystem sys(random_matrix(static_cast<int>(state.range(0)), 5) +
                                3.0 * Matrix::Identity(state.range(0), state.range(0)),
                            Vector::Ones(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigenmodes(sys));
  }
}
BENCHMARK(BM_Eigenmodes)->Arg(2)->Arg(8);

void BM_AnalyticSolution(benchmark::State& state) {
  const LogLinearSystem sys = glycolysis_system();
  Vector x0(2);
  x0 << 1.0, 0.0;
  const Vector times = make_time_grid(10.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_solution(sys, x0, times));
  }
}
BENCHMARK(BM_AnalyticSolution)->Arg(100)->Arg(500);

void BM_SimulateDriven(benchmark::State& state) {
  const LogLinearSystem sys = glycolysis_system();
  Vector x0(2);
  x0 << 1.0, 0.0;
  Vector amplitude(2);
  amplitude << 1.0, 0.0;
  const ControlInput drive = ControlInput::sinusoidal(amplitude, 2.0);
  const Vector times = make_time_grid(10.0, 500);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(sys, x0, drive, times));
  }
}
BENCHMARK(BM_SimulateDriven);

void BM_Reconstruct(benchmark::State& state) {
  const Network net = build_network(
      {"Na_out", "Na_in", "H_in", "H_out"},
      {{"na", {{"Na_out", -1.0}, {"Na_in", 1.0}}},
       {"h", {{"H_in", -1.0}, {"H_out", 1.0}}}});
  ReconstructionProblem problem;
  problem.net = net;
  problem.x_star = (Vector(2) << 0.8, -0.4).finished();
  problem.y_star = (Vector(2) << 1.0, 1.0).finished();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct_concentrations(problem));
  }
}
BENCHMARK(BM_Reconstruct);

void BM_MassActionNetwork(benchmark::State& state) {
  const Network net = build_network({"A", "B", "C"},
                                    {{"ab", {{"A", -1.0}, {"B", 1.0}}},
                                     {"bc", {{"B", -1.0}, {"C", 1.0}}},
                                     {"ca", {{"C", -1.0}, {"A", 1.0}}}});
  Vector kf(3), kr(3), c0(3);
  kf << 2.0, 3.0, 1.0;
  kr << 1.0, 1.0, 6.0;
  c0 << 2.0, 0.2, 0.8;
  const Vector times = make_time_grid(10.0, 200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_mass_action_network(net, kf, kr, c0, times));
  }
}
BENCHMARK(BM_MassActionNetwork);

void BM_ScenarioHexokinase(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_hexokinase());
  }
}
BENCHMARK(BM_ScenarioHexokinase);

}  // namespace

BENCHMARK_MAIN();
