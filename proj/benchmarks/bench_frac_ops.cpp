#include <benchmark/benchmark.h>

#include <cmath>

#include "fracaim/fde_solver.hpp"
#include "fracaim/frac_ops.hpp"

namespace {

using fracaim::FractionalOrder;
using fracaim::Trajectory;
using fracaim::UniformGrid;
using fracaim::Vector;

void BM_GLWeights(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    auto table = fracaim::gl_weights(FractionalOrder(0.3), n);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_GLWeights)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_GLDifference(benchmark::State& state) {
  const UniformGrid grid(5.0, 1e-3);
  const auto x = Trajectory::sample_scalar(grid, [](double t) { return std::sin(t); });
  const std::size_t last = grid.count() - 1;
  for (auto _ : state) {
    auto d = fracaim::divided_gl_difference(x, FractionalOrder(0.3),
                                            state.range(0) * 1e-3, last);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_GLDifference)->Arg(1)->Arg(10)->Arg(100);

void BM_SolveCaputo(benchmark::State& state) {
  Vector x0(2);
  x0 << 0.5, -1.0;
  fracaim::CaputoProblem problem{
      [](double t, const Vector& x) {
        Vector out(2);
        out[0] = x[0] - x[1] + std::cos(2.0 * t);
        out[1] = t * x[0] + std::exp(std::cos(x[1])) + std::sin(2.0 * t);
        return out;
      },
      x0, FractionalOrder(0.3), 5.0};
  const UniformGrid grid(5.0, 5.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    auto x = fracaim::solve_caputo(problem, grid);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_SolveCaputo)->Arg(500)->Arg(2000);

void BM_SolveRetarded(benchmark::State& state) {
  Vector x0(2);
  x0 << 0.5, -1.0;
  fracaim::CaputoProblem base{
      [](double t, const Vector& x) {
        Vector out(2);
        out[0] = x[0] - x[1] + std::cos(2.0 * t);
        out[1] = t * x[0] + std::exp(std::cos(x[1])) + std::sin(2.0 * t);
        return out;
      },
      x0, FractionalOrder(0.3), 5.0};
  fracaim::RetardedProblem problem{base, 0.1};
  const UniformGrid grid(5.0, 5.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    auto y = fracaim::solve_retarded(problem, grid);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_SolveRetarded)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
