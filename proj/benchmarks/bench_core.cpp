#include <random>

#include <benchmark/benchmark.h>

#include "finsler/identities.hpp"
#include "finsler/metric.hpp"
#include "finsler/motion.hpp"
#include "finsler/ortho.hpp"
#include "finsler/sampling.hpp"

namespace {

using namespace finsler;

NormModel randers(int n) {
  Matrix alpha = Matrix::Identity(n, n);
  for (int i = 0; i + 1 < n; ++i) alpha(i, i + 1) = alpha(i + 1, i) = 0.2;
  Vector beta = Vector::LinSpaced(n, -0.3, 0.3);
  return NormModel::randers(alpha, beta * (0.5 / randers_beta_norm(alpha, beta)));
}

Basis random_orthonormal(const NormModel& model, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return orthonormalize(model, Basis(random_basis(model.dimension(), rng))).basis;
}

void metric_with(benchmark::State& state, DerivativeMethod method) {
  const NormModel model = randers(static_cast<int>(state.range(0)));
  const Vector v = sample_admissible_directions(model, 1, 1).front();
  const DerivativeOptions opts{method, {}};
  for (auto _ : state) benchmark::DoNotOptimize(metric_at(model, v, opts));
}

void BM_MetricAnalytic(benchmark::State& s) { metric_with(s, DerivativeMethod::Analytic); }
void BM_MetricHyperdual(benchmark::State& s) { metric_with(s, DerivativeMethod::Hyperdual); }
void BM_MetricFiniteDifference(benchmark::State& s) { metric_with(s, DerivativeMethod::FiniteDifference); }
BENCHMARK(BM_MetricAnalytic)->DenseRange(2, 6, 2);
BENCHMARK(BM_MetricHyperdual)->DenseRange(2, 6, 2);
BENCHMARK(BM_MetricFiniteDifference)->DenseRange(2, 6, 2);

void BM_CartanHyperdual(benchmark::State& state) {
  const NormModel model = randers(static_cast<int>(state.range(0)));
  const Vector v = sample_admissible_directions(model, 1, 1).front();
  for (auto _ : state) benchmark::DoNotOptimize(cartan_at(model, v));
}
BENCHMARK(BM_CartanHyperdual)->DenseRange(2, 6, 2);

void BM_IdentitySweep(benchmark::State& state) {
  const NormModel model = randers(4);
  const auto samples = sample_admissible_directions(model, 100, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_euler_identities(model, samples));
}
BENCHMARK(BM_IdentitySweep)->Unit(benchmark::kMillisecond);

void BM_Orthonormalize(benchmark::State& state) {
  const NormModel model = randers(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(5);
  const Basis input(random_basis(model.dimension(), rng));
  for (auto _ : state) benchmark::DoNotOptimize(orthonormalize(model, input));
}
BENCHMARK(BM_Orthonormalize)->DenseRange(2, 6, 2);

void BM_SolveMotions(benchmark::State& state) {
  const NormModel model = randers(static_cast<int>(state.range(0)));
  const Basis b = random_orthonormal(model, 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lie_algebra(assemble_motion_constraints(model, b)));
}
BENCHMARK(BM_SolveMotions)->DenseRange(2, 6, 2);

void BM_QuasimotionCompare(benchmark::State& state) {
  const NormModel model = randers(static_cast<int>(state.range(0)));
  const Basis b = random_orthonormal(model, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        compare_algebras(assemble_motion_constraints(model, b), assemble_quasimotion_constraints(model, b)));
  }
}
BENCHMARK(BM_QuasimotionCompare)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
