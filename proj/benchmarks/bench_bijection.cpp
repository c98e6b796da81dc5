#include <benchmark/benchmark.h>

#include "extlift/active_bijection.hpp"
#include "extlift/extension_lifting.hpp"
#include "extlift/oriented_matroid.hpp"
#include "extlift/realizable.hpp"
#include "support/instances.hpp"

using namespace extlift;

namespace {

struct Setup {
  testing::RandomInstance inst;
  Chirotope m;
  ExtensionSignature sigma_star;
  LiftingSignature sigma;

  explicit Setup(int r, int n)
      : inst(testing::random_instance(1000 + static_cast<std::uint64_t>(n), r, n)),
        m(chirotope_from_matrix(inst.matrix)),
        sigma_star(localization_from_vector(inst.matrix, inst.v)),
        sigma(lifting_from_heights(inst.matrix, inst.h)) {}
};

void BM_ChirotopeFromMatrix(benchmark::State& state) {
  const Setup s(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chirotope_from_matrix(s.inst.matrix));
}
BENCHMARK(BM_ChirotopeFromMatrix)->DenseRange(6, 12, 2);

void BM_Circuits(benchmark::State& state) {
  const Setup s(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(circuits(s.m));
}
BENCHMARK(BM_Circuits)->DenseRange(6, 12, 2);

void BM_ComposeCompliant(benchmark::State& state) {
  const Setup s(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose_compliant(s.m, s.sigma_star, s.sigma));
}
BENCHMARK(BM_ComposeCompliant)->DenseRange(6, 12, 2);

void BM_CompatibleReorientations(benchmark::State& state) {
  const Setup s(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compatible_reorientations(s.m, s.sigma_star, s.sigma));
}
BENCHMARK(BM_CompatibleReorientations)->DenseRange(6, 12, 2);

void BM_BijectionTable(benchmark::State& state) {
  const Setup s(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bijection_table(s.m, s.sigma_star, s.sigma));
}
BENCHMARK(BM_BijectionTable)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
