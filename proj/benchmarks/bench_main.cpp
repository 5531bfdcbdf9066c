#include <benchmark/benchmark.h>

#include "morphcoh/ce_complex.hpp"
#include "morphcoh/fixtures.hpp"
#include "morphcoh/group_cohomology.hpp"
#include "morphcoh/linalg.hpp"
#include "morphcoh/mla_complex.hpp"
#include "morphcoh/random_instances.hpp"

using namespace morphcoh;

static void BM_Rank(benchmark::State& state) {
  random::Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random::matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32);

static void BM_MlaDifferential(benchmark::State& state) {
  const MorphismRep rep = fixtures::sl2_v1_fixture();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mla_differential(rep, n));
}
BENCHMARK(BM_MlaDifferential)->DenseRange(0, 3);

static void BM_MlaTable(benchmark::State& state) {
  const MorphismRep rep = fixtures::sl2_v1_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(mla_table(rep, 4));
}
BENCHMARK(BM_MlaTable);

static void BM_GroupDifferential(benchmark::State& state) {
  const FiniteGroup g = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  const std::vector<Matrix> action(g.order(), Matrix::identity(2));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(group_differential(g, action, n, false));
}
BENCHMARK(BM_GroupDifferential)->DenseRange(0, 3);
BENCHMARK_MAIN();
