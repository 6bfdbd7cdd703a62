#include <benchmark/benchmark.h>

#include "eqrank/chars.hpp"
#include "eqrank/embed.hpp"
#include "eqrank/equiv.hpp"
#include "eqrank/oracle.hpp"
#include "eqrank/rootsys.hpp"

using namespace eqrank;

namespace {

void BM_RootSystemE8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_root_system(E(8)));
}
BENCHMARK(BM_RootSystemE8)->Unit(benchmark::kMillisecond);

void BM_WeylOrderE8(benchmark::State& state) {
  const auto rs = root_system(E(8));
  for (auto _ : state) benchmark::DoNotOptimize(parabolic_weyl_order(*rs, {0, 1, 2, 3, 4, 5, 6, 7}));
}
BENCHMARK(BM_WeylOrderE8)->Unit(benchmark::kMillisecond);

void BM_SaturateE8Adjoint(benchmark::State& state) {
  const auto adj = adjoint_character(SemisimpleAlgebra{E(8)});
  for (auto _ : state) benchmark::DoNotOptimize(saturate(adj));
}
BENCHMARK(BM_SaturateE8Adjoint)->Unit(benchmark::kMillisecond);

// Uncached: each run uses a new highest weight on F4.
void BM_FreudenthalF4(benchmark::State& state) {
  const SemisimpleAlgebra f4{F4()};
  long k = 0;
  for (auto _ : state) {
    ++k;
    benchmark::DoNotOptimize(irreducible_character_from_labels(f4, Vec{k % 3, 1, 0, k}));
  }
}
BENCHMARK(BM_FreudenthalF4)->Unit(benchmark::kMillisecond)->Iterations(6);

void BM_RestrictE8Adjoint(benchmark::State& state) {
  const auto adj = adjoint_character(SemisimpleAlgebra{E(8)});
  const auto es = maximal_equal_rank_subalgebras(E(8));
  for (auto _ : state)
    for (const auto& e : es) benchmark::DoNotOptimize(restrict_character(adj, e));
}
BENCHMARK(BM_RestrictE8Adjoint)->Unit(benchmark::kMillisecond);

void BM_RewriteGraph(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_graph_summary(rank));
}
BENCHMARK(BM_RewriteGraph)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Invariant(benchmark::State& state) {
  const SemisimpleAlgebra g{E(8), D(12), C(9), B(7), A(9)};
  for (auto _ : state) benchmark::DoNotOptimize(invariant(g));
}
BENCHMARK(BM_Invariant);

}  // namespace

BENCHMARK_MAIN();
