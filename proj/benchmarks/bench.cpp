#include <benchmark/benchmark.h>

#include "turan_lab/blocks.hpp"
#include "turan_lab/construct.hpp"
#include "turan_lab/cycles.hpp"
#include "turan_lab/discharge.hpp"
#include "turan_lab/oracle.hpp"

namespace {

using namespace turan;

void BM_AssembleG0(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_extremal(k, ExtremalVariant::kG0));
}
BENCHMARK(BM_AssembleG0)->Arg(0)->Arg(1)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FindC6(benchmark::State& state) {
  const Graph g = assemble_extremal(static_cast<int>(state.range(0)), ExtremalVariant::kG0).embedding.graph();
  for (auto _ : state) benchmark::DoNotOptimize(find_cycle_of_length(g, 6));
  state.counters["v"] = g.order();
}
BENCHMARK(BM_FindC6)->Arg(1)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FindCellGeneral(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const Graph g = construct_from_base(cycle_base(ell)).embedding.graph();
  for (auto _ : state) benchmark::DoNotOptimize(find_cycle_of_length(g, ell));
}
BENCHMARK(BM_FindCellGeneral)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const PlanarEmbedding emb = assemble_extremal(static_cast<int>(state.range(0)), ExtremalVariant::kG0).embedding;
  for (auto _ : state) benchmark::DoNotOptimize(decompose_triangular_blocks(emb));
}
BENCHMARK(BM_Decompose)->Arg(1)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_Certify(benchmark::State& state) {
  const PlanarEmbedding emb = assemble_extremal(static_cast<int>(state.range(0)), ExtremalVariant::kG0).embedding;
  for (auto _ : state) benchmark::DoNotOptimize(partition_and_certify(emb));
}
BENCHMARK(BM_Certify)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Planarity(benchmark::State& state) {
  const Graph g = assemble_extremal(static_cast<int>(state.range(0)), ExtremalVariant::kG0).embedding.graph();
  for (auto _ : state) benchmark::DoNotOptimize(planarity_test(g));
}
BENCHMARK(BM_Planarity)->Arg(1)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_OracleSubsets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_edges_c6free_planar(n));
}
BENCHMARK(BM_OracleSubsets)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
