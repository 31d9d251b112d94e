// Microbenchmarks for the hot paths: differential assembly, strand
// decomposition, sparse rank, and end-to-end cohomology cells.  Sizes are
// picked so a full run stays under a minute on one core.

#include <benchmark/benchmark.h>

#include "koszul/koszul.hpp"
#include "koszul/multilinear.hpp"
#include "koszul/rank.hpp"

using namespace koszul;

namespace {

KoszulInstance cubic_plane() {
  return KoszulInstance(MultiProjSpace({2}), {0}, {3});
}

void BM_assemble_differential(benchmark::State& state) {
  KoszulInstance inst = cubic_plane();
  std::int64_t p = state.range(0);
  for (auto _ : state) {
    SparseMatrix m = inst.assemble_differential(p, 1);
    benchmark::DoNotOptimize(m.entries().data());
  }
}

void BM_strand_decompose(benchmark::State& state) {
  KoszulInstance inst = cubic_plane();
  std::int64_t p = state.range(0);
  for (auto _ : state) {
    auto strands = inst.strand_decompose(p, 1);
    benchmark::DoNotOptimize(strands.data());
  }
}

void BM_sparse_rank_whole(benchmark::State& state) {
  KoszulInstance inst = cubic_plane();
  SparseMatrix m = inst.assemble_differential(state.range(0), 1);
  for (auto _ : state) {
    std::uint64_t r = rank(m, inst.field());
    benchmark::DoNotOptimize(r);
  }
}

void BM_cohomology_cell(benchmark::State& state) {
  std::int64_t p = state.range(0);
  for (auto _ : state) {
    // fresh instance per iteration: ranks are cached inside an instance
    KoszulInstance inst = cubic_plane();
    benchmark::DoNotOptimize(inst.koszul_dimension(p, 1, 1));
  }
}

void BM_cohomology_cell_threads(benchmark::State& state) {
  unsigned workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    KoszulInstance inst(MultiProjSpace({2}), {0}, {4});
    benchmark::DoNotOptimize(inst.koszul_dimension(5, 1, workers));
  }
}

void BM_wedge_roundtrip(benchmark::State& state) {
  BinomialTable binom(64);
  std::uint64_t total = binomial(20, 6);
  for (auto _ : state) {
    for (std::uint64_t r = 0; r < total; r += 7) {
      WedgeIndex w = wedge_unrank(r, 6, 20, binom);
      benchmark::DoNotOptimize(wedge_rank(w, binom));
    }
  }
}

}  // namespace

BENCHMARK(BM_assemble_differential)->Arg(3)->Arg(5);
BENCHMARK(BM_strand_decompose)->Arg(3)->Arg(5);
BENCHMARK(BM_sparse_rank_whole)->Arg(3)->Arg(4);
BENCHMARK(BM_cohomology_cell)->Arg(3)->Arg(5);
BENCHMARK(BM_cohomology_cell_threads)->Arg(1)->Arg(4);
BENCHMARK(BM_wedge_roundtrip);

BENCHMARK_MAIN();
