#include <benchmark/benchmark.h>

#include <mckay/cuts.hpp>
#include <mckay/groupspec.hpp>
#include <mckay/mutation.hpp>
#include <mckay/oracle.hpp>
#include <mckay/types.hpp>

using namespace mckay;

namespace {

// 1/m(1, 1, m-2)
LatticeEmbedding cyclic3(Int m) {
  return embedding_from_spec(GroupSpec{2, {{m, {1, 1, m - 2}}}});
}

// 1/m(1, 1, 1, m-3)
LatticeEmbedding cyclic4(Int m) {
  return embedding_from_spec(GroupSpec{3, {{m, {1, 1, 1, m - 3}}}});
}

void BM_EnumerateTypes(benchmark::State& state) {
  const LatticeEmbedding e = cyclic4(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_types(e));
}
BENCHMARK(BM_EnumerateTypes)->Arg(7)->Arg(31)->Arg(101);

void BM_BuildQuiver(benchmark::State& state) {
  const LatticeEmbedding e = cyclic4(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_mckay(e));
}
BENCHMARK(BM_BuildQuiver)->Arg(7)->Arg(101)->Arg(1001);

void BM_ConstructCut(benchmark::State& state) {
  const McKayQuiver q = build_mckay(cyclic3(state.range(0)));
  const TypeVector t = enumerate_types(q.embedding()).all_types[1];
  for (auto _ : state) benchmark::DoNotOptimize(construct_cut(q, t));
}
BENCHMARK(BM_ConstructCut)->Arg(7)->Arg(101)->Arg(1001);

void BM_BruteForceCuts(benchmark::State& state) {
  const McKayQuiver q = build_mckay(cyclic3(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_cuts(q));
}
BENCHMARK(BM_BruteForceCuts)->Arg(4)->Arg(6)->Arg(8);

void BM_CutLattice(benchmark::State& state) {
  const McKayQuiver q = build_mckay(cyclic3(state.range(0)));
  const auto positive = enumerate_types(q.embedding()).positive_types;
  for (auto _ : state)
    for (const TypeVector& t : positive) benchmark::DoNotOptimize(enumerate_cut_lattice(q, t));
}
BENCHMARK(BM_CutLattice)->Arg(5)->Arg(9)->Arg(15);

void BM_MaxViaP(benchmark::State& state) {
  const McKayQuiver q = build_mckay(cyclic3(state.range(0)));
  const TypeVector t = enumerate_types(q.embedding()).positive_types.front();
  for (auto _ : state) benchmark::DoNotOptimize(max_via_p(q, t));
}
BENCHMARK(BM_MaxViaP)->Arg(7)->Arg(101)->Arg(301);

}  // namespace

BENCHMARK_MAIN();
