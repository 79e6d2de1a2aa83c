// Serial reference against the OpenMP path for each parallel kernel.
// Run with OMP_NUM_THREADS set to the core count of the machine.

#include <benchmark/benchmark.h>

#include <numeric>

#include "dfilab/dfi.hpp"
#include "dfilab/encomplex.hpp"
#include "dfilab/groebner.hpp"
#include "dfilab/lcmlattice.hpp"

using namespace dfilab;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

RingPtr lex(int n, int m) { return PolyRing::make(n, m, Field::rationals(), TermOrder::row_major_lex(n, m)); }

void BM_GpwBetti(benchmark::State& state) {
  const auto ring = lex(3, 6);
  const RDfi dfi = build_rdfi(SimplicialComplex::from_intervals(6, 3, {{1, 4}, {3, 6}}), 3, ring);
  const MonomialIdeal ideal = lead_term_ideal(dfi.polynomials());
  for (auto _ : state) benchmark::DoNotOptimize(gpw_betti(ideal, ring->field(), mode(state)));
}

void BM_LcmClosed(benchmark::State& state) {
  const auto ring = lex(3, 12);
  const RDfi dfi =
      build_rdfi(SimplicialComplex::from_intervals(12, 3, {{1, 6}, {3, 8}, {5, 10}, {7, 12}}), 3, ring);
  for (auto _ : state) benchmark::DoNotOptimize(is_lcm_closed(dfi, mode(state)));
}

void BM_StrandHomology(benchmark::State& state) {
  const auto ring = lex(3, 7);
  const auto cliques = clique_complex(SimplicialComplex::from_intervals(7, 3, {{1, 5}, {3, 7}}));
  const ENComplex c = build_en_complex(cliques, ring);
  for (auto _ : state) benchmark::DoNotOptimize(strand_homology(c, 2, 5, ring->field(), mode(state)));
}

void BM_NecessitySearch(benchmark::State& state) {
  SearchOptions options;
  options.m_max = 5;
  for (auto _ : state) benchmark::DoNotOptimize(necessity_search(options, mode(state)));
}

}  // namespace

BENCHMARK(BM_GpwBetti)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LcmClosed)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StrandHomology)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NecessitySearch)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
