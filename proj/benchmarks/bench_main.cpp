#include <benchmark/benchmark.h>

#include <array>

#include "infoatoms/paper_suite.hpp"
#include "infoatoms/pid_engine.hpp"
#include "infoatoms/redundancy_gk.hpp"
#include "infoatoms/sid.hpp"

using namespace infoatoms;

static void BM_SubsetScan(benchmark::State& state) {
  const auto l6 = analyse_lemma6();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto r = theorem1_scan(l6.assignment1, l6.assignment2, Rational(3), Rational(2), threads);
    benchmark::DoNotOptimize(r.valid_subsets.size());
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << 18));
}
BENCHMARK(BM_SubsetScan)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_PropagateSubsystems(benchmark::State& state) {
  const auto sys = build_system2();
  BuildOptions o;
  o.scope = AxiomScope::Subsystems;
  const auto built = build_constraints(sys.dist, sys.sources, sys.target, o);
  for (auto _ : state) {
    auto s = propagate(built);
    benchmark::DoNotOptimize(s.status);
  }
}
BENCHMARK(BM_PropagateSubsystems)->Unit(benchmark::kMillisecond);

// Includes the deletion filter for the contradiction certificate.
static void BM_PropagateContradiction(benchmark::State& state) {
  const auto sys = build_system2();
  const auto built = build_constraints(sys.dist, sys.sources, sys.target);
  for (auto _ : state) {
    auto s = propagate(built);
    benchmark::DoNotOptimize(s.certificate.size());
  }
}
BENCHMARK(BM_PropagateContradiction)->Unit(benchmark::kMillisecond);

static void BM_SplitDeduction(benchmark::State& state) {
  const auto sys = build_system1();
  for (auto _ : state) {
    auto r = deduce_split(sys.dist, sys.sources, sys.target, sys.subtargets);
    benchmark::DoNotOptimize(r.status);
  }
}
BENCHMARK(BM_SplitDeduction)->Unit(benchmark::kMillisecond);

static void BM_CommonPartition(benchmark::State& state) {
  // n free bits shared pairwise between three sources
  const int n = static_cast<int>(state.range(0));
  CircuitSpec spec;
  std::vector<std::string> s1, s2, s3;
  for (int b = 0; b < n; ++b) {
    const std::string name = "b" + std::to_string(b);
    spec.free_bits.push_back(name);
    (b % 3 == 0 ? s1 : b % 3 == 1 ? s2 : s3).push_back(name);
  }
  s1.push_back(spec.free_bits.back());
  s2.push_back(spec.free_bits.front());
  spec.groupings = {{"S1", s1}, {"S2", s2}, {"S3", s3}};
  spec.target = {spec.free_bits.front()};
  const auto d = from_circuit(spec);
  const std::array<VariableGroup, 3> sources{d.group({"S1"}), d.group({"S2"}), d.group({"S3"})};
  for (auto _ : state) {
    auto p = common_partition(d, sources);
    benchmark::DoNotOptimize(p.block_count());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(d.support_size()));
}
BENCHMARK(BM_CommonPartition)->Arg(6)->Arg(10)->Arg(14);

static void BM_DecomposeSid(benchmark::State& state) {
  const auto sys = build_system1();
  for (auto _ : state) {
    auto r = decompose_sid(sys.dist, sys.sources[0], sys.sources[1], sys.sources[2]);
    benchmark::DoNotOptimize(r.table.red);
  }
}
BENCHMARK(BM_DecomposeSid);

BENCHMARK_MAIN();
