#include <benchmark/benchmark.h>

#include "bbgkit/bns.hpp"
#include "bbgkit/fixtures.hpp"
#include "bbgkit/recognition.hpp"
#include "bbgkit_suite/generators.hpp"

using namespace bbg;

namespace {

SimplicialGraph two_tree(int n, suite::CrownPolicy policy) {
  suite::Rng rng(static_cast<std::uint64_t>(n));
  return suite::random_2tree(n, policy, rng);
}

void BM_MinimalSeparators(benchmark::State& state) {
  suite::Rng rng(1);
  SimplicialGraph g = suite::random_connected_graph(static_cast<int>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_full_separating_subgraphs(g));
}
BENCHMARK(BM_MinimalSeparators)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_ExhaustiveSeparators(benchmark::State& state) {
  suite::Rng rng(1);
  SimplicialGraph g = suite::random_connected_graph(static_cast<int>(state.range(0)), 0.3, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(minimal_full_separating_subgraphs(g, {SeparatorMethod::kExhaustive}));
}
BENCHMARK(BM_ExhaustiveSeparators)->Arg(8)->Arg(12);

void BM_SpannerSearch(benchmark::State& state) {
  SimplicialGraph g = two_tree(static_cast<int>(state.range(0)), suite::CrownPolicy::kAvoid);
  for (auto _ : state) benchmark::DoNotOptimize(find_tree_2_spanner(g));
}
BENCHMARK(BM_SpannerSearch)->Arg(10)->Arg(20)->Arg(40);

void BM_SimpleConnectivity(benchmark::State& state) {
  FlagComplex fc = build_flag_complex(two_tree(static_cast<int>(state.range(0)), suite::CrownPolicy::kForce));
  for (auto _ : state) benchmark::DoNotOptimize(simple_connectivity(fc));
}
BENCHMARK(BM_SimpleConnectivity)->Arg(10)->Arg(20)->Arg(40);

void BM_Membership(benchmark::State& state) {
  const Fixture f = fixture("extended_trefoil");
  BnsModel model(f.graph);
  suite::Rng rng(2);
  std::vector<BbgCharacter> chars;
  for (int i = 0; i < 64; ++i) chars.push_back(suite::random_character(*f.spanning_tree(), rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(model.membership(chars[i++ % chars.size()]));
}
BENCHMARK(BM_Membership);

void BM_RedundantTripleTest(benchmark::State& state) {
  const Fixture f = fixture("fig13_3dim");
  RedundantTriangleWitness w = *find_redundant_triangle(f.graph);
  for (auto _ : state) benchmark::DoNotOptimize(redundant_triple_test(w.w[0], w.w[1], w.w[2], 0, 1));
}
BENCHMARK(BM_RedundantTripleTest);

void BM_Recognize(benchmark::State& state) {
  SimplicialGraph g = two_tree(static_cast<int>(state.range(0)), suite::CrownPolicy::kForce);
  for (auto _ : state) benchmark::DoNotOptimize(recognize(g));
}
BENCHMARK(BM_Recognize)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
