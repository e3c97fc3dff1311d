#include <benchmark/benchmark.h>

#include "dualflow/corpus.hpp"
#include "dualflow/distsim.hpp"
#include "dualflow/oracle.hpp"
#include "dualflow/single_scheduler.hpp"

using namespace dualflow;

static void BM_AllPairsDistances(benchmark::State& state) {
  WeightedGraph g = generate(GeneratorSpec::make_grid(16, 16));
  for (auto _ : state) {
    DistanceOracle d(g);
    benchmark::DoNotOptimize(d.diameter());
  }
}
BENCHMARK(BM_AllPairsDistances);

static void BM_HierarchyBuild(benchmark::State& state) {
  WeightedGraph g = generate(GeneratorSpec::make_unit_disk(200, 0.18, 1.0, 5));
  DistanceOracle d(g);
  for (auto _ : state) {
    PartitionHierarchy h = PartitionHierarchy::build(d, 2.0);
    benchmark::DoNotOptimize(h.params().intersection_bound);
  }
}
BENCHMARK(BM_HierarchyBuild);

static void BM_ExactTour(benchmark::State& state) {
  WeightedGraph g = generate(GeneratorSpec::make_grid(16, 16));
  DistanceOracle d(g);
  std::vector<NodeId> stops{5, 37, 91, 120, 140, 166, 190, 203, 230, 250, 255};
  for (auto _ : state) {
    ExactTour t = exact_tour(d, stops, 0);
    benchmark::DoNotOptimize(t.length);
  }
}
BENCHMARK(BM_ExactTour);

static void BM_OracleSingle(benchmark::State& state) {
  Scenario sc = single_corpus(99, 6).back();
  DistanceOracle d(sc.graph);
  for (auto _ : state) {
    OracleResult r = optimal_cost_single(sc, d);
    benchmark::DoNotOptimize(r.c_star);
  }
}
BENCHMARK(BM_OracleSingle);

static void BM_ScheduleSingle(benchmark::State& state) {
  WeightedGraph g = generate(GeneratorSpec::make_grid(8, 8));
  DistanceOracle d(g);
  PartitionHierarchy h = PartitionHierarchy::build(d, 2.0);
  Scenario sc;
  sc.id = "bench";
  sc.graph = g;
  sc.cost = {2.0, 1.0};
  sc.objects = {{0, 0}};
  for (int i = 0; i < 64; ++i) sc.transactions.push_back({i, i % 64, {0}});
  for (auto _ : state) {
    SingleScheduleResult r = schedule_single(sc, d, h, TourKind::mst);
    benchmark::DoNotOptimize(r.cost.total());
  }
}
BENCHMARK(BM_ScheduleSingle);

static void BM_DistributedSingle(benchmark::State& state) {
  Scenario sc = single_corpus(7, 3).back();
  DistanceOracle d(sc.graph);
  PartitionHierarchy h = PartitionHierarchy::build(d, sc.config.sigma);
  for (auto _ : state) {
    DistributedSingleResult r = run_distributed_single(sc, d, h, TourKind::mst);
    benchmark::DoNotOptimize(r.cost.total());
  }
}
BENCHMARK(BM_DistributedSingle);

BENCHMARK_MAIN();
