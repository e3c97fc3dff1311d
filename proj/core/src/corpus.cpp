#include "dualflow/corpus.hpp"

#include <array>
#include <string>

#include "dualflow/rng.hpp"

namespace dualflow {

namespace {

struct GridShape {
  int width, height;
};

// Diameters all within [2, 8]: with sigma 2 that keeps the hierarchy at two
// or three working levels, and the direct-move bound's log term positive.
constexpr std::array<GridShape, 12> kSingleGrids = {{{1, 3},
                                                     {1, 4},
                                                     {1, 5},
                                                     {1, 6},
                                                     {1, 7},
                                                     {1, 8},
                                                     {1, 9},
                                                     {2, 2},
                                                     {2, 3},
                                                     {2, 4},
                                                     {2, 5},
                                                     {3, 3}}};

constexpr std::array<GridShape, 9> kMultiGrids = {
    {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 2}, {2, 3}, {2, 4}}};

WeightedGraph pick_graph(Rng& rng, bool multi, int index) {
  const bool use_disk = index % 2 == 1;
  if (use_disk) {
    const int n = static_cast<int>(rng.next_range(multi ? 5 : 6, multi ? 8 : 10));
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::uint64_t sub_seed = rng.next_u64();
      try {
        WeightedGraph g = generate(GeneratorSpec::make_unit_disk(n, 0.45, 1.0, sub_seed));
        double diameter = DistanceOracle(g).diameter();
        if (diameter >= 2.0 && diameter <= 8.0) return g;
      } catch (const Error&) {
        // disconnected placement after retries; draw a fresh sub-seed
      }
    }
  }
  if (multi) {
    const GridShape& s = kMultiGrids[rng.next_below(kMultiGrids.size())];
    return generate(GeneratorSpec::make_grid(s.width, s.height));
  }
  const GridShape& s = kSingleGrids[rng.next_below(kSingleGrids.size())];
  return generate(GeneratorSpec::make_grid(s.width, s.height));
}

constexpr std::array<double, 3> kAlphas = {2.0, 4.0, 8.0};

}  // namespace

std::vector<Scenario> single_corpus(std::uint64_t seed, int count) {
  std::vector<Scenario> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(i) + 1);
    Scenario sc;
    sc.id = "single-" + std::to_string(seed) + "-" + std::to_string(i);
    sc.graph = pick_graph(rng, false, i);
    const int n = sc.graph.node_count();
    sc.cost.alpha = kAlphas[static_cast<std::size_t>(i) % kAlphas.size()];
    sc.cost.beta = 1.0;
    sc.objects = {{0, 0}};
    const long max_txns = sc.cost.alpha == 2.0 ? 3 : 6;
    const long txns = rng.next_range(1, max_txns);
    for (long t = 0; t < txns; ++t)
      sc.transactions.push_back(
          {static_cast<int>(t), static_cast<NodeId>(rng.next_below(n)), {0}});
    bool any_away = false;
    for (const TransactionSpec& t : sc.transactions) any_away |= t.home != 0;
    if (!any_away) sc.transactions[0].home = static_cast<NodeId>(rng.next_range(1, n - 1));
    sc.config.sigma = 2.0;
    sc.config.seed = seed;
    sc.validate();
    out.push_back(std::move(sc));
  }
  return out;
}

std::vector<Scenario> multi_corpus(std::uint64_t seed, int count) {
  std::vector<Scenario> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Rng rng = Rng(seed ^ 0x5bd1e995u).fork(static_cast<std::uint64_t>(i) + 1);
    Scenario sc;
    sc.id = "multi-" + std::to_string(seed) + "-" + std::to_string(i);
    sc.graph = pick_graph(rng, true, i);
    const int n = sc.graph.node_count();
    sc.cost.alpha = kAlphas[static_cast<std::size_t>(i) % kAlphas.size()];
    sc.cost.beta = 1.0;
    sc.objects = {{0, 0}, {1, 0}};
    const long max_txns = sc.cost.alpha == 2.0 ? 3 : 4;
    const long txns = rng.next_range(1, max_txns);
    for (long t = 0; t < txns; ++t) {
      TransactionSpec spec;
      spec.id = static_cast<int>(t);
      spec.home = static_cast<NodeId>(rng.next_below(n));
      switch (rng.next_below(3)) {
        case 0: spec.objs = {0}; break;
        case 1: spec.objs = {1}; break;
        default: spec.objs = {0, 1}; break;
      }
      sc.transactions.push_back(std::move(spec));
    }
    bool any_away = false;
    for (const TransactionSpec& t : sc.transactions) any_away |= t.home != 0;
    if (!any_away) sc.transactions[0].home = static_cast<NodeId>(rng.next_range(1, n - 1));
    sc.config.sigma = 2.0;
    sc.config.seed = seed;
    sc.validate();
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace dualflow
