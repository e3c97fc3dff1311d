#include <algorithm>

#include "doctest.h"
#include "dualflow/corpus.hpp"
#include "dualflow/oracle.hpp"
#include "support.hpp"

using namespace dualflow;
using namespace testsupport;

namespace {

WeightedGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
  return WeightedGraph::build(n, std::move(edges));
}

void check_witness(const Scenario& sc, const DistanceOracle& d, const OracleResult& r) {
  Schedule witness = witness_schedule(sc, r);
  REQUIRE(validate_schedule(sc, witness).empty());
  CHECK(schedule_cost(sc, d, witness).total() == doctest::Approx(r.c_star));
}

Scenario multi_scenario(WeightedGraph g, double alpha, NodeId home,
                        std::vector<std::pair<NodeId, std::vector<int>>> txns) {
  Scenario sc;
  sc.id = "test-multi";
  sc.graph = std::move(g);
  sc.cost = {alpha, 1.0};
  sc.objects = {{0, home}, {1, home}};
  for (std::size_t i = 0; i < txns.size(); ++i)
    sc.transactions.push_back({static_cast<int>(i), txns[i].first, txns[i].second});
  sc.validate();
  return sc;
}

}  // namespace

TEST_CASE("single-object oracle closed forms") {
  SUBCASE("co-located transaction costs nothing") {
    Scenario sc = make_single_scenario(path_graph(3), 2.0, 1.0, 1, {1});
    CHECK(optimal_cost_single(sc, DistanceOracle(sc.graph)).c_star == 0.0);
  }
  SUBCASE("a lone distant transaction moves itself, not the object") {
    for (double alpha : {2.0, 4.0, 8.0}) {
      Scenario sc = make_single_scenario(path_graph(6), alpha, 1.0, 0, {5});
      DistanceOracle d(sc.graph);
      OracleResult r = optimal_cost_single(sc, d);
      CHECK(r.c_star == doctest::Approx(5.0));  // beta * distance
      check_witness(sc, d, r);
    }
  }
  SUBCASE("a pile of transactions flips the optimum at the object size") {
    const double dist = 4.0;
    for (long alpha : {4L, 8L}) {
      for (long m : {alpha - 1, alpha, alpha + 1}) {
        std::vector<NodeId> homes(static_cast<std::size_t>(m), 7);
        Scenario sc = make_single_scenario(path_graph(8), static_cast<double>(alpha), 1.0, 3, homes);
        DistanceOracle d(sc.graph);
        OracleResult r = optimal_cost_single(sc, d);
        CHECK(r.c_star ==
              doctest::Approx(std::min(static_cast<double>(alpha) * dist,
                                       static_cast<double>(m) * dist)));
        check_witness(sc, d, r);
      }
    }
  }
  SUBCASE("rejects instances beyond the exhaustive budget") {
    Scenario sc = make_single_scenario(generate(GeneratorSpec::make_grid(4, 3)), 2.0, 1.0, 0, {1});
    CHECK_THROWS_AS(optimal_cost_single(sc, DistanceOracle(sc.graph)), Error);
  }
}

TEST_CASE("single-object oracle witness replay on random instances") {
  Rng rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.next_range(2, 10));
    WeightedGraph g = random_connected_graph(rng, n, 0.3, 4);
    std::vector<NodeId> homes;
    for (long i = rng.next_range(1, 6); i > 0; --i)
      homes.push_back(static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(n))));
    Scenario sc =
        make_single_scenario(g, static_cast<double>(rng.next_range(2, 6)), 1.0,
                             static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(n))),
                             homes);
    DistanceOracle d(sc.graph);
    OracleResult r = optimal_cost_single(sc, d);
    check_witness(sc, d, r);
  }
}

TEST_CASE("adding a transaction never lowers the optimum") {
  Rng rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(rng.next_range(3, 10));
    WeightedGraph g = random_connected_graph(rng, n, 0.3, 3);
    std::vector<NodeId> homes{static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(n)))};
    Scenario before = make_single_scenario(g, 4.0, 1.0, 0, homes);
    DistanceOracle d(before.graph);
    double prev = optimal_cost_single(before, d).c_star;
    for (int extra = 0; extra < 3; ++extra) {
      homes.push_back(static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(n))));
      Scenario sc = make_single_scenario(g, 4.0, 1.0, 0, homes);
      double next = optimal_cost_single(sc, d).c_star;
      CHECK(next >= prev - 1e-9);
      prev = next;
    }
  }
}

TEST_CASE("multi-object oracle") {
  SUBCASE("everything at the home costs nothing") {
    Scenario sc = multi_scenario(path_graph(3), 2.0, 1, {{1, {0, 1}}, {1, {0}}});
    CHECK(optimal_cost_multi(sc, DistanceOracle(sc.graph)).c_star == 0.0);
  }
  SUBCASE("two transactions sharing both objects at one remote node") {
    const double dist = 3.0;
    for (double alpha : {2.0, 4.0}) {
      Scenario sc = multi_scenario(path_graph(4), alpha, 0, {{3, {0, 1}}, {3, {0, 1}}});
      DistanceOracle d(sc.graph);
      OracleResult r = optimal_cost_multi(sc, d);
      // either both objects travel out, or both transactions come in
      CHECK(r.c_star == doctest::Approx(std::min(2.0 * alpha * dist, 2.0 * dist)));
      check_witness(sc, d, r);
    }
  }
  SUBCASE("witness replay on random two-object instances") {
    Rng rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
      int n = static_cast<int>(rng.next_range(2, 8));
      WeightedGraph g = random_connected_graph(rng, n, 0.35, 3);
      std::vector<std::pair<NodeId, std::vector<int>>> txns;
      for (long i = rng.next_range(1, 4); i > 0; --i) {
        std::vector<int> objs;
        switch (rng.next_below(3)) {
          case 0: objs = {0}; break;
          case 1: objs = {1}; break;
          default: objs = {0, 1}; break;
        }
        txns.push_back({static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(n))), objs});
      }
      Scenario sc = multi_scenario(g, static_cast<double>(rng.next_range(2, 5)), 0, txns);
      DistanceOracle d(sc.graph);
      OracleResult r = optimal_cost_multi(sc, d);
      check_witness(sc, d, r);
    }
  }
  SUBCASE("agrees with the single-object oracle when every transaction uses one object") {
    Rng rng(5555);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 50; ++trial) {
      int n = static_cast<int>(rng.next_range(2, 8));
      WeightedGraph g = random_connected_graph(rng, n, 0.3, 3);
      std::vector<NodeId> homes;
      for (long i = rng.next_range(1, 5); i > 0; --i)
        homes.push_back(static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(n))));
      Scenario single = make_single_scenario(g, 4.0, 1.0, 0, homes);
      DistanceOracle d(single.graph);

      Scenario multi = single;  // same instance, expressed through the multi oracle
      OracleResult a = optimal_cost_single(single, d);
      OracleResult b = optimal_cost_multi(multi, d);
      CHECK(a.c_star == doctest::Approx(b.c_star));
      ++checked;
    }
    CHECK(checked == 50);
  }
  SUBCASE("rejects oversized instances") {
    Scenario sc = multi_scenario(generate(GeneratorSpec::make_grid(3, 3)), 2.0, 0, {{1, {0}}});
    CHECK_THROWS_AS(optimal_cost_multi(sc, DistanceOracle(sc.graph)), Error);
  }
}

TEST_CASE("oracle lower-bounds hold corpus-wide for the baseline") {
  for (const Scenario& sc : single_corpus(11, 20)) {
    DistanceOracle d(sc.graph);
    OracleResult r = optimal_cost_single(sc, d);
    double direct = schedule_cost(sc, d, direct_schedule(sc)).total();
    CHECK(direct >= r.c_star - 1e-9);
    check_witness(sc, d, r);
  }
}
