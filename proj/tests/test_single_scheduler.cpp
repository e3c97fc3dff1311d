#include <algorithm>
#include <set>

#include "doctest.h"
#include "dualflow/corpus.hpp"
#include "dualflow/oracle.hpp"
#include "dualflow/runner.hpp"
#include "dualflow/single_scheduler.hpp"
#include "support.hpp"

using namespace dualflow;
using namespace testsupport;

namespace {

WeightedGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
  return WeightedGraph::build(n, std::move(edges));
}

/// Straight-line re-implementation of the election sweep, independent of the
/// library's bookkeeping: per level, per cluster in ascending leader order,
/// capture unassigned transactions when the bar is met.
struct SweepOracle {
  std::vector<int> dedicated_leader;  // per txn: leader node or -1
  std::vector<int> dedicated_level;
};

SweepOracle reference_sweep(const Scenario& sc, const PartitionHierarchy& h) {
  SweepOracle out;
  const long bar = 2 * sc.cost.gamma();
  out.dedicated_leader.assign(sc.transactions.size(), -1);
  out.dedicated_level.assign(sc.transactions.size(), -1);
  for (int l = 0; l <= h.top_level(); ++l)
    for (const Cluster& c : h.level(l).clusters) {
      std::vector<int> inside;
      for (std::size_t i = 0; i < sc.transactions.size(); ++i)
        if (out.dedicated_leader[i] < 0 &&
            std::find(c.members.begin(), c.members.end(), sc.transactions[i].home) !=
                c.members.end())
          inside.push_back(static_cast<int>(i));
      if (static_cast<long>(inside.size()) >= bar)
        for (int i : inside) {
          out.dedicated_leader[i] = c.leader;
          out.dedicated_level[i] = l;
        }
    }
  return out;
}

Scenario piled_scenario(WeightedGraph g, double alpha, NodeId home, NodeId pile, long count) {
  std::vector<NodeId> homes(static_cast<std::size_t>(count), pile);
  return make_single_scenario(std::move(g), alpha, 1.0, home, homes);
}

}  // namespace

TEST_CASE("no election below the bar") {
  // gamma = 4, so 2*gamma = 8; seven transactions cannot elect anyone.
  Scenario sc = make_single_scenario(path_graph(8), 4.0, 1.0, 0, {1, 2, 3, 4, 5, 6, 7});
  DistanceOracle d(sc.graph);
  PartitionHierarchy h = PartitionHierarchy::build(d, 2.0);
  SuperLeaderAssignment a = elect_super_leaders(sc, h);
  CHECK(a.leaders.empty());
  for (int li : a.dedicated) CHECK(li == -1);
}

TEST_CASE("a full level-0 cluster elects its leader") {
  // alpha 2 -> bar 4; four transactions inside one level-0 cluster.
  DistanceOracle d(path_graph(8));
  PartitionHierarchy h = PartitionHierarchy::build(d, 2.0);
  const Cluster& cluster = h.cluster_of(0, 4);
  std::vector<NodeId> homes(4, 4);
  Scenario sc = make_single_scenario(path_graph(8), 2.0, 1.0, 0, homes);
  SuperLeaderAssignment a = elect_super_leaders(sc, h);
  REQUIRE(a.leaders.size() == 1);
  CHECK(a.leaders[0].level == 0);
  CHECK(a.leaders[0].node == cluster.leader);
  for (int li : a.dedicated) CHECK(li == 0);
  CHECK(a.level_tally[0] == 4);
}

TEST_CASE("corner-quadrant election on the 8x8 grid matches the reference sweep") {
  WeightedGraph g = generate(GeneratorSpec::make_grid(8, 8));
  DistanceOracle d(g);
  PartitionHierarchy h = PartitionHierarchy::build(d, 2.0);
  // alpha 4, beta 1 -> gamma 4, bar 8. Eight transactions in the top-left
  // quadrant, object home at the opposite corner.
  std::vector<NodeId> homes{0, 1, 2, 8, 9, 10, 16, 17};
  Scenario sc = make_single_scenario(g, 4.0, 1.0, 63, homes);
  SuperLeaderAssignment a = elect_super_leaders(sc, h);
  SweepOracle ref = reference_sweep(sc, h);
  for (std::size_t i = 0; i < sc.transactions.size(); ++i) {
    if (ref.dedicated_leader[i] < 0) {
      CHECK(a.dedicated[i] == -1);
    } else {
      REQUIRE(a.dedicated[i] >= 0);
      CHECK(a.leaders[a.dedicated[i]].node == ref.dedicated_leader[i]);
      CHECK(a.leaders[a.dedicated[i]].level == ref.dedicated_level[i]);
    }
  }
  // the quadrant sits inside the radius-8 cluster anchored at node 0
  REQUIRE(a.leaders.size() == 1);
  CHECK(a.leaders[0].level == 1);
  CHECK(a.leaders[0].node == 0);
}

TEST_CASE("election sweep equals the reference on random instances") {
  Rng rng(9090);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.next_range(4, 24));
    WeightedGraph g = random_connected_graph(rng, n, 0.2, 3);
    DistanceOracle d(g);
    PartitionHierarchy h = PartitionHierarchy::build(d, 2.0);
    std::vector<NodeId> homes;
    for (long i = rng.next_range(1, 20); i > 0; --i)
      homes.push_back(static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(n))));
    Scenario sc = make_single_scenario(g, 2.0, 1.0, 0, homes);
    SuperLeaderAssignment a = elect_super_leaders(sc, h);
    SweepOracle ref = reference_sweep(sc, h);
    for (std::size_t i = 0; i < sc.transactions.size(); ++i) {
      if (ref.dedicated_leader[i] < 0) {
        CHECK(a.dedicated[i] == -1);
      } else {
        REQUIRE(a.dedicated[i] >= 0);
        CHECK(a.leaders[a.dedicated[i]].node == ref.dedicated_leader[i]);
        CHECK(a.leaders[a.dedicated[i]].level == ref.dedicated_level[i]);
      }
    }
    for (std::size_t li = 0; li < a.leaders.size(); ++li)
      CHECK(static_cast<long>(a.txns_of[li].size()) >= a.threshold);
  }
}

TEST_CASE("pruning") {
  DistanceOracle d(path_graph(12));
  PartitionHierarchy h = PartitionHierarchy::build(d, 2.0);
  const long threshold = 8L * h.params().intersection_bound * 2;  // alpha = 2

  SUBCASE("no super-leaders is a no-op") {
    Scenario sc = make_single_scenario(path_graph(12), 2.0, 1.0, 0, {1, 2, 3});
    SuperLeaderAssignment a = elect_super_leaders(sc, h);
    PruneReport report = prune_levels(sc, h, a);
    CHECK(report.surviving.empty());
    CHECK(report.pruned_levels.empty());
    CHECK(report.redirected_txns.empty());
  }
  SUBCASE("a level meeting the bar exactly is kept") {
    Scenario sc = piled_scenario(path_graph(12), 2.0, 11, 0, threshold);
    SuperLeaderAssignment a = elect_super_leaders(sc, h);
    REQUIRE(!a.leaders.empty());
    REQUIRE(a.level_tally[a.leaders[0].level] == threshold);
    PruneReport report = prune_levels(sc, h, a);
    CHECK(report.pruned_levels.empty());
    CHECK(report.surviving.size() == a.leaders.size());
  }
  SUBCASE("one short of the bar prunes and redirects") {
    Scenario sc = piled_scenario(path_graph(12), 2.0, 11, 0, threshold - 1);
    SuperLeaderAssignment a = elect_super_leaders(sc, h);
    REQUIRE(!a.leaders.empty());
    PruneReport report = prune_levels(sc, h, a);
    CHECK(report.surviving.empty());
    REQUIRE(report.pruned_levels.size() == 1);
    CHECK(static_cast<long>(report.redirected_txns.size()) == threshold - 1);
    // redirected transactions end at the object home in the schedule
    SingleScheduleResult r = schedule_single(sc, DistanceOracle(sc.graph), h, TourKind::mst);
    for (NodeId target : r.final_target) CHECK(target == 11);
  }
  SUBCASE("pruning one level leaves other levels' tallies alone") {
    Scenario sc = piled_scenario(path_graph(12), 2.0, 11, 0, threshold);
    SuperLeaderAssignment a = elect_super_leaders(sc, h);
    std::vector<long> before = a.level_tally;
    prune_levels(sc, h, a);
    CHECK(a.level_tally == before);
  }
}

TEST_CASE("schedule_single") {
  SUBCASE("everyone already at the object home") {
    Scenario sc = make_single_scenario(path_graph(4), 2.0, 1.0, 2, {2, 2});
    DistanceOracle d(sc.graph);
    PartitionHierarchy h = PartitionHierarchy::build(d, 2.0);
    SingleScheduleResult r = schedule_single(sc, d, h, TourKind::mst);
    CHECK(r.cost.total() == 0.0);
    CHECK(r.tour.visits == std::vector<NodeId>{2});
  }
  SUBCASE("with nothing surviving it degenerates to the direct schedule") {
    Scenario sc = make_single_scenario(path_graph(6), 4.0, 1.0, 1, {0, 3, 5});
    DistanceOracle d(sc.graph);
    PartitionHierarchy h = PartitionHierarchy::build(d, 2.0);
    SingleScheduleResult r = schedule_single(sc, d, h, TourKind::mst);
    REQUIRE(r.prune.surviving.empty());
    CHECK(r.schedule == direct_schedule(sc));
  }
  SUBCASE("suriving super-leaders put the object on tour") {
    DistanceOracle d(path_graph(12));
    PartitionHierarchy h = PartitionHierarchy::build(d, 2.0);
    const long threshold = 8L * h.params().intersection_bound * 2;
    Scenario sc = piled_scenario(path_graph(12), 2.0, 11, 0, threshold);
    SingleScheduleResult r = schedule_single(sc, d, h, TourKind::mst);
    REQUIRE(!r.prune.surviving.empty());
    NodeId stop = r.assignment.leaders[r.prune.surviving[0]].node;
    CHECK(r.tour.visits.front() == 11);
    CHECK(std::find(r.tour.visits.begin(), r.tour.visits.end(), stop) != r.tour.visits.end());
    CHECK(r.cost.object_cost > 0.0);
    CHECK(validate_schedule(sc, r.schedule).empty());
    // every transaction executes at the surviving leader
    for (NodeId target : r.final_target) CHECK(target == stop);
  }
  SUBCASE("deterministic output") {
    Scenario sc = single_corpus(3, 5)[4];
    DistanceOracle d(sc.graph);
    PartitionHierarchy h = PartitionHierarchy::build(d, sc.config.sigma);
    SingleScheduleResult a = schedule_single(sc, d, h, TourKind::universal);
    SingleScheduleResult b = schedule_single(sc, d, h, TourKind::universal);
    CHECK(a.schedule == b.schedule);
    CHECK(a.cost.total() == b.cost.total());
  }
}

TEST_CASE("cost stays between the oracle and the analytic ceiling on random instances") {
  for (const Scenario& sc : single_corpus(42, 40)) {
    DistanceOracle d(sc.graph);
    PartitionHierarchy h = PartitionHierarchy::build(d, sc.config.sigma);
    OracleResult oracle = optimal_cost_single(sc, d);
    for (TourKind kind : {TourKind::mst, TourKind::universal}) {
      SingleScheduleResult r = schedule_single(sc, d, h, kind);
      REQUIRE(validate_schedule(sc, r.schedule).empty());
      double total = r.cost.total();
      CHECK(total >= oracle.c_star - 1e-9);
      REQUIRE(r.tour_star.has_value());
      double a = *r.tour_star > 0.0 ? r.tour_len / *r.tour_star : 1.0;
      double bound = analytic_single_bound(a, h.params().h, h.params().zeta,
                                           h.params().intersection_bound, h.params().sigma,
                                           h.params().rho, oracle.c_star, d.diameter());
      CHECK(total <= bound + 1e-9);
    }
  }
}
