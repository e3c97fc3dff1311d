#include "doctest.h"
#include "dualflow/schedule.hpp"
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

bool has_violation(const std::vector<Violation>& vs, ViolationKind kind) {
  for (const Violation& v : vs)
    if (v.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("scenario validation") {
  SUBCASE("alpha must exceed beta") {
    Scenario sc;
    sc.graph = path_graph(2);
    sc.cost = {1.0, 1.0};
    sc.objects = {{0, 0}};
    sc.transactions = {{0, 1, {0}}};
    CHECK_THROWS_AS(sc.validate(), Error);
  }
  SUBCASE("multi-object scenarios need a common home") {
    Scenario sc;
    sc.graph = path_graph(3);
    sc.cost = {2.0, 1.0};
    sc.objects = {{0, 0}, {1, 2}};
    sc.transactions = {{0, 1, {0, 1}}};
    try {
      sc.validate();
      FAIL("expected ValidationError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::validation_error);
    }
  }
  SUBCASE("unknown object reference") {
    Scenario sc;
    sc.graph = path_graph(2);
    sc.cost = {2.0, 1.0};
    sc.objects = {{0, 0}};
    sc.transactions = {{0, 1, {3}}};
    CHECK_THROWS_AS(sc.validate(), Error);
  }
}

TEST_CASE("validate_schedule") {
  Scenario sc = make_single_scenario(path_graph(3), 2.0, 1.0, 0, {0, 2});

  SUBCASE("co-located execute passes") {
    Schedule s;
    s.events = {Event::execute(0, 0), Event::txn_move(1, 2, 0), Event::execute(1, 0)};
    CHECK(validate_schedule(sc, s).empty());
  }
  SUBCASE("missing execution") {
    Schedule s;
    s.events = {Event::execute(0, 0)};
    CHECK(has_violation(validate_schedule(sc, s), ViolationKind::missing_execution));
  }
  SUBCASE("execute before the object arrives") {
    Schedule s;
    s.events = {Event::execute(0, 0), Event::execute(1, 2),
                Event::obj_move(0, 0, 2)};
    CHECK(has_violation(validate_schedule(sc, s), ViolationKind::not_colocated));
  }
  SUBCASE("double execution") {
    Schedule s;
    s.events = {Event::execute(0, 0), Event::txn_move(1, 2, 0), Event::execute(1, 0),
                Event::execute(1, 0)};
    CHECK(has_violation(validate_schedule(sc, s), ViolationKind::double_execution));
  }
  SUBCASE("broken movement chain") {
    Schedule s;
    s.events = {Event::txn_move(1, 1, 0), Event::execute(0, 0), Event::execute(1, 0)};
    CHECK(has_violation(validate_schedule(sc, s), ViolationKind::broken_continuity));
  }
}

TEST_CASE("schedule_cost") {
  SUBCASE("no movement costs nothing") {
    Scenario sc = make_single_scenario(path_graph(2), 2.0, 1.0, 0, {0});
    Schedule s;
    s.events = {Event::execute(0, 0)};
    CHECK(schedule_cost(sc, DistanceOracle(sc.graph), s).total() == 0.0);
  }
  SUBCASE("object movement is alpha-weighted") {
    Scenario sc = make_single_scenario(path_graph(4), 5.0, 1.0, 0, {3});
    Schedule s;
    s.events = {Event::obj_move(0, 0, 3), Event::execute(0, 3)};
    CostBreakdown cost = schedule_cost(sc, DistanceOracle(sc.graph), s);
    CHECK(cost.object_cost == 15.0);
    CHECK(cost.txn_cost == 0.0);
  }
  SUBCASE("invalid schedules are rejected") {
    Scenario sc = make_single_scenario(path_graph(2), 2.0, 1.0, 0, {1});
    Schedule s;  // nothing executes
    CHECK_THROWS_AS(schedule_cost(sc, DistanceOracle(sc.graph), s), Error);
  }
  SUBCASE("scheduler output matches an independent replay accountant") {
    Rng rng(6000);
    for (int trial = 0; trial < 20; ++trial) {
      int n = static_cast<int>(rng.next_range(3, 12));
      WeightedGraph g = random_connected_graph(rng, n, 0.3, 3);
      std::vector<NodeId> homes;
      for (long i = rng.next_range(1, 6); i > 0; --i)
        homes.push_back(static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(n))));
      Scenario sc = make_single_scenario(g, 4.0, 1.0, 0, homes);
      DistanceOracle d(sc.graph);
      PartitionHierarchy h = PartitionHierarchy::build(d, 2.0);
      SingleScheduleResult r = schedule_single(sc, d, h, TourKind::mst);
      CostBreakdown replayed = replay_cost(sc, d, r.schedule);
      CHECK(r.cost.object_cost == doctest::Approx(replayed.object_cost));
      CHECK(r.cost.txn_cost == doctest::Approx(replayed.txn_cost));
    }
  }
  SUBCASE("validity-preserving reorder keeps the cost") {
    Scenario sc = make_single_scenario(path_graph(4), 2.0, 1.0, 0, {1, 3});
    DistanceOracle d(sc.graph);
    Schedule a, b;
    a.events = {Event::txn_move(0, 1, 0), Event::txn_move(1, 3, 0), Event::execute(0, 0),
                Event::execute(1, 0)};
    b.events = {Event::txn_move(1, 3, 0), Event::txn_move(0, 1, 0), Event::execute(1, 0),
                Event::execute(0, 0)};
    CHECK(schedule_cost(sc, d, a).total() == schedule_cost(sc, d, b).total());
  }
}

TEST_CASE("direct_schedule") {
  SUBCASE("transactions already at the object cost nothing") {
    Scenario sc = make_single_scenario(path_graph(3), 2.0, 1.0, 1, {1, 1});
    Schedule s = direct_schedule(sc);
    CHECK(schedule_cost(sc, DistanceOracle(sc.graph), s).total() == 0.0);
  }
  SUBCASE("one transaction pays beta times its distance") {
    Scenario sc = make_single_scenario(path_graph(5), 3.0, 1.5, 0, {4});
    Schedule s = direct_schedule(sc);
    CHECK(schedule_cost(sc, DistanceOracle(sc.graph), s).total() == doctest::Approx(6.0));
  }
  SUBCASE("executions run in ascending id order at the home") {
    Scenario sc = make_single_scenario(path_graph(3), 2.0, 1.0, 0, {2, 1, 0});
    Schedule s = direct_schedule(sc);
    std::vector<int> exec_ids;
    for (const Event& e : s.events)
      if (e.kind == Event::Kind::execute) {
        exec_ids.push_back(e.entity);
        CHECK(e.to == 0);
      }
    CHECK(exec_ids == std::vector<int>{0, 1, 2});
    CHECK(validate_schedule(sc, s).empty());
  }
}
