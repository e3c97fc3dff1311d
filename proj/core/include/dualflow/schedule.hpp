#pragma once

#include <string>
#include <vector>

#include "dualflow/scenario.hpp"

namespace dualflow {

/// One schedule step. Moves declare endpoints; the entity takes a shortest
/// path, and cost accounting uses the metric distance between them.
struct Event {
  enum class Kind { move_object, move_transaction, execute };
  Kind kind = Kind::execute;
  int entity = 0;  // object id for move_object, transaction id otherwise
  NodeId from = 0;
  NodeId to = 0;   // execute: the node where it runs (from == to)

  static Event obj_move(int object_id, NodeId from, NodeId to) {
    return {Kind::move_object, object_id, from, to};
  }
  static Event txn_move(int txn_id, NodeId from, NodeId to) {
    return {Kind::move_transaction, txn_id, from, to};
  }
  static Event execute(int txn_id, NodeId at) { return {Kind::execute, txn_id, at, at}; }

  bool operator==(const Event&) const = default;
};

struct Schedule {
  std::vector<Event> events;

  bool operator==(const Schedule&) const = default;
};

enum class ViolationKind { missing_execution, double_execution, not_colocated, broken_continuity };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// Replays events in order and reports every broken invariant: each entity's
/// moves must chain from its home, every transaction executes exactly once,
/// and at an execution the transaction plus all objects it accesses sit at
/// that node.
std::vector<Violation> validate_schedule(const Scenario& sc, const Schedule& s);

struct CostBreakdown {
  double object_cost = 0.0;  // alpha-weighted object movement
  double txn_cost = 0.0;     // beta-weighted transaction movement

  double total() const { return object_cost + txn_cost; }
};

/// Exact dual-flow accounting over declared endpoints. Throws InvalidSchedule
/// if validation fails.
CostBreakdown schedule_cost(const Scenario& sc, const DistanceOracle& d, const Schedule& s);

/// Baseline: every transaction moves to the object home and executes there in
/// ascending id order; no object moves.
Schedule direct_schedule(const Scenario& sc);

}  // namespace dualflow
