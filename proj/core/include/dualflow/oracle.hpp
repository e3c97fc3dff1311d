#pragma once

#include <vector>

#include "dualflow/schedule.hpp"

namespace dualflow {

/// Optimal schedule cost with a replayable witness: a meeting node per
/// transaction and the walk each object takes from its home.
struct OracleResult {
  double c_star = 0.0;
  std::vector<NodeId> meeting_node;            // per transaction (scenario order)
  std::vector<std::vector<NodeId>> object_walk;  // per object: visited stops after the home
  std::vector<int> execution_order;            // txn ids; empty means walk order decides
};

/// Exhaustive optimum for one shared object: minimizes over every subset of
/// stop nodes the object could visit, with the optimal open walk over the
/// subset and each transaction meeting the walk at its nearest stop.
/// Requires n <= 10.
OracleResult optimal_cost_single(const Scenario& sc, const DistanceOracle& d);

/// Exhaustive optimum for multiple objects from a common home: minimizes over
/// every execution-node assignment and every global execution order, each
/// object walking its required stops in that order. Requires n <= 8 and at
/// most 5 transactions.
OracleResult optimal_cost_multi(const Scenario& sc, const DistanceOracle& d);

/// Converts a witness into a concrete schedule; replaying it through
/// validate_schedule and schedule_cost reproduces c_star.
Schedule witness_schedule(const Scenario& sc, const OracleResult& r);

}  // namespace dualflow
