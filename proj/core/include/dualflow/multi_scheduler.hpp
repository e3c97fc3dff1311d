#pragma once

#include <vector>

#include "dualflow/single_scheduler.hpp"

namespace dualflow {

/// Per-object elections plus the per-transaction consolidation that picks the
/// closest surviving super-leader across a transaction's objects.
struct MultiAssignment {
  std::vector<SuperLeaderAssignment> per_object;   // object order
  std::vector<PruneReport> per_object_prune;
  std::vector<NodeId> chosen;          // per txn index: execution node
  std::vector<int> chosen_object;      // object index whose leader won, -1 for the home
  std::vector<NodeId> meeting_nodes;   // distinct chosen super-leader nodes, ascending
};

/// Runs the single-object pipeline per object (restricted to the transactions
/// accessing it, pruning included), then consolidates each transaction to its
/// closest dedicated super-leader, ties to the lowest level then lowest
/// leader id; transactions with no super-leader fall back to the common home.
MultiAssignment assign_multi(const Scenario& sc, const DistanceOracle& d,
                             const PartitionHierarchy& h);

struct MultiScheduleResult {
  Schedule schedule;
  CostBreakdown cost;
  MultiAssignment assignment;
  TourOrder tour;                          // over meeting nodes + home
  std::vector<std::vector<NodeId>> object_stops;  // per object: its required stops in tour order
  std::vector<double> object_travel;       // per object: distance walked
};

/// One shared tour over the consolidated meeting nodes; each object follows
/// only its required subsequence of the tour, and a transaction executes at
/// its chosen node once every object it accesses has arrived there.
MultiScheduleResult schedule_multi(const Scenario& sc, const DistanceOracle& d,
                                   const PartitionHierarchy& h, TourKind kind);

/// The single-object view used for per-object elections and cost comparisons:
/// same graph and cost model, object j alone, only the transactions that
/// access it.
Scenario single_object_view(const Scenario& sc, int object_index);

}  // namespace dualflow
