#pragma once

#include <optional>
#include <vector>

#include "dualflow/hierarchy.hpp"
#include "dualflow/schedule.hpp"

namespace dualflow {

struct SuperLeaderRef {
  NodeId node = 0;
  int level = 0;
  int cluster_index = 0;

  auto operator<=>(const SuperLeaderRef&) const = default;
};

/// Outcome of the level sweep: which cluster leaders crossed the election
/// threshold and which transactions each one captured.
struct SuperLeaderAssignment {
  std::vector<SuperLeaderRef> leaders;        // election order (level, then leader id)
  std::vector<int> dedicated;                 // per txn index: leader index, or -1 for the home
  std::vector<std::vector<int>> txns_of;      // per leader: captured txn indices
  std::vector<std::vector<int>> leaders_at_level;  // per level 0..h+1: leader indices
  std::vector<long> level_tally;              // per level 0..h+1: captured txn count
  long threshold = 0;                         // election bar, twice ceil(alpha/beta)
};

/// Level sweep from 0 to the top: a cluster whose not-yet-assigned transaction
/// count reaches the threshold turns its leader into a super-leader and binds
/// those transactions to it. Unbound transactions fall back to the object
/// home.
SuperLeaderAssignment elect_super_leaders(const Scenario& sc, const PartitionHierarchy& h);

struct PruneReport {
  double threshold = 0.0;            // 8 * I * alpha
  std::vector<int> pruned_levels;
  std::vector<int> redirected_txns;  // txn indices sent to the object home
  std::vector<int> surviving;        // leader indices still standing (S_f)
};

/// Per-level tally test: a level whose captured-transaction total falls below
/// 8 * I * alpha loses all its super-leaders, and their transactions are
/// redirected to the object home. Levels are judged independently.
PruneReport prune_levels(const Scenario& sc, const PartitionHierarchy& h,
                         const SuperLeaderAssignment& assignment);

struct SingleScheduleResult {
  Schedule schedule;
  CostBreakdown cost;
  SuperLeaderAssignment assignment;
  PruneReport prune;
  std::vector<NodeId> final_target;  // per txn index: execution node
  TourOrder tour;                    // over surviving meeting nodes + home
  double tour_len = 0.0;
  std::optional<double> tour_star;   // optimal tour over the same stops, when small enough
};

/// Full pipeline for one shared object: election, pruning, transaction moves,
/// and the object's tour over surviving super-leaders with executions at each
/// stop in ascending id order.
SingleScheduleResult schedule_single(const Scenario& sc, const DistanceOracle& d,
                                     const PartitionHierarchy& h, TourKind kind);

}  // namespace dualflow
