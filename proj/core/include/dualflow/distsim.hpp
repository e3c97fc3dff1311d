#pragma once

#include <utility>
#include <vector>

#include "dualflow/single_scheduler.hpp"

namespace dualflow {

enum class MessageKind {
  txn_info,             // node -> its level-0 leader: local transaction data
  count_up,             // cluster leader -> parent leader: unassigned count
  super_leader_notify,  // election (value 1) or unmark (value 0), down the reporting chains
  tally_report,         // dedicated super-leader -> per-level reference leader
  tally_sum,            // reference leader -> dedicated super-leaders
  txn_transfer,         // transaction movement
  object_transfer,      // object movement
};

enum class CostClass { control, transaction, object };

const char* message_kind_name(MessageKind k);

struct SimMessage {
  int round = 0;
  int phase = 1;  // 1..3
  NodeId src = 0;
  NodeId dst = 0;
  MessageKind kind = MessageKind::txn_info;
  CostClass cost_class = CostClass::control;
  int object_id = -1;  // -1: single-object or object-independent traffic
  long value = 0;      // counts and tallies
  double cost = 0.0;   // cost-class weight times metric distance
};

struct MessageLog {
  std::vector<SimMessage> messages;

  double phase_cost(int phase) const;
  double total_cost() const;
  long phase_count(int phase) const;
};

/// Phase 1: transaction counts aggregate upward level by level; a leader
/// whose count reaches the election bar becomes a super-leader, captures the
/// counted transactions, and notifies back down the chains that reported
/// them. Counts of captured transactions stop propagating upward.
struct Phase1Output {
  std::vector<SuperLeaderRef> super_leaders;  // election order (level, leader id)
  std::vector<long> counts;                   // transactions captured per super-leader
  std::vector<int> dedicated;                 // per txn index: super-leader index or -1
  std::vector<std::vector<std::pair<NodeId, NodeId>>> notify_edges;  // per super-leader
};

Phase1Output run_phase1(const Scenario& sc, const DistanceOracle& d, const PartitionHierarchy& h,
                        MessageLog& log);

/// Phase 2: per level, dedicated super-leaders report their counts to the
/// lowest-id reference leader and receive the level total back; levels below
/// the pruning bar unmark, and their transactions are redirected to the
/// object home along the phase-1 chains.
struct Phase2Output {
  std::vector<SuperLeaderRef> surviving;  // S_f
  std::vector<int> pruned_levels;
  std::vector<NodeId> final_target;       // per txn index
};

Phase2Output run_phase2(const Scenario& sc, const DistanceOracle& d, const PartitionHierarchy& h,
                        const Phase1Output& p1, MessageLog& log);

/// Phase 3: transactions transfer to their targets and the object walks the
/// tour over the surviving meeting nodes; executions happen at each stop in
/// ascending id order. The emitted schedule matches the global-aware one.
struct Phase3Output {
  Schedule schedule;
  TourOrder tour;
};

Phase3Output run_phase3(const Scenario& sc, const DistanceOracle& d, const PartitionHierarchy& h,
                        const Phase2Output& p2, TourKind kind, MessageLog& log);

struct DistributedSingleResult {
  Phase1Output phase1;
  Phase2Output phase2;
  Schedule schedule;
  TourOrder tour;
  CostBreakdown cost;  // movement cost of the emitted schedule
  MessageLog log;
};

DistributedSingleResult run_distributed_single(const Scenario& sc, const DistanceOracle& d,
                                               const PartitionHierarchy& h, TourKind kind);

struct DistributedMultiResult {
  std::vector<Phase1Output> per_object;  // object order
  std::vector<NodeId> chosen;            // per txn index: execution node
  Schedule schedule;
  TourOrder tour;
  CostBreakdown cost;
  MessageLog log;
};

/// Multi-object protocol: transaction data is shared once, elections run per
/// object over the hierarchy, each transaction consolidates to its closest
/// surviving super-leader, and objects follow one shared tour visiting only
/// the stops where they are required.
DistributedMultiResult run_distributed_multi(const Scenario& sc, const DistanceOracle& d,
                                             const PartitionHierarchy& h, TourKind kind);

}  // namespace dualflow
