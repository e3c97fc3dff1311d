#include "dualflow/single_scheduler.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dualflow {

SuperLeaderAssignment elect_super_leaders(const Scenario& sc, const PartitionHierarchy& h) {
  const int txn_count = static_cast<int>(sc.transactions.size());
  const int top = h.top_level();

  SuperLeaderAssignment a;
  a.threshold = 2 * sc.cost.gamma();
  a.dedicated.assign(txn_count, -1);
  a.leaders_at_level.assign(top + 1, {});
  a.level_tally.assign(top + 1, 0);

  std::vector<char> assigned(txn_count, 0);
  for (int l = 0; l <= top; ++l) {
    const PartitionLevel& lv = h.level(l);
    // Clusters come out of construction ordered by ascending leader id.
    for (const Cluster& c : lv.clusters) {
      std::vector<int> captured;
      for (int i = 0; i < txn_count; ++i)
        if (!assigned[i] && lv.cluster_of[sc.transactions[i].home] == c.index)
          captured.push_back(i);
      if (static_cast<long>(captured.size()) < a.threshold) continue;

      int leader_index = static_cast<int>(a.leaders.size());
      a.leaders.push_back({c.leader, l, c.index});
      a.leaders_at_level[l].push_back(leader_index);
      a.level_tally[l] += static_cast<long>(captured.size());
      a.txns_of.push_back(captured);
      for (int i : captured) {
        assigned[i] = 1;
        a.dedicated[i] = leader_index;
      }
    }
  }
  return a;
}

PruneReport prune_levels(const Scenario& sc, const PartitionHierarchy& h,
                         const SuperLeaderAssignment& assignment) {
  PruneReport report;
  report.threshold = 8.0 * h.params().intersection_bound * sc.cost.alpha;

  std::vector<char> pruned(assignment.leaders.size(), 0);
  for (int l = 0; l < static_cast<int>(assignment.leaders_at_level.size()); ++l) {
    if (assignment.leaders_at_level[l].empty()) continue;
    if (static_cast<double>(assignment.level_tally[l]) < report.threshold) {
      report.pruned_levels.push_back(l);
      for (int li : assignment.leaders_at_level[l]) {
        pruned[li] = 1;
        for (int txn : assignment.txns_of[li]) report.redirected_txns.push_back(txn);
      }
    }
  }
  std::sort(report.redirected_txns.begin(), report.redirected_txns.end());
  for (int li = 0; li < static_cast<int>(assignment.leaders.size()); ++li)
    if (!pruned[li]) report.surviving.push_back(li);
  return report;
}

SingleScheduleResult schedule_single(const Scenario& sc, const DistanceOracle& d,
                                     const PartitionHierarchy& h, TourKind kind) {
  sc.validate();
  if (sc.objects.size() != 1)
    throw Error(Errc::validation_error, "single-object scheduler got multiple objects");

  SingleScheduleResult result;
  result.assignment = elect_super_leaders(sc, h);
  result.prune = prune_levels(sc, h, result.assignment);

  const NodeId home = sc.object_home();
  const int txn_count = static_cast<int>(sc.transactions.size());

  std::vector<char> survives(result.assignment.leaders.size(), 0);
  for (int li : result.prune.surviving) survives[li] = 1;

  result.final_target.assign(txn_count, home);
  for (int i = 0; i < txn_count; ++i) {
    int li = result.assignment.dedicated[i];
    if (li >= 0 && survives[li]) result.final_target[i] = result.assignment.leaders[li].node;
  }

  std::set<NodeId> stop_set;
  for (int li : result.prune.surviving) stop_set.insert(result.assignment.leaders[li].node);
  std::vector<NodeId> stops(stop_set.begin(), stop_set.end());

  if (kind == TourKind::universal)
    result.tour = induced_tour(universal_order(h, d), stops, home);
  else
    result.tour = mst_tour(d, stops, home);
  result.tour_len = tour_length(d, result.tour);
  if (stops.size() + 1 <= 12) {
    ExactTour best = exact_tour(d, stops, home);
    result.tour_star = best.length;
  }

  Schedule& s = result.schedule;
  for (int i = 0; i < txn_count; ++i)
    if (sc.transactions[i].home != result.final_target[i])
      s.events.push_back(Event::txn_move(sc.transactions[i].id, sc.transactions[i].home,
                                         result.final_target[i]));

  std::map<NodeId, std::vector<int>> waiting;
  for (int i = 0; i < txn_count; ++i) waiting[result.final_target[i]].push_back(i);

  const int object_id = sc.objects[0].id;
  for (std::size_t v = 0; v < result.tour.visits.size(); ++v) {
    NodeId at = result.tour.visits[v];
    if (v > 0) s.events.push_back(Event::obj_move(object_id, result.tour.visits[v - 1], at));
    auto it = waiting.find(at);
    if (it == waiting.end()) continue;
    for (int i : it->second) s.events.push_back(Event::execute(sc.transactions[i].id, at));
    waiting.erase(it);
  }

  result.cost = schedule_cost(sc, d, s);
  return result;
}

}  // namespace dualflow
