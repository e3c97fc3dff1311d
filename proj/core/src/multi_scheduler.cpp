#include "dualflow/multi_scheduler.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dualflow {

Scenario single_object_view(const Scenario& sc, int object_index) {
  Scenario view;
  view.id = sc.id + "/obj" + std::to_string(sc.objects[object_index].id);
  view.graph = sc.graph;
  view.cost = sc.cost;
  view.config = sc.config;
  view.objects = {sc.objects[object_index]};
  const int oid = sc.objects[object_index].id;
  for (const TransactionSpec& t : sc.transactions)
    if (std::find(t.objs.begin(), t.objs.end(), oid) != t.objs.end())
      view.transactions.push_back({t.id, t.home, {oid}});
  return view;
}

MultiAssignment assign_multi(const Scenario& sc, const DistanceOracle& d,
                             const PartitionHierarchy& h) {
  sc.validate();
  const int txn_count = static_cast<int>(sc.transactions.size());
  const int obj_count = static_cast<int>(sc.objects.size());
  const NodeId home = sc.object_home();

  MultiAssignment a;
  a.per_object.reserve(obj_count);
  a.per_object_prune.reserve(obj_count);

  // Per-object dedicated super-leader for each transaction, post-pruning.
  // dedicated_node[j][i] < 0 means object j offers transaction i nothing.
  std::vector<std::vector<int>> view_index_of(obj_count, std::vector<int>(txn_count, -1));
  std::vector<Scenario> views;
  views.reserve(obj_count);
  for (int j = 0; j < obj_count; ++j) {
    views.push_back(single_object_view(sc, j));
    const Scenario& view = views.back();
    for (std::size_t vi = 0; vi < view.transactions.size(); ++vi)
      view_index_of[j][sc.txn_index(view.transactions[vi].id)] = static_cast<int>(vi);
    if (view.transactions.empty()) {
      a.per_object.emplace_back();
      a.per_object_prune.emplace_back();
      continue;
    }
    SuperLeaderAssignment elected = elect_super_leaders(view, h);
    a.per_object_prune.push_back(prune_levels(view, h, elected));
    a.per_object.push_back(std::move(elected));
  }

  a.chosen.assign(txn_count, home);
  a.chosen_object.assign(txn_count, -1);
  std::set<NodeId> meeting;
  for (int i = 0; i < txn_count; ++i) {
    const TransactionSpec& t = sc.transactions[i];
    bool found = false;
    double best_dist = 0.0;
    SuperLeaderRef best_ref{};
    int best_obj = -1;
    for (int oid : t.objs) {
      int j = sc.object_index(oid);
      int vi = view_index_of[j][i];
      if (vi < 0) continue;
      const SuperLeaderAssignment& elected = a.per_object[j];
      int li = elected.dedicated[vi];
      if (li < 0) continue;
      if (std::find(a.per_object_prune[j].surviving.begin(),
                    a.per_object_prune[j].surviving.end(),
                    li) == a.per_object_prune[j].surviving.end())
        continue;
      const SuperLeaderRef& ref = elected.leaders[li];
      double dist = d.dist(t.home, ref.node);
      bool better = !found || dist < best_dist ||
                    (dist == best_dist && (ref.level < best_ref.level ||
                                           (ref.level == best_ref.level && ref.node < best_ref.node)));
      if (better) {
        found = true;
        best_dist = dist;
        best_ref = ref;
        best_obj = j;
      }
    }
    if (found) {
      a.chosen[i] = best_ref.node;
      a.chosen_object[i] = best_obj;
      meeting.insert(best_ref.node);
    }
  }
  a.meeting_nodes.assign(meeting.begin(), meeting.end());
  return a;
}

MultiScheduleResult schedule_multi(const Scenario& sc, const DistanceOracle& d,
                                   const PartitionHierarchy& h, TourKind kind) {
  MultiScheduleResult result;
  result.assignment = assign_multi(sc, d, h);

  const NodeId home = sc.object_home();
  const int txn_count = static_cast<int>(sc.transactions.size());
  const int obj_count = static_cast<int>(sc.objects.size());

  if (kind == TourKind::universal)
    result.tour = induced_tour(universal_order(h, d), result.assignment.meeting_nodes, home);
  else
    result.tour = mst_tour(d, result.assignment.meeting_nodes, home);

  // Which objects must be present at each tour stop.
  std::vector<std::set<NodeId>> required(obj_count);
  for (int i = 0; i < txn_count; ++i)
    for (int oid : sc.transactions[i].objs)
      if (result.assignment.chosen[i] != home)
        required[sc.object_index(oid)].insert(result.assignment.chosen[i]);

  Schedule& s = result.schedule;
  for (int i = 0; i < txn_count; ++i)
    if (sc.transactions[i].home != result.assignment.chosen[i])
      s.events.push_back(Event::txn_move(sc.transactions[i].id, sc.transactions[i].home,
                                         result.assignment.chosen[i]));

  std::map<NodeId, std::vector<int>> waiting;
  for (int i = 0; i < txn_count; ++i) waiting[result.assignment.chosen[i]].push_back(i);

  result.object_stops.assign(obj_count, {});
  result.object_travel.assign(obj_count, 0.0);
  std::vector<NodeId> obj_pos(obj_count, home);
  for (std::size_t v = 0; v < result.tour.visits.size(); ++v) {
    NodeId at = result.tour.visits[v];
    if (v > 0)
      for (int j = 0; j < obj_count; ++j)
        if (required[j].count(at)) {
          s.events.push_back(Event::obj_move(sc.objects[j].id, obj_pos[j], at));
          result.object_travel[j] += d.dist(obj_pos[j], at);
          result.object_stops[j].push_back(at);
          obj_pos[j] = at;
        }
    auto it = waiting.find(at);
    if (it == waiting.end()) continue;
    for (int i : it->second) s.events.push_back(Event::execute(sc.transactions[i].id, at));
    waiting.erase(it);
  }

  result.cost = schedule_cost(sc, d, s);
  return result;
}

}  // namespace dualflow
