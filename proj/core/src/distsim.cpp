#include "dualflow/distsim.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dualflow {

const char* message_kind_name(MessageKind k) {
  switch (k) {
    case MessageKind::txn_info: return "txn-info";
    case MessageKind::count_up: return "count-up";
    case MessageKind::super_leader_notify: return "super-leader-notify";
    case MessageKind::tally_report: return "tally-report";
    case MessageKind::tally_sum: return "tally-sum";
    case MessageKind::txn_transfer: return "txn-transfer";
    case MessageKind::object_transfer: return "object-transfer";
  }
  return "?";
}

double MessageLog::phase_cost(int phase) const {
  double total = 0.0;
  for (const SimMessage& m : messages)
    if (m.phase == phase) total += m.cost;
  return total;
}

double MessageLog::total_cost() const {
  double total = 0.0;
  for (const SimMessage& m : messages) total += m.cost;
  return total;
}

long MessageLog::phase_count(int phase) const {
  long count = 0;
  for (const SimMessage& m : messages)
    if (m.phase == phase) ++count;
  return count;
}

namespace {

/// Message emission context. Self-addressed exchanges stay node-local and are
/// neither logged nor charged.
struct SimContext {
  const Scenario& sc;
  const DistanceOracle& d;
  MessageLog& log;
  int round = 0;
  int phase = 1;

  void send(MessageKind kind, CostClass cls, NodeId src, NodeId dst, int object_id, long value) {
    if (src == dst) return;
    double weight = 0.0;
    switch (cls) {
      case CostClass::control: weight = sc.config.control_weight; break;
      case CostClass::transaction: weight = sc.cost.beta; break;
      case CostClass::object: weight = sc.cost.alpha; break;
    }
    log.messages.push_back(
        {round, phase, src, dst, kind, cls, object_id, value, weight * d.dist(src, dst)});
  }
};

/// Per-object distributed election over the hierarchy. `txn_indices` holds
/// the transactions that need this object; transaction data itself has
/// already been shared (txn_info), so level-0 seeding is leader-local.
Phase1Output distributed_election(SimContext& ctx, const PartitionHierarchy& h,
                                  const std::vector<int>& txn_indices, int object_id) {
  const Scenario& sc = ctx.sc;
  const int n = sc.graph.node_count();
  const long bar = 2 * sc.cost.gamma();

  Phase1Output out;
  out.dedicated.assign(sc.transactions.size(), -1);

  // Node-local aggregation state, keyed by the level a node leads at.
  std::vector<std::map<int, long>> agg(n);
  std::vector<std::map<int, std::vector<NodeId>>> reporters(n);

  std::vector<std::vector<int>> txns_at(n);
  for (int i : txn_indices) txns_at[sc.transactions[i].home].push_back(i);

  for (NodeId v = 0; v < n; ++v) {
    if (txns_at[v].empty()) continue;
    NodeId leader = h.leader_of(0, v);
    agg[leader][0] += static_cast<long>(txns_at[v].size());
    reporters[leader][0].push_back(v);
  }

  for (int l = 0; l <= h.top_level(); ++l, ++ctx.round) {
    for (const Cluster& c : h.level(l).clusters) {
      long count = 0;
      if (auto it = agg[c.leader].find(l); it != agg[c.leader].end()) count = it->second;
      if (count == 0) continue;
      if (count >= bar) {
        int leader_index = static_cast<int>(out.super_leaders.size());
        out.super_leaders.push_back({c.leader, l, c.index});
        out.counts.push_back(count);
        out.notify_edges.emplace_back();

        // Notify down exactly the chains that reported these transactions;
        // the nodes reached are the ones holding them.
        std::vector<std::pair<NodeId, int>> stack{{c.leader, l}};
        while (!stack.empty()) {
          auto [at, lvl] = stack.back();
          stack.pop_back();
          auto rep = reporters[at].find(lvl);
          if (rep == reporters[at].end()) continue;
          for (NodeId r : rep->second) {
            ctx.send(MessageKind::super_leader_notify, CostClass::control, at, r, object_id, 1);
            out.notify_edges[leader_index].push_back({at, r});
            if (lvl > 0) {
              stack.push_back({r, lvl - 1});
            } else {
              for (int i : txns_at[r]) {
                if (out.dedicated[i] == -1) out.dedicated[i] = leader_index;
              }
            }
          }
        }
      } else if (l < h.top_level()) {
        NodeId parent = h.cluster_of(l + 1, c.leader).leader;
        ctx.send(MessageKind::count_up, CostClass::control, c.leader, parent, object_id, count);
        agg[parent][l + 1] += count;
        reporters[parent][l + 1].push_back(c.leader);
      }
    }
  }
  return out;
}

/// Per-level pruning for one object's super-leaders: tally exchange with the
/// lowest-id reference leader, then unmark traffic down the phase-1 chains
/// for levels under the bar. Returns the per-super-leader survival flags.
std::vector<char> distributed_prune(SimContext& ctx, const PartitionHierarchy& h,
                                    const Phase1Output& p1, int object_id,
                                    std::vector<int>* pruned_levels) {
  const double bar = 8.0 * h.params().intersection_bound * ctx.sc.cost.alpha;
  std::vector<char> survives(p1.super_leaders.size(), 1);

  std::map<int, std::vector<int>> by_level;
  for (std::size_t li = 0; li < p1.super_leaders.size(); ++li)
    by_level[p1.super_leaders[li].level].push_back(static_cast<int>(li));

  for (const auto& [level, leaders] : by_level) {
    NodeId ref = p1.super_leaders[leaders.front()].node;
    for (int li : leaders) ref = std::min(ref, p1.super_leaders[li].node);
    long tally = 0;
    for (int li : leaders) {
      ctx.send(MessageKind::tally_report, CostClass::control, p1.super_leaders[li].node, ref,
               object_id, p1.counts[li]);
      tally += p1.counts[li];
    }
    ++ctx.round;
    for (int li : leaders)
      ctx.send(MessageKind::tally_sum, CostClass::control, ref, p1.super_leaders[li].node,
               object_id, tally);
    ++ctx.round;
    if (static_cast<double>(tally) < bar) {
      if (pruned_levels) pruned_levels->push_back(level);
      for (int li : leaders) {
        survives[li] = 0;
        for (const auto& [src, dst] : p1.notify_edges[li])
          ctx.send(MessageKind::super_leader_notify, CostClass::control, src, dst, object_id, 0);
      }
      ++ctx.round;
    }
  }
  return survives;
}

void share_txn_info(SimContext& ctx, const PartitionHierarchy& h) {
  const Scenario& sc = ctx.sc;
  std::vector<long> local(sc.graph.node_count(), 0);
  for (const TransactionSpec& t : sc.transactions) ++local[t.home];
  for (NodeId v = 0; v < sc.graph.node_count(); ++v)
    if (local[v] > 0)
      ctx.send(MessageKind::txn_info, CostClass::control, v, h.leader_of(0, v), -1, local[v]);
  ++ctx.round;
}

}  // namespace

Phase1Output run_phase1(const Scenario& sc, const DistanceOracle& d, const PartitionHierarchy& h,
                        MessageLog& log) {
  sc.validate();
  SimContext ctx{sc, d, log};
  ctx.phase = 1;
  share_txn_info(ctx, h);
  std::vector<int> all(sc.transactions.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return distributed_election(ctx, h, all, -1);
}

Phase2Output run_phase2(const Scenario& sc, const DistanceOracle& d, const PartitionHierarchy& h,
                        const Phase1Output& p1, MessageLog& log) {
  SimContext ctx{sc, d, log};
  ctx.phase = 2;
  Phase2Output out;
  std::vector<char> survives = distributed_prune(ctx, h, p1, -1, &out.pruned_levels);

  const NodeId home = sc.object_home();
  out.final_target.assign(sc.transactions.size(), home);
  for (std::size_t i = 0; i < sc.transactions.size(); ++i) {
    int li = p1.dedicated[i];
    if (li >= 0 && survives[li]) out.final_target[i] = p1.super_leaders[li].node;
  }
  for (std::size_t li = 0; li < p1.super_leaders.size(); ++li)
    if (survives[li]) out.surviving.push_back(p1.super_leaders[li]);
  return out;
}

Phase3Output run_phase3(const Scenario& sc, const DistanceOracle& d, const PartitionHierarchy& h,
                        const Phase2Output& p2, TourKind kind, MessageLog& log) {
  SimContext ctx{sc, d, log};
  ctx.phase = 3;
  const NodeId home = sc.object_home();

  std::set<NodeId> stop_set;
  for (const SuperLeaderRef& ref : p2.surviving) stop_set.insert(ref.node);
  std::vector<NodeId> stops(stop_set.begin(), stop_set.end());

  Phase3Output out;
  if (kind == TourKind::universal)
    out.tour = induced_tour(universal_order(h, d), stops, home);
  else
    out.tour = mst_tour(d, stops, home);

  Schedule& s = out.schedule;
  for (std::size_t i = 0; i < sc.transactions.size(); ++i) {
    const TransactionSpec& t = sc.transactions[i];
    if (t.home != p2.final_target[i]) {
      ctx.send(MessageKind::txn_transfer, CostClass::transaction, t.home, p2.final_target[i], -1,
               t.id);
      s.events.push_back(Event::txn_move(t.id, t.home, p2.final_target[i]));
    }
  }
  ++ctx.round;

  std::map<NodeId, std::vector<int>> waiting;
  for (std::size_t i = 0; i < sc.transactions.size(); ++i)
    waiting[p2.final_target[i]].push_back(static_cast<int>(i));

  const int object_id = sc.objects[0].id;
  for (std::size_t v = 0; v < out.tour.visits.size(); ++v) {
    NodeId at = out.tour.visits[v];
    if (v > 0) {
      ctx.send(MessageKind::object_transfer, CostClass::object, out.tour.visits[v - 1], at,
               object_id, 0);
      s.events.push_back(Event::obj_move(object_id, out.tour.visits[v - 1], at));
      ++ctx.round;
    }
    auto it = waiting.find(at);
    if (it == waiting.end()) continue;
    for (int i : it->second) s.events.push_back(Event::execute(sc.transactions[i].id, at));
    waiting.erase(it);
  }
  return out;
}

DistributedSingleResult run_distributed_single(const Scenario& sc, const DistanceOracle& d,
                                               const PartitionHierarchy& h, TourKind kind) {
  if (sc.objects.size() != 1)
    throw Error(Errc::validation_error, "distributed single-object run got multiple objects");
  DistributedSingleResult r;
  r.phase1 = run_phase1(sc, d, h, r.log);
  r.phase2 = run_phase2(sc, d, h, r.phase1, r.log);
  Phase3Output p3 = run_phase3(sc, d, h, r.phase2, kind, r.log);
  r.schedule = std::move(p3.schedule);
  r.tour = std::move(p3.tour);
  r.cost = schedule_cost(sc, d, r.schedule);
  return r;
}

DistributedMultiResult run_distributed_multi(const Scenario& sc, const DistanceOracle& d,
                                             const PartitionHierarchy& h, TourKind kind) {
  sc.validate();
  const NodeId home = sc.object_home();
  const int txn_count = static_cast<int>(sc.transactions.size());
  const int obj_count = static_cast<int>(sc.objects.size());

  DistributedMultiResult r;
  SimContext ctx{sc, d, r.log};

  // Phase 1: transaction data is shared once; elections then run per object
  // over the same hierarchy.
  ctx.phase = 1;
  share_txn_info(ctx, h);
  std::vector<std::vector<int>> txns_of_object(obj_count);
  for (int i = 0; i < txn_count; ++i)
    for (int oid : sc.transactions[i].objs)
      txns_of_object[sc.object_index(oid)].push_back(i);
  r.per_object.reserve(obj_count);
  for (int j = 0; j < obj_count; ++j)
    r.per_object.push_back(distributed_election(ctx, h, txns_of_object[j], sc.objects[j].id));

  // Phase 2: per-object pruning, then each transaction consolidates to the
  // closest surviving super-leader across its objects (ties: lowest level,
  // then lowest leader id).
  ctx.phase = 2;
  std::vector<std::vector<char>> survives(obj_count);
  for (int j = 0; j < obj_count; ++j)
    survives[j] = distributed_prune(ctx, h, r.per_object[j], sc.objects[j].id, nullptr);

  r.chosen.assign(txn_count, home);
  for (int i = 0; i < txn_count; ++i) {
    bool found = false;
    double best_dist = 0.0;
    SuperLeaderRef best_ref{};
    for (int oid : sc.transactions[i].objs) {
      int j = sc.object_index(oid);
      int li = r.per_object[j].dedicated[i];
      if (li < 0 || !survives[j][li]) continue;
      const SuperLeaderRef& ref = r.per_object[j].super_leaders[li];
      double dist = d.dist(sc.transactions[i].home, ref.node);
      bool better = !found || dist < best_dist ||
                    (dist == best_dist && (ref.level < best_ref.level ||
                                           (ref.level == best_ref.level && ref.node < best_ref.node)));
      if (better) {
        found = true;
        best_dist = dist;
        best_ref = ref;
      }
    }
    if (found) r.chosen[i] = best_ref.node;
  }

  // Phase 3: one shared tour; objects visit only their required stops.
  ctx.phase = 3;
  std::set<NodeId> stop_set;
  for (int i = 0; i < txn_count; ++i)
    if (r.chosen[i] != home) stop_set.insert(r.chosen[i]);
  std::vector<NodeId> stops(stop_set.begin(), stop_set.end());
  if (kind == TourKind::universal)
    r.tour = induced_tour(universal_order(h, d), stops, home);
  else
    r.tour = mst_tour(d, stops, home);

  Schedule& s = r.schedule;
  for (int i = 0; i < txn_count; ++i) {
    const TransactionSpec& t = sc.transactions[i];
    if (t.home != r.chosen[i]) {
      ctx.send(MessageKind::txn_transfer, CostClass::transaction, t.home, r.chosen[i], -1, t.id);
      s.events.push_back(Event::txn_move(t.id, t.home, r.chosen[i]));
    }
  }
  ++ctx.round;

  std::vector<std::set<NodeId>> required(obj_count);
  for (int i = 0; i < txn_count; ++i)
    if (r.chosen[i] != home)
      for (int oid : sc.transactions[i].objs) required[sc.object_index(oid)].insert(r.chosen[i]);

  std::map<NodeId, std::vector<int>> waiting;
  for (int i = 0; i < txn_count; ++i) waiting[r.chosen[i]].push_back(i);

  std::vector<NodeId> obj_pos(obj_count, home);
  for (std::size_t v = 0; v < r.tour.visits.size(); ++v) {
    NodeId at = r.tour.visits[v];
    if (v > 0) {
      for (int j = 0; j < obj_count; ++j)
        if (required[j].count(at)) {
          ctx.send(MessageKind::object_transfer, CostClass::object, obj_pos[j], at,
                   sc.objects[j].id, 0);
          s.events.push_back(Event::obj_move(sc.objects[j].id, obj_pos[j], at));
          obj_pos[j] = at;
        }
      ++ctx.round;
    }
    auto it = waiting.find(at);
    if (it == waiting.end()) continue;
    for (int i : it->second) s.events.push_back(Event::execute(sc.transactions[i].id, at));
    waiting.erase(it);
  }

  r.cost = schedule_cost(sc, d, r.schedule);
  return r;
}

}  // namespace dualflow
