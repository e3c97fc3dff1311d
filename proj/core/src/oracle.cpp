#include "dualflow/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace dualflow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Open-walk DP from a fixed anchor over every subset of `stops` at once:
/// dp[mask][j] = shortest walk from the anchor visiting exactly `mask` and
/// ending at stops[j]. Reconstruction yields the visiting order.
class WalkTable {
 public:
  WalkTable(const DistanceOracle& d, NodeId anchor, std::vector<NodeId> stops)
      : d_(d), anchor_(anchor), stops_(std::move(stops)) {
    const int m = static_cast<int>(stops_.size());
    const std::size_t full = std::size_t{1} << m;
    dp_.assign(full * m, kInf);
    from_.assign(full * m, -1);
    for (int j = 0; j < m; ++j)
      dp_[(std::size_t{1} << j) * m + j] = d_.dist(anchor_, stops_[j]);
    for (std::size_t mask = 1; mask < full; ++mask)
      for (int j = 0; j < m; ++j) {
        if (!(mask & (std::size_t{1} << j))) continue;
        double base = dp_[mask * m + j];
        if (base == kInf) continue;
        for (int k = 0; k < m; ++k) {
          if (mask & (std::size_t{1} << k)) continue;
          std::size_t next = mask | (std::size_t{1} << k);
          double cand = base + d_.dist(stops_[j], stops_[k]);
          if (cand < dp_[next * m + k]) {
            dp_[next * m + k] = cand;
            from_[next * m + k] = j;
          }
        }
      }
  }

  double length(std::size_t mask) const {
    if (mask == 0) return 0.0;
    const int m = static_cast<int>(stops_.size());
    double best = kInf;
    for (int j = 0; j < m; ++j)
      if (mask & (std::size_t{1} << j)) best = std::min(best, dp_[mask * m + j]);
    return best;
  }

  std::vector<NodeId> order(std::size_t mask) const {
    if (mask == 0) return {};
    const int m = static_cast<int>(stops_.size());
    int last = -1;
    for (int j = 0; j < m; ++j)
      if ((mask & (std::size_t{1} << j)) &&
          (last < 0 || dp_[mask * m + j] < dp_[mask * m + last]))
        last = j;
    std::vector<NodeId> rev;
    std::size_t cur = mask;
    while (last >= 0) {
      rev.push_back(stops_[last]);
      int prev = from_[cur * m + last];
      cur &= ~(std::size_t{1} << last);
      last = prev;
    }
    return {rev.rbegin(), rev.rend()};
  }

 private:
  const DistanceOracle& d_;
  NodeId anchor_;
  std::vector<NodeId> stops_;
  std::vector<double> dp_;
  std::vector<int> from_;
};

}  // namespace

OracleResult optimal_cost_single(const Scenario& sc, const DistanceOracle& d) {
  sc.validate();
  if (sc.objects.size() != 1)
    throw Error(Errc::validation_error, "single-object oracle got multiple objects");
  const int n = sc.graph.node_count();
  if (n > 10) throw Error(Errc::too_large, "single-object oracle limited to 10 nodes");

  const NodeId home = sc.object_home();
  std::vector<NodeId> candidates;
  for (NodeId v = 0; v < n; ++v)
    if (v != home) candidates.push_back(v);
  const int m = static_cast<int>(candidates.size());
  WalkTable walks(d, home, candidates);

  const std::size_t full = std::size_t{1} << m;
  double best_cost = kInf;
  std::size_t best_mask = 0;
  // Ascending masks: subsets precede supersets, so the kept optimum is the
  // smallest stop set achieving it and every stop hosts a meeting.
  for (std::size_t mask = 0; mask < full; ++mask) {
    double cost = sc.cost.alpha * walks.length(mask);
    if (cost >= best_cost) continue;
    for (const TransactionSpec& t : sc.transactions) {
      double nearest = d.dist(t.home, home);
      for (int j = 0; j < m; ++j)
        if (mask & (std::size_t{1} << j))
          nearest = std::min(nearest, d.dist(t.home, candidates[j]));
      cost += sc.cost.beta * nearest;
      if (cost >= best_cost) break;
    }
    if (cost < best_cost) {
      best_cost = cost;
      best_mask = mask;
    }
  }

  OracleResult r;
  r.c_star = best_cost;
  r.object_walk.assign(1, walks.order(best_mask));
  r.meeting_node.reserve(sc.transactions.size());
  for (const TransactionSpec& t : sc.transactions) {
    NodeId meet = home;
    double nearest = d.dist(t.home, home);
    for (int j = 0; j < m; ++j)
      if (best_mask & (std::size_t{1} << j)) {
        double cand = d.dist(t.home, candidates[j]);
        if (cand < nearest || (cand == nearest && candidates[j] < meet)) {
          nearest = cand;
          meet = candidates[j];
        }
      }
    r.meeting_node.push_back(meet);
  }
  return r;
}

OracleResult optimal_cost_multi(const Scenario& sc, const DistanceOracle& d) {
  sc.validate();
  const int n = sc.graph.node_count();
  const int t = static_cast<int>(sc.transactions.size());
  const int objs = static_cast<int>(sc.objects.size());
  if (n > 8) throw Error(Errc::too_large, "multi-object oracle limited to 8 nodes");
  if (t > 5) throw Error(Errc::too_large, "multi-object oracle limited to 5 transactions");

  const NodeId home = sc.object_home();
  std::vector<NodeId> candidates;
  for (NodeId v = 0; v < n; ++v)
    if (v != home) candidates.push_back(v);
  WalkTable walks(d, home, candidates);
  std::vector<int> node_bit(n, -1);
  for (std::size_t j = 0; j < candidates.size(); ++j) node_bit[candidates[j]] = static_cast<int>(j);

  std::vector<std::vector<int>> txns_of_object(objs);
  for (int i = 0; i < t; ++i)
    for (int oid : sc.transactions[i].objs)
      txns_of_object[sc.object_index(oid)].push_back(i);

  std::vector<int> perm_base(t);
  std::iota(perm_base.begin(), perm_base.end(), 0);

  double best_cost = kInf;
  std::vector<NodeId> best_assign;
  std::vector<int> best_perm;

  std::vector<NodeId> assign(t, 0);
  // Execution nodes enumerated as a base-n counter, transaction 0 fastest.
  while (true) {
    double txn_part = 0.0;
    for (int i = 0; i < t; ++i) txn_part += sc.cost.beta * d.dist(sc.transactions[i].home, assign[i]);

    // Order-free lower bound: each object at least walks an optimal open walk
    // over its required stops. Only assignments beating the incumbent get the
    // full execution-order search.
    double bound = txn_part;
    for (int j = 0; j < objs && bound < best_cost; ++j) {
      std::size_t mask = 0;
      for (int i : txns_of_object[j])
        if (assign[i] != home) mask |= std::size_t{1} << node_bit[assign[i]];
      bound += sc.cost.alpha * walks.length(mask);
    }
    if (bound < best_cost) {
      std::vector<int> perm = perm_base;
      do {
        double cost = txn_part;
        for (int j = 0; j < objs && cost < best_cost; ++j) {
          NodeId pos = home;
          for (int i : perm)
            if (std::find(txns_of_object[j].begin(), txns_of_object[j].end(), i) !=
                txns_of_object[j].end()) {
              if (assign[i] != pos) {
                cost += sc.cost.alpha * d.dist(pos, assign[i]);
                pos = assign[i];
              }
            }
        }
        if (cost < best_cost) {
          best_cost = cost;
          best_assign = assign;
          best_perm = perm;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }

    int carry = 0;
    while (carry < t) {
      if (++assign[carry] < n) break;
      assign[carry] = 0;
      ++carry;
    }
    if (carry == t) break;
  }

  OracleResult r;
  r.c_star = best_cost;
  r.meeting_node = best_assign;
  r.object_walk.assign(objs, {});
  for (int j = 0; j < objs; ++j) {
    NodeId pos = home;
    for (int i : best_perm)
      if (std::find(txns_of_object[j].begin(), txns_of_object[j].end(), i) !=
          txns_of_object[j].end()) {
        if (best_assign[i] != pos) {
          r.object_walk[j].push_back(best_assign[i]);
          pos = best_assign[i];
        }
      }
  }
  r.execution_order.reserve(t);
  for (int i : best_perm) r.execution_order.push_back(sc.transactions[i].id);
  return r;
}

Schedule witness_schedule(const Scenario& sc, const OracleResult& r) {
  Schedule s;
  for (std::size_t i = 0; i < sc.transactions.size(); ++i)
    if (sc.transactions[i].home != r.meeting_node[i])
      s.events.push_back(
          Event::txn_move(sc.transactions[i].id, sc.transactions[i].home, r.meeting_node[i]));

  std::vector<NodeId> obj_pos(sc.objects.size(), sc.object_home());
  std::vector<int> order;
  if (!r.execution_order.empty()) {
    for (int id : r.execution_order) order.push_back(sc.txn_index(id));
  } else {
    // No stored order: execute by walk position of the meeting node, then id.
    const std::vector<NodeId>& walk = r.object_walk.at(0);
    auto walk_rank = [&](NodeId v) {
      if (v == sc.object_home()) return 0;
      auto it = std::find(walk.begin(), walk.end(), v);
      return static_cast<int>(it - walk.begin()) + 1;
    };
    order.resize(sc.transactions.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return walk_rank(r.meeting_node[a]) < walk_rank(r.meeting_node[b]);
    });
  }

  for (int i : order) {
    const TransactionSpec& t = sc.transactions[i];
    for (int oid : t.objs) {
      int oj = sc.object_index(oid);
      if (obj_pos[oj] != r.meeting_node[i]) {
        s.events.push_back(Event::obj_move(oid, obj_pos[oj], r.meeting_node[i]));
        obj_pos[oj] = r.meeting_node[i];
      }
    }
    s.events.push_back(Event::execute(t.id, r.meeting_node[i]));
  }
  return s;
}

}  // namespace dualflow
