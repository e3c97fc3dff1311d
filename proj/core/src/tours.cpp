#include "dualflow/tours.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace dualflow {

const char* tour_kind_name(TourKind k) {
  switch (k) {
    case TourKind::mst: return "mst";
    case TourKind::universal: return "universal";
    case TourKind::exact: return "exact";
  }
  return "?";
}

namespace {

/// Distinct nodes of s plus the anchor, anchor first, rest ascending.
std::vector<NodeId> collect_stops(const std::vector<NodeId>& s, NodeId anchor) {
  std::set<NodeId> rest(s.begin(), s.end());
  rest.erase(anchor);
  std::vector<NodeId> stops{anchor};
  stops.insert(stops.end(), rest.begin(), rest.end());
  return stops;
}

}  // namespace

TourOrder mst_tour(const DistanceOracle& d, const std::vector<NodeId>& s, NodeId anchor) {
  std::vector<NodeId> stops = collect_stops(s, anchor);
  const int m = static_cast<int>(stops.size());

  // Prim from the anchor over the metric closure.
  std::vector<int> parent(m, -1);
  std::vector<double> key(m, std::numeric_limits<double>::infinity());
  std::vector<char> in_tree(m, 0);
  key[0] = 0.0;
  for (int round = 0; round < m; ++round) {
    int pick = -1;
    for (int i = 0; i < m; ++i)
      if (!in_tree[i] && (pick < 0 || key[i] < key[pick] ||
                          (key[i] == key[pick] && stops[i] < stops[pick])))
        pick = i;
    in_tree[pick] = 1;
    for (int i = 0; i < m; ++i)
      if (!in_tree[i] && d.dist(stops[pick], stops[i]) < key[i]) {
        key[i] = d.dist(stops[pick], stops[i]);
        parent[i] = pick;
      }
  }

  std::vector<std::vector<int>> children(m);
  for (int i = 1; i < m; ++i) children[parent[i]].push_back(i);
  for (auto& ch : children)
    std::sort(ch.begin(), ch.end(), [&](int a, int b) {
      if (key[a] != key[b]) return key[a] < key[b];
      return stops[a] < stops[b];
    });

  TourOrder tour;
  tour.anchor = anchor;
  tour.kind = TourKind::mst;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    tour.visits.push_back(stops[i]);
    for (auto it = children[i].rbegin(); it != children[i].rend(); ++it) stack.push_back(*it);
  }
  return tour;
}

namespace {

void emit_universal(const PartitionHierarchy& h, const DistanceOracle& d, const Cluster& c,
                    std::vector<NodeId>& out) {
  if (c.level == -1) {
    out.push_back(c.leader);
    return;
  }
  const PartitionLevel& below = h.level(c.level - 1);
  std::vector<int> kids;
  for (const Cluster& k : below.clusters)
    if (h.level(c.level).cluster_of[k.leader] == c.index) kids.push_back(k.index);

  NodeId cursor = c.leader;
  std::vector<char> used(kids.size(), 0);
  for (std::size_t step = 0; step < kids.size(); ++step) {
    int pick = -1;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (used[i]) continue;
      if (pick < 0) {
        pick = static_cast<int>(i);
        continue;
      }
      NodeId a = below.clusters[kids[i]].leader;
      NodeId b = below.clusters[kids[pick]].leader;
      double da = d.dist(cursor, a), db = d.dist(cursor, b);
      if (da < db || (da == db && a < b)) pick = static_cast<int>(i);
    }
    used[pick] = 1;
    const Cluster& chosen = below.clusters[kids[pick]];
    emit_universal(h, d, chosen, out);
    cursor = chosen.leader;
  }
}

}  // namespace

UniversalOrder universal_order(const PartitionHierarchy& h, const DistanceOracle& d) {
  UniversalOrder u;
  emit_universal(h, d, h.level(h.top_level()).clusters[0], u.order);
  return u;
}

TourOrder induced_tour(const UniversalOrder& u, const std::vector<NodeId>& s, NodeId anchor) {
  std::set<NodeId> wanted(s.begin(), s.end());
  wanted.insert(anchor);
  std::vector<NodeId> in_order;
  for (NodeId v : u.order)
    if (wanted.count(v)) in_order.push_back(v);

  TourOrder tour;
  tour.anchor = anchor;
  tour.kind = TourKind::universal;
  auto at = std::find(in_order.begin(), in_order.end(), anchor);
  tour.visits.insert(tour.visits.end(), at, in_order.end());
  tour.visits.insert(tour.visits.end(), in_order.begin(), at);
  return tour;
}

ExactTour exact_tour(const DistanceOracle& d, const std::vector<NodeId>& s, NodeId anchor) {
  std::vector<NodeId> stops = collect_stops(s, anchor);
  if (stops.size() > 12)
    throw Error(Errc::too_large, "exact tour limited to 12 nodes, got " +
                                     std::to_string(stops.size()));
  ExactTour result;
  result.order.anchor = anchor;
  result.order.kind = TourKind::exact;
  result.order.visits.push_back(anchor);
  const int m = static_cast<int>(stops.size()) - 1;  // nodes beyond the anchor
  if (m == 0) return result;

  const double inf = std::numeric_limits<double>::infinity();
  const std::size_t full = std::size_t{1} << m;
  std::vector<double> dp(full * m, inf);
  std::vector<int> from(full * m, -1);
  for (int j = 0; j < m; ++j) dp[(std::size_t{1} << j) * m + j] = d.dist(anchor, stops[j + 1]);
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      double base = dp[mask * m + j];
      if (base == inf) continue;
      for (int k = 0; k < m; ++k) {
        if (mask & (std::size_t{1} << k)) continue;
        std::size_t next = mask | (std::size_t{1} << k);
        double cand = base + d.dist(stops[j + 1], stops[k + 1]);
        if (cand < dp[next * m + k]) {
          dp[next * m + k] = cand;
          from[next * m + k] = j;
        }
      }
    }
  }
  std::size_t goal = full - 1;
  int best = 0;
  for (int j = 1; j < m; ++j)
    if (dp[goal * m + j] < dp[goal * m + best]) best = j;
  result.length = dp[goal * m + best];

  std::vector<NodeId> rev;
  std::size_t mask = goal;
  int j = best;
  while (j >= 0) {
    rev.push_back(stops[j + 1]);
    int prev = from[mask * m + j];
    mask &= ~(std::size_t{1} << j);
    j = prev;
  }
  result.order.visits.insert(result.order.visits.end(), rev.rbegin(), rev.rend());
  return result;
}

double tour_length(const DistanceOracle& d, const TourOrder& t) {
  double total = 0.0;
  for (std::size_t i = 1; i < t.visits.size(); ++i)
    total += d.dist(t.visits[i - 1], t.visits[i]);
  return total;
}

}  // namespace dualflow
