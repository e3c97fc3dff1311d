// Shared test helpers: independent reference implementations used as oracles
// against the library's code paths, plus small scenario builders.
#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <vector>

#include "dualflow/rng.hpp"
#include "dualflow/scenario.hpp"
#include "dualflow/schedule.hpp"

namespace testsupport {

using namespace dualflow;

/// Floyd-Warshall over the edge list; written independently of the library's
/// Dijkstra-based oracle.
inline std::vector<std::vector<double>> floyd_warshall(const WeightedGraph& g) {
  const int n = g.node_count();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, inf));
  for (int v = 0; v < n; ++v) dist[v][v] = 0.0;
  for (const Edge& e : g.edges()) {
    dist[e.u][e.v] = std::min(dist[e.u][e.v], e.w);
    dist[e.v][e.u] = std::min(dist[e.v][e.u], e.w);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
  return dist;
}

/// Random connected weighted graph: a random spanning tree plus extra edges,
/// integer weights in [1, max_weight].
inline WeightedGraph random_connected_graph(Rng& rng, int n, double edge_chance, long max_weight) {
  std::vector<Edge> edges;
  std::map<std::pair<NodeId, NodeId>, bool> present;
  for (NodeId v = 1; v < n; ++v) {
    NodeId u = static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(v)));
    edges.push_back({u, v, static_cast<double>(rng.next_range(1, max_weight))});
    present[{u, v}] = true;
  }
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (!present.count({u, v}) && rng.next_double() < edge_chance)
        edges.push_back({u, v, static_cast<double>(rng.next_range(1, max_weight))});
  return WeightedGraph::build(n, std::move(edges));
}

/// Independent cost accountant: replays events tracking positions and summing
/// class-weighted metric distances.
inline CostBreakdown replay_cost(const Scenario& sc, const DistanceOracle& d, const Schedule& s) {
  std::map<int, NodeId> obj_pos, txn_pos;
  for (const ObjectSpec& o : sc.objects) obj_pos[o.id] = o.home;
  for (const TransactionSpec& t : sc.transactions) txn_pos[t.id] = t.home;
  CostBreakdown total;
  for (const Event& e : s.events) {
    if (e.kind == Event::Kind::move_object) {
      total.object_cost += sc.cost.alpha * d.dist(obj_pos.at(e.entity), e.to);
      obj_pos[e.entity] = e.to;
    } else if (e.kind == Event::Kind::move_transaction) {
      total.txn_cost += sc.cost.beta * d.dist(txn_pos.at(e.entity), e.to);
      txn_pos[e.entity] = e.to;
    }
  }
  return total;
}

inline Scenario make_single_scenario(WeightedGraph g, double alpha, double beta, NodeId obj_home,
                                     std::vector<NodeId> txn_homes) {
  Scenario sc;
  sc.id = "test";
  sc.graph = std::move(g);
  sc.cost = {alpha, beta};
  sc.objects = {{0, obj_home}};
  for (std::size_t i = 0; i < txn_homes.size(); ++i)
    sc.transactions.push_back({static_cast<int>(i), txn_homes[i], {0}});
  sc.validate();
  return sc;
}

}  // namespace testsupport
