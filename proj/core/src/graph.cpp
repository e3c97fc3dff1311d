#include "dualflow/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

#include "dualflow/rng.hpp"

namespace dualflow {

WeightedGraph WeightedGraph::build(int n, std::vector<Edge> edges) {
  if (n < 1) throw Error(Errc::invalid_node, "graph needs at least one node");
  std::set<std::pair<NodeId, NodeId>> seen;
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw Error(Errc::invalid_node, "edge endpoint out of range");
    if (e.u == e.v) throw Error(Errc::duplicate_edge, "self-loop on node " + std::to_string(e.u));
    if (e.w < 1.0)
      throw Error(Errc::invalid_weight, "edge weight " + std::to_string(e.w) + " below 1");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert({e.u, e.v}).second)
      throw Error(Errc::duplicate_edge,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") repeated");
  }

  WeightedGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  for (const auto& e : g.edges_) {
    g.adj_[e.u].push_back({e.v, e.w});
    g.adj_[e.v].push_back({e.u, e.w});
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

  // connectivity via BFS over the adjacency lists
  std::vector<char> visited(n, 0);
  std::queue<NodeId> frontier;
  frontier.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    NodeId v = frontier.front();
    frontier.pop();
    for (const auto& [u, w] : g.adj_[v]) {
      (void)w;
      if (!visited[u]) {
        visited[u] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  if (reached != n)
    throw Error(Errc::disconnected_graph,
                std::to_string(n - reached) + " of " + std::to_string(n) + " nodes unreachable");
  return g;
}

DistanceOracle::DistanceOracle(const WeightedGraph& g) : n_(g.node_count()) {
  const double inf = std::numeric_limits<double>::infinity();
  dist_.assign(static_cast<std::size_t>(n_) * n_, inf);
  using Item = std::pair<double, NodeId>;
  for (NodeId s = 0; s < n_; ++s) {
    double* row = dist_.data() + static_cast<std::size_t>(s) * n_;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    row[s] = 0.0;
    pq.push({0.0, s});
    while (!pq.empty()) {
      auto [dv, v] = pq.top();
      pq.pop();
      if (dv > row[v]) continue;
      for (const auto& [u, w] : g.neighbors(v)) {
        double cand = dv + w;
        if (cand < row[u]) {
          row[u] = cand;
          pq.push({cand, u});
        }
      }
    }
  }
  diameter_ = 0.0;
  for (double d : dist_) diameter_ = std::max(diameter_, d);
}

std::vector<NodeId> DistanceOracle::neighborhood(NodeId v, double r) const {
  std::vector<NodeId> out;
  for (NodeId u = 0; u < n_; ++u)
    if (dist(v, u) <= r) out.push_back(u);
  return out;
}

GeneratorSpec GeneratorSpec::make_grid(int width, int height) {
  GeneratorSpec s;
  s.kind = Kind::grid;
  s.width = width;
  s.height = height;
  return s;
}

GeneratorSpec GeneratorSpec::make_unit_disk(int nodes, double radius, double area_side,
                                            std::uint64_t seed) {
  GeneratorSpec s;
  s.kind = Kind::unit_disk;
  s.nodes = nodes;
  s.radius = radius;
  s.area_side = area_side;
  s.seed = seed;
  return s;
}

namespace {

WeightedGraph generate_grid(const GeneratorSpec& spec) {
  if (spec.width < 1 || spec.height < 1)
    throw Error(Errc::generation_failed, "grid dimensions must be >= 1");
  const int w = spec.width, h = spec.height;
  std::vector<Edge> edges;
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      NodeId id = r * w + c;
      if (c + 1 < w) edges.push_back({id, id + 1, 1.0});
      if (r + 1 < h) edges.push_back({id, id + w, 1.0});
    }
  return WeightedGraph::build(w * h, std::move(edges));
}

WeightedGraph generate_unit_disk(const GeneratorSpec& spec) {
  if (spec.nodes < 1) throw Error(Errc::generation_failed, "unit-disk node count must be >= 1");
  if (spec.nodes > 1 && spec.radius <= 0.0)
    throw Error(Errc::generation_failed, "unit-disk radius must be positive");

  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng = Rng(spec.seed).fork(static_cast<std::uint64_t>(attempt));
    std::vector<std::pair<double, double>> pts(spec.nodes);
    for (auto& p : pts) {
      p.first = rng.next_double() * spec.area_side;
      p.second = rng.next_double() * spec.area_side;
    }
    struct Raw {
      NodeId u, v;
      double euclid;
    };
    std::vector<Raw> raw;
    double min_dist = std::numeric_limits<double>::infinity();
    for (NodeId u = 0; u < spec.nodes; ++u)
      for (NodeId v = u + 1; v < spec.nodes; ++v) {
        double dx = pts[u].first - pts[v].first;
        double dy = pts[u].second - pts[v].second;
        double d = std::sqrt(dx * dx + dy * dy);
        if (d <= spec.radius) {
          raw.push_back({u, v, d});
          min_dist = std::min(min_dist, d);
        }
      }
    if (spec.nodes > 1 && raw.empty()) continue;
    // Scale so the shortest selected edge gets weight 1; keeps the metric's
    // minimum positive distance at 1.
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& r : raw)
      edges.push_back({r.u, r.v, std::max(1.0, std::round(r.euclid / min_dist))});
    try {
      return WeightedGraph::build(spec.nodes, std::move(edges));
    } catch (const Error& e) {
      if (e.code() == Errc::disconnected_graph) continue;  // re-place and retry
      throw;
    }
  }
  throw Error(Errc::generation_failed, "unit-disk placement retries exhausted");
}

}  // namespace

WeightedGraph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::grid: return generate_grid(spec);
    case GeneratorSpec::Kind::unit_disk: return generate_unit_disk(spec);
  }
  throw Error(Errc::generation_failed, "unknown generator kind");
}

int doubling_dimension_estimate(const DistanceOracle& d) {
  const int n = d.node_count();
  int max_net = 1;
  for (NodeId v = 0; v < n; ++v) {
    for (double r = 1.0; ; r *= 2.0) {
      std::vector<NodeId> ball = d.neighborhood(v, r);
      // Greedy r/2-net of the ball, scanned in ascending id: a node joins the
      // net when no current net point is within r/2.
      std::vector<NodeId> net;
      for (NodeId u : ball) {
        bool covered = false;
        for (NodeId c : net)
          if (d.dist(u, c) <= r / 2.0) {
            covered = true;
            break;
          }
        if (!covered) net.push_back(u);
      }
      max_net = std::max(max_net, static_cast<int>(net.size()));
      if (r >= d.diameter()) break;
    }
  }
  int delta = 0;
  while ((1 << delta) < max_net) ++delta;
  return delta;
}

}  // namespace dualflow
