#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dualflow/error.hpp"

namespace dualflow {

using NodeId = int;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double w = 1.0;
};

/// Connected undirected graph with edge weights >= 1. Immutable after build.
class WeightedGraph {
 public:
  WeightedGraph() = default;  // empty placeholder; build() makes real graphs

  /// Validates endpoints, weights, duplicates, and connectivity.
  static WeightedGraph build(int n, std::vector<Edge> edges);

  int node_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<NodeId, double>>& neighbors(NodeId v) const { return adj_[v]; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<NodeId, double>>> adj_;
};

/// Exact all-pairs shortest-path metric (repeated Dijkstra) plus diameter.
class DistanceOracle {
 public:
  explicit DistanceOracle(const WeightedGraph& g);

  int node_count() const { return n_; }
  double dist(NodeId u, NodeId v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  double diameter() const { return diameter_; }

  /// Nodes at distance <= r from v, ascending id; always contains v for r >= 0.
  std::vector<NodeId> neighborhood(NodeId v, double r) const;

 private:
  int n_ = 0;
  double diameter_ = 0.0;
  std::vector<double> dist_;
};

struct GeneratorSpec {
  enum class Kind { grid, unit_disk };
  Kind kind = Kind::grid;
  // grid
  int width = 1;
  int height = 1;
  // unit disk
  int nodes = 1;
  double radius = 0.0;
  double area_side = 1.0;
  std::uint64_t seed = 0;

  static GeneratorSpec make_grid(int width, int height);
  static GeneratorSpec make_unit_disk(int nodes, double radius, double area_side, std::uint64_t seed);
};

/// Deterministic for a fixed spec. Unit-disk placements are regenerated
/// (bounded retries) until the graph is connected.
WeightedGraph generate(const GeneratorSpec& spec);

/// Smallest integer d such that for every node v and every radius r in the
/// geometric grid {1, 2, 4, ...} up to the diameter, a greedy r/2-net of the
/// r-ball around v has at most 2^d points. Upper-bounds the true doubling
/// dimension of the metric.
int doubling_dimension_estimate(const DistanceOracle& d);

}  // namespace dualflow
