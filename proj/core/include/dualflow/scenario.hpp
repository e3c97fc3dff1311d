#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "dualflow/graph.hpp"
#include "dualflow/tours.hpp"

namespace dualflow {

/// Dual-flow cost model: moving an object across a unit-weight edge costs
/// alpha, moving a transaction costs beta, with alpha > beta >= 1.
struct CostModel {
  double alpha = 2.0;
  double beta = 1.0;

  long gamma() const { return static_cast<long>(std::ceil(alpha / beta - 1e-12)); }
};

struct ObjectSpec {
  int id = 0;
  NodeId home = 0;
};

struct TransactionSpec {
  int id = 0;
  NodeId home = 0;
  std::vector<int> objs;  // object ids, non-empty, ascending
};

struct ScenarioConfig {
  double sigma = 2.0;
  TourKind tour = TourKind::mst;
  std::uint64_t seed = 0;
  double control_weight = 1.0;  // cost per unit distance for protocol control traffic
};

/// One problem instance: graph, cost model, object homes, transactions.
struct Scenario {
  std::string id;
  WeightedGraph graph;
  CostModel cost;
  std::vector<ObjectSpec> objects;        // ascending id
  std::vector<TransactionSpec> transactions;  // ascending id
  ScenarioConfig config;

  /// Throws ValidationError on bad homes, id clashes, alpha <= beta,
  /// empty object sets, or multi-object instances without a common home.
  void validate() const;

  /// The shared initial object home. Multi-object scenarios require all
  /// objects to start at one node; validate() enforces this.
  NodeId object_home() const { return objects.at(0).home; }

  int max_objects_per_txn() const;

  int object_index(int object_id) const;
  int txn_index(int txn_id) const;
};

}  // namespace dualflow
