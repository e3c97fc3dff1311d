#pragma once

#include <vector>

#include "dualflow/hierarchy.hpp"

namespace dualflow {

enum class TourKind { mst, universal, exact };

const char* tour_kind_name(TourKind k);

/// Open visiting order over a node subset, starting at the anchor.
struct TourOrder {
  NodeId anchor = 0;
  std::vector<NodeId> visits;  // distinct; visits[0] == anchor
  TourKind kind = TourKind::mst;
};

/// Fixed permutation of all nodes; any subset inherits its relative order.
struct UniversalOrder {
  std::vector<NodeId> order;
};

/// Pre-order walk of the minimum spanning tree of the metric closure over
/// s + anchor, rooted at the anchor. Children are visited cheapest connecting
/// edge first, ties by node id. Open-walk length is at most twice optimal.
TourOrder mst_tour(const DistanceOracle& d, const std::vector<NodeId>& s, NodeId anchor);

/// Permutation of all nodes from a recursive pre-order of the hierarchy:
/// children of a cluster are taken nearest-leader-first starting from the
/// parent's leader, ties by leader id.
UniversalOrder universal_order(const PartitionHierarchy& h, const DistanceOracle& d);

/// Members of s + anchor in universal order, rotated so the anchor is first.
TourOrder induced_tour(const UniversalOrder& u, const std::vector<NodeId>& s, NodeId anchor);

struct ExactTour {
  TourOrder order;
  double length = 0.0;
};

/// Minimum-length open walk from the anchor over s, by dynamic programming
/// over subsets of the metric closure. Throws TooLarge above 12 nodes total.
ExactTour exact_tour(const DistanceOracle& d, const std::vector<NodeId>& s, NodeId anchor);

/// Sum of metric distances between consecutive visits (open walk).
double tour_length(const DistanceOracle& d, const TourOrder& t);

}  // namespace dualflow
