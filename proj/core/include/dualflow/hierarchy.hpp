#pragma once

#include <vector>

#include "dualflow/graph.hpp"

namespace dualflow {

struct PartitionParams {
  double sigma = 2.0;        // cluster stretch factor, >= 2
  double rho = 8.0;          // level radius base, 4 * sigma
  int h = 0;                 // smallest integer with rho^h >= diameter
  int intersection_bound = 1;  // measured I: max clusters met by any r_l-ball
  int delta = 0;             // doubling dimension estimate of the metric
  double zeta = 1.0;         // 2^(delta * log2(8 * sigma))
  double diameter = 0.0;
};

struct Cluster {
  int level = 0;
  int index = 0;        // position within its level
  NodeId leader = 0;    // always a member
  std::vector<NodeId> members;  // ascending id
};

struct PartitionLevel {
  int level = 0;
  double radius = 0.0;              // r_l = min(D, rho^l); 0 at level -1
  std::vector<Cluster> clusters;    // ascending leader id
  std::vector<int> cluster_of;      // node id -> cluster index
};

struct PartitionReport {
  double max_diameter = 0.0;
  int measured_intersections = 0;  // max over nodes v of clusters meeting the r_l-ball at v
};

/// Measures the level's worst intra-cluster distance and how many clusters
/// any radius-r_l neighborhood intersects. Report only; callers assert.
PartitionReport verify_partition(const DistanceOracle& d, const PartitionLevel& level);

/// Stack of partitions at radii r_l = min(D, rho^l) for levels -1..h+1.
/// Level -1 holds singletons; levels h and h+1 are the whole node set.
/// Each cluster's parent is the level-(l+1) cluster containing its leader.
class PartitionHierarchy {
 public:
  static PartitionHierarchy build(const DistanceOracle& d, double sigma);

  const PartitionParams& params() const { return params_; }
  int bottom_level() const { return -1; }
  int top_level() const { return params_.h + 1; }
  const PartitionLevel& level(int l) const { return levels_[static_cast<std::size_t>(l + 1)]; }
  int level_count() const { return static_cast<int>(levels_.size()); }

  const Cluster& cluster_of(int level, NodeId v) const {
    const PartitionLevel& lv = this->level(level);
    return lv.clusters[lv.cluster_of[v]];
  }

  /// Cluster at level c.level + 1 containing c's leader. Throws NoParent for
  /// clusters at the top level.
  const Cluster& parent_of(const Cluster& c) const;

  /// Leader of the level-l cluster containing v.
  NodeId leader_of(int level, NodeId v) const { return cluster_of(level, v).leader; }

 private:
  PartitionParams params_;
  std::vector<PartitionLevel> levels_;  // index 0 == level -1
};

}  // namespace dualflow
