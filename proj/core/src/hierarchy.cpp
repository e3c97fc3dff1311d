#include "dualflow/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dualflow {

namespace {

/// Greedy net + nearest-point clustering. Scans nodes in ascending id; a node
/// joins the net when all current net points are farther than radius. Every
/// node then joins its nearest net point (ties to the lowest-id net point),
/// which bounds intra-cluster distances by 2 * radius.
PartitionLevel build_level(const DistanceOracle& d, int level, double radius) {
  const int n = d.node_count();
  PartitionLevel lv;
  lv.level = level;
  lv.radius = radius;
  lv.cluster_of.assign(n, -1);

  std::vector<NodeId> net;
  for (NodeId v = 0; v < n; ++v) {
    bool near = false;
    for (NodeId c : net)
      if (d.dist(v, c) <= radius) {
        near = true;
        break;
      }
    if (!near) net.push_back(v);
  }

  lv.clusters.resize(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    lv.clusters[i].level = level;
    lv.clusters[i].index = static_cast<int>(i);
    lv.clusters[i].leader = net[i];
  }
  for (NodeId v = 0; v < n; ++v) {
    int best = 0;
    double best_dist = d.dist(v, net[0]);
    for (std::size_t i = 1; i < net.size(); ++i) {
      double cand = d.dist(v, net[i]);
      if (cand < best_dist) {
        best_dist = cand;
        best = static_cast<int>(i);
      }
    }
    lv.cluster_of[v] = best;
    lv.clusters[best].members.push_back(v);
  }
  return lv;
}

}  // namespace

PartitionReport verify_partition(const DistanceOracle& d, const PartitionLevel& level) {
  PartitionReport report;
  for (const Cluster& c : level.clusters)
    for (std::size_t i = 0; i < c.members.size(); ++i)
      for (std::size_t j = i + 1; j < c.members.size(); ++j)
        report.max_diameter = std::max(report.max_diameter, d.dist(c.members[i], c.members[j]));

  for (NodeId v = 0; v < d.node_count(); ++v) {
    std::set<int> met;
    for (NodeId u = 0; u < d.node_count(); ++u)
      if (d.dist(v, u) <= level.radius) met.insert(level.cluster_of[u]);
    report.measured_intersections =
        std::max(report.measured_intersections, static_cast<int>(met.size()));
  }
  return report;
}

PartitionHierarchy PartitionHierarchy::build(const DistanceOracle& d, double sigma) {
  if (sigma < 2.0) throw Error(Errc::validation_error, "sigma must be >= 2");

  PartitionHierarchy hier;
  PartitionParams& p = hier.params_;
  p.sigma = sigma;
  p.rho = 4.0 * sigma;
  p.diameter = d.diameter();
  p.h = 0;
  for (double reach = 1.0; reach < p.diameter; reach *= p.rho) ++p.h;
  p.delta = doubling_dimension_estimate(d);
  p.zeta = std::exp2(p.delta * std::log2(8.0 * sigma));

  const int n = d.node_count();

  // level -1: every node is its own cluster
  PartitionLevel trivial;
  trivial.level = -1;
  trivial.radius = 0.0;
  trivial.cluster_of.resize(n);
  trivial.clusters.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    trivial.clusters[v] = {-1, v, v, {v}};
    trivial.cluster_of[v] = v;
  }
  hier.levels_.push_back(std::move(trivial));

  for (int l = 0; l <= p.h + 1; ++l) {
    double radius = std::min(p.diameter, std::pow(p.rho, l));
    PartitionLevel lv = build_level(d, l, radius);
    // Construction bound: every member sits within `radius` of its leader, so
    // cluster diameters stay within 2 * radius <= sigma * radius.
    for (const Cluster& c : lv.clusters)
      for (NodeId v : c.members)
        if (d.dist(v, c.leader) > radius)
          throw Error(Errc::invariant_violation,
                      "cluster radius check failed at level " + std::to_string(l));
    hier.levels_.push_back(std::move(lv));
  }

  if (hier.level(p.h).clusters.size() != 1 || hier.level(p.h + 1).clusters.size() != 1)
    throw Error(Errc::invariant_violation, "top levels must be a single cluster");

  for (int l = 0; l <= p.h + 1; ++l) {
    PartitionReport report = verify_partition(d, hier.level(l));
    p.intersection_bound = std::max(p.intersection_bound, report.measured_intersections);
  }
  return hier;
}

const Cluster& PartitionHierarchy::parent_of(const Cluster& c) const {
  if (c.level >= top_level())
    throw Error(Errc::no_parent, "cluster at level " + std::to_string(c.level) + " has no parent");
  return cluster_of(c.level + 1, c.leader);
}

}  // namespace dualflow
