#pragma once

#include <span>
#include <vector>

#include "semgraph/geometry.hpp"

namespace semgraph {

struct ClusterParams {
  double epsilon = 0.05;  // neighborhood radius, meters
  int min_points = 10;    // neighbors (incl. self) required for a core point

  void validate() const;
};

struct Cluster {
  std::vector<int> indices;  // strictly increasing indices into the source cloud
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
};

/// DBSCAN over a map-frame cloud. A point is core when it has at least
/// min_points neighbors (itself included) within epsilon; clusters are the
/// connected components of core points, plus border points attached to the
/// lowest-index core point that reaches them. Noise appears in no cluster.
/// Clusters come back sorted by their smallest member index.
std::vector<Cluster> cluster(const PointCloud& cloud, const ClusterParams& params);

/// Component-wise arithmetic mean.
Eigen::Vector3d centroid(std::span<const Eigen::Vector3d> points);

/// Drops clusters smaller than min_size points; keeps order.
std::vector<Cluster> filter_min_size(std::vector<Cluster> clusters, int min_size);

}  // namespace semgraph
