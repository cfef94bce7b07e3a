#include "semgraph/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace semgraph {

void ClusterParams::validate() const {
  if (epsilon <= 0.0) throw InvalidOperationError("cluster epsilon must be positive");
  if (min_points < 1) throw InvalidOperationError("cluster min_points must be >= 1");
}

namespace {

// Union-find over point indices.
struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Uniform grid with cell edge = epsilon; neighbor candidates live in the
// 27 surrounding cells. The final distance test is the same squared-distance
// comparison a brute-force scan would do, so results match it exactly.
class NeighborGrid {
 public:
  NeighborGrid(const std::vector<Eigen::Vector3d>& points, double epsilon)
      : points_(points), eps_(epsilon) {
    cells_.reserve(points.size());
    for (int i = 0; i < static_cast<int>(points.size()); ++i)
      cells_[key(points[i])].push_back(i);
  }

  std::vector<int> neighbors(int i) const {
    std::vector<int> out;
    const Eigen::Vector3d& p = points_[i];
    const double eps_sq = eps_ * eps_;
    const std::int64_t cx = coord(p.x()), cy = coord(p.y()), cz = coord(p.z());
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy)
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          auto it = cells_.find(pack(cx + dx, cy + dy, cz + dz));
          if (it == cells_.end()) continue;
          for (int j : it->second) {
            if ((points_[j] - p).squaredNorm() <= eps_sq) out.push_back(j);
          }
        }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::int64_t coord(double v) const { return static_cast<std::int64_t>(std::floor(v / eps_)); }
  std::int64_t pack(std::int64_t x, std::int64_t y, std::int64_t z) const {
    // 21 bits per axis, offset to keep values positive.
    const std::int64_t m = (std::int64_t{1} << 20);
    return ((x + m) << 42) | ((y + m) << 21) | (z + m);
  }
  std::int64_t key(const Eigen::Vector3d& p) const {
    return pack(coord(p.x()), coord(p.y()), coord(p.z()));
  }

  const std::vector<Eigen::Vector3d>& points_;
  double eps_;
  std::unordered_map<std::int64_t, std::vector<int>> cells_;
};

}  // namespace

std::vector<Cluster> cluster(const PointCloud& cloud, const ClusterParams& params) {
  params.validate();
  if (cloud.frame != Frame::Map) throw FrameMisuseError("cluster expects a map-frame cloud");
  const int n = static_cast<int>(cloud.points.size());
  if (n == 0) return {};

  NeighborGrid grid(cloud.points, params.epsilon);
  std::vector<std::vector<int>> nbrs(n);
  std::vector<bool> core(n, false);
  for (int i = 0; i < n; ++i) {
    nbrs[i] = grid.neighbors(i);
    core[i] = static_cast<int>(nbrs[i].size()) >= params.min_points;
  }

  DisjointSet ds(n);
  for (int i = 0; i < n; ++i) {
    if (!core[i]) continue;
    for (int j : nbrs[i])
      if (core[j]) ds.unite(i, j);
  }

  // label[i] = representative core point of i's cluster, or -1 for noise.
  std::vector<int> label(n, -1);
  for (int i = 0; i < n; ++i)
    if (core[i]) label[i] = ds.find(i);
  for (int i = 0; i < n; ++i) {
    if (core[i]) continue;
    for (int j : nbrs[i]) {
      if (core[j]) {  // nbrs is sorted, so the first core neighbor is the lowest-index one
        label[i] = ds.find(j);
        break;
      }
    }
  }

  std::unordered_map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i)
    if (label[i] >= 0) groups[label[i]].push_back(i);

  std::vector<Cluster> out;
  out.reserve(groups.size());
  for (auto& [rep, indices] : groups) {
    Cluster c;
    std::sort(indices.begin(), indices.end());
    c.indices = std::move(indices);
    std::vector<Eigen::Vector3d> members;
    members.reserve(c.indices.size());
    for (int i : c.indices) members.push_back(cloud.points[i]);
    c.centroid = centroid(members);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Cluster& a, const Cluster& b) { return a.indices.front() < b.indices.front(); });
  return out;
}

Eigen::Vector3d centroid(std::span<const Eigen::Vector3d> points) {
  if (points.empty()) throw EmptyInputError("centroid of an empty point set");
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (const auto& p : points) sum += p;
  return sum / static_cast<double>(points.size());
}

std::vector<Cluster> filter_min_size(std::vector<Cluster> clusters, int min_size) {
  std::erase_if(clusters, [min_size](const Cluster& c) {
    return static_cast<int>(c.indices.size()) < min_size;
  });
  return clusters;
}

}  // namespace semgraph
