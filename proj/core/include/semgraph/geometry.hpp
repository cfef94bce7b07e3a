#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "semgraph/errors.hpp"

namespace semgraph {

/// Pinhole model of the depth camera. depth_scale converts raw 16-bit
/// samples to meters (0.001 for millimeter recordings).
struct CameraIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;
  double depth_scale = 0.001;

  void validate() const;
};

/// Reads fx/fy/cx/cy/width/height/depth_scale from an intrinsics.json file.
CameraIntrinsics load_intrinsics(const std::filesystem::path& file);

/// Rigid camera-to-map transform. Hamilton quaternion, stored (w,x,y,z),
/// normalized on construction. Applies rotation before translation.
class Pose {
 public:
  Pose() : translation_(Eigen::Vector3d::Zero()), rotation_(Eigen::Quaterniond::Identity()) {}
  Pose(const Eigen::Vector3d& translation, const Eigen::Quaterniond& rotation)
      : translation_(translation), rotation_(rotation.normalized()) {}

  const Eigen::Vector3d& translation() const { return translation_; }
  const Eigen::Quaterniond& rotation() const { return rotation_; }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return rotation_ * p + translation_;
  }
  Eigen::Vector3d apply_inverse(const Eigen::Vector3d& p) const {
    return rotation_.conjugate() * (p - translation_);
  }

 private:
  Eigen::Vector3d translation_;
  Eigen::Quaterniond rotation_;
};

enum class Frame { Camera, Map };

struct PointCloud {
  std::vector<Eigen::Vector3d> points;
  Frame frame = Frame::Camera;
};

/// Row-major 16-bit depth samples in raw units; 0 marks an invalid pixel.
struct DepthImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint16_t> raw;

  std::uint16_t at(int u, int v) const { return raw[static_cast<std::size_t>(v) * width + u]; }
};

/// Lifts every stride-th valid pixel into a camera-frame point via the
/// pinhole equations. Points farther than max_range_m are dropped. Output
/// order is row-major over the sampled pixels.
PointCloud back_project(const DepthImage& depth, const CameraIntrinsics& k, int stride,
                        double max_range_m = 6.0);

/// Applies the camera-to-map pose to every point. The input must still be
/// in the camera frame.
PointCloud transform_cloud(const PointCloud& cloud, const Pose& pose);

/// Projects a map-frame point into the image of a camera at `pose`.
/// Returns pixel coordinates normalized to [0,1], or nullopt when the point
/// is behind the camera (Z <= 1e-6) or falls outside the image.
std::optional<Eigen::Vector2d> project_point(const Eigen::Vector3d& p_map, const Pose& pose,
                                             const CameraIntrinsics& k);

}  // namespace semgraph
