#include "semgraph/geometry.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

namespace semgraph {

void CameraIntrinsics::validate() const {
  if (fx <= 0.0 || fy <= 0.0) throw SchemaError("intrinsics: focal lengths must be positive");
  if (depth_scale <= 0.0) throw SchemaError("intrinsics: depth_scale must be positive");
  if (width <= 0 || height <= 0) throw SchemaError("intrinsics: image size must be positive");
  if (cx < 0.0 || cx >= width || cy < 0.0 || cy >= height)
    throw SchemaError("intrinsics: principal point outside the image");
}

CameraIntrinsics load_intrinsics(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataMissingError("cannot open intrinsics file: " + file.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("intrinsics file " + file.string() + ": " + e.what());
  }
  CameraIntrinsics k;
  try {
    k.fx = doc.at("fx").get<double>();
    k.fy = doc.at("fy").get<double>();
    k.cx = doc.at("cx").get<double>();
    k.cy = doc.at("cy").get<double>();
    k.width = doc.at("width").get<int>();
    k.height = doc.at("height").get<int>();
    k.depth_scale = doc.at("depth_scale").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("intrinsics file " + file.string() + ": " + e.what());
  }
  k.validate();
  return k;
}

PointCloud back_project(const DepthImage& depth, const CameraIntrinsics& k, int stride,
                        double max_range_m) {
  if (depth.width != k.width || depth.height != k.height)
    throw InputShapeError("depth image is " + std::to_string(depth.width) + "x" +
                          std::to_string(depth.height) + " but intrinsics expect " +
                          std::to_string(k.width) + "x" + std::to_string(k.height));
  if (static_cast<int>(depth.raw.size()) != depth.width * depth.height)
    throw InputShapeError("depth buffer length does not match width*height");
  if (stride < 1) throw InvalidOperationError("stride must be >= 1");

  PointCloud cloud;
  cloud.frame = Frame::Camera;
  const double max_sq = max_range_m * max_range_m;
  for (int v = 0; v < depth.height; v += stride) {
    for (int u = 0; u < depth.width; u += stride) {
      const std::uint16_t d = depth.at(u, v);
      if (d == 0) continue;
      const double z = d * k.depth_scale;
      const double x = (u - k.cx) * z / k.fx;
      const double y = (v - k.cy) * z / k.fy;
      if (x * x + y * y + z * z > max_sq) continue;
      cloud.points.emplace_back(x, y, z);
    }
  }
  return cloud;
}

PointCloud transform_cloud(const PointCloud& cloud, const Pose& pose) {
  if (cloud.frame != Frame::Camera)
    throw FrameMisuseError("transform_cloud expects a camera-frame cloud");
  PointCloud out;
  out.frame = Frame::Map;
  out.points.reserve(cloud.points.size());
  for (const auto& p : cloud.points) out.points.push_back(pose.apply(p));
  return out;
}

std::optional<Eigen::Vector2d> project_point(const Eigen::Vector3d& p_map, const Pose& pose,
                                             const CameraIntrinsics& k) {
  const Eigen::Vector3d p_cam = pose.apply_inverse(p_map);
  if (p_cam.z() <= 1e-6) return std::nullopt;
  const double u = k.fx * p_cam.x() / p_cam.z() + k.cx;
  const double v = k.fy * p_cam.y() / p_cam.z() + k.cy;
  if (u < 0.0 || u >= k.width || v < 0.0 || v >= k.height) return std::nullopt;
  return Eigen::Vector2d(u / k.width, v / k.height);
}

}  // namespace semgraph
