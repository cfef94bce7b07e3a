#pragma once

#include <filesystem>

#include "semgraph/geometry.hpp"

namespace semgraph {

/// Reads a 16-bit single-channel PNG into a DepthImage (raw units).
DepthImage read_depth_png(const std::filesystem::path& file);

/// Writes a DepthImage as a 16-bit grayscale PNG.
void write_depth_png(const std::filesystem::path& file, const DepthImage& depth);

}  // namespace semgraph
