#include "semgraph/depth_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>
#include <vector>

namespace semgraph {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

DepthImage read_depth_png(const std::filesystem::path& file) {
  FilePtr fp(std::fopen(file.string().c_str(), "rb"));
  if (!fp) throw DataMissingError("cannot open depth image: " + file.string());

  png_byte header[8];
  if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8))
    throw ParseError("not a PNG file: " + file.string());

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ParseError("corrupt PNG file: " + file.string());
  }

  png_init_io(png, fp.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  const int color_type = png_get_color_type(png, info);

  if (bit_depth != 16 || color_type != PNG_COLOR_TYPE_GRAY) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ParseError("depth image must be 16-bit grayscale PNG: " + file.string());
  }

  // PNG stores 16-bit samples big-endian; flip on little-endian hosts.
  const std::uint16_t probe = 1;
  if (*reinterpret_cast<const std::uint8_t*>(&probe) == 1) png_set_swap(png);

  DepthImage img;
  img.width = static_cast<int>(width);
  img.height = static_cast<int>(height);
  img.raw.resize(static_cast<std::size_t>(width) * height);

  std::vector<png_bytep> rows(height);
  for (png_uint_32 y = 0; y < height; ++y)
    rows[y] = reinterpret_cast<png_bytep>(img.raw.data() + static_cast<std::size_t>(y) * width);
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

void write_depth_png(const std::filesystem::path& file, const DepthImage& depth) {
  if (static_cast<int>(depth.raw.size()) != depth.width * depth.height)
    throw InputShapeError("depth buffer length does not match width*height");

  FilePtr fp(std::fopen(file.string().c_str(), "wb"));
  if (!fp) throw IoError("cannot open for writing: " + file.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG write failed: " + file.string());
  }

  png_init_io(png, fp.get());
  png_set_IHDR(png, info, depth.width, depth.height, 16, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  const std::uint16_t probe = 1;
  if (*reinterpret_cast<const std::uint8_t*>(&probe) == 1) png_set_swap(png);

  std::vector<png_bytep> rows(depth.height);
  for (int y = 0; y < depth.height; ++y)
    rows[y] = reinterpret_cast<png_bytep>(
        const_cast<std::uint16_t*>(depth.raw.data() + static_cast<std::size_t>(y) * depth.width));
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace semgraph
