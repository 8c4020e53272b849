#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace mvsteg {

// 8-bit sample plane, rows = height, cols = width.
template <typename Scalar>
using PlaneT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Plane = PlaneT<std::uint8_t>;

// Planar 4:2:0 picture. Chroma planes are ceil(w/2) x ceil(h/2).
struct Frame {
  Plane y;
  Plane cb;
  Plane cr;
  std::int64_t pts = 0;

  int width() const { return static_cast<int>(y.cols()); }
  int height() const { return static_cast<int>(y.rows()); }

  static Frame filled(int width, int height, std::uint8_t value, std::int64_t pts = 0);

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.pts == b.pts && a.y == b.y && a.cb == b.cb && a.cr == b.cr;
  }
};

struct RawVideo {
  int width = 0;
  int height = 0;
  int fps_num = 25;
  int fps_den = 1;
  std::vector<Frame> frames;

  friend bool operator==(const RawVideo&, const RawVideo&) = default;
};

constexpr int chroma_extent(int luma_extent) { return (luma_extent + 1) / 2; }

// Sample counts for the raw formats.
constexpr std::int64_t luma_pixels(int width, int height) {
  return static_cast<std::int64_t>(width) * height;
}
constexpr std::int64_t yuv420_frame_bytes(int width, int height) {
  return luma_pixels(width, height) + 2 * luma_pixels(chroma_extent(width), chroma_extent(height));
}
constexpr std::int64_t rgb24_frame_bytes(int width, int height) { return 3 * luma_pixels(width, height); }

// Smallest multiple of 16 not less than extent.
constexpr int coded_extent(int extent) { return (extent + 15) / 16 * 16; }

// Throws Error(InvalidDims) / Error(ParseError) when the RawVideo invariants
// do not hold: shared dims, exact plane sizes, fps_den > 0, strictly
// increasing pts.
void validate(const RawVideo& video);

}  // namespace mvsteg
