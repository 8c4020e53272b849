#pragma once

#include <vector>

#include "mvsteg/codec/types.hpp"
#include "mvsteg/formats/video.hpp"

namespace mvsteg::codec {

struct MacroblockOrigin {
  int x = 0;  // luma sample column of the top-left corner
  int y = 0;

  friend bool operator==(const MacroblockOrigin&, const MacroblockOrigin&) = default;
};

// Raster-order macroblock origins. Throws Error(InvalidDims) unless both
// dims are positive multiples of 16.
std::vector<MacroblockOrigin> partition(int coded_width, int coded_height);

// Edge-replicates every plane out to the coded size (chroma to half of it).
Frame pad_frame(const Frame& frame, int coded_width, int coded_height);
Frame crop_frame(const Frame& frame, int width, int height);

// Full integer-pel search over [-range, range]^2 with candidate windows kept
// inside the plane. Ties go to the smaller |dx|+|dy|, then smaller dy, then
// smaller dx. Intra when the best SAD exceeds the threshold.
MotionDecision motion_estimate(const Plane& current, const Plane& reference, MacroblockOrigin origin,
                               const CodecParams& params);

std::int64_t block_sad(const Plane& current, const Plane& reference, MacroblockOrigin origin, int dx, int dy);

struct Prediction {
  Eigen::Matrix<std::uint8_t, 16, 16, Eigen::RowMajor> y;
  Eigen::Matrix<std::uint8_t, 8, 8, Eigen::RowMajor> cb;
  Eigen::Matrix<std::uint8_t, 8, 8, Eigen::RowMajor> cr;
};

// Luma moves by (dx >> 2, dy >> 2) pels, chroma by half of that rounded
// toward zero. Reads outside the plane clamp to the nearest edge sample.
Prediction motion_compensate(const Frame& reference, MotionVector mv, MacroblockOrigin origin);

// Flat 128 predictor used by intra blocks.
Prediction intra_prediction();

}  // namespace mvsteg::codec
