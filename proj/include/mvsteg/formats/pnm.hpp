#pragma once

#include "mvsteg/bytes.hpp"

namespace mvsteg::formats {

struct PnmImage {
  int width = 0;
  int height = 0;
  int channels = 1;  // 1 = P5 (PGM), 3 = P6 (PPM)
  Bytes pixels;      // row-major, interleaved for 3 channels

  friend bool operator==(const PnmImage&, const PnmImage&) = default;
};

// Binary P5/P6 with maxval 255 only; ASCII variants and 16-bit maxvals throw
// Error(Unsupported).
PnmImage read_pnm(ByteView data);
Bytes write_pnm(const PnmImage& image);

}  // namespace mvsteg::formats
