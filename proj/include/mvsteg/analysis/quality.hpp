#pragma once

#include "mvsteg/formats/video.hpp"

namespace mvsteg::analysis {

struct FramePsnr {
  double y = 0;
  double cb = 0;
  double cr = 0;
};

// 10 log10(255^2 / MSE); identical planes give +infinity.
// Throws Error(InvalidDims) when the planes differ in size.
double psnr(const Plane& a, const Plane& b);
FramePsnr psnr(const Frame& a, const Frame& b);

// Mean per-frame luma PSNR; infinite frames are capped at `cap` dB so the
// mean stays finite. Throws InvalidDims on differing frame counts.
double mean_luma_psnr(const RawVideo& a, const RawVideo& b, double cap = 99.0);

}  // namespace mvsteg::analysis
