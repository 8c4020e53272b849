#include "mvsteg/analysis/quality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mvsteg/error.hpp"

namespace mvsteg::analysis {

double psnr(const Plane& a, const Plane& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::InvalidDims, "plane sizes differ");
  if (a.size() == 0) throw Error(Errc::InvalidDims, "empty plane");
  const double mse = (a.cast<double>() - b.cast<double>()).array().square().mean();
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

FramePsnr psnr(const Frame& a, const Frame& b) { return {psnr(a.y, b.y), psnr(a.cb, b.cb), psnr(a.cr, b.cr)}; }

double mean_luma_psnr(const RawVideo& a, const RawVideo& b, double cap) {
  if (a.frames.size() != b.frames.size() || a.frames.empty())
    throw Error(Errc::InvalidDims, "videos differ in frame count");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.frames.size(); ++i) sum += std::min(cap, psnr(a.frames[i].y, b.frames[i].y));
  return sum / static_cast<double>(a.frames.size());
}

}  // namespace mvsteg::analysis
