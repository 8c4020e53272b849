#include "mvsteg/codec/motion.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "mvsteg/error.hpp"

namespace mvsteg::codec {
namespace {

Plane pad_plane(const Plane& src, int rows, int cols) {
  Plane out(rows, cols);
  const auto r0 = src.rows();
  const auto c0 = src.cols();
  out.topLeftCorner(r0, c0) = src;
  for (Eigen::Index c = c0; c < cols; ++c) out.col(c).head(r0) = src.col(c0 - 1);
  for (Eigen::Index r = r0; r < rows; ++r) out.row(r) = out.row(r0 - 1);
  return out;
}

// Candidate displacements for a search range, pre-sorted into tie-break
// order so that the first strictly-best SAD wins.
const std::vector<std::pair<int, int>>& candidate_order(int range) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::pair<int, int>>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(range);
  if (inserted) {
    auto& list = it->second;
    for (int dy = -range; dy <= range; ++dy)
      for (int dx = -range; dx <= range; ++dx) list.emplace_back(dx, dy);
    std::sort(list.begin(), list.end(), [](auto a, auto b) {
      return std::make_tuple(std::abs(a.first) + std::abs(a.second), a.second, a.first) <
             std::make_tuple(std::abs(b.first) + std::abs(b.second), b.second, b.first);
    });
  }
  return it->second;
}

template <int Rows>
std::int64_t partial_sad(const Plane& cur, const Plane& ref, int cx, int cy, int rx, int ry) {
  return (cur.template block<Rows, 16>(cy, cx).template cast<int>() - ref.template block<Rows, 16>(ry, rx).template cast<int>())
      .cwiseAbs()
      .sum();
}

template <int N, typename Out>
void fetch_clamped(const Plane& plane, int x0, int y0, Out& out) {
  const int max_x = static_cast<int>(plane.cols()) - 1;
  const int max_y = static_cast<int>(plane.rows()) - 1;
  if (x0 >= 0 && y0 >= 0 && x0 + N - 1 <= max_x && y0 + N - 1 <= max_y) {
    out = plane.template block<N, N>(y0, x0);
    return;
  }
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) out(r, c) = plane(std::clamp(y0 + r, 0, max_y), std::clamp(x0 + c, 0, max_x));
}

}  // namespace

std::vector<MacroblockOrigin> partition(int coded_width, int coded_height) {
  if (coded_width <= 0 || coded_height <= 0 || coded_width % kMacroblockSize != 0 ||
      coded_height % kMacroblockSize != 0)
    throw Error(Errc::InvalidDims, std::to_string(coded_width) + "x" + std::to_string(coded_height) +
                                       " is not a multiple of 16");
  std::vector<MacroblockOrigin> grid;
  grid.reserve(static_cast<std::size_t>(coded_width / 16) * static_cast<std::size_t>(coded_height / 16));
  for (int y = 0; y < coded_height; y += kMacroblockSize)
    for (int x = 0; x < coded_width; x += kMacroblockSize) grid.push_back({x, y});
  return grid;
}

Frame pad_frame(const Frame& frame, int coded_width, int coded_height) {
  if (coded_width < frame.width() || coded_height < frame.height())
    throw Error(Errc::InvalidDims, "coded size smaller than frame");
  Frame out;
  out.pts = frame.pts;
  out.y = pad_plane(frame.y, coded_height, coded_width);
  out.cb = pad_plane(frame.cb, coded_height / 2, coded_width / 2);
  out.cr = pad_plane(frame.cr, coded_height / 2, coded_width / 2);
  return out;
}

Frame crop_frame(const Frame& frame, int width, int height) {
  if (width > frame.width() || height > frame.height()) throw Error(Errc::InvalidDims, "crop larger than frame");
  Frame out;
  out.pts = frame.pts;
  out.y = frame.y.topLeftCorner(height, width);
  out.cb = frame.cb.topLeftCorner(chroma_extent(height), chroma_extent(width));
  out.cr = frame.cr.topLeftCorner(chroma_extent(height), chroma_extent(width));
  return out;
}

std::int64_t block_sad(const Plane& current, const Plane& reference, MacroblockOrigin o, int dx, int dy) {
  return partial_sad<16>(current, reference, o.x, o.y, o.x + dx, o.y + dy);
}

MotionDecision motion_estimate(const Plane& current, const Plane& reference, MacroblockOrigin origin,
                               const CodecParams& params) {
  const int max_x = static_cast<int>(reference.cols()) - kMacroblockSize;
  const int max_y = static_cast<int>(reference.rows()) - kMacroblockSize;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  int best_dx = 0;
  int best_dy = 0;
  for (auto [dx, dy] : candidate_order(params.search_range)) {
    const int rx = origin.x + dx;
    const int ry = origin.y + dy;
    if (rx < 0 || ry < 0 || rx > max_x || ry > max_y) continue;
    // Later candidates lose ties, so stop as soon as the partial sum reaches
    // the best so far.
    std::int64_t sad = 0;
    for (int row = 0; row < 16 && sad < best; row += 4)
      sad += partial_sad<4>(current, reference, origin.x, origin.y + row, rx, ry + row);
    if (sad < best) {
      best = sad;
      best_dx = dx;
      best_dy = dy;
    }
  }
  MotionDecision d;
  d.sad = best;
  d.mv = {best_dx * 4, best_dy * 4};
  d.mode = best > params.intra_sad_threshold ? MbMode::Intra : MbMode::Inter;
  return d;
}

Prediction motion_compensate(const Frame& reference, MotionVector mv, MacroblockOrigin origin) {
  const int px = mv.dx >> 2;
  const int py = mv.dy >> 2;
  Prediction p;
  fetch_clamped<16>(reference.y, origin.x + px, origin.y + py, p.y);
  fetch_clamped<8>(reference.cb, origin.x / 2 + px / 2, origin.y / 2 + py / 2, p.cb);
  fetch_clamped<8>(reference.cr, origin.x / 2 + px / 2, origin.y / 2 + py / 2, p.cr);
  return p;
}

Prediction intra_prediction() {
  Prediction p;
  p.y.setConstant(128);
  p.cb.setConstant(128);
  p.cr.setConstant(128);
  return p;
}

}  // namespace mvsteg::codec
