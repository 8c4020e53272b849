#include "mvsteg/formats/video.hpp"

#include <string>

#include "mvsteg/error.hpp"

namespace mvsteg {

Frame Frame::filled(int width, int height, std::uint8_t value, std::int64_t pts) {
  Frame f;
  f.y = Plane::Constant(height, width, value);
  f.cb = Plane::Constant(chroma_extent(height), chroma_extent(width), value);
  f.cr = f.cb;
  f.pts = pts;
  return f;
}

void validate(const RawVideo& video) {
  if (video.width <= 0 || video.height <= 0)
    throw Error(Errc::InvalidDims, "non-positive frame size");
  if (video.fps_num <= 0 || video.fps_den <= 0) throw Error(Errc::ParseError, "invalid frame rate");
  const int cw = chroma_extent(video.width);
  const int ch = chroma_extent(video.height);
  for (std::size_t i = 0; i < video.frames.size(); ++i) {
    const Frame& f = video.frames[i];
    if (f.y.cols() != video.width || f.y.rows() != video.height || f.cb.cols() != cw ||
        f.cb.rows() != ch || f.cr.cols() != cw || f.cr.rows() != ch)
      throw Error(Errc::InvalidDims, "frame " + std::to_string(i) + " plane sizes do not match");
    if (i > 0 && f.pts <= video.frames[i - 1].pts)
      throw Error(Errc::ParseError, "pts not strictly increasing at frame " + std::to_string(i));
  }
}

}  // namespace mvsteg
