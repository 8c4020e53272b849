#include "mvsteg/formats/y4m.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <string>
#include <string_view>

#include "mvsteg/error.hpp"

namespace mvsteg::formats {
namespace {

constexpr std::string_view kSignature = "YUV4MPEG2";
constexpr std::string_view kFrameMarker = "FRAME";

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(Errc::ParseError, "bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

// Returns the line starting at pos (without '\n') and advances pos past it.
std::string_view take_line(ByteView data, std::size_t& pos, Errc missing) {
  const auto* begin = data.data() + pos;
  const auto* end = data.data() + data.size();
  const auto* nl = std::find(begin, end, std::uint8_t{'\n'});
  if (nl == end) throw Error(missing, "unterminated Y4M header line");
  pos += static_cast<std::size_t>(nl - begin) + 1;
  return {reinterpret_cast<const char*>(begin), static_cast<std::size_t>(nl - begin)};
}

void read_plane(ByteView data, std::size_t& pos, Plane& plane, int w, int h) {
  const auto n = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  if (data.size() - pos < n) throw Error(Errc::TruncatedInput, "Y4M frame payload cut short");
  plane.resize(h, w);
  std::memcpy(plane.data(), data.data() + pos, n);
  pos += n;
}

void append_plane(Bytes& out, const Plane& plane) {
  out.insert(out.end(), plane.data(), plane.data() + plane.size());
}

}  // namespace

RawVideo read_y4m(ByteView data) {
  std::size_t pos = 0;
  const std::string_view header = take_line(data, pos, Errc::ParseError);
  if (!header.starts_with(kSignature) ||
      (header.size() > kSignature.size() && header[kSignature.size()] != ' '))
    throw Error(Errc::ParseError, "missing YUV4MPEG2 signature");

  RawVideo video;
  bool have_w = false;
  bool have_h = false;
  std::size_t i = kSignature.size();
  while (i < header.size()) {
    while (i < header.size() && header[i] == ' ') ++i;
    if (i >= header.size()) break;
    std::size_t j = header.find(' ', i);
    if (j == std::string_view::npos) j = header.size();
    const std::string_view tag = header.substr(i, j - i);
    const std::string_view value = tag.substr(1);
    switch (tag[0]) {
      case 'W':
        video.width = parse_int(value, "width");
        have_w = true;
        break;
      case 'H':
        video.height = parse_int(value, "height");
        have_h = true;
        break;
      case 'F': {
        const auto colon = value.find(':');
        if (colon == std::string_view::npos) throw Error(Errc::ParseError, "bad frame rate tag");
        video.fps_num = parse_int(value.substr(0, colon), "fps numerator");
        video.fps_den = parse_int(value.substr(colon + 1), "fps denominator");
        break;
      }
      case 'C':
        if (value != "420" && value != "420jpeg" && value != "420paldv" && value != "420mpeg2")
          throw Error(Errc::Unsupported, "colourspace C" + std::string(value));
        break;
      default:
        // I (interlace), A (aspect), X (extension) carry nothing we use.
        break;
    }
    i = j;
  }
  if (!have_w || !have_h || video.width <= 0 || video.height <= 0)
    throw Error(Errc::ParseError, "missing or invalid W/H");
  if (video.fps_num <= 0 || video.fps_den <= 0) throw Error(Errc::ParseError, "invalid frame rate");

  const int cw = chroma_extent(video.width);
  const int ch = chroma_extent(video.height);
  while (pos < data.size()) {
    const std::string_view marker = take_line(data, pos, Errc::TruncatedInput);
    if (!marker.starts_with(kFrameMarker)) throw Error(Errc::ParseError, "expected FRAME marker");
    Frame f;
    f.pts = static_cast<std::int64_t>(video.frames.size());
    read_plane(data, pos, f.y, video.width, video.height);
    read_plane(data, pos, f.cb, cw, ch);
    read_plane(data, pos, f.cr, cw, ch);
    video.frames.push_back(std::move(f));
  }
  return video;
}

Bytes write_y4m(const RawVideo& video) {
  if (video.frames.empty()) throw Error(Errc::EmptyInput, "no frames to write");
  validate(video);
  const std::string header = std::string(kSignature) + " W" + std::to_string(video.width) + " H" +
                             std::to_string(video.height) + " F" + std::to_string(video.fps_num) +
                             ":" + std::to_string(video.fps_den) + " Ip A0:0 C420jpeg\n";
  Bytes out(header.begin(), header.end());
  out.reserve(out.size() + video.frames.size() *
                               (6 + static_cast<std::size_t>(yuv420_frame_bytes(video.width, video.height))));
  for (const Frame& f : video.frames) {
    out.insert(out.end(), kFrameMarker.begin(), kFrameMarker.end());
    out.push_back('\n');
    append_plane(out, f.y);
    append_plane(out, f.cb);
    append_plane(out, f.cr);
  }
  return out;
}

}  // namespace mvsteg::formats
