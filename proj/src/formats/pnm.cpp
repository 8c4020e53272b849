#include "mvsteg/formats/pnm.hpp"

#include <cctype>
#include <string>

#include "mvsteg/error.hpp"

namespace mvsteg::formats {
namespace {

void skip_space_and_comments(ByteView d, std::size_t& pos) {
  while (pos < d.size()) {
    if (d[pos] == '#') {
      while (pos < d.size() && d[pos] != '\n') ++pos;
    } else if (std::isspace(d[pos])) {
      ++pos;
    } else {
      return;
    }
  }
}

int header_int(ByteView d, std::size_t& pos) {
  skip_space_and_comments(d, pos);
  if (pos >= d.size() || !std::isdigit(d[pos])) throw Error(Errc::ParseError, "bad PNM header field");
  long value = 0;
  while (pos < d.size() && std::isdigit(d[pos])) {
    value = value * 10 + (d[pos++] - '0');
    if (value > 1 << 24) throw Error(Errc::ParseError, "PNM header value too large");
  }
  return static_cast<int>(value);
}

}  // namespace

PnmImage read_pnm(ByteView data) {
  if (data.size() < 2 || data[0] != 'P') throw Error(Errc::ParseError, "not a PNM file");
  PnmImage img;
  switch (data[1]) {
    case '5': img.channels = 1; break;
    case '6': img.channels = 3; break;
    case '1': case '2': case '3': case '4':
      throw Error(Errc::Unsupported, "only binary P5/P6 images are supported");
    default:
      throw Error(Errc::ParseError, "unknown PNM magic");
  }
  std::size_t pos = 2;
  img.width = header_int(data, pos);
  img.height = header_int(data, pos);
  const int maxval = header_int(data, pos);
  if (maxval != 255) throw Error(Errc::Unsupported, "maxval " + std::to_string(maxval));
  if (img.width <= 0 || img.height <= 0) throw Error(Errc::ParseError, "bad PNM dimensions");
  if (pos >= data.size() || !std::isspace(data[pos])) throw Error(Errc::TruncatedInput, "PNM header not terminated");
  ++pos;
  const auto n = static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height) *
                 static_cast<std::size_t>(img.channels);
  if (data.size() - pos < n) throw Error(Errc::TruncatedInput, "PNM pixel data cut short");
  img.pixels.assign(data.begin() + static_cast<std::ptrdiff_t>(pos),
                    data.begin() + static_cast<std::ptrdiff_t>(pos + n));
  return img;
}

Bytes write_pnm(const PnmImage& image) {
  if (image.channels != 1 && image.channels != 3) throw Error(Errc::Unsupported, "PNM channels must be 1 or 3");
  const auto n = static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height) *
                 static_cast<std::size_t>(image.channels);
  if (image.width <= 0 || image.height <= 0 || image.pixels.size() != n)
    throw Error(Errc::InvalidDims, "pixel buffer does not match PNM dimensions");
  const std::string header = std::string(image.channels == 1 ? "P5" : "P6") + "\n" +
                             std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  Bytes out(header.begin(), header.end());
  out.insert(out.end(), image.pixels.begin(), image.pixels.end());
  return out;
}

}  // namespace mvsteg::formats
