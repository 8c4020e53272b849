#include "mvsteg/formats/wav.hpp"

#include <optional>
#include <string_view>

#include "mvsteg/error.hpp"

namespace mvsteg::formats {
namespace {

std::uint32_t le32(ByteView d, std::size_t at) {
  return static_cast<std::uint32_t>(d[at]) | static_cast<std::uint32_t>(d[at + 1]) << 8 |
         static_cast<std::uint32_t>(d[at + 2]) << 16 | static_cast<std::uint32_t>(d[at + 3]) << 24;
}

std::uint16_t le16(ByteView d, std::size_t at) {
  return static_cast<std::uint16_t>(d[at] | d[at + 1] << 8);
}

void put_le32(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_le16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

bool fourcc(ByteView d, std::size_t at, std::string_view tag) {
  return d.size() >= at + 4 && std::equal(tag.begin(), tag.end(), d.begin() + static_cast<std::ptrdiff_t>(at));
}

}  // namespace

WavFile read_wav(ByteView data) {
  if (!fourcc(data, 0, "RIFF") || !fourcc(data, 8, "WAVE"))
    throw Error(Errc::ParseError, "not a RIFF/WAVE file");

  WavFile wav;
  bool have_fmt = false;
  std::size_t pos = 12;
  while (true) {
    if (data.size() - pos < 8) throw Error(Errc::ParseError, "missing data chunk");
    const std::uint32_t size = le32(data, pos + 4);
    const std::size_t body = pos + 8;
    if (size > data.size() - body)
      throw Error(Errc::ParseError, "chunk length exceeds file size");
    if (fourcc(data, pos, "fmt ")) {
      if (size < 16) throw Error(Errc::ParseError, "fmt chunk too short");
      wav.format.audio_format = le16(data, body);
      wav.format.channels = le16(data, body + 2);
      wav.format.sample_rate = le32(data, body + 4);
      wav.format.byte_rate = le32(data, body + 8);
      wav.format.block_align = le16(data, body + 12);
      wav.format.bits_per_sample = le16(data, body + 14);
      wav.format.extension.assign(data.begin() + static_cast<std::ptrdiff_t>(body + 16),
                                  data.begin() + static_cast<std::ptrdiff_t>(body + size));
      have_fmt = true;
    } else if (fourcc(data, pos, "data")) {
      if (!have_fmt) throw Error(Errc::ParseError, "data chunk before fmt chunk");
      const auto first = data.begin() + static_cast<std::ptrdiff_t>(body);
      wav.samples.assign(first, first + size);
      wav.trailing.assign(first + size, data.end());
      return wav;
    }
    pos = body + size + (size & 1u);
    if (pos > data.size()) throw Error(Errc::ParseError, "missing data chunk");
  }
}

Bytes write_wav(const WavFile& wav) {
  const auto fmt_size = static_cast<std::uint32_t>(16 + wav.format.extension.size());
  const auto data_size = static_cast<std::uint32_t>(wav.samples.size());
  const std::uint32_t fmt_pad = fmt_size & 1u;
  Bytes out;
  out.reserve(28 + fmt_size + data_size + wav.trailing.size());
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_le32(out, 4 + 8 + fmt_size + fmt_pad + 8 + data_size);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  put_le32(out, fmt_size);
  put_le16(out, wav.format.audio_format);
  put_le16(out, wav.format.channels);
  put_le32(out, wav.format.sample_rate);
  put_le32(out, wav.format.byte_rate);
  put_le16(out, wav.format.block_align);
  put_le16(out, wav.format.bits_per_sample);
  out.insert(out.end(), wav.format.extension.begin(), wav.format.extension.end());
  if (fmt_pad) out.push_back(0);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_le32(out, data_size);
  out.insert(out.end(), wav.samples.begin(), wav.samples.end());
  out.insert(out.end(), wav.trailing.begin(), wav.trailing.end());
  return out;
}

}  // namespace mvsteg::formats
