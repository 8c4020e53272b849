#include "mvsteg/formats/container.hpp"

#include <algorithm>
#include <string>

#include "mvsteg/error.hpp"
#include "mvsteg/formats/video.hpp"

namespace mvsteg::formats {

void validate(const StegoContainer& c) {
  const ContainerHeader& h = c.header;
  if (h.display_width == 0 || h.display_height == 0)
    throw Error(Errc::CorruptContainer, "zero display dimensions");
  if (h.coded_width != coded_extent(h.display_width) || h.coded_height != coded_extent(h.display_height))
    throw Error(Errc::CorruptContainer, "coded dims are not display dims rounded up to 16");
  if (h.fps_num == 0 || h.fps_den == 0) throw Error(Errc::CorruptContainer, "zero frame rate term");
  if (h.gop_size == 0) throw Error(Errc::CorruptContainer, "gop_size is zero");
  if (h.qp < 1 || h.qp > 63) throw Error(Errc::CorruptContainer, "qp outside 1..63");
  if (c.audio && c.audio->empty()) throw Error(Errc::CorruptContainer, "audio flag set with empty audio block");
  for (std::size_t i = 0; i < c.frames.size(); ++i) {
    const EncodedFrame& f = c.frames[i];
    if (i > 0 && f.pts <= c.frames[i - 1].pts)
      throw Error(Errc::CorruptContainer, "pts not strictly increasing at frame " + std::to_string(i));
    if (f.pts % h.gop_size == 0 && f.type != FrameType::I)
      throw Error(Errc::CorruptContainer, "frame " + std::to_string(i) + " must be an I-frame");
  }
  if (!c.frames.empty() && c.frames.front().type != FrameType::I)
    throw Error(Errc::CorruptContainer, "first frame is not an I-frame");
}

Bytes write_container(const StegoContainer& c) {
  validate(c);
  const ContainerHeader& h = c.header;
  Bytes out(std::begin(kContainerMagic), std::end(kContainerMagic));
  put_u8(out, h.version);
  put_u8(out, c.audio ? kFlagAudio : 0);
  put_u16(out, h.display_width);
  put_u16(out, h.display_height);
  put_u16(out, h.coded_width);
  put_u16(out, h.coded_height);
  put_u16(out, h.fps_num);
  put_u16(out, h.fps_den);
  put_u8(out, h.gop_size);
  put_u8(out, h.qp);
  put_u32(out, static_cast<std::uint32_t>(c.frames.size()));
  if (c.audio) {
    put_u32(out, static_cast<std::uint32_t>(c.audio->size()));
    out.insert(out.end(), c.audio->begin(), c.audio->end());
  }
  for (const EncodedFrame& f : c.frames) {
    put_u8(out, static_cast<std::uint8_t>(f.type));
    put_u32(out, f.pts);
    put_u32(out, static_cast<std::uint32_t>(f.data.size()));
    out.insert(out.end(), f.data.begin(), f.data.end());
  }
  return out;
}

StegoContainer read_container(ByteView data) {
  if (data.size() < 4 || !std::equal(std::begin(kContainerMagic), std::end(kContainerMagic), data.begin()))
    throw Error(Errc::NotAStegoContainer, "bad magic");
  StegoContainer c;
  try {
    ByteReader r(data.subspan(4));
    c.header.version = r.u8();
    if (c.header.version != 1)
      throw Error(Errc::Unsupported, "container version " + std::to_string(c.header.version));
    const std::uint8_t flags = r.u8();
    if (flags & ~kFlagAudio) throw Error(Errc::CorruptContainer, "unknown flag bits");
    c.header.display_width = r.u16();
    c.header.display_height = r.u16();
    c.header.coded_width = r.u16();
    c.header.coded_height = r.u16();
    c.header.fps_num = r.u16();
    c.header.fps_den = r.u16();
    c.header.gop_size = r.u8();
    c.header.qp = r.u8();
    const std::uint32_t frame_count = r.u32();
    if (flags & kFlagAudio) {
      const std::uint32_t len = r.u32();
      if (len == 0) throw Error(Errc::CorruptContainer, "audio flag set with empty audio block");
      const ByteView audio = r.take(len);
      c.audio = Bytes(audio.begin(), audio.end());
    }
    // Each frame record is at least 9 bytes; reject absurd counts up front.
    if (frame_count > r.remaining() / 9)
      throw Error(Errc::CorruptContainer, "frame_count exceeds available records");
    c.frames.reserve(frame_count);
    for (std::uint32_t i = 0; i < frame_count; ++i) {
      EncodedFrame f;
      const std::uint8_t type = r.u8();
      if (type > 1) throw Error(Errc::CorruptContainer, "unknown frame type");
      f.type = static_cast<FrameType>(type);
      f.pts = r.u32();
      const ByteView payload = r.take(r.u32());
      f.data.assign(payload.begin(), payload.end());
      c.frames.push_back(std::move(f));
    }
    if (r.remaining() != 0) throw Error(Errc::CorruptContainer, "bytes after the declared frame records");
  } catch (const Error& e) {
    if (e.code() == Errc::TruncatedInput) throw Error(Errc::CorruptContainer, "frame_count mismatch: records truncated");
    throw;
  }
  validate(c);
  return c;
}

}  // namespace mvsteg::formats
