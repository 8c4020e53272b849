#include "mvsteg/lsb.hpp"

#include <string>

#include "mvsteg/error.hpp"
#include "mvsteg/formats/wav.hpp"

namespace mvsteg::lsb {

std::size_t lsb_capacity(std::size_t cover_size) {
  const std::size_t slots = cover_size / 8;
  return slots >= 4 ? slots - 4 : 0;
}

Bytes lsb_embed(ByteView cover, ByteView payload) {
  if (cover.size() / 8 < 4 || payload.size() > lsb_capacity(cover.size()) || payload.size() > UINT32_MAX)
    throw Error(Errc::InsufficientCapacity, "cover holds " + std::to_string(lsb_capacity(cover.size())) +
                                                " bytes, payload is " + std::to_string(payload.size()));
  Bytes message;
  message.reserve(payload.size() + 4);
  put_u32(message, static_cast<std::uint32_t>(payload.size()));
  message.insert(message.end(), payload.begin(), payload.end());

  Bytes stego(cover.begin(), cover.end());
  const Bits bits = bytes_to_bits(message);
  for (std::size_t i = 0; i < bits.size(); ++i)
    stego[i] = static_cast<std::uint8_t>((stego[i] & 0xFE) | bits[i]);
  return stego;
}

Bytes lsb_extract(ByteView stego) {
  if (stego.size() < 32) throw Error(Errc::CorruptPayload, "cover too short for a length prefix");
  std::uint64_t length = 0;
  for (std::size_t i = 0; i < 32; ++i) length = length << 1 | (stego[i] & 1u);
  if (length > lsb_capacity(stego.size()))
    throw Error(Errc::CorruptPayload, "declared length " + std::to_string(length) + " exceeds cover capacity");
  Bits bits(static_cast<std::size_t>(length) * 8);
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = stego[32 + i] & 1u;
  return bits_to_bytes(bits);
}

Bytes inject_append(ByteView wav, ByteView payload) {
  formats::read_wav(wav);  // reject non-WAV input
  Bytes out(wav.begin(), wav.end());
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Bytes extract_appended(ByteView wav) { return formats::read_wav(wav).trailing; }

}  // namespace mvsteg::lsb
