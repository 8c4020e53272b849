#include "mvsteg/stego/coeff.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "mvsteg/codec/transform.hpp"
#include "mvsteg/error.hpp"

namespace mvsteg::stego {

std::optional<int> first_nonzero_ac(const codec::LevelBlock& levels) {
  for (int i = 1; i < 64; ++i)
    if (levels(codec::kZigzag[i]) != 0) return i;
  return std::nullopt;
}

int embed_level_bit(int level, unsigned bit) {
  int magnitude = (std::abs(level) & ~1) | static_cast<int>(bit & 1u);
  if (magnitude == 0) magnitude = 2;
  return level < 0 ? -magnitude : magnitude;
}

std::size_t embed_coeff_bits(const RawVideo& video, std::span<const std::uint8_t> bits, const CodecParams& params,
                             bool pre_quant, StegoContainer& out) {
  std::size_t next = 0;
  codec::EncoderHooks hooks;
  if (pre_quant) {
    // Writes into the integer part of the first AC coefficient that would
    // round to a nonzero integer; the quantiser then does what it likes.
    hooks.on_coefficients = [&](const codec::MacroblockContext&, codec::Block8<double>& coeffs) {
      if (next >= bits.size()) return;
      for (int i = 1; i < 64; ++i) {
        double& c = coeffs(codec::kZigzag[i]);
        const long rounded = std::lround(c);
        if (rounded == 0) continue;
        c = static_cast<double>(embed_level_bit(static_cast<int>(rounded), bits[next++]));
        return;
      }
    };
  } else {
    hooks.on_levels = [&](const codec::MacroblockContext&, codec::LevelBlock& levels) {
      if (next >= bits.size()) return;
      if (auto pos = first_nonzero_ac(levels)) {
        int& level = levels(codec::kZigzag[*pos]);
        level = embed_level_bit(level, bits[next++]);
      }
    };
  }
  out = codec::encode_video(video, params, hooks);
  return next;
}

StegoContainer embed_coeff(const RawVideo& video, ByteView payload, const CodecParams& params, bool pre_quant,
                           const EmbedOptions& options) {
  const Bits bits = frame_payload(seal_payload(payload, EmbedMode::Coeff, options.encryption));
  StegoContainer out;
  const std::size_t placed = embed_coeff_bits(video, bits, params, pre_quant, out);
  if (placed < bits.size())
    throw Error(Errc::InsufficientCapacity,
                "placed " + std::to_string(placed) + " of " + std::to_string(bits.size()) + " payload bits");
  out.audio = options.audio;
  return out;
}

}  // namespace mvsteg::stego
