#pragma once

#include <optional>

#include "mvsteg/codec/codec.hpp"
#include "mvsteg/stego/embed.hpp"

namespace mvsteg::stego {

// Index into the zigzag scan of the first nonzero AC level, if any.
std::optional<int> first_nonzero_ac(const codec::LevelBlock& levels);

// Parity carrier: the LSB of |level| takes `bit`; a result of 0 becomes 2 so
// the level stays nonzero and the position stays first.
int embed_level_bit(int level, unsigned bit);

// Embeds in the first nonzero AC level of luma block Y00 of each INTER
// macroblock. With pre_quant the bit is instead written into the raw DCT
// coefficient, so quantisation is free to destroy it.
StegoContainer embed_coeff(const RawVideo& video, ByteView payload, const CodecParams& params, bool pre_quant,
                           const EmbedOptions& options = {});

// Lower level: push raw channel bits (already framed) through the coefficient
// channel. Returns the number of bits placed.
std::size_t embed_coeff_bits(const RawVideo& video, std::span<const std::uint8_t> bits, const CodecParams& params,
                             bool pre_quant, StegoContainer& out);

}  // namespace mvsteg::stego
