#pragma once

#include <optional>
#include <vector>

#include "mvsteg/codec/codec.hpp"
#include "mvsteg/stego/payload.hpp"

namespace mvsteg::stego {

using codec::CodecParams;
using formats::StegoContainer;

// The payload bit lives in bit 2 of the quarter-pel magnitude (the integer-pel
// LSB); the sign is kept, so -16 with bit 1 becomes -20.
int mv_embed_bit(int component, unsigned bit);
unsigned mv_extract_bit(int component);

struct EmbedOptions {
  std::optional<Encryption> encryption;
  std::optional<Bytes> audio;  // WAV passthrough block
};

// Frames `payload` and streams its bits through the encoder motion hook:
// P-frames in coded order, INTER macroblocks in raster order, the FIRST_*
// modes taking only the first INTER macroblock of each P-frame. COEFF mode
// defers to embed_coeff with post-quantisation embedding.
//
// Throws Error(InsufficientCapacity) naming bits placed and bits required.
StegoContainer embed(const RawVideo& video, ByteView payload, EmbedMode mode, const CodecParams& params,
                     const EmbedOptions& options = {});

struct Extraction {
  EmbedMode mode;
  PayloadFrame frame;
  Bytes plaintext;
};

// Tries every mode in order and returns the first whose channel carries a
// well-formed frame. Errors: NoPayloadFound, KeyRequired, CorruptPayload.
Extraction extract_detailed(const StegoContainer& container, const crypto::SymmetricKey* key = nullptr);
inline Bytes extract(const StegoContainer& container, const crypto::SymmetricKey* key = nullptr) {
  return extract_detailed(container, key).plaintext;
}

// Every bit the decoder can read from the channel of `mode`, in embed order.
Bits channel_bits(const StegoContainer& container, EmbedMode mode);

struct CapacityReport {
  EmbedMode mode = EmbedMode::AllMbX;
  std::uint64_t estimated_bits = 0;
  std::vector<std::uint64_t> per_frame_bits;  // one entry per frame, I-frames contribute 0
  // Always true: embedding perturbs vectors, hence later references and
  // mode decisions, so the real capacity can differ.
  bool approximate = true;
};

// Counting-only encode with unmodified vectors.
CapacityReport estimate_capacity(const RawVideo& video, const CodecParams& params, EmbedMode mode);

// Fraction of `sent` bits not reproduced at the same position in `received`;
// missing positions count as errors.
double bit_error_rate(std::span<const std::uint8_t> sent, std::span<const std::uint8_t> received);

}  // namespace mvsteg::stego
