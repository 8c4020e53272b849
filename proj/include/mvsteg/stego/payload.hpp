#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "mvsteg/bytes.hpp"
#include "mvsteg/crypto.hpp"

namespace mvsteg::stego {

enum class EmbedMode : std::uint8_t {
  FirstMbX = 0,
  FirstMbY = 1,
  AllMbX = 2,
  AllMbY = 3,
  Coeff = 4,
};

inline constexpr EmbedMode kAllModes[] = {EmbedMode::FirstMbX, EmbedMode::FirstMbY, EmbedMode::AllMbX,
                                          EmbedMode::AllMbY, EmbedMode::Coeff};

std::string_view to_string(EmbedMode mode);
// Accepts first-mb-x, first-mb-y, all-mb-x, all-mb-y, coeff.
std::optional<EmbedMode> parse_embed_mode(std::string_view name);

inline constexpr std::uint8_t kPayloadMagic[2] = {0x53, 0x54};
inline constexpr std::uint8_t kPayloadEncrypted = 0x01;
// Bit 1 is reserved for a future repetition code.
inline constexpr std::size_t kPayloadHeaderBytes = 9;    // magic, version, flags, mode, length
inline constexpr std::size_t kPayloadOverheadBytes = 13;  // header + crc32, no nonce

// Wire layout, big-endian: magic(2) version(1) flags(1) mode(1) length(4)
// [nonce(16) if encrypted] body(length) crc32(4).
//
// The crc covers the plaintext body, so a wrong key is detected after
// decryption.
struct PayloadFrame {
  std::uint8_t version = 1;
  std::uint8_t flags = 0;
  EmbedMode mode = EmbedMode::AllMbX;
  std::optional<crypto::Nonce> nonce;
  Bytes body;  // ciphertext when encrypted
  std::uint32_t crc = 0;

  bool encrypted() const { return (flags & kPayloadEncrypted) != 0; }
  std::size_t wire_size() const { return kPayloadOverheadBytes + (nonce ? 16 : 0) + body.size(); }

  friend bool operator==(const PayloadFrame&, const PayloadFrame&) = default;
};

struct Encryption {
  crypto::SymmetricKey key;
  crypto::Nonce nonce;
};

// Builds the frame for `plain`, encrypting with AES-CTR when `encryption` is set.
PayloadFrame seal_payload(ByteView plain, EmbedMode mode, const std::optional<Encryption>& encryption = {});

Bytes serialize_payload(const PayloadFrame& frame);
inline Bits frame_payload(const PayloadFrame& frame) { return bytes_to_bits(serialize_payload(frame)); }

// Parses one frame from the front of `bits` (MSB-first). Throws
// NoPayloadFound (bad magic/version, or the declared length runs past the
// available bits) and, for unencrypted frames, CorruptPayload on crc mismatch.
PayloadFrame parse_payload(std::span<const std::uint8_t> bits);

// Recovers the plaintext. KeyRequired when encrypted and no key is given;
// CorruptPayload when the crc does not match the (decrypted) body.
Bytes open_payload(const PayloadFrame& frame, const crypto::SymmetricKey* key = nullptr);

}  // namespace mvsteg::stego
