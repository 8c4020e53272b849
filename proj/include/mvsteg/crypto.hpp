#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mvsteg/bytes.hpp"

// AES (FIPS-197) with a counter mode. Not constant-time: table lookups are
// indexed by secret data.
namespace mvsteg::crypto {

using Block = std::array<std::uint8_t, 16>;
using Nonce = Block;

class SymmetricKey {
 public:
  // Throws Error(InvalidKey) unless the key is 16, 24 or 32 bytes.
  explicit SymmetricKey(ByteView bytes);
  static SymmetricKey from_hex(std::string_view hex);

  ByteView bytes() const { return bytes_; }
  int rounds() const { return static_cast<int>(bytes_.size()) / 4 + 6; }

 private:
  Bytes bytes_;
};

struct RoundKeySchedule {
  int rounds = 0;
  std::vector<std::uint32_t> words;  // 4 * (rounds + 1)
};

RoundKeySchedule expand_key(const SymmetricKey& key);

Block encrypt_block(const RoundKeySchedule& schedule, const Block& plaintext);
Block decrypt_block(const RoundKeySchedule& schedule, const Block& ciphertext);

// Keystream block i is encrypt_block(nonce + i), the addition carried over
// the last 8 bytes as a big-endian counter. Self-inverse.
Bytes ctr_transform(const SymmetricKey& key, const Nonce& nonce, ByteView data);

// 16 bytes from std::random_device.
Nonce random_nonce();
// Throws Error(ParseError) unless hex is exactly 32 hex digits.
Nonce nonce_from_hex(std::string_view hex);

}  // namespace mvsteg::crypto
