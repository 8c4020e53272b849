#include "mvsteg/crypto.hpp"

#include <random>

#include "mvsteg/error.hpp"

namespace mvsteg::crypto {
namespace {

constexpr std::uint8_t xtime(std::uint8_t x) {
  return static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1b : 0x00));
}

constexpr std::uint8_t gmul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t p = 0;
  while (b) {
    if (b & 1) p ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return p;
}

// S-box from the multiplicative inverse in GF(2^8) followed by the affine map.
struct SBoxes {
  std::array<std::uint8_t, 256> forward{};
  std::array<std::uint8_t, 256> inverse{};

  constexpr SBoxes() {
    for (int i = 0; i < 256; ++i) {
      std::uint8_t inv = 0;
      if (i != 0) {
        for (int j = 1; j < 256; ++j) {
          if (gmul(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)) == 1) {
            inv = static_cast<std::uint8_t>(j);
            break;
          }
        }
      }
      std::uint8_t s = inv;
      for (int k = 1; k <= 4; ++k) s ^= static_cast<std::uint8_t>((inv << k) | (inv >> (8 - k)));
      s ^= 0x63;
      forward[i] = s;
      inverse[s] = static_cast<std::uint8_t>(i);
    }
  }
};

const SBoxes& sboxes() {
  static const SBoxes boxes;
  return boxes;
}

std::uint32_t sub_word(std::uint32_t w) {
  const auto& s = sboxes().forward;
  return static_cast<std::uint32_t>(s[w >> 24]) << 24 | static_cast<std::uint32_t>(s[(w >> 16) & 0xff]) << 16 |
         static_cast<std::uint32_t>(s[(w >> 8) & 0xff]) << 8 | s[w & 0xff];
}

std::uint32_t rot_word(std::uint32_t w) { return w << 8 | w >> 24; }

// State is column-major as in FIPS-197: state[r + 4c] = in[r + 4c].
using State = Block;

void add_round_key(State& s, const RoundKeySchedule& ks, int round) {
  for (int c = 0; c < 4; ++c) {
    const std::uint32_t w = ks.words[static_cast<std::size_t>(4 * round + c)];
    for (int r = 0; r < 4; ++r) s[4 * c + r] ^= static_cast<std::uint8_t>(w >> (24 - 8 * r));
  }
}

void sub_bytes(State& s, const std::array<std::uint8_t, 256>& box) {
  for (auto& b : s) b = box[b];
}

void shift_rows(State& s, bool inverse) {
  State t = s;
  for (int r = 1; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const int src = inverse ? (c - r + 4) % 4 : (c + r) % 4;
      s[4 * c + r] = t[4 * src + r];
    }
}

void mix_columns(State& s, bool inverse) {
  const std::uint8_t m[4] = {static_cast<std::uint8_t>(inverse ? 0x0e : 0x02),
                             static_cast<std::uint8_t>(inverse ? 0x0b : 0x03),
                             static_cast<std::uint8_t>(inverse ? 0x0d : 0x01),
                             static_cast<std::uint8_t>(inverse ? 0x09 : 0x01)};
  for (int c = 0; c < 4; ++c) {
    std::uint8_t col[4];
    for (int r = 0; r < 4; ++r) col[r] = s[4 * c + r];
    for (int r = 0; r < 4; ++r)
      s[4 * c + r] = gmul(m[0], col[r]) ^ gmul(m[1], col[(r + 1) % 4]) ^ gmul(m[2], col[(r + 2) % 4]) ^
                     gmul(m[3], col[(r + 3) % 4]);
  }
}

}  // namespace

SymmetricKey::SymmetricKey(ByteView bytes) : bytes_(bytes.begin(), bytes.end()) {
  if (bytes_.size() != 16 && bytes_.size() != 24 && bytes_.size() != 32)
    throw Error(Errc::InvalidKey, "AES key must be 16, 24 or 32 bytes, got " + std::to_string(bytes_.size()));
}

SymmetricKey SymmetricKey::from_hex(std::string_view hex) {
  try {
    return SymmetricKey(mvsteg::from_hex(hex));
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw Error(Errc::InvalidKey, "key is not valid hex");
    throw;
  }
}

RoundKeySchedule expand_key(const SymmetricKey& key) {
  const ByteView k = key.bytes();
  const int nk = static_cast<int>(k.size()) / 4;
  RoundKeySchedule ks;
  ks.rounds = key.rounds();
  const int total = 4 * (ks.rounds + 1);
  ks.words.resize(static_cast<std::size_t>(total));
  for (int i = 0; i < nk; ++i)
    ks.words[i] = static_cast<std::uint32_t>(k[4 * i]) << 24 | static_cast<std::uint32_t>(k[4 * i + 1]) << 16 |
                  static_cast<std::uint32_t>(k[4 * i + 2]) << 8 | k[4 * i + 3];
  std::uint8_t rcon = 0x01;
  for (int i = nk; i < total; ++i) {
    std::uint32_t temp = ks.words[i - 1];
    if (i % nk == 0) {
      temp = sub_word(rot_word(temp)) ^ (static_cast<std::uint32_t>(rcon) << 24);
      rcon = xtime(rcon);
    } else if (nk > 6 && i % nk == 4) {
      temp = sub_word(temp);
    }
    ks.words[i] = ks.words[i - nk] ^ temp;
  }
  return ks;
}

Block encrypt_block(const RoundKeySchedule& ks, const Block& plaintext) {
  const auto& box = sboxes().forward;
  State s = plaintext;
  add_round_key(s, ks, 0);
  for (int round = 1; round < ks.rounds; ++round) {
    sub_bytes(s, box);
    shift_rows(s, false);
    mix_columns(s, false);
    add_round_key(s, ks, round);
  }
  sub_bytes(s, box);
  shift_rows(s, false);
  add_round_key(s, ks, ks.rounds);
  return s;
}

Block decrypt_block(const RoundKeySchedule& ks, const Block& ciphertext) {
  const auto& box = sboxes().inverse;
  State s = ciphertext;
  add_round_key(s, ks, ks.rounds);
  for (int round = ks.rounds - 1; round > 0; --round) {
    shift_rows(s, true);
    sub_bytes(s, box);
    add_round_key(s, ks, round);
    mix_columns(s, true);
  }
  shift_rows(s, true);
  sub_bytes(s, box);
  add_round_key(s, ks, 0);
  return s;
}

Bytes ctr_transform(const SymmetricKey& key, const Nonce& nonce, ByteView data) {
  const RoundKeySchedule ks = expand_key(key);
  Bytes out(data.begin(), data.end());
  Block counter = nonce;
  for (std::size_t offset = 0; offset < out.size(); offset += 16) {
    const Block stream = encrypt_block(ks, counter);
    for (std::size_t i = 0; i < 16 && offset + i < out.size(); ++i) out[offset + i] ^= stream[i];
    for (int i = 15; i >= 8; --i)
      if (++counter[i] != 0) break;
  }
  return out;
}

Nonce random_nonce() {
  std::random_device rd;
  Nonce n;
  for (std::size_t i = 0; i < n.size(); i += 4) {
    const std::uint32_t v = rd();
    for (std::size_t j = 0; j < 4; ++j) n[i + j] = static_cast<std::uint8_t>(v >> (8 * j));
  }
  return n;
}

Nonce nonce_from_hex(std::string_view hex) {
  const Bytes b = mvsteg::from_hex(hex);
  if (b.size() != 16) throw Error(Errc::ParseError, "nonce must be 32 hex digits");
  Nonce n;
  std::copy(b.begin(), b.end(), n.begin());
  return n;
}

}  // namespace mvsteg::crypto
