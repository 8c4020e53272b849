#include "mvsteg/stego/payload.hpp"

#include <algorithm>

#include "mvsteg/error.hpp"

namespace mvsteg::stego {

std::string_view to_string(EmbedMode mode) {
  switch (mode) {
    case EmbedMode::FirstMbX: return "first-mb-x";
    case EmbedMode::FirstMbY: return "first-mb-y";
    case EmbedMode::AllMbX: return "all-mb-x";
    case EmbedMode::AllMbY: return "all-mb-y";
    case EmbedMode::Coeff: return "coeff";
  }
  return "unknown";
}

std::optional<EmbedMode> parse_embed_mode(std::string_view name) {
  for (EmbedMode m : kAllModes)
    if (to_string(m) == name) return m;
  return std::nullopt;
}

PayloadFrame seal_payload(ByteView plain, EmbedMode mode, const std::optional<Encryption>& encryption) {
  if (plain.size() > UINT32_MAX) throw Error(Errc::InvalidParams, "payload larger than 2^32-1 bytes");
  PayloadFrame f;
  f.mode = mode;
  f.crc = crc32(plain);
  if (encryption) {
    f.flags |= kPayloadEncrypted;
    f.nonce = encryption->nonce;
    f.body = crypto::ctr_transform(encryption->key, encryption->nonce, plain);
  } else {
    f.body.assign(plain.begin(), plain.end());
  }
  return f;
}

Bytes serialize_payload(const PayloadFrame& f) {
  Bytes out(std::begin(kPayloadMagic), std::end(kPayloadMagic));
  out.reserve(f.wire_size());
  put_u8(out, f.version);
  put_u8(out, f.flags);
  put_u8(out, static_cast<std::uint8_t>(f.mode));
  put_u32(out, static_cast<std::uint32_t>(f.body.size()));
  if (f.encrypted()) {
    const crypto::Nonce n = f.nonce.value_or(crypto::Nonce{});
    out.insert(out.end(), n.begin(), n.end());
  }
  out.insert(out.end(), f.body.begin(), f.body.end());
  put_u32(out, f.crc);
  return out;
}

PayloadFrame parse_payload(std::span<const std::uint8_t> bits) {
  const auto available = bits.size() / 8;
  if (available < kPayloadOverheadBytes) throw Error(Errc::NoPayloadFound, "too few bits for a payload header");
  const Bytes head = bits_to_bytes(bits.first(kPayloadHeaderBytes * 8));
  if (head[0] != kPayloadMagic[0] || head[1] != kPayloadMagic[1]) throw Error(Errc::NoPayloadFound, "payload magic absent");
  PayloadFrame f;
  f.version = head[2];
  if (f.version != 1) throw Error(Errc::NoPayloadFound, "unknown payload version");
  f.flags = head[3];
  if (head[4] > static_cast<std::uint8_t>(EmbedMode::Coeff)) throw Error(Errc::NoPayloadFound, "unknown embed mode");
  f.mode = static_cast<EmbedMode>(head[4]);
  const std::uint64_t length = static_cast<std::uint64_t>(head[5]) << 24 | static_cast<std::uint64_t>(head[6]) << 16 |
                               static_cast<std::uint64_t>(head[7]) << 8 | head[8];
  const std::uint64_t total = kPayloadOverheadBytes + (f.encrypted() ? 16 : 0) + length;
  if (total > available) throw Error(Errc::NoPayloadFound, "declared payload length exceeds the channel");

  const Bytes all = bits_to_bytes(bits.first(static_cast<std::size_t>(total) * 8));
  ByteReader r(all);
  r.take(kPayloadHeaderBytes);
  if (f.encrypted()) {
    crypto::Nonce n;
    const ByteView nb = r.take(16);
    std::copy(nb.begin(), nb.end(), n.begin());
    f.nonce = n;
  }
  const ByteView body = r.take(static_cast<std::size_t>(length));
  f.body.assign(body.begin(), body.end());
  f.crc = r.u32();
  if (!f.encrypted() && crc32(f.body) != f.crc) throw Error(Errc::CorruptPayload, "payload crc mismatch");
  return f;
}

Bytes open_payload(const PayloadFrame& f, const crypto::SymmetricKey* key) {
  Bytes plain = f.body;
  if (f.encrypted()) {
    if (!key) throw Error(Errc::KeyRequired, "payload is encrypted; supply a key");
    plain = crypto::ctr_transform(*key, f.nonce.value_or(crypto::Nonce{}), f.body);
  }
  if (crc32(plain) != f.crc) throw Error(Errc::CorruptPayload, f.encrypted() ? "crc mismatch after decryption (wrong key?)" : "payload crc mismatch");
  return plain;
}

}  // namespace mvsteg::stego
