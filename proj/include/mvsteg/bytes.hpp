#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mvsteg {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// One payload bit per element, values 0 or 1, most significant bit of each
// source byte first.
using Bits = std::vector<std::uint8_t>;

Bits bytes_to_bits(ByteView bytes);
// Trailing bits that do not fill a byte are dropped.
Bytes bits_to_bytes(std::span<const std::uint8_t> bits);

std::string to_hex(ByteView bytes);
// Throws Error(ParseError) on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

std::uint32_t crc32(ByteView bytes);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteView bytes);

// Big-endian helpers for the wire formats.
inline void put_u8(Bytes& out, std::uint8_t v) { out.push_back(v); }
inline void put_u16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}
inline void put_u32(Bytes& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

// Sequential big-endian reader; throws Error(TruncatedInput) past the end.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  ByteView take(std::size_t n);

  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  void require(std::size_t n) const;

  ByteView data_;
  std::size_t pos_ = 0;
};

}  // namespace mvsteg
