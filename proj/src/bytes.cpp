#include "mvsteg/bytes.hpp"

#include <fstream>
#include <iterator>

#include <zlib.h>

#include "mvsteg/error.hpp"

namespace mvsteg {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ParseError: return "parse error";
    case Errc::TruncatedInput: return "truncated input";
    case Errc::Unsupported: return "unsupported";
    case Errc::EmptyInput: return "empty input";
    case Errc::NotAStegoContainer: return "not a stego container";
    case Errc::CorruptContainer: return "corrupt container";
    case Errc::InvalidDims: return "invalid dimensions";
    case Errc::InvalidParams: return "invalid parameters";
    case Errc::HookRangeError: return "hook range error";
    case Errc::InsufficientCapacity: return "insufficient capacity";
    case Errc::NoPayloadFound: return "no payload found";
    case Errc::CorruptPayload: return "corrupt payload";
    case Errc::KeyRequired: return "key required";
    case Errc::InvalidKey: return "invalid key";
    case Errc::InvalidComparison: return "invalid comparison";
    case Errc::Io: return "i/o error";
  }
  return "unknown error";
}

Bits bytes_to_bits(ByteView bytes) {
  Bits bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t b : bytes)
    for (int i = 7; i >= 0; --i) bits.push_back((b >> i) & 1u);
  return bits;
}

Bytes bits_to_bytes(std::span<const std::uint8_t> bits) {
  Bytes out(bits.size() / 8, 0);
  for (std::size_t i = 0; i < out.size() * 8; ++i)
    out[i / 8] = static_cast<std::uint8_t>(out[i / 8] | ((bits[i] & 1u) << (7 - i % 8)));
  return out;
}

std::string to_hex(ByteView bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

namespace {
int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error(Errc::ParseError, "hex string has odd length");
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_value(hex[i]);
    const int lo = hex_value(hex[i + 1]);
    if (hi < 0 || lo < 0) throw Error(Errc::ParseError, "invalid hex digit");
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

std::uint32_t crc32(ByteView bytes) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks for very large inputs.
  std::size_t offset = 0;
  while (offset < bytes.size()) {
    const std::size_t n = std::min<std::size_t>(bytes.size() - offset, 1u << 30);
    crc = ::crc32(crc, bytes.data() + offset, static_cast<uInt>(n));
    offset += n;
  }
  return static_cast<std::uint32_t>(crc);
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, ByteView bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

void ByteReader::require(std::size_t n) const {
  if (n > remaining()) throw Error(Errc::TruncatedInput, "need " + std::to_string(n) + " bytes, have " + std::to_string(remaining()));
}

std::uint8_t ByteReader::u8() {
  require(1);
  return data_[pos_++];
}

std::uint16_t ByteReader::u16() {
  require(2);
  const auto v = static_cast<std::uint16_t>(data_[pos_] << 8 | data_[pos_ + 1]);
  pos_ += 2;
  return v;
}

std::uint32_t ByteReader::u32() {
  require(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = v << 8 | data_[pos_ + i];
  pos_ += 4;
  return v;
}

ByteView ByteReader::take(std::size_t n) {
  require(n);
  auto view = data_.subspan(pos_, n);
  pos_ += n;
  return view;
}

}  // namespace mvsteg
