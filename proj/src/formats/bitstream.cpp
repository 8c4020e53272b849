#include "mvsteg/formats/bitstream.hpp"

#include <bit>

#include "mvsteg/error.hpp"

namespace mvsteg::formats {

void BitWriter::put_bit(unsigned bit) {
  if (bits_ % 8 == 0) buffer_.push_back(0);
  if (bit & 1u) buffer_.back() = static_cast<std::uint8_t>(buffer_.back() | (0x80u >> (bits_ % 8)));
  ++bits_;
}

void BitWriter::put_bits(std::uint64_t value, int count) {
  for (int i = count - 1; i >= 0; --i) put_bit(static_cast<unsigned>(value >> i) & 1u);
}

void BitWriter::put_ue(std::uint64_t value) {
  if (value == UINT64_MAX) throw Error(Errc::InvalidParams, "ue value out of range");
  const std::uint64_t code = value + 1;
  const int length = std::bit_width(code);
  put_bits(0, length - 1);
  put_bits(code, length);
}

void BitWriter::put_se(std::int64_t value) { put_ue(se_to_ue(value)); }

Bytes BitWriter::finish() && { return std::move(buffer_); }

unsigned BitReader::get_bit() {
  if (pos_ >= data_.size() * 8) throw Error(Errc::TruncatedInput, "bitstream exhausted");
  const unsigned bit = (data_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
  ++pos_;
  return bit;
}

std::uint64_t BitReader::get_bits(int count) {
  std::uint64_t v = 0;
  for (int i = 0; i < count; ++i) v = v << 1 | get_bit();
  return v;
}

std::uint64_t BitReader::get_ue() {
  int zeros = 0;
  while (get_bit() == 0) {
    if (++zeros > 63) throw Error(Errc::CorruptContainer, "exp-golomb prefix too long");
  }
  return ((std::uint64_t{1} << zeros) | get_bits(zeros)) - 1;
}

std::int64_t BitReader::get_se() { return ue_to_se(get_ue()); }

std::uint64_t se_to_ue(std::int64_t value) {
  if (value > 0) return 2 * static_cast<std::uint64_t>(value) - 1;
  return 2 * static_cast<std::uint64_t>(-value);
}

std::int64_t ue_to_se(std::uint64_t code) {
  if (code & 1u) return static_cast<std::int64_t>((code + 1) / 2);
  return -static_cast<std::int64_t>(code / 2);
}

}  // namespace mvsteg::formats
