#pragma once

#include <cstddef>
#include <cstdint>

#include "mvsteg/bytes.hpp"

namespace mvsteg::formats {

// MSB-first bit packer. finish() pads the last byte with zero bits.
class BitWriter {
 public:
  void put_bit(unsigned bit);
  void put_bits(std::uint64_t value, int count);

  // Order-0 Exp-Golomb: 0 -> 1, 1 -> 010, 2 -> 011, 3 -> 00100, ...
  void put_ue(std::uint64_t value);
  // H.264 signed mapping 0, 1, -1, 2, -2, ... -> 0, 1, 2, 3, 4, ... then ue.
  void put_se(std::int64_t value);

  std::size_t bit_count() const { return bits_; }
  Bytes finish() &&;
  const Bytes& bytes() const { return buffer_; }

 private:
  Bytes buffer_;
  std::size_t bits_ = 0;
};

// Reads never pass the end of the buffer: doing so throws Error(TruncatedInput).
class BitReader {
 public:
  explicit BitReader(ByteView data) : data_(data) {}

  unsigned get_bit();
  std::uint64_t get_bits(int count);
  std::uint64_t get_ue();
  std::int64_t get_se();

  std::size_t position() const { return pos_; }
  std::size_t bits_left() const { return data_.size() * 8 - pos_; }

 private:
  ByteView data_;
  std::size_t pos_ = 0;
};

std::uint64_t se_to_ue(std::int64_t value);
std::int64_t ue_to_se(std::uint64_t code);

}  // namespace mvsteg::formats
