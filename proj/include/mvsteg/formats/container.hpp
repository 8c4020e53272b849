#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mvsteg/bytes.hpp"

namespace mvsteg::formats {

enum class FrameType : std::uint8_t { I = 0, P = 1 };

struct ContainerHeader {
  std::uint8_t version = 1;
  std::uint16_t display_width = 0;
  std::uint16_t display_height = 0;
  std::uint16_t coded_width = 0;
  std::uint16_t coded_height = 0;
  std::uint16_t fps_num = 25;
  std::uint16_t fps_den = 1;
  std::uint8_t gop_size = 12;
  std::uint8_t qp = 8;

  friend bool operator==(const ContainerHeader&, const ContainerHeader&) = default;
};

struct EncodedFrame {
  FrameType type = FrameType::I;
  std::uint32_t pts = 0;
  Bytes data;  // bit-packed macroblock stream, zero-padded to a byte boundary

  friend bool operator==(const EncodedFrame&, const EncodedFrame&) = default;
};

// SVST v1. The flags byte and frame_count are derived from `audio` and
// `frames` on write, so they are not stored separately.
struct StegoContainer {
  ContainerHeader header;
  std::optional<Bytes> audio;  // verbatim WAV file
  std::vector<EncodedFrame> frames;

  friend bool operator==(const StegoContainer&, const StegoContainer&) = default;
};

inline constexpr std::uint8_t kContainerMagic[4] = {0x53, 0x56, 0x53, 0x54};  // "SVST"
inline constexpr std::uint8_t kFlagAudio = 0x01;

// Header invariants: coded dims are display dims rounded up to 16, gop >= 1,
// 1 <= qp <= 63, pts strictly increasing, I-frame wherever pts % gop == 0.
// Throws Error(CorruptContainer).
void validate(const StegoContainer& container);

Bytes write_container(const StegoContainer& container);

// Errors: NotAStegoContainer (magic), Unsupported (version), CorruptContainer
// (structure, frame count, invariants), TruncatedInput is folded into
// CorruptContainer.
StegoContainer read_container(ByteView data);

}  // namespace mvsteg::formats
