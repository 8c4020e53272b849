#pragma once

#include <cstdint>

#include "mvsteg/bytes.hpp"

namespace mvsteg::formats {

struct WavFormat {
  std::uint16_t audio_format = 1;  // 1 = PCM
  std::uint16_t channels = 1;
  std::uint32_t sample_rate = 44100;
  std::uint32_t byte_rate = 88200;
  std::uint16_t block_align = 2;
  std::uint16_t bits_per_sample = 16;
  Bytes extension;  // fmt chunk bytes beyond the 16-byte PCM core

  friend bool operator==(const WavFormat&, const WavFormat&) = default;
};

struct WavFile {
  WavFormat format;
  Bytes samples;   // exactly the declared data chunk length
  Bytes trailing;  // everything after the data chunk; players never see it

  friend bool operator==(const WavFile&, const WavFile&) = default;
};

// RIFF/WAVE with `fmt ` and `data` chunks. Chunks other than these two are
// skipped. Throws Error(ParseError) on missing chunks or a data length that
// runs past the end of the file.
WavFile read_wav(ByteView data);

// Canonical layout: RIFF header, fmt chunk, data chunk, then trailing bytes
// (not counted in the RIFF size). Zero samples and no extension -> 44 bytes.
Bytes write_wav(const WavFile& wav);

}  // namespace mvsteg::formats
