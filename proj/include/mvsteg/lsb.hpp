#pragma once

#include <cstddef>

#include "mvsteg/bytes.hpp"

namespace mvsteg::lsb {

// Payload bytes an LSB cover of `cover_size` bytes can hold after the 4-byte
// length prefix.
std::size_t lsb_capacity(std::size_t cover_size);

// Bit i of (u32 length || payload), MSB first, replaces the LSB of cover
// byte i. Nothing else changes. Throws Error(InsufficientCapacity).
Bytes lsb_embed(ByteView cover, ByteView payload);

// Throws Error(CorruptPayload) when the cover is too short for the prefix or
// the declared length exceeds what the cover can hold.
Bytes lsb_extract(ByteView stego);

// Appends the payload after the end of the WAV file; the declared chunk
// sizes are left alone, so players stop at the data chunk.
Bytes inject_append(ByteView wav, ByteView payload);

// Bytes after the declared data chunk. Throws Error(ParseError) for non-WAV.
Bytes extract_appended(ByteView wav);

}  // namespace mvsteg::lsb
