#pragma once

#include "mvsteg/codec/types.hpp"
#include "mvsteg/formats/bitstream.hpp"

namespace mvsteg::codec {

// Layout: mode ue (0 inter, 1 intra, 2 skip); inter adds dx, dy as se in
// quarter-pels; non-skip then codes each of the six blocks as nnz ue followed
// by nnz pairs of (zigzag run ue, level se != 0). The run is the number of
// zero positions since the previous nonzero level.
void encode_macroblock(formats::BitWriter& out, const MacroblockRecord& record);

// Throws Error(CorruptContainer) on an unknown mode, a zero level, a zigzag
// index past 63, or a stream that ends mid-record.
MacroblockRecord decode_macroblock(formats::BitReader& in);

}  // namespace mvsteg::codec
