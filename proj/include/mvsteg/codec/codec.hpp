#pragma once

#include <vector>

#include "mvsteg/codec/motion.hpp"
#include "mvsteg/codec/types.hpp"
#include "mvsteg/formats/container.hpp"
#include "mvsteg/formats/video.hpp"

namespace mvsteg::codec {

using formats::EncodedFrame;
using formats::StegoContainer;

// Frames whose pts is a multiple of gop_size (and the first frame) are
// intra-coded; every other frame is predicted from the previous
// reconstruction. If `reconstruction` is non-null it receives the encoder's
// in-loop reconstruction, cropped to the display size.
//
// Throws Error(EmptyInput) for no frames, Error(HookRangeError) when
// on_motion returns a vector beyond search_range + 1 pels.
StegoContainer encode_video(const RawVideo& video, const CodecParams& params, const EncoderHooks& hooks = {},
                            RawVideo* reconstruction = nullptr);

// Throws Error(CorruptContainer) on any malformed macroblock stream.
RawVideo decode_video(const StegoContainer& container, const MacroblockTap& tap = {});

// Entropy layer only: one record per macroblock in raster order.
std::vector<MacroblockRecord> parse_frame_records(const StegoContainer& container, const EncodedFrame& frame);
Bytes write_frame_records(const std::vector<MacroblockRecord>& records);

CodecParams params_of(const StegoContainer& container);

}  // namespace mvsteg::codec
