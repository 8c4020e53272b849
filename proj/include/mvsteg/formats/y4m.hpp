#pragma once

#include "mvsteg/bytes.hpp"
#include "mvsteg/formats/video.hpp"

namespace mvsteg::formats {

// YUV4MPEG2 with 4:2:0 chroma (C420, C420jpeg, C420paldv, C420mpeg2 or no C
// tag). Frames get pts 0, 1, 2, ... in file order.
RawVideo read_y4m(ByteView data);

// Writes `YUV4MPEG2 W H F Ip A0:0 C420jpeg` followed by FRAME records.
// Throws Error(EmptyInput) for a video with no frames.
Bytes write_y4m(const RawVideo& video);

}  // namespace mvsteg::formats
