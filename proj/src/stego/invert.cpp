#include "mvsteg/stego/invert.hpp"

#include "mvsteg/codec/codec.hpp"

namespace mvsteg::stego {

formats::StegoContainer invert_motion_vectors(const formats::StegoContainer& container) {
  formats::validate(container);
  formats::StegoContainer out = container;
  for (auto& frame : out.frames) {
    if (frame.type != formats::FrameType::P) continue;
    auto records = codec::parse_frame_records(container, frame);
    for (auto& rec : records)
      if (rec.mode == codec::MbMode::Inter) rec.mv = codec::MotionVector{-rec.mv->dx, -rec.mv->dy};
    frame.data = codec::write_frame_records(records);
  }
  return out;
}

}  // namespace mvsteg::stego
