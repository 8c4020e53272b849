#include "mvsteg/stego/embed.hpp"

#include <cstdlib>
#include <string>

#include "mvsteg/codec/transform.hpp"
#include "mvsteg/error.hpp"
#include "mvsteg/stego/coeff.hpp"

namespace mvsteg::stego {
namespace {

using codec::MacroblockContext;
using codec::MacroblockRecord;
using codec::MbMode;
using codec::MotionVector;

bool uses_x(EmbedMode mode) { return mode == EmbedMode::FirstMbX || mode == EmbedMode::AllMbX; }
bool first_only(EmbedMode mode) { return mode == EmbedMode::FirstMbX || mode == EmbedMode::FirstMbY; }

struct InterSlot {
  MotionVector mv;
  std::optional<unsigned> coeff_bit;
};

// INTER macroblocks of every P-frame as seen by the decoder, in raster order.
using ChannelTrace = std::vector<std::vector<InterSlot>>;

ChannelTrace trace_channel(const StegoContainer& container) {
  ChannelTrace trace(container.frames.size());
  codec::decode_video(container, [&](const MacroblockContext& ctx, const MacroblockRecord& rec) {
    if (ctx.frame_type != formats::FrameType::P || rec.mode != MbMode::Inter) return;
    InterSlot slot{*rec.mv, std::nullopt};
    if (auto pos = first_nonzero_ac(rec.levels[0]))
      slot.coeff_bit = static_cast<unsigned>(std::abs(rec.levels[0](codec::kZigzag[*pos])) & 1);
    trace[static_cast<std::size_t>(ctx.frame_index)].push_back(slot);
  });
  return trace;
}

Bits bits_from_trace(const ChannelTrace& trace, EmbedMode mode) {
  Bits bits;
  for (const auto& frame : trace) {
    for (const InterSlot& slot : frame) {
      if (mode == EmbedMode::Coeff) {
        if (slot.coeff_bit) bits.push_back(static_cast<std::uint8_t>(*slot.coeff_bit));
        continue;
      }
      bits.push_back(static_cast<std::uint8_t>(mv_extract_bit(uses_x(mode) ? slot.mv.dx : slot.mv.dy)));
      if (first_only(mode)) break;
    }
  }
  return bits;
}

[[noreturn]] void throw_capacity(std::size_t placed, std::size_t required) {
  throw Error(Errc::InsufficientCapacity, "placed " + std::to_string(placed) + " of " + std::to_string(required) +
                                              " payload bits");
}

}  // namespace

int mv_embed_bit(int component, unsigned bit) {
  const int magnitude = (std::abs(component) & ~4) | static_cast<int>((bit & 1u) << 2);
  return component < 0 ? -magnitude : magnitude;
}

unsigned mv_extract_bit(int component) { return static_cast<unsigned>(std::abs(component) >> 2) & 1u; }

StegoContainer embed(const RawVideo& video, ByteView payload, EmbedMode mode, const CodecParams& params,
                     const EmbedOptions& options) {
  if (mode == EmbedMode::Coeff) return embed_coeff(video, payload, params, false, options);

  const Bits bits = frame_payload(seal_payload(payload, mode, options.encryption));
  std::size_t next = 0;
  int last_frame = -1;
  codec::EncoderHooks hooks;
  hooks.on_motion = [&](const MacroblockContext& ctx) {
    MotionVector mv = *ctx.mv;
    if (next >= bits.size()) return mv;
    if (first_only(mode) && ctx.frame_index == last_frame) return mv;
    last_frame = ctx.frame_index;
    int& component = uses_x(mode) ? mv.dx : mv.dy;
    component = mv_embed_bit(component, bits[next++]);
    return mv;
  };
  StegoContainer out = codec::encode_video(video, params, hooks);
  if (next < bits.size()) throw_capacity(next, bits.size());
  out.audio = options.audio;
  return out;
}

Bits channel_bits(const StegoContainer& container, EmbedMode mode) {
  return bits_from_trace(trace_channel(container), mode);
}

Extraction extract_detailed(const StegoContainer& container, const crypto::SymmetricKey* key) {
  const ChannelTrace trace = trace_channel(container);
  std::optional<Error> corrupt;
  for (EmbedMode mode : kAllModes) {
    const Bits bits = bits_from_trace(trace, mode);
    PayloadFrame frame;
    try {
      frame = parse_payload(bits);
    } catch (const Error& e) {
      if (e.code() == Errc::CorruptPayload && !corrupt) corrupt = e;
      continue;
    }
    if (frame.mode != mode) continue;
    // Magic, mode and length line up; an encrypted frame is ours from here on.
    return {mode, frame, open_payload(frame, key)};
  }
  if (corrupt) throw *corrupt;
  throw Error(Errc::NoPayloadFound, "no embedding mode yields a valid payload");
}

CapacityReport estimate_capacity(const RawVideo& video, const CodecParams& params, EmbedMode mode) {
  CapacityReport report;
  report.mode = mode;
  report.per_frame_bits.assign(video.frames.size(), 0);
  codec::EncoderHooks hooks;
  if (mode == EmbedMode::Coeff) {
    hooks.on_levels = [&](const MacroblockContext& ctx, codec::LevelBlock& levels) {
      if (first_nonzero_ac(levels)) ++report.per_frame_bits[static_cast<std::size_t>(ctx.frame_index)];
    };
  } else {
    hooks.on_motion = [&](const MacroblockContext& ctx) {
      auto& count = report.per_frame_bits[static_cast<std::size_t>(ctx.frame_index)];
      if (!first_only(mode) || count == 0) ++count;
      return *ctx.mv;
    };
  }
  codec::encode_video(video, params, hooks);
  for (auto n : report.per_frame_bits) report.estimated_bits += n;
  return report;
}

double bit_error_rate(std::span<const std::uint8_t> sent, std::span<const std::uint8_t> received) {
  if (sent.empty()) return 0.0;
  std::size_t errors = 0;
  for (std::size_t i = 0; i < sent.size(); ++i)
    if (i >= received.size() || (sent[i] & 1u) != (received[i] & 1u)) ++errors;
  return static_cast<double>(errors) / static_cast<double>(sent.size());
}

}  // namespace mvsteg::stego
