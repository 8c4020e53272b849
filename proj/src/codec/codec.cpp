#include "mvsteg/codec/codec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mvsteg/codec/macroblock.hpp"
#include "mvsteg/codec/quant.hpp"
#include "mvsteg/codec/transform.hpp"
#include "mvsteg/error.hpp"

namespace mvsteg::codec {

void CodecParams::validate() const {
  if (gop_size < 1 || gop_size > 255) throw Error(Errc::InvalidParams, "gop_size must be in 1..255");
  if (qp < 1 || qp > 63) throw Error(Errc::InvalidParams, "qp must be in 1..63");
  if (search_range < 0) throw Error(Errc::InvalidParams, "search_range must be >= 0");
  if (intra_sad_threshold < 0) throw Error(Errc::InvalidParams, "intra_sad_threshold must be >= 0");
}

namespace {

using Block8u = Block8<std::uint8_t>;

struct BlockSite {
  int plane;  // 0 luma, 1 cb, 2 cr
  int x;      // offset within the macroblock's region of that plane
  int y;
};

constexpr BlockSite kSites[kBlocksPerMacroblock] = {
    {0, 0, 0}, {0, 8, 0}, {0, 0, 8}, {0, 8, 8}, {1, 0, 0}, {2, 0, 0}};

Plane& plane_of(Frame& f, int plane) { return plane == 0 ? f.y : plane == 1 ? f.cb : f.cr; }
const Plane& plane_of(const Frame& f, int plane) { return plane == 0 ? f.y : plane == 1 ? f.cb : f.cr; }

Block8u predicted_block(const Prediction& p, const BlockSite& s) {
  if (s.plane == 0) return p.y.block<8, 8>(s.y, s.x);
  return s.plane == 1 ? p.cb : p.cr;
}

int plane_x(MacroblockOrigin o, const BlockSite& s) { return (s.plane == 0 ? o.x : o.x / 2) + s.x; }
int plane_y(MacroblockOrigin o, const BlockSite& s) { return (s.plane == 0 ? o.y : o.y / 2) + s.y; }

Block8u reconstruct_block(const Block8u& pred, const LevelBlock& levels, int qp) {
  if (levels.isZero()) return pred;
  const Block8<double> residual = idct8(dequantise(levels, qp));
  return (pred.cast<double>() + residual).unaryExpr([](double v) {
    return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
  });
}

void reconstruct_macroblock(Frame& recon, MacroblockOrigin o, const Prediction& pred,
                            const MacroblockRecord& rec, int qp) {
  for (int b = 0; b < kBlocksPerMacroblock; ++b) {
    const BlockSite& s = kSites[b];
    plane_of(recon, s.plane).block<8, 8>(plane_y(o, s), plane_x(o, s)) =
        reconstruct_block(predicted_block(pred, s), rec.levels[b], qp);
  }
}

// Transform and quantise the residual of every block against `pred`. Hooks
// apply to luma block Y00 only.
std::array<LevelBlock, kBlocksPerMacroblock> code_residual(const Frame& cur, MacroblockOrigin o,
                                                           const Prediction& pred, int qp,
                                                           const EncoderHooks* hooks,
                                                           const MacroblockContext* ctx) {
  std::array<LevelBlock, kBlocksPerMacroblock> levels;
  for (int b = 0; b < kBlocksPerMacroblock; ++b) {
    const BlockSite& s = kSites[b];
    const Block8<double> residual =
        plane_of(cur, s.plane).block<8, 8>(plane_y(o, s), plane_x(o, s)).cast<double>() -
        predicted_block(pred, s).cast<double>();
    Block8<double> coeffs = dct8(residual);
    if (b == 0 && hooks && hooks->on_coefficients) hooks->on_coefficients(*ctx, coeffs);
    levels[b] = quantise(coeffs, qp);
    if (b == 0 && hooks && hooks->on_levels) hooks->on_levels(*ctx, levels[b]);
  }
  return levels;
}

bool all_zero(const std::array<LevelBlock, kBlocksPerMacroblock>& levels) {
  return std::all_of(levels.begin(), levels.end(), [](const LevelBlock& b) { return b.isZero(); });
}

Frame blank_frame(int coded_w, int coded_h, std::int64_t pts) {
  Frame f;
  f.y.resize(coded_h, coded_w);
  f.cb.resize(coded_h / 2, coded_w / 2);
  f.cr.resize(coded_h / 2, coded_w / 2);
  f.pts = pts;
  return f;
}

bool is_intra_position(std::size_t index, std::int64_t pts, int gop) { return index == 0 || pts % gop == 0; }

}  // namespace

CodecParams params_of(const StegoContainer& c) {
  CodecParams p;
  p.gop_size = c.header.gop_size;
  p.qp = c.header.qp;
  return p;
}

StegoContainer encode_video(const RawVideo& video, const CodecParams& params, const EncoderHooks& hooks,
                            RawVideo* reconstruction) {
  params.validate();
  if (video.frames.empty()) throw Error(Errc::EmptyInput, "no frames to encode");
  validate(video);
  if (video.width > 0xFFF0 || video.height > 0xFFF0 || video.fps_num > 0xFFFF || video.fps_den > 0xFFFF)
    throw Error(Errc::InvalidDims, "dimensions or frame rate exceed container limits");
  if (video.frames.back().pts > std::numeric_limits<std::uint32_t>::max() || video.frames.front().pts < 0)
    throw Error(Errc::InvalidParams, "pts outside the container's u32 range");

  const int coded_w = coded_extent(video.width);
  const int coded_h = coded_extent(video.height);
  const auto grid = partition(coded_w, coded_h);
  const int max_component = 4 * (params.search_range + 1);

  StegoContainer out;
  out.header.display_width = static_cast<std::uint16_t>(video.width);
  out.header.display_height = static_cast<std::uint16_t>(video.height);
  out.header.coded_width = static_cast<std::uint16_t>(coded_w);
  out.header.coded_height = static_cast<std::uint16_t>(coded_h);
  out.header.fps_num = static_cast<std::uint16_t>(video.fps_num);
  out.header.fps_den = static_cast<std::uint16_t>(video.fps_den);
  out.header.gop_size = static_cast<std::uint8_t>(params.gop_size);
  out.header.qp = static_cast<std::uint8_t>(params.qp);

  if (reconstruction) {
    *reconstruction = RawVideo{video.width, video.height, video.fps_num, video.fps_den, {}};
  }

  Frame reference;
  for (std::size_t fi = 0; fi < video.frames.size(); ++fi) {
    const Frame cur = pad_frame(video.frames[fi], coded_w, coded_h);
    const FrameType type = is_intra_position(fi, cur.pts, params.gop_size) ? FrameType::I : FrameType::P;
    Frame recon = blank_frame(coded_w, coded_h, cur.pts);
    formats::BitWriter bits;

    for (std::size_t mi = 0; mi < grid.size(); ++mi) {
      const MacroblockOrigin o = grid[mi];
      MacroblockContext ctx{static_cast<int>(fi), type, static_cast<int>(mi), MbMode::Intra, std::nullopt};
      MacroblockRecord rec;
      Prediction pred;

      const MotionDecision decision =
          type == FrameType::P ? motion_estimate(cur.y, reference.y, o, params) : MotionDecision{MbMode::Intra, {}, 0};

      if (decision.mode == MbMode::Intra) {
        pred = intra_prediction();
        rec.mode = MbMode::Intra;
        rec.levels = code_residual(cur, o, pred, params.qp, nullptr, nullptr);
      } else {
        pred = motion_compensate(reference, decision.mv, o);
        rec.levels = code_residual(cur, o, pred, params.qp, nullptr, nullptr);
        if (decision.mv == MotionVector{} && all_zero(rec.levels)) {
          rec.mode = MbMode::Skip;
        } else {
          ctx.mode = MbMode::Inter;
          ctx.mv = decision.mv;
          MotionVector mv = decision.mv;
          if (hooks.on_motion) {
            mv = hooks.on_motion(ctx);
            if (std::abs(mv.dx) > max_component || std::abs(mv.dy) > max_component)
              throw Error(Errc::HookRangeError, "hook vector (" + std::to_string(mv.dx) + "," +
                                                    std::to_string(mv.dy) + ") beyond search range + 1 pel");
            ctx.mv = mv;
            if (mv != decision.mv) pred = motion_compensate(reference, mv, o);
          }
          rec.mode = MbMode::Inter;
          rec.mv = mv;
          if (hooks.on_coefficients || hooks.on_levels || mv != decision.mv)
            rec.levels = code_residual(cur, o, pred, params.qp, &hooks, &ctx);
        }
      }
      reconstruct_macroblock(recon, o, pred, rec, params.qp);
      encode_macroblock(bits, rec);
    }

    out.frames.push_back({type, static_cast<std::uint32_t>(cur.pts), std::move(bits).finish()});
    if (reconstruction) reconstruction->frames.push_back(crop_frame(recon, video.width, video.height));
    reference = std::move(recon);
  }
  return out;
}

std::vector<MacroblockRecord> parse_frame_records(const StegoContainer& container, const EncodedFrame& frame) {
  const auto grid = partition(container.header.coded_width, container.header.coded_height);
  formats::BitReader in(frame.data);
  std::vector<MacroblockRecord> records;
  records.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    records.push_back(decode_macroblock(in));
    if (frame.type == FrameType::I && records.back().mode != MbMode::Intra)
      throw Error(Errc::CorruptContainer, "non-intra macroblock in an I-frame");
  }
  if (in.bits_left() >= 8) throw Error(Errc::CorruptContainer, "trailing bytes after the last macroblock");
  return records;
}

Bytes write_frame_records(const std::vector<MacroblockRecord>& records) {
  formats::BitWriter bits;
  for (const MacroblockRecord& rec : records) encode_macroblock(bits, rec);
  return std::move(bits).finish();
}

RawVideo decode_video(const StegoContainer& container, const MacroblockTap& tap) {
  formats::validate(container);
  const auto& h = container.header;
  const auto grid = partition(h.coded_width, h.coded_height);
  RawVideo out{h.display_width, h.display_height, h.fps_num, h.fps_den, {}};
  out.frames.reserve(container.frames.size());

  Frame reference;
  for (std::size_t fi = 0; fi < container.frames.size(); ++fi) {
    const EncodedFrame& ef = container.frames[fi];
    const auto records = parse_frame_records(container, ef);
    Frame recon = blank_frame(h.coded_width, h.coded_height, ef.pts);
    for (std::size_t mi = 0; mi < grid.size(); ++mi) {
      const MacroblockRecord& rec = records[mi];
      const MacroblockOrigin o = grid[mi];
      Prediction pred;
      switch (rec.mode) {
        case MbMode::Intra: pred = intra_prediction(); break;
        case MbMode::Skip: pred = motion_compensate(reference, {}, o); break;
        case MbMode::Inter: pred = motion_compensate(reference, *rec.mv, o); break;
      }
      reconstruct_macroblock(recon, o, pred, rec, h.qp);
      if (tap) tap({static_cast<int>(fi), ef.type, static_cast<int>(mi), rec.mode, rec.mv}, rec);
    }
    out.frames.push_back(crop_frame(recon, h.display_width, h.display_height));
    reference = std::move(recon);
  }
  return out;
}

}  // namespace mvsteg::codec
