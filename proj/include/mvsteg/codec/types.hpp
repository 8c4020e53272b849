#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

#include <Eigen/Core>

#include "mvsteg/formats/container.hpp"

namespace mvsteg::codec {

using formats::FrameType;

struct CodecParams {
  int gop_size = 12;
  int qp = 8;
  int search_range = 16;              // integer pels
  int intra_sad_threshold = 16 * 16 * 12;

  // Throws Error(InvalidParams) unless gop in 1..255, qp in 1..63, search >= 0.
  void validate() const;
};

// Quarter-pel units. Motion search produces multiples of 4; embedding may
// flip bit 2 of one component.
struct MotionVector {
  int dx = 0;
  int dy = 0;

  friend bool operator==(const MotionVector&, const MotionVector&) = default;
};

enum class MbMode : std::uint8_t { Inter = 0, Intra = 1, Skip = 2 };

template <typename Scalar>
using Block8 = Eigen::Matrix<Scalar, 8, 8, Eigen::RowMajor>;
using LevelBlock = Block8<int>;

inline constexpr int kBlocksPerMacroblock = 6;  // Y00 Y01 Y10 Y11 Cb Cr
inline constexpr int kMacroblockSize = 16;

struct MacroblockRecord {
  MbMode mode = MbMode::Skip;
  std::optional<MotionVector> mv;  // engaged iff mode == Inter
  std::array<LevelBlock, kBlocksPerMacroblock> levels = zero_levels();

  static std::array<LevelBlock, kBlocksPerMacroblock> zero_levels() {
    std::array<LevelBlock, kBlocksPerMacroblock> blocks;
    for (auto& b : blocks) b.setZero();
    return blocks;
  }

  friend bool operator==(const MacroblockRecord& a, const MacroblockRecord& b) {
    if (a.mode != b.mode || a.mv != b.mv) return false;
    for (int i = 0; i < kBlocksPerMacroblock; ++i)
      if (a.levels[i] != b.levels[i]) return false;
    return true;
  }
};

struct MotionDecision {
  MbMode mode = MbMode::Inter;  // Inter or Intra
  MotionVector mv;
  std::int64_t sad = 0;
};

// What hooks and taps see for each macroblock.
struct MacroblockContext {
  int frame_index = 0;
  FrameType frame_type = FrameType::P;
  int mb_index = 0;
  MbMode mode = MbMode::Inter;
  std::optional<MotionVector> mv;
};

// Encoder hooks, all optional. In raster order per P-frame, for INTER blocks
// only (SKIP is settled before any hook runs, INTRA carries no vector):
//   on_motion       -> returns the vector to code; residual uses it
//   on_coefficients -> raw luma Y00 DCT coefficients before quantisation
//   on_levels       -> quantised Y00 levels before entropy coding
struct EncoderHooks {
  std::function<MotionVector(const MacroblockContext&)> on_motion;
  std::function<void(const MacroblockContext&, Block8<double>&)> on_coefficients;
  std::function<void(const MacroblockContext&, LevelBlock&)> on_levels;
};

// Decoder tap, invoked for every macroblock of every frame.
using MacroblockTap = std::function<void(const MacroblockContext&, const MacroblockRecord&)>;

}  // namespace mvsteg::codec
