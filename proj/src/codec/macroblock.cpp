#include "mvsteg/codec/macroblock.hpp"

#include "mvsteg/codec/transform.hpp"
#include "mvsteg/error.hpp"

namespace mvsteg::codec {
namespace {

void encode_block(formats::BitWriter& out, const LevelBlock& block) {
  int nnz = 0;
  for (int i = 0; i < 64; ++i) nnz += block(kZigzag[i]) != 0;
  out.put_ue(static_cast<std::uint64_t>(nnz));
  int next = 0;
  for (int i = 0; i < 64; ++i) {
    const int level = block(kZigzag[i]);
    if (level == 0) continue;
    out.put_ue(static_cast<std::uint64_t>(i - next));
    out.put_se(level);
    next = i + 1;
  }
}

LevelBlock decode_block(formats::BitReader& in) {
  LevelBlock block = LevelBlock::Zero();
  const std::uint64_t nnz = in.get_ue();
  if (nnz > 64) throw Error(Errc::CorruptContainer, "more than 64 coefficients in a block");
  std::uint64_t next = 0;
  for (std::uint64_t k = 0; k < nnz; ++k) {
    const std::uint64_t index = next + in.get_ue();
    if (index >= 64) throw Error(Errc::CorruptContainer, "zigzag index past 63");
    const std::int64_t level = in.get_se();
    if (level == 0) throw Error(Errc::CorruptContainer, "zero level coded explicitly");
    if (level > INT32_MAX || level < INT32_MIN) throw Error(Errc::CorruptContainer, "level out of range");
    block(kZigzag[index]) = static_cast<int>(level);
    next = index + 1;
  }
  return block;
}

}  // namespace

void encode_macroblock(formats::BitWriter& out, const MacroblockRecord& record) {
  out.put_ue(static_cast<std::uint64_t>(record.mode));
  if (record.mode == MbMode::Skip) return;
  if (record.mode == MbMode::Inter) {
    const MotionVector mv = record.mv.value_or(MotionVector{});
    out.put_se(mv.dx);
    out.put_se(mv.dy);
  }
  for (const LevelBlock& block : record.levels) encode_block(out, block);
}

MacroblockRecord decode_macroblock(formats::BitReader& in) {
  try {
    MacroblockRecord rec;
    const std::uint64_t mode = in.get_ue();
    if (mode > 2) throw Error(Errc::CorruptContainer, "unknown macroblock mode");
    rec.mode = static_cast<MbMode>(mode);
    if (rec.mode == MbMode::Skip) return rec;
    if (rec.mode == MbMode::Inter) {
      const std::int64_t dx = in.get_se();
      const std::int64_t dy = in.get_se();
      if (dx > INT16_MAX || dx < INT16_MIN || dy > INT16_MAX || dy < INT16_MIN)
        throw Error(Errc::CorruptContainer, "motion vector out of range");
      rec.mv = MotionVector{static_cast<int>(dx), static_cast<int>(dy)};
    }
    for (LevelBlock& block : rec.levels) block = decode_block(in);
    return rec;
  } catch (const Error& e) {
    if (e.code() == Errc::TruncatedInput) throw Error(Errc::CorruptContainer, "macroblock stream ends mid-record");
    throw;
  }
}

}  // namespace mvsteg::codec
