#pragma once

#include <string>
#include <vector>

#include "mvsteg/codec/types.hpp"
#include "mvsteg/formats/container.hpp"

namespace mvsteg::analysis {

struct MvDiffEntry {
  int frame = 0;
  int mb = 0;
  codec::MbMode mode_a = codec::MbMode::Skip;
  codec::MbMode mode_b = codec::MbMode::Skip;
  int ddx = 0;  // |dx_a - dx_b|, quarter-pels; blocks without a vector count as (0, 0)
  int ddy = 0;
};

struct MvDiffReport {
  std::vector<MvDiffEntry> entries;
  double mean_ddx = 0;
  double mean_ddy = 0;
  int max_ddx = 0;
  int max_ddy = 0;
};

// Pairs macroblocks by position. Throws Error(InvalidComparison) unless both
// containers share dims, gop size and frame count.
MvDiffReport mv_diff_report(const formats::StegoContainer& a, const formats::StegoContainer& b);

// `frame,mb,mode_a,mode_b,ddx,ddy` with modes spelled inter/intra/skip.
std::string mv_diff_csv(const MvDiffReport& report);

}  // namespace mvsteg::analysis
