#include "mvsteg/analysis/mv_diff.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "mvsteg/codec/codec.hpp"
#include "mvsteg/error.hpp"

namespace mvsteg::analysis {
namespace {

const char* mode_name(codec::MbMode m) {
  switch (m) {
    case codec::MbMode::Inter: return "inter";
    case codec::MbMode::Intra: return "intra";
    case codec::MbMode::Skip: return "skip";
  }
  return "?";
}

}  // namespace

MvDiffReport mv_diff_report(const formats::StegoContainer& a, const formats::StegoContainer& b) {
  const auto& ha = a.header;
  const auto& hb = b.header;
  if (ha.coded_width != hb.coded_width || ha.coded_height != hb.coded_height || ha.gop_size != hb.gop_size ||
      a.frames.size() != b.frames.size())
    throw Error(Errc::InvalidComparison, "containers differ in dims, gop size or frame count");

  MvDiffReport report;
  for (std::size_t f = 0; f < a.frames.size(); ++f) {
    const auto ra = codec::parse_frame_records(a, a.frames[f]);
    const auto rb = codec::parse_frame_records(b, b.frames[f]);
    for (std::size_t m = 0; m < ra.size(); ++m) {
      const auto va = ra[m].mv.value_or(codec::MotionVector{});
      const auto vb = rb[m].mv.value_or(codec::MotionVector{});
      report.entries.push_back({static_cast<int>(f), static_cast<int>(m), ra[m].mode, rb[m].mode,
                                std::abs(va.dx - vb.dx), std::abs(va.dy - vb.dy)});
    }
  }
  for (const auto& e : report.entries) {
    report.mean_ddx += e.ddx;
    report.mean_ddy += e.ddy;
    report.max_ddx = std::max(report.max_ddx, e.ddx);
    report.max_ddy = std::max(report.max_ddy, e.ddy);
  }
  if (!report.entries.empty()) {
    report.mean_ddx /= static_cast<double>(report.entries.size());
    report.mean_ddy /= static_cast<double>(report.entries.size());
  }
  return report;
}

std::string mv_diff_csv(const MvDiffReport& report) {
  std::ostringstream out;
  out << "frame,mb,mode_a,mode_b,ddx,ddy\n";
  for (const auto& e : report.entries)
    out << e.frame << ',' << e.mb << ',' << mode_name(e.mode_a) << ',' << mode_name(e.mode_b) << ',' << e.ddx << ','
        << e.ddy << '\n';
  return out.str();
}

}  // namespace mvsteg::analysis
