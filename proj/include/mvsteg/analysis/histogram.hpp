#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "mvsteg/bytes.hpp"

namespace mvsteg::analysis {

// Successive cover LSBs packed MSB-first; floor(n / 8) bytes.
Bytes lsb_stream_bytes(ByteView cover);

struct Histogram256 {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;

  friend bool operator==(const Histogram256&, const Histogram256&) = default;
};

Histogram256 ascii_histogram(ByteView bytes);

// `value,count` header followed by 256 rows.
std::string histogram_csv(const Histogram256& histogram);
// Throws Error(ParseError) on anything but the layout above.
Histogram256 parse_histogram_csv(std::string_view csv);

// Pearson statistic against the uniform distribution over 256 values.
// Throws Error(EmptyInput) when the histogram is empty.
double chi_square_uniform(const Histogram256& histogram);

// Detection threshold: the `quantile` of the statistic over `streams`
// uniform-random byte streams of `stream_bytes` each, drawn from mt19937(seed).
double calibrate_chi_square_threshold(std::uint32_t seed = 20130601, int streams = 100,
                                      std::size_t stream_bytes = 2048, double quantile = 0.99);

}  // namespace mvsteg::analysis
