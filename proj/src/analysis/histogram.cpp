#include "mvsteg/analysis/histogram.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "mvsteg/error.hpp"

namespace mvsteg::analysis {

Bytes lsb_stream_bytes(ByteView cover) {
  Bits bits(cover.size() - cover.size() % 8);
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = cover[i] & 1u;
  return bits_to_bytes(bits);
}

Histogram256 ascii_histogram(ByteView bytes) {
  Histogram256 h;
  for (std::uint8_t b : bytes) ++h.counts[b];
  h.total = bytes.size();
  return h;
}

std::string histogram_csv(const Histogram256& h) {
  std::ostringstream out;
  out << "value,count\n";
  for (int v = 0; v < 256; ++v) out << v << ',' << h.counts[static_cast<std::size_t>(v)] << '\n';
  return out.str();
}

Histogram256 parse_histogram_csv(std::string_view csv) {
  Histogram256 h;
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != "value,count") throw Error(Errc::ParseError, "missing value,count header");
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    unsigned value = 0;
    std::uint64_t count = 0;
    if (comma == std::string::npos ||
        std::from_chars(line.data(), line.data() + comma, value).ec != std::errc{} ||
        std::from_chars(line.data() + comma + 1, line.data() + line.size(), count).ec != std::errc{} || value > 255 ||
        value != static_cast<unsigned>(rows))
      throw Error(Errc::ParseError, "bad histogram row '" + line + "'");
    h.counts[value] = count;
    h.total += count;
    ++rows;
  }
  if (rows != 256) throw Error(Errc::ParseError, "expected 256 histogram rows");
  return h;
}

double chi_square_uniform(const Histogram256& h) {
  if (h.total == 0) throw Error(Errc::EmptyInput, "empty histogram");
  const double expected = static_cast<double>(h.total) / 256.0;
  double stat = 0.0;
  for (auto c : h.counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

double calibrate_chi_square_threshold(std::uint32_t seed, int streams, std::size_t stream_bytes, double quantile) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> byte(0, 255);
  std::vector<double> stats;
  stats.reserve(static_cast<std::size_t>(streams));
  Bytes buffer(stream_bytes);
  for (int s = 0; s < streams; ++s) {
    for (auto& b : buffer) b = static_cast<std::uint8_t>(byte(rng));
    stats.push_back(chi_square_uniform(ascii_histogram(buffer)));
  }
  std::sort(stats.begin(), stats.end());
  // Nearest-rank percentile.
  const auto rank = static_cast<std::size_t>(std::ceil(quantile * static_cast<double>(stats.size())));
  return stats[std::clamp<std::size_t>(rank, 1, stats.size()) - 1];
}

}  // namespace mvsteg::analysis
