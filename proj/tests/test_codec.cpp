#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

#include "mvsteg/analysis/quality.hpp"
#include "mvsteg/codec/codec.hpp"
#include "mvsteg/codec/macroblock.hpp"
#include "mvsteg/codec/quant.hpp"
#include "mvsteg/codec/transform.hpp"
#include "mvsteg/error.hpp"
#include "support/synthetic.hpp"

using namespace mvsteg;
using namespace mvsteg::codec;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::Io;
}

double texture(double x, double y) { return 128 + 50 * std::sin(x / 5.0) * std::cos(y / 7.0) + 0.3 * x; }

Plane make_plane(int w, int h, double shift_x) {
  Plane p(h, w);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) p(y, x) = testing::clamp_sample(texture(x - shift_x, y));
  return p;
}

// Full search by enumeration: every in-bounds candidate, ranked by
// (sad, |dx|+|dy|, dy, dx).
MotionDecision brute_force_search(const Plane& cur, const Plane& ref, MacroblockOrigin o, const CodecParams& p) {
  std::tuple<std::int64_t, int, int, int> best{INT64_MAX, 0, 0, 0};
  for (int dy = -p.search_range; dy <= p.search_range; ++dy)
    for (int dx = -p.search_range; dx <= p.search_range; ++dx) {
      if (o.x + dx < 0 || o.y + dy < 0 || o.x + dx + 16 > ref.cols() || o.y + dy + 16 > ref.rows()) continue;
      std::int64_t sad = 0;
      for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) sad += std::abs(int(cur(o.y + r, o.x + c)) - int(ref(o.y + dy + r, o.x + dx + c)));
      best = std::min(best, std::make_tuple(sad, std::abs(dx) + std::abs(dy), dy, dx));
    }
  MotionDecision d;
  d.sad = std::get<0>(best);
  d.mv = {4 * std::get<3>(best), 4 * std::get<2>(best)};
  d.mode = d.sad > p.intra_sad_threshold ? MbMode::Intra : MbMode::Inter;
  return d;
}

// Textbook double sum for the orthonormal 2-D DCT-II.
Block8<double> dct_oracle(const Block8<double>& x) {
  Block8<double> out;
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) {
      double s = 0;
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
          s += x(i, j) * std::cos((2 * i + 1) * u * std::numbers::pi / 16) * std::cos((2 * j + 1) * v * std::numbers::pi / 16);
      const double cu = u == 0 ? std::sqrt(0.125) : 0.5;
      const double cv = v == 0 ? std::sqrt(0.125) : 0.5;
      out(u, v) = cu * cv * s;
    }
  return out;
}

std::string bit_string(const Bytes& data, std::size_t bits) {
  std::string s;
  for (std::size_t i = 0; i < bits; ++i) s.push_back((data[i / 8] >> (7 - i % 8)) & 1 ? '1' : '0');
  return s;
}

}  // namespace

TEST_CASE("partition: macroblock counts in raster order") {
  CHECK(partition(1920, 1088).size() == 8160);
  CHECK(partition(320, 240).size() == 300);
  const auto one = partition(16, 16);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == MacroblockOrigin{0, 0});
  const auto grid = partition(48, 32);
  CHECK(grid[1] == MacroblockOrigin{16, 0});
  CHECK(grid[3] == MacroblockOrigin{0, 16});
  CHECK(code_of([] { partition(1920, 1080); }) == Errc::InvalidDims);
  CHECK(code_of([] { partition(0, 16); }) == Errc::InvalidDims);
}

TEST_CASE("pad_frame: replicates edges and crops back") {
  const RawVideo v = testing::random_video(3, 3, 2);
  const Frame& f = v.frames[0];
  const Frame aligned = pad_frame(testing::static_video(32, 16, 1).frames[0], 32, 16);
  CHECK(aligned == testing::static_video(32, 16, 1).frames[0]);

  const Frame padded = pad_frame(f, coded_extent(f.width()), coded_extent(f.height()));
  CHECK(padded.width() % 16 == 0);
  CHECK(crop_frame(padded, f.width(), f.height()) == f);
  CHECK(padded.y(padded.height() - 1, padded.width() - 1) == f.y(f.height() - 1, f.width() - 1));

  Frame hd = Frame::filled(64, 1080, 0);
  for (int y = 0; y < 1080; ++y) hd.y.row(y).setConstant(static_cast<std::uint8_t>(y % 251));
  const Frame hd_padded = pad_frame(hd, 64, 1088);
  CHECK(hd_padded.height() == 1088);
  for (int y = 1080; y < 1088; ++y) CHECK(hd_padded.y.row(y) == hd.y.row(1079));
}

TEST_CASE("motion_estimate: static scene") {
  const Plane p = make_plane(64, 64, 0);
  const MotionDecision d = motion_estimate(p, p, {16, 16}, CodecParams{});
  CHECK(d.mv == MotionVector{0, 0});
  CHECK(d.sad == 0);
  CHECK(d.mode == MbMode::Inter);
}

TEST_CASE("motion_estimate: reference shifted by +4 pels") {
  const Plane cur = make_plane(96, 64, 0);
  const Plane ref = make_plane(96, 64, 4);  // ref(x) = cur(x - 4)
  const CodecParams params;
  const MotionDecision oracle = brute_force_search(cur, ref, {32, 16}, params);
  CHECK(oracle.mv == MotionVector{16, 0});
  const MotionDecision d = motion_estimate(cur, ref, {32, 16}, params);
  CHECK(d.mv == oracle.mv);
  CHECK(d.sad == oracle.sad);
  CHECK(d.sad == 0);
}

TEST_CASE("motion_estimate: agrees with brute force on random planes") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    CodecParams params;
    params.search_range = static_cast<int>(rng() % 6);
    // Few distinct levels produce plenty of SAD ties to exercise tie-breaking.
    Plane cur(48, 48), ref(48, 48);
    const int levels = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < cur.size(); ++i) {
      cur.data()[i] = static_cast<std::uint8_t>(rng() % levels * 10);
      ref.data()[i] = static_cast<std::uint8_t>(rng() % levels * 10);
    }
    for (auto o : partition(48, 48)) {
      const MotionDecision got = motion_estimate(cur, ref, o, params);
      const MotionDecision want = brute_force_search(cur, ref, o, params);
      REQUIRE(got.mv == want.mv);
      REQUIRE(got.sad == want.sad);
      REQUIRE(got.mode == want.mode);
    }
  }
}

TEST_CASE("motion_estimate: noise against a flat reference goes intra") {
  std::mt19937 rng(9);
  Plane cur(32, 32);
  for (int i = 0; i < cur.size(); ++i) cur.data()[i] = static_cast<std::uint8_t>(rng());
  const Plane ref = Plane::Constant(32, 32, 128);
  const CodecParams params;
  std::int64_t direct = 0;
  for (int i = 0; i < 256; ++i) direct += std::abs(int(cur(i / 16, i % 16)) - 128);
  REQUIRE(direct > params.intra_sad_threshold);
  const MotionDecision d = motion_estimate(cur, ref, {0, 0}, params);
  CHECK(d.sad == direct);  // flat reference: every candidate ties, (0,0) wins
  CHECK(d.mode == MbMode::Intra);
}

TEST_CASE("motion_compensate") {
  Frame ref = Frame::filled(64, 64, 0);
  ref.y = make_plane(64, 64, 4);
  Frame cur = Frame::filled(64, 64, 0);
  cur.y = make_plane(64, 64, 0);

  const Prediction same = motion_compensate(cur, {0, 0}, {16, 16});
  CHECK(same.y == cur.y.block<16, 16>(16, 16));

  const Prediction shifted = motion_compensate(ref, {16, 0}, {16, 16});
  CHECK(shifted.y == cur.y.block<16, 16>(16, 16));

  const Prediction one = motion_compensate(cur, {4, 0}, {16, 16});
  CHECK(one.y.leftCols(15) == same.y.rightCols(15));
  CHECK(one.y.col(15) == cur.y.block<16, 1>(16, 32));

  // Out-of-plane reads clamp to the edge.
  const Prediction edge = motion_compensate(cur, {-64, 0}, {0, 0});
  for (int c = 0; c < 16; ++c) CHECK(edge.y.col(c) == cur.y.block<16, 1>(0, 0));

  // Chroma moves by half the luma pels, truncating toward zero.
  Frame ramp = Frame::filled(64, 64, 0);
  for (int x = 0; x < 32; ++x) ramp.cb.col(x).setConstant(static_cast<std::uint8_t>(x));
  CHECK(motion_compensate(ramp, {12, 0}, {16, 16}).cb(0, 0) == 8 + 1);
  CHECK(motion_compensate(ramp, {-12, 0}, {16, 16}).cb(0, 0) == 8 - 1);
}

TEST_CASE("dct8: constant, zero, and random blocks") {
  const Block8<double> constant = Block8<double>::Constant(5.0);
  const Block8<double> c = dct8(constant);
  CHECK(c(0, 0) == doctest::Approx(40.0));
  CHECK((c.array().abs() > 1e-12).count() == 1);
  CHECK(dct8(Block8<double>::Zero()).isZero());

  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-255, 255);
  for (int trial = 0; trial < 50; ++trial) {
    Block8<double> x;
    for (int i = 0; i < 64; ++i) x(i) = u(rng);
    const Block8<double> coeffs = dct8(x);
    CHECK((coeffs - dct_oracle(x)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((idct8(coeffs) - x).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("quantise: rounding and error bound") {
  CHECK(quantise(0.0, 1) == 0);
  CHECK(quantise(0.0, 63) == 0);
  CHECK(quantise(150.0, 8) == 19);
  CHECK(dequantise(19, 8) == 152.0);
  CHECK(quantise(4.0, 8) == 1);    // half rounds away from zero
  CHECK(quantise(-4.0, 8) == -1);
  for (int qp : {1, 8, 32}) {
    double worst = 0;
    for (int c = -223; c <= 150; ++c) worst = std::max(worst, std::abs(c - dequantise(quantise(double(c), qp), qp)));
    CHECK(worst <= qp / 2.0);
  }
  const Block8<double> coeffs = Block8<double>::Constant(-13.0);
  CHECK((quantise(coeffs, 8).array() == -2).all());
}

TEST_CASE("macroblock coding: codewords") {
  formats::BitWriter skip;
  encode_macroblock(skip, MacroblockRecord{});
  CHECK(skip.bit_count() == 3);
  CHECK(bit_string(skip.bytes(), 3) == "011");

  MacroblockRecord inter;
  inter.mode = MbMode::Inter;
  inter.mv = MotionVector{16, 0};
  formats::BitWriter w;
  encode_macroblock(w, inter);
  // ue(0), se(16) = ue(31), se(0), then six empty blocks ue(0).
  CHECK(bit_string(w.bytes(), w.bit_count()) == std::string("1") + "00000100000" + "1" + "111111");
}

TEST_CASE("macroblock coding: random records round-trip") {
  std::mt19937 rng(4);
  formats::BitWriter w;
  std::vector<MacroblockRecord> records;
  for (int i = 0; i < 500; ++i) {
    MacroblockRecord rec;
    rec.mode = static_cast<MbMode>(rng() % 3);
    if (rec.mode == MbMode::Inter) rec.mv = MotionVector{int(rng() % 137) - 68, int(rng() % 137) - 68};
    if (rec.mode != MbMode::Skip)
      for (auto& b : rec.levels)
        for (int k = 0; k < 64; ++k)
          if (rng() % 5 == 0) b(k) = int(rng() % 401) - 200;
    encode_macroblock(w, rec);
    records.push_back(rec);
  }
  const Bytes data = std::move(w).finish();
  formats::BitReader r(data);
  for (const auto& rec : records) REQUIRE(decode_macroblock(r) == rec);
}

TEST_CASE("macroblock coding: corrupt streams") {
  auto decode_bits = [](const std::string& bits) {
    formats::BitWriter w;
    for (char c : bits) w.put_bit(c == '1');
    const Bytes data = std::move(w).finish();
    formats::BitReader r(data);
    return decode_macroblock(r);
  };
  // intra, block 0 with one coefficient whose level is se(0).
  CHECK(code_of([&] { decode_bits("010" "010" "1" "1"); }) == Errc::CorruptContainer);
  // intra, one coefficient at run 64.
  CHECK(code_of([&] { decode_bits("010" "010" "00000100001" "010"); }) == Errc::CorruptContainer);
  // mode 3.
  CHECK(code_of([&] { decode_bits("00100"); }) == Errc::CorruptContainer);
  // stream ends mid-record.
  CHECK(code_of([&] { decode_bits("010"); }) == Errc::CorruptContainer);
}

TEST_CASE("encode_video: static video frame types and skip blocks") {
  const RawVideo v = testing::static_video(48, 32, 13, 90);
  CodecParams params;
  params.gop_size = 12;
  const auto c = encode_video(v, params);
  REQUIRE(c.frames.size() == 13);
  for (std::size_t i = 0; i < 13; ++i)
    CHECK(c.frames[i].type == (i == 0 || i == 12 ? formats::FrameType::I : formats::FrameType::P));

  int hook_calls = 0;
  EncoderHooks hooks;
  hooks.on_motion = [&](const MacroblockContext& ctx) {
    ++hook_calls;
    return *ctx.mv;
  };
  encode_video(v, params, hooks);
  CHECK(hook_calls == 0);

  decode_video(c, [&](const MacroblockContext& ctx, const MacroblockRecord& rec) {
    if (ctx.frame_type == formats::FrameType::P)
      CHECK(rec.mode == MbMode::Skip);
    else
      CHECK(rec.mode == MbMode::Intra);
    CHECK_FALSE(ctx.mv.has_value());
  });
}

TEST_CASE("encode_video: quality on the moving gradient") {
  const RawVideo v = testing::moving_gradient(96, 64, 14);
  const auto c = encode_video(v, CodecParams{});
  CHECK(analysis::mean_luma_psnr(v, decode_video(c)) >= 30.0);
}

TEST_CASE("encode_video: drift-free and deterministic on random videos") {
  for (std::uint32_t seed = 100; seed < 110; ++seed) {
    const RawVideo v = testing::random_video(seed);
    CodecParams params;
    params.gop_size = 1 + static_cast<int>(seed % 5);
    params.qp = 1 + static_cast<int>(seed * 7 % 40);
    params.search_range = static_cast<int>(seed % 9);
    RawVideo recon;
    const auto c = encode_video(v, params, {}, &recon);
    const RawVideo decoded = decode_video(c);
    REQUIRE(decoded == recon);
    REQUIRE(decode_video(c) == decoded);
    REQUIRE(formats::write_container(encode_video(v, params)) == formats::write_container(c));
  }
}

TEST_CASE("encode_video: hook flipping bit 2 is carried losslessly") {
  const RawVideo v = testing::moving_gradient(64, 48, 10);
  std::vector<MotionVector> emitted;
  EncoderHooks hooks;
  hooks.on_motion = [&](const MacroblockContext& ctx) {
    CHECK(ctx.mode == MbMode::Inter);
    CHECK(ctx.frame_type == formats::FrameType::P);
    MotionVector mv{*ctx.mv};
    mv.dx ^= 4;
    emitted.push_back(mv);
    return mv;
  };
  RawVideo recon;
  const auto c = encode_video(v, CodecParams{}, hooks, &recon);
  std::vector<MotionVector> observed;
  const RawVideo decoded = decode_video(c, [&](const MacroblockContext& ctx, const MacroblockRecord&) {
    if (ctx.mode == MbMode::Inter) observed.push_back(*ctx.mv);
  });
  CHECK(!emitted.empty());
  CHECK(observed == emitted);
  CHECK(decoded == recon);
}

TEST_CASE("encode_video: hook range and parameter errors") {
  const RawVideo v = testing::moving_gradient(48, 48, 3);
  CodecParams params;
  params.search_range = 4;
  EncoderHooks ok;
  ok.on_motion = [](const MacroblockContext&) { return MotionVector{20, -20}; };
  CHECK_NOTHROW(encode_video(v, params, ok));
  EncoderHooks too_far;
  too_far.on_motion = [](const MacroblockContext&) { return MotionVector{24, 0}; };
  CHECK(code_of([&] { encode_video(v, params, too_far); }) == Errc::HookRangeError);

  CodecParams bad;
  bad.qp = 0;
  CHECK(code_of([&] { encode_video(v, bad); }) == Errc::InvalidParams);
  bad = CodecParams{};
  bad.gop_size = 0;
  CHECK(code_of([&] { encode_video(v, bad); }) == Errc::InvalidParams);
  CHECK(code_of([&] { encode_video(RawVideo{16, 16, 25, 1, {}}, CodecParams{}); }) == Errc::EmptyInput);
}

TEST_CASE("decode_video: corrupt frame data") {
  const RawVideo v = testing::moving_gradient(32, 32, 3);
  auto c = encode_video(v, CodecParams{});
  auto truncated = c;
  truncated.frames[1].data.resize(1);
  CHECK(code_of([&] { decode_video(truncated); }) == Errc::CorruptContainer);
  auto padded = c;
  padded.frames[1].data.push_back(0);
  CHECK(code_of([&] { decode_video(padded); }) == Errc::CorruptContainer);
}
