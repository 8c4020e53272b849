#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "mvsteg/bytes.hpp"
#include "mvsteg/cli.hpp"
#include "mvsteg/formats/container.hpp"
#include "mvsteg/formats/pnm.hpp"
#include "mvsteg/formats/wav.hpp"
#include "mvsteg/formats/y4m.hpp"
#include "support/synthetic.hpp"

namespace fs = std::filesystem;
using namespace mvsteg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("mvsteg_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

Bytes text(std::string_view s) { return Bytes(s.begin(), s.end()); }

void write_video(const std::string& path, const RawVideo& v) { write_file(path, formats::write_y4m(v)); }

}  // namespace

TEST_CASE("cli: embed, extract, decode") {
  TempDir dir;
  write_video(dir / "in.y4m", testing::moving_gradient(96, 64, 24));
  write_file(dir / "secret.bin", text("meet me by the old mill"));

  for (const char* mode : {"all-mb-x", "all-mb-y", "coeff"}) {
    CAPTURE(mode);
    auto r = run({"embed", "--in", dir / "in.y4m", "--out", dir / "s.svst", "--payload", dir / "secret.bin", "--mode",
                  mode});
    REQUIRE(r.code == 0);
    r = run({"extract", "--in", dir / "s.svst"});
    CHECK(r.code == 0);
    CHECK(r.out == "meet me by the old mill");
    CHECK(r.err.find(mode) != std::string::npos);
  }

  auto r = run({"decode", "--in", dir / "s.svst", "--out", dir / "out.y4m"});
  CHECK(r.code == 0);
  const RawVideo decoded = formats::read_y4m(read_file(dir / "out.y4m"));
  CHECK(decoded.frames.size() == 24);
  CHECK(decoded.width == 96);
}

TEST_CASE("cli: keyed embedding") {
  TempDir dir;
  write_video(dir / "in.y4m", testing::moving_gradient(96, 64, 24));
  write_file(dir / "secret.bin", text("keyed"));
  const std::string key = "000102030405060708090a0b0c0d0e0f";
  auto r = run({"embed", "--in", dir / "in.y4m", "--out", dir / "s.svst", "--payload", dir / "secret.bin", "--key", key});
  REQUIRE(r.code == 0);
  CHECK(r.err.rfind("nonce: ", 0) == 0);
  CHECK(run({"extract", "--in", dir / "s.svst", "--key", key}).out == "keyed");
  CHECK(run({"extract", "--in", dir / "s.svst"}).code == 1);
  CHECK(run({"extract", "--in", dir / "s.svst", "--key", "ffffffffffffffffffffffffffffffff"}).code == 1);
  CHECK(run({"extract", "--in", dir / "s.svst", "--key", "abc"}).code == 2);

  r = run({"embed", "--in", dir / "in.y4m", "--out", dir / "t.svst", "--payload", dir / "secret.bin", "--key", key,
           "--nonce", "0f0e0d0c0b0a09080706050403020100"});
  CHECK(r.code == 0);
  CHECK(r.err.find("nonce:") == std::string::npos);
}

TEST_CASE("cli: domain failures exit 1") {
  TempDir dir;
  write_video(dir / "in.y4m", testing::moving_gradient(64, 48, 14));
  REQUIRE(run({"transcode", "--in", dir / "in.y4m", "--out", dir / "plain.svst"}).code == 0);
  const auto r = run({"extract", "--in", dir / "plain.svst"});
  CHECK(r.code == 1);
  CHECK(r.err.find("no payload found") != std::string::npos);

  write_file(dir / "big.bin", Bytes(500, 1));
  CHECK(run({"embed", "--in", dir / "in.y4m", "--out", dir / "x.svst", "--payload", dir / "big.bin"}).code == 1);
  CHECK(!fs::exists(dir / "x.svst"));
}

TEST_CASE("cli: usage failures exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"embed", "--in", "x.y4m"}).code == 2);
  CHECK(run({"capacity", "--in", "x.y4m", "--mode", "sideways"}).code == 2);
  CHECK(run({"capacity", "--in", "x.y4m", "--gop", "0"}).code == 2);
  CHECK(run({"capacity", "--in", "/nonexistent/path.y4m"}).code == 2);
  TempDir dir;
  write_file(dir / "junk.y4m", text("not a video"));
  CHECK(run({"capacity", "--in", dir / "junk.y4m"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: capacity report") {
  TempDir dir;
  write_video(dir / "in.y4m", testing::moving_gradient(96, 64, 26));
  auto r = run({"capacity", "--in", dir / "in.y4m", "--mode", "first-mb-x"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("mode: first-mb-x\n") != std::string::npos);
  CHECK(r.out.find("estimated_bits: 23\n") != std::string::npos);
  CHECK(r.out.find("estimated_payload_bytes: 0\n") != std::string::npos);
  CHECK(r.out.find("caveat: approximate") != std::string::npos);

  r = run({"capacity", "--in", dir / "in.y4m", "--gop", "1"});
  CHECK(r.out.find("estimated_bits: 0\n") != std::string::npos);
}

TEST_CASE("cli: audio passthrough") {
  TempDir dir;
  write_video(dir / "in.y4m", testing::moving_gradient(48, 32, 6));
  formats::WavFile wav;
  wav.samples = Bytes(200, 9);
  const Bytes wav_bytes = formats::write_wav(wav);
  write_file(dir / "a.wav", wav_bytes);
  REQUIRE(run({"transcode", "--in", dir / "in.y4m", "--out", dir / "c.svst", "--audio", dir / "a.wav"}).code == 0);
  REQUIRE(run({"decode", "--in", dir / "c.svst", "--out", dir / "o.y4m", "--audio", dir / "o.wav"}).code == 0);
  CHECK(read_file(dir / "o.wav") == wav_bytes);
  write_file(dir / "bad.wav", text("RIFF but not really"));
  CHECK(run({"transcode", "--in", dir / "in.y4m", "--out", dir / "d.svst", "--audio", dir / "bad.wav"}).code == 2);
}

TEST_CASE("cli: invert-mv and analysis reports") {
  TempDir dir;
  write_video(dir / "in.y4m", testing::moving_gradient(64, 48, 14));
  REQUIRE(run({"transcode", "--in", dir / "in.y4m", "--out", dir / "p.svst"}).code == 0);
  REQUIRE(run({"invert-mv", "--in", dir / "p.svst", "--out", dir / "i.svst"}).code == 0);
  auto r = run({"mv-diff", "--in", dir / "p.svst", "--ref", dir / "i.svst"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("frame,mb,mode_a,mode_b,ddx,ddy\n", 0) == 0);

  REQUIRE(run({"decode", "--in", dir / "p.svst", "--out", dir / "p.y4m"}).code == 0);
  r = run({"psnr", "--in", dir / "p.y4m", "--ref", dir / "in.y4m"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("frame,y,cb,cr\n0,", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 15);

  write_video(dir / "small.y4m", testing::moving_gradient(32, 32, 14));
  CHECK(run({"psnr", "--in", dir / "p.y4m", "--ref", dir / "small.y4m"}).code == 1);
  REQUIRE(run({"transcode", "--in", dir / "small.y4m", "--out", dir / "s.svst"}).code == 0);
  CHECK(run({"mv-diff", "--in", dir / "p.svst", "--ref", dir / "s.svst"}).code == 1);
}

TEST_CASE("cli: lsb tools on PNM and WAV covers") {
  TempDir dir;
  std::mt19937 rng(5);
  formats::PnmImage img{64, 64, 3, Bytes(64 * 64 * 3)};
  for (auto& b : img.pixels) b = static_cast<std::uint8_t>(rng());
  write_file(dir / "cover.ppm", formats::write_pnm(img));
  write_file(dir / "msg.txt", text("lsb message"));

  REQUIRE(run({"lsb-embed", "--in", dir / "cover.ppm", "--out", dir / "stego.ppm", "--payload", dir / "msg.txt"}).code == 0);
  CHECK(run({"lsb-extract", "--in", dir / "stego.ppm"}).out == "lsb message");

  const std::string key = "2b7e151628aed2a6abf7158809cf4f3c";
  REQUIRE(run({"lsb-embed", "--in", dir / "cover.ppm", "--out", dir / "enc.ppm", "--payload", dir / "msg.txt", "--key",
               key})
              .code == 0);
  CHECK(run({"lsb-extract", "--in", dir / "enc.ppm", "--key", key}).out == "lsb message");

  auto r = run({"hist-lsb", "--in", dir / "stego.ppm"});
  CHECK(r.code == 0);
  write_file(dir / "h.csv", text(r.out));
  r = run({"chi2", "--in", dir / "h.csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("chi2,", 0) == 0);
  CHECK(r.out.find("\nthreshold,") != std::string::npos);
  CHECK(r.out.find("\nverdict,") != std::string::npos);

  formats::WavFile wav;
  wav.samples = Bytes(4000, 0);
  write_file(dir / "cover.wav", formats::write_wav(wav));
  REQUIRE(run({"lsb-embed", "--in", dir / "cover.wav", "--out", dir / "stego.wav", "--payload", dir / "msg.txt"}).code == 0);
  CHECK(run({"lsb-extract", "--in", dir / "stego.wav"}).out == "lsb message");

  REQUIRE(run({"inject", "--in", dir / "cover.wav", "--out", dir / "inj.wav", "--payload", dir / "msg.txt"}).code == 0);
  CHECK(run({"extract-appended", "--in", dir / "inj.wav"}).out == "lsb message");
  CHECK(run({"inject", "--in", dir / "msg.txt", "--out", dir / "x.wav", "--payload", dir / "msg.txt"}).code == 2);
}

TEST_CASE("cli binary: exit statuses") {
  auto status = [](const std::string& args) {
    const int raw = std::system((std::string(MVSTEG_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("--help") == 0);
  CHECK(status("frobnicate") == 2);
  TempDir dir;
  write_video(dir / "in.y4m", testing::moving_gradient(48, 32, 14));
  CHECK(status("transcode --in " + (dir / "in.y4m") + " --out " + (dir / "p.svst")) == 0);
  CHECK(status("extract --in " + (dir / "p.svst")) == 1);
}
