#include "mvsteg/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "mvsteg/analysis/histogram.hpp"
#include "mvsteg/analysis/mv_diff.hpp"
#include "mvsteg/analysis/quality.hpp"
#include "mvsteg/codec/codec.hpp"
#include "mvsteg/error.hpp"
#include "mvsteg/formats/container.hpp"
#include "mvsteg/formats/pnm.hpp"
#include "mvsteg/formats/wav.hpp"
#include "mvsteg/formats/y4m.hpp"
#include "mvsteg/lsb.hpp"
#include "mvsteg/stego/coeff.hpp"
#include "mvsteg/stego/embed.hpp"
#include "mvsteg/stego/invert.hpp"

namespace mvsteg::cli {
namespace {

struct CommandConfig {
  std::string input;
  std::string reference;
  std::string output;
  std::string payload;
  std::string audio;
  std::string mode = "all-mb-x";
  std::string key_hex;
  std::string nonce_hex;
  bool pre_quant = false;
  std::uint32_t seed = 20130601;
  codec::CodecParams params;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InsufficientCapacity:
    case Errc::NoPayloadFound:
    case Errc::CorruptPayload:
    case Errc::KeyRequired:
    case Errc::HookRangeError:
    case Errc::InvalidComparison:
    case Errc::InvalidDims:
    case Errc::EmptyInput:
      return 1;
    default:
      return 2;
  }
}

stego::EmbedMode mode_of(const CommandConfig& cfg) {
  auto m = stego::parse_embed_mode(cfg.mode);
  if (!m) throw Error(Errc::InvalidParams, "unknown mode '" + cfg.mode + "'");
  return *m;
}

std::optional<crypto::SymmetricKey> key_of(const CommandConfig& cfg) {
  if (cfg.key_hex.empty()) return std::nullopt;
  return crypto::SymmetricKey::from_hex(cfg.key_hex);
}

// Nonces are generated when omitted and echoed so a run can be repeated.
std::optional<stego::Encryption> encryption_of(const CommandConfig& cfg, std::ostream& err) {
  auto key = key_of(cfg);
  if (!key) {
    if (!cfg.nonce_hex.empty()) throw Error(Errc::InvalidParams, "--nonce needs --key");
    return std::nullopt;
  }
  const crypto::Nonce nonce = cfg.nonce_hex.empty() ? crypto::random_nonce() : crypto::nonce_from_hex(cfg.nonce_hex);
  if (cfg.nonce_hex.empty()) err << "nonce: " << to_hex(nonce) << '\n';
  return stego::Encryption{*key, nonce};
}

std::optional<Bytes> audio_of(const CommandConfig& cfg) {
  if (cfg.audio.empty()) return std::nullopt;
  Bytes wav = read_file(cfg.audio);
  formats::read_wav(wav);
  return wav;
}

void emit(const CommandConfig& cfg, ByteView bytes, std::ostream& out) {
  if (cfg.output.empty())
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  else
    write_file(cfg.output, bytes);
}

void emit_text(const CommandConfig& cfg, const std::string& text, std::ostream& out) {
  emit(cfg, ByteView(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()), out);
}

RawVideo load_y4m(const std::string& path) { return formats::read_y4m(read_file(path)); }
formats::StegoContainer load_container(const std::string& path) { return formats::read_container(read_file(path)); }

// LSB covers: the pixel bytes of a PNM or the sample bytes of a WAV.
struct Cover {
  std::optional<formats::PnmImage> pnm;
  std::optional<formats::WavFile> wav;

  Bytes& bytes() { return pnm ? pnm->pixels : wav->samples; }
  Bytes serialize() const { return pnm ? formats::write_pnm(*pnm) : formats::write_wav(*wav); }
};

Cover load_cover(const std::string& path) {
  const Bytes data = read_file(path);
  Cover c;
  if (data.size() >= 4 && data[0] == 'R' && data[1] == 'I' && data[2] == 'F' && data[3] == 'F')
    c.wav = formats::read_wav(data);
  else
    c.pnm = formats::read_pnm(data);
  return c;
}

void cmd_transcode(const CommandConfig& cfg, std::ostream&, std::ostream& err) {
  auto container = codec::encode_video(load_y4m(cfg.input), cfg.params);
  container.audio = audio_of(cfg);
  write_file(cfg.output, formats::write_container(container));
  err << "transcoded " << container.frames.size() << " frames\n";
}

void cmd_decode(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto container = load_container(cfg.input);
  emit(cfg, formats::write_y4m(codec::decode_video(container)), out);
  if (!cfg.audio.empty()) {
    if (!container.audio) throw Error(Errc::EmptyInput, "container carries no audio");
    write_file(cfg.audio, *container.audio);
  } else if (container.audio) {
    err << "container carries " << container.audio->size() << " bytes of audio (use --audio to save)\n";
  }
}

void cmd_embed(const CommandConfig& cfg, std::ostream&, std::ostream& err) {
  const RawVideo video = load_y4m(cfg.input);
  const Bytes payload = read_file(cfg.payload);
  stego::EmbedOptions opts{encryption_of(cfg, err), audio_of(cfg)};
  const auto container = stego::embed(video, payload, mode_of(cfg), cfg.params, opts);
  write_file(cfg.output, formats::write_container(container));
  err << "embedded " << payload.size() << " bytes (" << stego::to_string(mode_of(cfg)) << ")\n";
}

void cmd_embed_coeff(const CommandConfig& cfg, std::ostream&, std::ostream& err) {
  const RawVideo video = load_y4m(cfg.input);
  const Bytes payload = read_file(cfg.payload);
  stego::EmbedOptions opts{encryption_of(cfg, err), audio_of(cfg)};
  const auto container = stego::embed_coeff(video, payload, cfg.params, cfg.pre_quant, opts);
  write_file(cfg.output, formats::write_container(container));
  err << "embedded " << payload.size() << " bytes (coeff, " << (cfg.pre_quant ? "pre" : "post")
      << "-quantisation)\n";
}

void cmd_extract(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto key = key_of(cfg);
  const auto result = stego::extract_detailed(load_container(cfg.input), key ? &*key : nullptr);
  emit(cfg, result.plaintext, out);
  err << "extracted " << result.plaintext.size() << " bytes (" << stego::to_string(result.mode) << ")\n";
}

void cmd_capacity(const CommandConfig& cfg, std::ostream& out, std::ostream&) {
  const RawVideo video = load_y4m(cfg.input);
  const auto report = stego::estimate_capacity(video, cfg.params, mode_of(cfg));
  std::ostringstream text;
  text << "mode: " << stego::to_string(report.mode) << '\n'
       << "estimated_bits: " << report.estimated_bits << '\n'
       << "estimated_payload_bytes: "
       << (report.estimated_bits / 8 > stego::kPayloadOverheadBytes ? report.estimated_bits / 8 -
                                                                          stego::kPayloadOverheadBytes
                                                                    : 0)
       << '\n'
       << "caveat: approximate; embedding perturbs motion vectors and later coding decisions, so the "
          "achievable capacity may differ\n";
  emit_text(cfg, text.str(), out);
}

void cmd_invert(const CommandConfig& cfg, std::ostream&, std::ostream&) {
  write_file(cfg.output, formats::write_container(stego::invert_motion_vectors(load_container(cfg.input))));
}

void cmd_lsb_embed(const CommandConfig& cfg, std::ostream&, std::ostream& err) {
  Cover cover = load_cover(cfg.input);
  Bytes payload = read_file(cfg.payload);
  if (auto enc = encryption_of(cfg, err)) {
    Bytes sealed(enc->nonce.begin(), enc->nonce.end());
    const Bytes cipher = crypto::ctr_transform(enc->key, enc->nonce, payload);
    sealed.insert(sealed.end(), cipher.begin(), cipher.end());
    payload = std::move(sealed);
  }
  cover.bytes() = lsb::lsb_embed(cover.bytes(), payload);
  write_file(cfg.output, cover.serialize());
}

void cmd_lsb_extract(const CommandConfig& cfg, std::ostream& out, std::ostream&) {
  Cover cover = load_cover(cfg.input);
  Bytes payload = lsb::lsb_extract(cover.bytes());
  if (auto key = key_of(cfg)) {
    if (payload.size() < 16) throw Error(Errc::CorruptPayload, "payload too short to hold a nonce");
    crypto::Nonce nonce;
    std::copy_n(payload.begin(), 16, nonce.begin());
    payload = crypto::ctr_transform(*key, nonce, ByteView(payload).subspan(16));
  }
  emit(cfg, payload, out);
}

void cmd_inject(const CommandConfig& cfg, std::ostream&, std::ostream&) {
  write_file(cfg.output, lsb::inject_append(read_file(cfg.input), read_file(cfg.payload)));
}

void cmd_extract_appended(const CommandConfig& cfg, std::ostream& out, std::ostream&) {
  emit(cfg, lsb::extract_appended(read_file(cfg.input)), out);
}

analysis::Histogram256 histogram_of(const std::string& path) {
  const Bytes data = read_file(path);
  const std::string_view text(reinterpret_cast<const char*>(data.data()), data.size());
  if (text.starts_with("value,count")) return analysis::parse_histogram_csv(text);
  Cover cover = load_cover(path);
  return analysis::ascii_histogram(analysis::lsb_stream_bytes(cover.bytes()));
}

void cmd_hist_lsb(const CommandConfig& cfg, std::ostream& out, std::ostream&) {
  Cover cover = load_cover(cfg.input);
  emit_text(cfg, analysis::histogram_csv(analysis::ascii_histogram(analysis::lsb_stream_bytes(cover.bytes()))), out);
}

void cmd_chi2(const CommandConfig& cfg, std::ostream& out, std::ostream&) {
  const auto hist = histogram_of(cfg.input);
  const double stat = analysis::chi_square_uniform(hist);
  const double threshold = analysis::calibrate_chi_square_threshold(cfg.seed);
  std::ostringstream text;
  text << "chi2," << stat << "\nthreshold," << threshold << "\nverdict,"
       << (stat > threshold ? "non-uniform" : "uniform") << '\n';
  emit_text(cfg, text.str(), out);
}

void cmd_psnr(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const RawVideo a = load_y4m(cfg.input);
  const RawVideo b = load_y4m(cfg.reference);
  if (a.frames.size() != b.frames.size()) throw Error(Errc::InvalidDims, "videos differ in frame count");
  std::ostringstream text;
  text << "frame,y,cb,cr\n";
  for (std::size_t i = 0; i < a.frames.size(); ++i) {
    const auto p = analysis::psnr(a.frames[i], b.frames[i]);
    text << i << ',' << p.y << ',' << p.cb << ',' << p.cr << '\n';
  }
  emit_text(cfg, text.str(), out);
  err << "mean luma psnr: " << analysis::mean_luma_psnr(a, b) << " dB\n";
}

void cmd_mv_diff(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto report = analysis::mv_diff_report(load_container(cfg.input), load_container(cfg.reference));
  emit_text(cfg, analysis::mv_diff_csv(report), out);
  err << "mean ddx " << report.mean_ddx << ", mean ddy " << report.mean_ddy << ", max ddx " << report.max_ddx
      << ", max ddy " << report.max_ddy << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motion-vector steganography in a block-based video codec", "mvsteg"};
  app.require_subcommand(1);
  CommandConfig cfg;

  using Handler = void (*)(const CommandConfig&, std::ostream&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto in_opt = [&](CLI::App* s) { s->add_option("--in", cfg.input, "Input file")->required(); };
  auto out_opt = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--out", cfg.output, "Output file");
    if (required) o->required();
  };
  auto codec_opts = [&](CLI::App* s) {
    s->add_option("--gop", cfg.params.gop_size, "GOP size (I-frame period)")->check(CLI::Range(1, 255));
    s->add_option("--qp", cfg.params.qp, "Quantiser step")->check(CLI::Range(1, 63));
    s->add_option("--search", cfg.params.search_range, "Motion search range in pels")->check(CLI::NonNegativeNumber);
  };
  auto key_opts = [&](CLI::App* s, bool with_nonce) {
    s->add_option("--key", cfg.key_hex, "AES key as 32/48/64 hex digits");
    if (with_nonce) s->add_option("--nonce", cfg.nonce_hex, "CTR nonce as 32 hex digits");
  };
  auto mode_opt = [&](CLI::App* s) {
    s->add_option("--mode", cfg.mode, "Embedding mode")
        ->check(CLI::IsMember({"first-mb-x", "first-mb-y", "all-mb-x", "all-mb-y", "coeff"}));
  };

  {
    auto* s = app.add_subcommand("transcode", "Encode a Y4M video into an SVST container");
    in_opt(s); out_opt(s, true); codec_opts(s);
    s->add_option("--audio", cfg.audio, "WAV file carried verbatim");
    commands.emplace_back(s, cmd_transcode);
  }
  {
    auto* s = app.add_subcommand("decode", "Decode an SVST container to Y4M");
    in_opt(s); out_opt(s, false);
    s->add_option("--audio", cfg.audio, "Write the carried WAV here");
    commands.emplace_back(s, cmd_decode);
  }
  {
    auto* s = app.add_subcommand("embed", "Hide a payload in motion vectors");
    in_opt(s); out_opt(s, true); codec_opts(s); key_opts(s, true); mode_opt(s);
    s->add_option("--payload", cfg.payload, "Payload file")->required();
    s->add_option("--audio", cfg.audio, "WAV file carried verbatim");
    commands.emplace_back(s, cmd_embed);
  }
  {
    auto* s = app.add_subcommand("extract", "Recover a payload from an SVST container");
    in_opt(s); out_opt(s, false); key_opts(s, false);
    commands.emplace_back(s, cmd_extract);
  }
  {
    auto* s = app.add_subcommand("capacity", "Estimate embedding capacity");
    in_opt(s); out_opt(s, false); codec_opts(s); mode_opt(s);
    commands.emplace_back(s, cmd_capacity);
  }
  {
    auto* s = app.add_subcommand("embed-coeff", "Hide a payload in quantised coefficient LSBs");
    in_opt(s); out_opt(s, true); codec_opts(s); key_opts(s, true);
    s->add_option("--payload", cfg.payload, "Payload file")->required();
    s->add_option("--audio", cfg.audio, "WAV file carried verbatim");
    s->add_flag("--pre-quant", cfg.pre_quant, "Embed before quantisation (lossy demonstration)");
    commands.emplace_back(s, cmd_embed_coeff);
  }
  {
    auto* s = app.add_subcommand("invert-mv", "Negate every motion vector of a container");
    in_opt(s); out_opt(s, true);
    commands.emplace_back(s, cmd_invert);
  }
  {
    auto* s = app.add_subcommand("lsb-embed", "LSB substitution into a PNM or WAV cover");
    in_opt(s); out_opt(s, true); key_opts(s, true);
    s->add_option("--payload", cfg.payload, "Payload file")->required();
    commands.emplace_back(s, cmd_lsb_embed);
  }
  {
    auto* s = app.add_subcommand("lsb-extract", "Read an LSB payload from a PNM or WAV cover");
    in_opt(s); out_opt(s, false); key_opts(s, false);
    commands.emplace_back(s, cmd_lsb_extract);
  }
  {
    auto* s = app.add_subcommand("inject", "Append a payload after a WAV data chunk");
    in_opt(s); out_opt(s, true);
    s->add_option("--payload", cfg.payload, "Payload file")->required();
    commands.emplace_back(s, cmd_inject);
  }
  {
    auto* s = app.add_subcommand("extract-appended", "Read bytes appended after a WAV data chunk");
    in_opt(s); out_opt(s, false);
    commands.emplace_back(s, cmd_extract_appended);
  }
  {
    auto* s = app.add_subcommand("hist-lsb", "Byte histogram of a cover's LSB stream as CSV");
    in_opt(s); out_opt(s, false);
    commands.emplace_back(s, cmd_hist_lsb);
  }
  {
    auto* s = app.add_subcommand("chi2", "Chi-square uniformity of a histogram CSV or cover LSB stream");
    in_opt(s); out_opt(s, false);
    s->add_option("--seed", cfg.seed, "Calibration seed");
    commands.emplace_back(s, cmd_chi2);
  }
  {
    auto* s = app.add_subcommand("psnr", "Per-frame PSNR between two Y4M files");
    in_opt(s); out_opt(s, false);
    s->add_option("--ref", cfg.reference, "Reference Y4M")->required();
    commands.emplace_back(s, cmd_psnr);
  }
  {
    auto* s = app.add_subcommand("mv-diff", "Motion vector comparison of two containers");
    in_opt(s); out_opt(s, false);
    s->add_option("--ref", cfg.reference, "Second container")->required();
    commands.emplace_back(s, cmd_mv_diff);
  }

  std::vector<const char*> argv;
  argv.push_back("mvsteg");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    for (auto [sub, handler] : commands) {
      if (sub->parsed()) {
        handler(cfg, out, err);
        return 0;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  err << app.help();
  return 2;
}

}  // namespace mvsteg::cli
