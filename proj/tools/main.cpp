// Copyright 2026 The ugcsat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ugcsat/codec.hpp"
#include "ugcsat/corpus.hpp"
#include "ugcsat/csv.hpp"
#include "ugcsat/denoise.hpp"
#include "ugcsat/gaussian_model.hpp"
#include "ugcsat/image_io.hpp"
#include "ugcsat/pipeline.hpp"
#include "ugcsat/reports.hpp"
#include "ugcsat/svg.hpp"

namespace {

using namespace ugcsat;

// Flag errors detected after CLI11 parsing still exit with the usage code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PipelineFlags {
  std::string grid = "14:90:4";
  int block_size = 8;
  std::string denoiser = "bayes_shrink";
  std::string wavelet = "db2";
  int levels = 3;
  double blur_sigma = 1.5;
  int blur_radius = 0;
  std::string denoise_command;
  std::string frames = "0,1,0";
  int jobs = 0;
  std::uint64_t seed = 0;
};

void add_pipeline_flags(CLI::App* sub, PipelineFlags& f) {
  sub->add_option("--grid", f.grid, "Quality grid, min:max:step or one value")
      ->capture_default_str();
  sub->add_option("--block-size", f.block_size, "Analysis block size in pixels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--denoiser", f.denoiser, "Reference denoiser")
      ->check(CLI::IsMember({"bayes_shrink", "gaussian_blur", "identity", "external"}))
      ->capture_default_str();
  sub->add_option("--wavelet", f.wavelet, "Wavelet family for bayes_shrink")
      ->check(CLI::IsMember({"haar", "db1", "db2", "db4"}))
      ->capture_default_str();
  sub->add_option("--levels", f.levels, "Decomposition levels for bayes_shrink")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--blur-sigma", f.blur_sigma, "Gaussian blur sigma")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--blur-radius", f.blur_radius,
                  "Gaussian blur kernel radius, 0 derives it from sigma")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--denoise-command", f.denoise_command,
                  "External denoiser command with {input} and {output}")
      ->capture_default_str();
  sub->add_option("--frames", f.frames, "Frame sampling start,stride,count (count 0 = all)")
      ->capture_default_str();
  sub->add_option("--jobs", f.jobs, "Worker threads, 0 = hardware concurrency")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--seed", f.seed, "Seed for randomized processing steps")
      ->capture_default_str();
}

FrameSampling parse_sampling(const std::string& text) {
  FrameSampling s;
  const auto fields = parse_csv_line(text);
  if (fields.size() != 3) {
    throw UsageError("--frames needs start,stride,count, got '" + text + "'");
  }
  try {
    s.start = std::stoi(fields[0]);
    s.stride = std::stoi(fields[1]);
    s.count = std::stoi(fields[2]);
  } catch (const std::exception&) {
    throw UsageError("--frames needs three integers, got '" + text + "'");
  }
  if (s.start < 0 || s.stride < 1 || s.count < 0) {
    throw UsageError("--frames needs start >= 0, stride >= 1, count >= 0");
  }
  return s;
}

PipelineConfig resolve_pipeline(const PipelineFlags& f) {
  PipelineConfig cfg;
  try {
    cfg.grid = parse_quality_grid(f.grid);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  cfg.block_size = f.block_size;
  cfg.denoiser.kind = parse_denoiser_kind(f.denoiser);
  cfg.denoiser.wavelet = parse_wavelet_family(f.wavelet);
  cfg.denoiser.levels = f.levels;
  cfg.denoiser.blur_sigma = f.blur_sigma;
  cfg.denoiser.blur_radius = f.blur_radius;
  cfg.denoiser.command = f.denoise_command;
  if (cfg.denoiser.kind == DenoiserKind::external && cfg.denoiser.command.empty()) {
    throw UsageError("--denoiser external requires --denoise-command");
  }
  cfg.sampling = parse_sampling(f.frames);
  cfg.jobs = f.jobs;
  cfg.seed = f.seed;
  return cfg;
}

std::filesystem::path prepare_out_dir(const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_run_config(const CLI::App& app, const std::filesystem::path& dir) {
  // config_to_str covers every subcommand; required numeric options of the
  // ones not invoked dump as empty strings that cannot be parsed back. Keep
  // only the invoked subcommand's keys so the file replays cleanly.
  const std::string prefix = app.get_subcommands().front()->get_name() + ".";
  std::istringstream full(app.config_to_str(true, false));
  std::string kept, line;
  while (std::getline(full, line)) {
    if (line.rfind(prefix, 0) == 0) kept += line + '\n';
  }
  write_text_file(dir / "run_config.ini", kept);
}

std::string frame_file_name(const char* prefix, int index, const char* ext) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s_%06d%s", prefix, index, ext);
  return buf;
}

int cmd_gaussian_model(const CLI::App& app, double var_x, double var_eta,
                       double rate_min, double rate_max, double rate_step,
                       const std::string& out_dir, bool svg) {
  if (rate_max < rate_min) throw UsageError("--rate-max must be >= --rate-min");
  const GaussianChannel ch(var_x, var_eta);
  const auto rows = gaussian_curve_table(ch, rate_min, rate_max, rate_step);

  const auto dir = prepare_out_dir(out_dir);
  write_gaussian_csv(dir / "gaussian.csv", rows);
  if (svg) {
    SvgSeries trad, ugc, floor;
    trad.label = "encode u, distortion vs u";
    trad.color = "#2ca02c";
    ugc.label = "encode u, distortion vs x";
    ugc.color = "#1f77b4";
    floor.label = "estimation floor D0";
    floor.color = "#d62728";
    for (const GaussianCurveRow& r : rows) {
      trad.points.push_back({r.rate, r.d_traditional});
      ugc.points.push_back({r.rate, r.d_ugc});
      floor.points.push_back({r.rate, r.d0});
    }
    write_svg_plot(dir / "gaussian.svg", "Gaussian distortion-rate with noisy source",
                   "rate (bits/sample)", "MSE", {trad, ugc, floor});
  }
  write_run_config(app, dir);
  std::printf("wrote %s (%zu rows)\n", (dir / "gaussian.csv").string().c_str(),
              rows.size());
  return 0;
}

int cmd_synth(const CLI::App& app, const std::string& input, const std::string& out_dir,
              const std::string& kind, int qp, int quality, const std::string& command,
              const std::string& frames, std::uint64_t seed) {
  DegradationSpec spec;
  spec.kind = parse_degradation_kind(kind);
  spec.qp = qp;
  spec.quality = quality;
  spec.command = command;
  if (spec.kind == DegradationKind::external && spec.command.empty()) {
    throw UsageError("--kind external requires --command");
  }
  if (spec.kind == DegradationKind::dct_quantize && (qp < 0 || qp > 51)) {
    throw UsageError("--qp must be in [0, 51]");
  }

  const FrameSet set = load_frame_set(input, parse_sampling(frames));
  const auto dir = prepare_out_dir(out_dir);
  for (std::size_t t = 0; t < set.frames.size(); ++t) {
    const Plane degraded = synthesize_ugc(set.frames[t], spec, seed);
    write_png_gray(dir / frame_file_name("ugc", set.indices[t], ".png"), degraded);
  }
  write_run_config(app, dir);
  std::printf("wrote %zu degraded frame(s) to %s\n", set.frames.size(),
              dir.string().c_str());
  return 0;
}

int cmd_analyze(const CLI::App& app, const std::string& input,
                const std::string& out_dir, const PipelineFlags& flags,
                bool save_jpegs) {
  const PipelineConfig cfg = resolve_pipeline(flags);
  const auto dir = prepare_out_dir(out_dir);

  DecodedSink sink;
  if (save_jpegs) {
    const auto jpeg_dir = dir / "jpegs";
    std::filesystem::create_directories(jpeg_dir);
    sink = [jpeg_dir](int frame_index, int qv, const std::vector<unsigned char>& bytes) {
      char name[64];
      std::snprintf(name, sizeof(name), "frame_%06d_qv_%03d.jpg", frame_index, qv);
      write_text_file(jpeg_dir / name,
                      std::string(bytes.begin(), bytes.end()));
    };
  }

  const ClipRunResult clip = run_clip_path(input, cfg, sink);
  write_sweep_csv(dir / "sweep.csv", clip);
  write_saturation_csv(dir / "saturation.csv", clip);
  write_iqr_csv(dir / "iqr.csv", clip);
  write_summary_csv(dir / "summary.csv", clip);
  write_run_config(app, dir);
  std::printf("clip QV*: %d\n", clip.qv_star_clip);
  return 0;
}

int cmd_corpus(const CLI::App& app, const std::string& manifest,
               const std::string& out_dir, const PipelineFlags& flags, bool scatter) {
  const PipelineConfig cfg = resolve_pipeline(flags);
  const auto dir = prepare_out_dir(out_dir);

  const CorpusReport report = run_corpus(manifest, cfg);
  write_corpus_report_csv(dir / "report.csv", report);
  write_correlation_csv(dir / "correlation.csv", report);
  if (scatter) {
    SvgSeries points;
    points.label = "clips";
    points.line = false;
    for (const ClipOutcome& clip : report.clips) {
      if (clip.ok && clip.record.mos) {
        points.points.push_back({*clip.record.mos, static_cast<double>(clip.qv_star)});
      }
    }
    if (!points.points.empty()) {
      write_svg_plot(dir / "scatter.svg", "MOS vs saturation quality value", "MOS",
                     "QV*", {points});
    }
  }
  write_run_config(app, dir);

  const int ok = static_cast<int>(report.clips.size()) - report.failure_count;
  std::printf("clips: %d ok, %d failed\n", ok, report.failure_count);
  if (report.spearman_rho) {
    std::printf("spearman rho: %s (n=%d)\n", format_double(*report.spearman_rho).c_str(),
                report.correlated_count);
  }
  for (const ClipOutcome& clip : report.clips) {
    if (!clip.ok) std::fprintf(stderr, "failed: %s\n", clip.error.c_str());
  }
  return report.failure_count > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy-source compression analysis: saturation quality detection "
               "for already-degraded content"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI file");

  // gaussian-model
  auto* g = app.add_subcommand("gaussian-model",
                               "Analytic Gaussian distortion-rate curves");
  double var_x = 0.0, var_eta = 0.0;
  double rate_min = 0.0, rate_max = 6.0, rate_step = 0.05;
  std::string g_out = ".";
  bool g_svg = false;
  g->add_option("--var-x", var_x, "Pristine source variance")
      ->required()
      ->check(CLI::PositiveNumber);
  g->add_option("--var-eta", var_eta, "Additive noise variance")
      ->required()
      ->check(CLI::NonNegativeNumber);
  g->add_option("--rate-min", rate_min, "Lowest rate, bits/sample")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  g->add_option("--rate-max", rate_max, "Highest rate, bits/sample")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  g->add_option("--rate-step", rate_step, "Rate grid step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  g->add_option("--out-dir", g_out, "Output directory")->capture_default_str();
  g->add_flag("--svg", g_svg, "Also write gaussian.svg");

  // synth
  auto* s = app.add_subcommand("synth", "Degrade pristine frames into synthetic UGC");
  std::string s_input, s_out, s_kind = "dct_quantize", s_command;
  std::string s_frames = "0,1,0";
  int s_qp = 45, s_quality = 30;
  std::uint64_t s_seed = 0;
  // Path existence is checked at load time, not by CLI11: validators also
  // run when a config file sets another subcommand's options, where an empty
  // path default must not fail the parse.
  s->add_option("--input", s_input, "Pristine image file or frame directory")
      ->required();
  s->add_option("--out-dir", s_out, "Output directory")->required();
  s->add_option("--kind", s_kind, "Degradation kind")
      ->check(CLI::IsMember({"dct_quantize", "recompress_jpeg", "external"}))
      ->capture_default_str();
  s->add_option("--qp", s_qp, "dct_quantize strength, 0-51")->capture_default_str();
  s->add_option("--quality", s_quality, "recompress_jpeg quality value")
      ->check(CLI::Range(1, 100))
      ->capture_default_str();
  s->add_option("--command", s_command,
                "External degradation command with {input} and {output}")
      ->capture_default_str();
  s->add_option("--frames", s_frames, "Frame sampling start,stride,count")
      ->capture_default_str();
  s->add_option("--seed", s_seed, "Seed for dithered degradations")
      ->capture_default_str();

  // analyze
  auto* a = app.add_subcommand("analyze", "Single-clip saturation analysis");
  std::string a_input, a_out;
  PipelineFlags a_flags;
  bool a_save_jpegs = false;
  a->add_option("--input", a_input, "UGC image file or frame directory")
      ->required();
  a->add_option("--out-dir", a_out, "Output directory")->required();
  add_pipeline_flags(a, a_flags);
  a->add_flag("--save-jpegs", a_save_jpegs, "Persist every encoded stream");

  // corpus
  auto* c = app.add_subcommand("corpus", "Batch pipeline over a clip manifest");
  std::string c_manifest, c_out;
  PipelineFlags c_flags;
  bool c_scatter = false;
  c->add_option("--manifest", c_manifest, "Manifest CSV")->required();
  c->add_option("--out-dir", c_out, "Output directory")->required();
  add_pipeline_flags(c, c_flags);
  c->add_flag("--scatter-svg", c_scatter, "Also write scatter.svg of (MOS, QV*)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (g->parsed()) {
      return cmd_gaussian_model(app, var_x, var_eta, rate_min, rate_max, rate_step,
                                g_out, g_svg);
    }
    if (s->parsed()) {
      return cmd_synth(app, s_input, s_out, s_kind, s_qp, s_quality, s_command,
                       s_frames, s_seed);
    }
    if (a->parsed()) return cmd_analyze(app, a_input, a_out, a_flags, a_save_jpegs);
    if (c->parsed()) return cmd_corpus(app, c_manifest, c_out, c_flags, c_scatter);
    std::fprintf(stderr, "no subcommand\n");
    return 1;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
