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

#include "ugcsat/reports.hpp"

#include <string>

#include "ugcsat/csv.hpp"

namespace ugcsat {

void write_gaussian_csv(const std::filesystem::path& path,
                        const std::vector<GaussianCurveRow>& rows) {
  std::string out = "rate,d_traditional,d_ugc,d0\n";
  for (const GaussianCurveRow& r : rows) {
    out += format_double(r.rate) + ',' + format_double(r.d_traditional) + ',' +
           format_double(r.d_ugc) + ',' + format_double(r.d0) + '\n';
  }
  write_text_file(path, out);
}

void write_sweep_csv(const std::filesystem::path& path, const ClipRunResult& clip) {
  std::string out = "frame_index,qv,bytes,bpp\n";
  for (const FrameRunResult& fr : clip.frames) {
    for (const SweepRow& row : fr.sweep_rows) {
      out += std::to_string(fr.frame_index) + ',' + std::to_string(row.qv) + ',' +
             std::to_string(row.bytes) + ',' + format_double(row.bpp) + '\n';
    }
  }
  write_text_file(path, out);
}

void write_saturation_csv(const std::filesystem::path& path,
                          const ClipRunResult& clip) {
  std::string out = "frame_index,block_index,qv,mse_vs_ugc,mse_vs_denoised,delta\n";
  for (const FrameRunResult& fr : clip.frames) {
    const FrameAnalysis& fa = fr.analysis;
    for (std::size_t n = 0; n < fa.qv_values.size(); ++n) {
      for (std::size_t i = 0; i < fa.mse_vs_ugc[n].size(); ++i) {
        out += std::to_string(fr.frame_index) + ',' + std::to_string(i) + ',' +
               std::to_string(fa.qv_values[n]) + ',' +
               format_double(fa.mse_vs_ugc[n][i]) + ',' +
               format_double(fa.mse_vs_denoised[n][i]) + ',' +
               (fa.delta[n][i] ? "1" : "0") + '\n';
      }
    }
  }
  write_text_file(path, out);
}

void write_iqr_csv(const std::filesystem::path& path, const ClipRunResult& clip) {
  std::string out = "frame_index,qv,bpp,iqr_vs_ugc,iqr_vs_denoised\n";
  for (const FrameRunResult& fr : clip.frames) {
    for (const IqrPoint& p : fr.analysis.iqr) {
      out += std::to_string(fr.frame_index) + ',' + std::to_string(p.qv) + ',' +
             format_double(p.bpp) + ',' + format_double(p.iqr_vs_ugc) + ',' +
             format_double(p.iqr_vs_denoised) + '\n';
    }
  }
  write_text_file(path, out);
}

void write_summary_csv(const std::filesystem::path& path, const ClipRunResult& clip) {
  std::string out = "frame_index,qv_star_frame\n";
  for (const FrameRunResult& fr : clip.frames) {
    out += std::to_string(fr.frame_index) + ',' +
           std::to_string(fr.analysis.qv_star_frame) + '\n';
  }
  out += "clip," + std::to_string(clip.qv_star_clip) + '\n';
  write_text_file(path, out);
}

void write_corpus_report_csv(const std::filesystem::path& path,
                             const CorpusReport& report) {
  std::string out = "clip_id,qv_star,mos,category,error\n";
  for (const ClipOutcome& clip : report.clips) {
    out += csv_escape(clip.record.clip_id) + ',';
    out += clip.ok ? std::to_string(clip.qv_star) : std::string();
    out += ',';
    out += clip.record.mos ? format_double(*clip.record.mos) : std::string();
    out += ',' + csv_escape(clip.record.category) + ',' + csv_escape(clip.error) + '\n';
  }
  write_text_file(path, out);
}

void write_correlation_csv(const std::filesystem::path& path,
                           const CorpusReport& report) {
  const auto line = [&](const char* name, const std::optional<double>& v) {
    return std::string(name) + ',' + (v ? format_double(*v) : std::string()) + ',' +
           std::to_string(report.correlated_count) + '\n';
  };
  std::string out = "statistic,value,n\n";
  out += line("pearson_r", report.pearson_r);
  out += line("spearman_rho", report.spearman_rho);
  write_text_file(path, out);
}

}  // namespace ugcsat
