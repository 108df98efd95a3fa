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

#include "ugcsat/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ugcsat/csv.hpp"

namespace ugcsat {

namespace {

int find_column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string field_or_empty(const std::vector<std::string>& row, int col) {
  if (col < 0 || static_cast<std::size_t>(col) >= row.size()) return {};
  return row[static_cast<std::size_t>(col)];
}

}  // namespace

std::vector<ClipRecord> read_manifest(const std::filesystem::path& path) {
  const auto rows = read_csv_file(path);
  if (rows.empty()) throw std::runtime_error("manifest is empty: " + path.string());

  const std::vector<std::string>& header = rows.front();
  const int col_id = find_column(header, "clip_id");
  const int col_src = find_column(header, "frame_source");
  const int col_mos = find_column(header, "mos");
  const int col_cat = find_column(header, "category");
  if (col_id < 0 || col_src < 0) {
    throw std::runtime_error("manifest needs clip_id and frame_source columns: " +
                             path.string());
  }

  const std::filesystem::path base = path.has_parent_path()
                                         ? path.parent_path()
                                         : std::filesystem::path(".");
  std::vector<ClipRecord> records;
  std::set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    ClipRecord rec;
    rec.clip_id = field_or_empty(rows[r], col_id);
    rec.frame_source = field_or_empty(rows[r], col_src);
    rec.category = field_or_empty(rows[r], col_cat);
    if (rec.clip_id.empty() || rec.frame_source.empty()) {
      throw std::runtime_error("manifest row " + std::to_string(r + 1) +
                               ": clip_id and frame_source are required");
    }
    if (!seen.insert(rec.clip_id).second) {
      throw std::runtime_error("duplicate clip_id in manifest: " + rec.clip_id);
    }
    const std::string mos_text = field_or_empty(rows[r], col_mos);
    if (!mos_text.empty()) {
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(mos_text, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != mos_text.size()) {
        throw std::runtime_error("manifest row " + std::to_string(r + 1) +
                                 ": bad mos value '" + mos_text + "'");
      }
      rec.mos = v;
    }
    if (std::filesystem::path(rec.frame_source).is_relative()) {
      rec.frame_source = (base / rec.frame_source).string();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::optional<double> pearson(const std::vector<double>& xs,
                              const std::vector<double>& ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("correlation inputs differ in length");
  }
  const std::size_t n = xs.size();
  if (n < 3) return std::nullopt;

  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + j) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::optional<double> spearman(const std::vector<double>& xs,
                               const std::vector<double>& ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("correlation inputs differ in length");
  }
  if (xs.size() < 3) return std::nullopt;
  return pearson(average_ranks(xs), average_ranks(ys));
}

CorpusReport run_corpus(const std::filesystem::path& manifest,
                        const PipelineConfig& config) {
  std::vector<ClipRecord> records = read_manifest(manifest);
  if (records.empty()) {
    throw std::runtime_error("manifest lists no clips: " + manifest.string());
  }
  std::sort(records.begin(), records.end(),
            [](const ClipRecord& a, const ClipRecord& b) {
              return a.clip_id < b.clip_id;
            });

  // Parallelism lives at the clip level; per-clip runs are single-threaded
  // so the work partition does not depend on scheduling.
  PipelineConfig clip_config = config;
  clip_config.jobs = 1;

  CorpusReport report;
  report.clips.resize(records.size());
  parallel_for_indexed(records.size(), config.jobs, [&](std::size_t i) {
    ClipOutcome& out = report.clips[i];
    out.record = records[i];
    try {
      const ClipRunResult run = run_clip_path(records[i].frame_source, clip_config);
      out.qv_star = run.qv_star_clip;
      out.ok = true;
    } catch (const std::exception& e) {
      out.ok = false;
      out.error = std::string("clip ") + records[i].clip_id + ": " + e.what();
    }
  });

  std::vector<double> mos, qv;
  for (const ClipOutcome& out : report.clips) {
    if (!out.ok) {
      ++report.failure_count;
      continue;
    }
    if (out.record.mos) {
      mos.push_back(*out.record.mos);
      qv.push_back(static_cast<double>(out.qv_star));
    }
  }
  if (report.failure_count == static_cast<int>(report.clips.size())) {
    throw std::runtime_error("every clip failed; first error: " +
                             report.clips.front().error);
  }
  report.correlated_count = static_cast<int>(mos.size());
  report.pearson_r = pearson(mos, qv);
  report.spearman_rho = spearman(mos, qv);
  return report;
}

}  // namespace ugcsat
