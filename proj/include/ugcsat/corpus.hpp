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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ugcsat/pipeline.hpp"

namespace ugcsat {

struct ClipRecord {
  std::string clip_id;
  std::string frame_source;
  std::optional<double> mos;
  std::string category;
};

// Manifest CSV with a header row naming at least clip_id and frame_source;
// mos and category columns are optional, blank mos allowed. Relative
// frame_source paths resolve against the manifest's directory. clip_id must
// be unique.
std::vector<ClipRecord> read_manifest(const std::filesystem::path& path);

// Pearson correlation; std::nullopt when fewer than 3 pairs or either vector
// is constant. Throws on length mismatch.
std::optional<double> pearson(const std::vector<double>& xs,
                              const std::vector<double>& ys);

// Spearman rank correlation with average ranks for ties; undefined cases as
// for pearson.
std::optional<double> spearman(const std::vector<double>& xs,
                               const std::vector<double>& ys);

struct ClipOutcome {
  ClipRecord record;
  bool ok = false;
  std::string error;  // set when !ok
  int qv_star = 0;    // valid when ok
};

struct CorpusReport {
  std::vector<ClipOutcome> clips;  // ordered by clip_id
  std::optional<double> pearson_r;
  std::optional<double> spearman_rho;
  int correlated_count = 0;  // successful clips with a MOS value
  int failure_count = 0;
};

// Runs the full pipeline per clip. Per-clip failures are recorded and
// skipped; an empty successful set is an error. Clips run in parallel, each
// internally single-threaded, so results match a sequential run.
CorpusReport run_corpus(const std::filesystem::path& manifest,
                        const PipelineConfig& config);

}  // namespace ugcsat
