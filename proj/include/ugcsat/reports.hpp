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
#include <vector>

#include "ugcsat/corpus.hpp"
#include "ugcsat/gaussian_model.hpp"
#include "ugcsat/pipeline.hpp"

namespace ugcsat {

// rate,d_traditional,d_ugc,d0
void write_gaussian_csv(const std::filesystem::path& path,
                        const std::vector<GaussianCurveRow>& rows);

// frame_index,qv,bytes,bpp
void write_sweep_csv(const std::filesystem::path& path, const ClipRunResult& clip);

// frame_index,block_index,qv,mse_vs_ugc,mse_vs_denoised,delta
void write_saturation_csv(const std::filesystem::path& path, const ClipRunResult& clip);

// frame_index,qv,bpp,iqr_vs_ugc,iqr_vs_denoised
void write_iqr_csv(const std::filesystem::path& path, const ClipRunResult& clip);

// frame_index,qv_star_frame rows, then a final "clip,<qv_star_clip>" row.
void write_summary_csv(const std::filesystem::path& path, const ClipRunResult& clip);

// clip_id,qv_star,mos,category; failed clips keep an empty qv_star and carry
// their error in a final column.
void write_corpus_report_csv(const std::filesystem::path& path,
                             const CorpusReport& report);

// statistic,value,n rows for pearson_r and spearman_rho; value is empty when
// the correlation is undefined.
void write_correlation_csv(const std::filesystem::path& path,
                           const CorpusReport& report);

}  // namespace ugcsat
