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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include "ugcsat/codec.hpp"
#include "ugcsat/denoise.hpp"
#include "ugcsat/image_io.hpp"
#include "ugcsat/saturation.hpp"

namespace ugcsat {

// Everything that determines a run; serialized next to outputs so any run
// can be reproduced exactly.
struct PipelineConfig {
  QualityGrid grid = QualityGrid::standard();
  int block_size = 8;
  DenoiserSpec denoiser;
  FrameSampling sampling;
  int jobs = 0;  // 0 = hardware concurrency
  std::uint64_t seed = 0;
};

// Resolves jobs == 0 to the hardware thread count (at least 1).
int resolve_jobs(int jobs);

// Runs body(0..count-1) across `jobs` threads. Results must be written to
// preallocated per-index slots by the caller. The first exception, by index
// order, is rethrown after all workers stop.
void parallel_for_indexed(std::size_t count, int jobs,
                          const std::function<void(std::size_t)>& body);

struct SweepRow {
  int qv = 0;
  std::size_t bytes = 0;
  double bpp = 0.0;
};

struct FrameRunResult {
  int frame_index = 0;  // index within the source frame list
  std::vector<SweepRow> sweep_rows;
  FrameAnalysis analysis;
};

struct ClipRunResult {
  std::vector<FrameRunResult> frames;
  int qv_star_clip = 0;
};

// Full single-clip pipeline: denoise each frame, sweep the quality grid,
// run saturation analysis, aggregate the clip QV*. Frames are processed in
// parallel; decoded planes are dropped as soon as a frame is analyzed.
// `save_decoded` optionally receives every (frame_index, qv, stream bytes)
// triple for persisting encoder output; pass nullptr to skip.
using DecodedSink =
    std::function<void(int frame_index, int qv, const std::vector<unsigned char>&)>;

ClipRunResult run_clip(const std::vector<Plane>& frames,
                       const std::vector<int>& frame_indices,
                       const PipelineConfig& config,
                       const DecodedSink& save_stream = nullptr);

ClipRunResult run_clip_path(const std::filesystem::path& source,
                            const PipelineConfig& config,
                            const DecodedSink& save_stream = nullptr);

}  // namespace ugcsat
