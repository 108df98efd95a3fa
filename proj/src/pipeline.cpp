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

#include "ugcsat/pipeline.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace ugcsat {

int resolve_jobs(int jobs) {
  if (jobs < 0) throw std::invalid_argument("jobs must be >= 0");
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for_indexed(std::size_t count, int jobs,
                          const std::function<void(std::size_t)>& body) {
  const int workers = std::min<std::size_t>(resolve_jobs(jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t first_bad = count;
  std::exception_ptr first_error;

  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(mu);
        if (i < first_bad) {
          first_bad = i;
          first_error = std::current_exception();
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

ClipRunResult run_clip(const std::vector<Plane>& frames,
                       const std::vector<int>& frame_indices,
                       const PipelineConfig& config, const DecodedSink& save_stream) {
  if (frames.empty()) throw std::invalid_argument("run_clip: no frames");
  if (frames.size() != frame_indices.size()) {
    throw std::invalid_argument("run_clip: frame/index count mismatch");
  }

  ClipRunResult result;
  result.frames.resize(frames.size());
  std::mutex sink_mu;

  parallel_for_indexed(frames.size(), config.jobs, [&](std::size_t t) {
    const Plane& u = frames[t];
    const Plane z = denoise(u, config.denoiser);

    FrameRunResult& fr = result.frames[t];
    fr.frame_index = frame_indices[t];

    // Decoded planes live only as long as this frame's analysis; a worker
    // holds one sweep at a time.
    QualitySweep sweep;
    sweep.entries.reserve(config.grid.values.size());
    for (int qv : config.grid.values) {
      std::vector<unsigned char> stream;
      try {
        stream = jpeg_encode(u, qv);
      } catch (const std::exception& e) {
        throw std::runtime_error("frame " + std::to_string(fr.frame_index) + ": " +
                                 e.what());
      }
      if (save_stream) {
        const std::lock_guard<std::mutex> lock(sink_mu);
        save_stream(fr.frame_index, qv, stream);
      }
      SweepEntry entry;
      entry.qv = qv;
      entry.decoded = jpeg_decode(stream);
      entry.bytes = stream.size();
      entry.bpp = 8.0 * static_cast<double>(entry.bytes) /
                  (static_cast<double>(u.width) * u.height);
      fr.sweep_rows.push_back({entry.qv, entry.bytes, entry.bpp});
      sweep.entries.push_back(std::move(entry));
    }
    fr.analysis = analyze_frame(u, z, sweep, config.block_size);
  });

  std::vector<FrameAnalysis> analyses;
  analyses.reserve(result.frames.size());
  for (FrameRunResult& fr : result.frames) analyses.push_back(fr.analysis);
  ClipAnalysis clip = aggregate_clip(std::move(analyses));
  result.qv_star_clip = clip.qv_star_clip;
  return result;
}

ClipRunResult run_clip_path(const std::filesystem::path& source,
                            const PipelineConfig& config,
                            const DecodedSink& save_stream) {
  FrameSet set = load_frame_set(source, config.sampling);
  return run_clip(set.frames, set.indices, config, save_stream);
}

}  // namespace ugcsat
