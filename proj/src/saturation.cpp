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

#include "ugcsat/saturation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ugcsat {

BlockGrid make_block_grid(int width, int height, int block_size) {
  if (block_size < 1) {
    throw std::invalid_argument("block size must be >= 1");
  }
  BlockGrid g;
  g.block_size = block_size;
  g.rows = height / block_size;
  g.cols = width / block_size;
  if (g.rows < 1 || g.cols < 1) {
    throw std::invalid_argument("no complete " + std::to_string(block_size) + "x" +
                                std::to_string(block_size) + " block fits in " +
                                std::to_string(width) + "x" + std::to_string(height));
  }
  return g;
}

namespace {

double block_ssd(const Plane& a, const Plane& b, const BlockGrid& g, int i) {
  const int x0 = g.x0(i);
  const int y0 = g.y0(i);
  double acc = 0.0;
  for (int y = y0; y < y0 + g.block_size; ++y) {
    for (int x = x0; x < x0 + g.block_size; ++x) {
      const double d = a.at(x, y) - b.at(x, y);
      acc += d * d;
    }
  }
  return acc;
}

}  // namespace

std::vector<double> block_mse(const Plane& a, const Plane& b, const BlockGrid& g) {
  require_same_size(a, b, "block_mse");
  const double area = static_cast<double>(g.block_size) * g.block_size;
  std::vector<double> e(static_cast<std::size_t>(g.count()));
  for (int i = 0; i < g.count(); ++i) {
    e[static_cast<std::size_t>(i)] = block_ssd(a, b, g, i) / area;
  }
  return e;
}

namespace {

double quantile_sorted(const std::vector<double>& s, double p) {
  const double pos = p * static_cast<double>(s.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, s.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return s[lo] * (1.0 - frac) + s[hi] * frac;
}

}  // namespace

double mse_iqr(const std::vector<double>& e) {
  if (e.size() < 4) {
    throw std::invalid_argument("mse_iqr needs at least 4 values, got " +
                                std::to_string(e.size()));
  }
  std::vector<double> s = e;
  std::sort(s.begin(), s.end());
  return quantile_sorted(s, 0.75) - quantile_sorted(s, 0.25);
}

bool saturation_indicator(const Plane& u_hat, const Plane& u, const Plane& z) {
  require_same_size(u_hat, u, "saturation_indicator");
  require_same_size(u_hat, z, "saturation_indicator");
  return sum_squared_diff(u_hat, u) <= sum_squared_diff(u_hat, z);
}

bool noise_region_membership(const Plane& u_hat, const Plane& u, const Plane& ref) {
  require_same_size(u_hat, u, "noise_region_membership");
  require_same_size(u_hat, ref, "noise_region_membership");
  return sum_squared_diff(u_hat, ref) > sum_squared_diff(u_hat, u);
}

int block_qv_star(const std::vector<std::uint8_t>& delta_row,
                  const std::vector<int>& grid_values) {
  if (delta_row.size() != grid_values.size() || grid_values.empty()) {
    throw std::invalid_argument("delta row and quality grid lengths differ");
  }
  // Only the maximal all-ones suffix satisfies the for-all-higher rule.
  std::size_t n_star = delta_row.size();
  for (std::size_t n = delta_row.size(); n-- > 0;) {
    if (!delta_row[n]) break;
    n_star = n;
  }
  if (n_star == delta_row.size()) return grid_values.back();
  return grid_values[n_star];
}

int median_quality(std::vector<int> values, const std::vector<int>& grid_values) {
  if (values.empty() || grid_values.empty()) {
    throw std::invalid_argument("median_quality needs values and a grid");
  }
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  if (values.size() % 2 == 1) return values[m];

  const double mid = (static_cast<double>(values[m - 1]) + values[m]) / 2.0;
  int best = grid_values.front();
  double best_dist = std::fabs(mid - best);
  for (int g : grid_values) {
    const double dist = std::fabs(mid - g);
    if (dist < best_dist) {
      best = g;
      best_dist = dist;
    }
  }
  return best;
}

FrameAnalysis analyze_frame(const Plane& u, const Plane& z, const QualitySweep& sweep,
                            int block_size) {
  require_same_size(u, z, "analyze_frame");
  if (sweep.entries.empty()) {
    throw std::invalid_argument("analyze_frame: empty quality sweep");
  }

  FrameAnalysis fa;
  fa.grid = make_block_grid(u.width, u.height, block_size);
  const std::size_t nq = sweep.entries.size();
  fa.qv_values.reserve(nq);
  fa.mse_vs_ugc.reserve(nq);
  fa.mse_vs_denoised.reserve(nq);
  fa.delta.reserve(nq);

  for (const SweepEntry& entry : sweep.entries) {
    require_same_size(u, entry.decoded, "analyze_frame sweep entry");
    fa.qv_values.push_back(entry.qv);
    std::vector<double> e_u = block_mse(entry.decoded, u, fa.grid);
    std::vector<double> e_z = block_mse(entry.decoded, z, fa.grid);
    std::vector<std::uint8_t> d(e_u.size());
    for (std::size_t i = 0; i < e_u.size(); ++i) d[i] = e_u[i] <= e_z[i] ? 1 : 0;
    if (fa.grid.count() >= 4) {
      fa.iqr.push_back({entry.qv, entry.bpp, mse_iqr(e_u), mse_iqr(e_z)});
    }
    fa.mse_vs_ugc.push_back(std::move(e_u));
    fa.mse_vs_denoised.push_back(std::move(e_z));
    fa.delta.push_back(std::move(d));
  }

  const std::size_t blocks = static_cast<std::size_t>(fa.grid.count());
  fa.qv_star_block.resize(blocks);
  std::vector<std::uint8_t> column(nq);
  for (std::size_t i = 0; i < blocks; ++i) {
    for (std::size_t n = 0; n < nq; ++n) column[n] = fa.delta[n][i];
    fa.qv_star_block[i] = block_qv_star(column, fa.qv_values);
  }
  fa.qv_star_frame = median_quality(fa.qv_star_block, fa.qv_values);
  return fa;
}

ClipAnalysis aggregate_clip(std::vector<FrameAnalysis> frames) {
  if (frames.empty()) {
    throw std::invalid_argument("clip aggregation needs at least one frame");
  }
  for (const FrameAnalysis& fa : frames) {
    if (fa.qv_values != frames.front().qv_values) {
      throw std::invalid_argument("frames analyzed over different quality grids");
    }
  }
  ClipAnalysis clip;
  std::vector<int> frame_values;
  frame_values.reserve(frames.size());
  for (const FrameAnalysis& fa : frames) frame_values.push_back(fa.qv_star_frame);
  clip.qv_star_clip = median_quality(std::move(frame_values), frames.front().qv_values);
  clip.frames = std::move(frames);
  return clip;
}

ClipAnalysis analyze_clip(const std::vector<FrameInputs>& frames, int block_size) {
  if (frames.empty()) {
    throw std::invalid_argument("analyze_clip needs at least one frame");
  }
  std::vector<FrameAnalysis> analyses;
  analyses.reserve(frames.size());
  for (const FrameInputs& f : frames) {
    analyses.push_back(analyze_frame(*f.u, *f.z, *f.sweep, block_size));
  }
  return aggregate_clip(std::move(analyses));
}

}  // namespace ugcsat
