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
#include <vector>

#include "ugcsat/codec.hpp"
#include "ugcsat/plane.hpp"

namespace ugcsat {

// Partition of a plane into complete k x k blocks; partial edge blocks are
// discarded. Block i covers pixels [x0(i), x0(i)+k) x [y0(i), y0(i)+k) with
// i = row * cols + col.
struct BlockGrid {
  int block_size = 8;
  int rows = 0;
  int cols = 0;

  int count() const { return rows * cols; }
  int x0(int i) const { return (i % cols) * block_size; }
  int y0(int i) const { return (i / cols) * block_size; }
};

// Throws when no complete block fits.
BlockGrid make_block_grid(int width, int height, int block_size);

// Per-block MSE between two planes of equal dimensions.
std::vector<double> block_mse(const Plane& a, const Plane& b, const BlockGrid& g);

// Q3 - Q1 of the values, with linear-interpolation quantiles at positions
// p * (len - 1). Requires at least 4 values.
double mse_iqr(const std::vector<double>& e);

// 1 iff the decoded block is at least as close (Euclidean) to the UGC block
// as to the denoised block; ties count as saturated. Inputs may be blocks or
// whole planes of any equal shape.
bool saturation_indicator(const Plane& u_hat, const Plane& u, const Plane& z);

// 1 iff the decoded plane lies in the (empirical) noise encoding region:
// strictly closer to the UGC plane than to the reference.
bool noise_region_membership(const Plane& u_hat, const Plane& u, const Plane& ref);

// Smallest grid value from which delta stays 1 through the end of the grid;
// the maximum grid value when no such suffix exists.
int block_qv_star(const std::vector<std::uint8_t>& delta_row,
                  const std::vector<int>& grid_values);

// Median of quality values. An even count takes the mean of the two central
// values and snaps it to the nearest grid value, ties toward the lower one.
int median_quality(std::vector<int> values, const std::vector<int>& grid_values);

struct IqrPoint {
  int qv = 0;
  double bpp = 0.0;
  double iqr_vs_ugc = 0.0;
  double iqr_vs_denoised = 0.0;
};

struct FrameAnalysis {
  BlockGrid grid;
  std::vector<int> qv_values;                        // sweep order
  std::vector<std::vector<double>> mse_vs_ugc;       // [qv][block]
  std::vector<std::vector<double>> mse_vs_denoised;  // [qv][block]
  std::vector<std::vector<std::uint8_t>> delta;      // [qv][block]
  std::vector<int> qv_star_block;                    // [block]
  int qv_star_frame = 0;
  std::vector<IqrPoint> iqr;  // empty when the frame has fewer than 4 blocks
};

// Saturation analysis of one frame against its denoised reference over a
// decoded quality sweep.
FrameAnalysis analyze_frame(const Plane& u, const Plane& z, const QualitySweep& sweep,
                            int block_size);

struct ClipAnalysis {
  std::vector<FrameAnalysis> frames;
  int qv_star_clip = 0;
};

// Clip-level aggregation: the clip QV* is the median of the frame values,
// with the same even-count rule. Frames must share one quality grid.
ClipAnalysis aggregate_clip(std::vector<FrameAnalysis> frames);

struct FrameInputs {
  const Plane* u = nullptr;
  const Plane* z = nullptr;
  const QualitySweep* sweep = nullptr;
};

ClipAnalysis analyze_clip(const std::vector<FrameInputs>& frames, int block_size);

}  // namespace ugcsat
