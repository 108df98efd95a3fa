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
#include <string>
#include <vector>

#include "ugcsat/plane.hpp"

namespace ugcsat {

// Ordered encoder quality values, each in [1, 100].
struct QualityGrid {
  std::vector<int> values;

  // 14..90 step 4, 20 values.
  static QualityGrid standard();
};

// Parses "min:max:step" (inclusive ends, e.g. "14:90:4") or a single value.
QualityGrid parse_quality_grid(const std::string& text);

struct SweepEntry {
  int qv = 0;
  Plane decoded;
  std::size_t bytes = 0;
  double bpp = 0.0;  // 8 * bytes / (width * height)
};

struct QualitySweep {
  std::vector<SweepEntry> entries;
};

// Baseline grayscale JPEG round trip. bytes is the full stream length,
// headers included.
std::vector<unsigned char> jpeg_encode(const Plane& p, int qv);
Plane jpeg_decode(const std::vector<unsigned char>& data);
SweepEntry jpeg_encode_decode(const Plane& p, int qv);

QualitySweep sweep(const Plane& p, const QualityGrid& grid);

enum class DegradationKind { dct_quantize, recompress_jpeg, external };

DegradationKind parse_degradation_kind(const std::string& name);
const char* degradation_kind_name(DegradationKind kind);

struct DegradationSpec {
  DegradationKind kind = DegradationKind::dct_quantize;
  int qp = 45;       // dct_quantize strength, in [0, 51]; step = 2^((qp-4)/6)
  int quality = 30;  // recompress_jpeg quality value
  std::string command;  // external: {input}/{output} placeholders
};

// Stand-in for prior video compression of the pristine source: 8x8 block
// DCT, uniform quantization of the AC coefficients, inverse transform,
// clamp. The DC coefficient passes through so flat regions are unchanged.
// Rows/columns beyond the last full block pass through. The seed is part of
// the interface for degradations that dither; the built-in kinds ignore it.
Plane synthesize_ugc(const Plane& pristine, const DegradationSpec& spec,
                     std::uint64_t seed);

}  // namespace ugcsat
