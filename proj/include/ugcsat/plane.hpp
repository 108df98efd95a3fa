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

#include <cstddef>
#include <vector>

namespace ugcsat {

// Single-channel raster, row-major, intensities on the [0, 255] scale kept
// at double precision so transforms and metrics do not accumulate rounding.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<double> samples;

  Plane() = default;
  Plane(int w, int h, double fill = 0.0);

  double& at(int x, int y) {
    return samples[static_cast<std::size_t>(y) * width + x];
  }
  double at(int x, int y) const {
    return samples[static_cast<std::size_t>(y) * width + x];
  }
  std::size_t size() const { return samples.size(); }
  bool same_size(const Plane& o) const {
    return width == o.width && height == o.height;
  }
  void clamp(double lo = 0.0, double hi = 255.0);
};

// Throws std::invalid_argument naming `what` when dimensions differ.
void require_same_size(const Plane& a, const Plane& b, const char* what);

double sum_squared_diff(const Plane& a, const Plane& b);
double mse(const Plane& a, const Plane& b);
double psnr(const Plane& a, const Plane& b, double peak = 255.0);

}  // namespace ugcsat
