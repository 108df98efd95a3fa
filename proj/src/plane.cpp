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

#include "ugcsat/plane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ugcsat {

Plane::Plane(int w, int h, double fill) : width(w), height(h) {
  if (w <= 0 || h <= 0) {
    throw std::invalid_argument("Plane: dimensions must be positive, got " +
                                std::to_string(w) + "x" + std::to_string(h));
  }
  samples.assign(static_cast<std::size_t>(w) * h, fill);
}

void Plane::clamp(double lo, double hi) {
  for (double& s : samples) s = std::min(hi, std::max(lo, s));
}

void require_same_size(const Plane& a, const Plane& b, const char* what) {
  if (!a.same_size(b)) {
    throw std::invalid_argument(
        std::string(what) + ": dimension mismatch, " + std::to_string(a.width) +
        "x" + std::to_string(a.height) + " vs " + std::to_string(b.width) +
        "x" + std::to_string(b.height));
  }
}

double sum_squared_diff(const Plane& a, const Plane& b) {
  require_same_size(a, b, "sum_squared_diff");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    const double d = a.samples[i] - b.samples[i];
    acc += d * d;
  }
  return acc;
}

double mse(const Plane& a, const Plane& b) {
  return sum_squared_diff(a, b) / static_cast<double>(a.size());
}

double psnr(const Plane& a, const Plane& b, double peak) {
  const double m = mse(a, b);
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / m);
}

}  // namespace ugcsat
