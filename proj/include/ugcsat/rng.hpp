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

#include <cmath>
#include <cstdint>
#include <random>

namespace ugcsat {

// 53-bit uniform in [0, 1). Standard-library distribution objects are
// implementation-defined, so sampling goes through the raw engine to keep
// seeded streams identical across toolchains.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct GaussianPair {
  double z0;
  double z1;
};

// Box-Muller pair of independent standard normals.
inline GaussianPair gaussian_pair(std::mt19937_64& rng) {
  const double u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  // log1p(-u1) = log(1 - u1), strictly negative-or-zero argument safe.
  const double r = std::sqrt(-2.0 * std::log1p(-u1));
  const double a = 6.28318530717958647692529 * u2;
  return {r * std::cos(a), r * std::sin(a)};
}

// Streaming standard-normal sampler that consumes Box-Muller pairs.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const GaussianPair p = gaussian_pair(rng_);
    spare_ = p.z1;
    have_spare_ = true;
    return p.z0;
  }

 private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ugcsat
