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

#include "ugcsat/plane.hpp"

namespace ugcsat::testing {

// Deterministic image with natural statistics: smooth shading, oscillating
// texture, soft-edged disks, and optional fine grain of the given standard
// deviation. Values stay inside [8, 247] before grain so mild processing
// does not clip.
Plane make_natural_test_image(int width, int height, std::uint64_t seed,
                              double grain_sigma = 0.0);

// Variant with strong mid- and fine-scale gratings layered on top. Low
// encoder qualities destroy the gratings while high qualities keep them, so
// rate-distortion curves over this content show a steep initial drop before
// saturating.
Plane make_detailed_test_image(int width, int height, std::uint64_t seed,
                               double grain_sigma = 0.0);

// Adds seeded i.i.d. Gaussian noise; the result is clamped to [0, 255].
Plane add_gaussian_noise(const Plane& p, double sigma, std::uint64_t seed);

// Seeded i.i.d. uniform samples over [0, 255].
Plane make_random_plane(int width, int height, std::uint64_t seed);

// 8-bit storage round trip: every sample rounded to the nearest integer in
// [0, 255], matching what write_png_gray persists.
Plane quantize8(const Plane& p);

}  // namespace ugcsat::testing
