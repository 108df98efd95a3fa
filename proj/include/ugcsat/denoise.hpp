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

#include <span>
#include <string>

#include "ugcsat/plane.hpp"
#include "ugcsat/wavelet.hpp"

namespace ugcsat {

enum class DenoiserKind { bayes_shrink, gaussian_blur, identity, external };

DenoiserKind parse_denoiser_kind(const std::string& name);
const char* denoiser_kind_name(DenoiserKind kind);

struct DenoiserSpec {
  DenoiserKind kind = DenoiserKind::bayes_shrink;
  // bayes_shrink
  WaveletFamily wavelet = WaveletFamily::db2;
  int levels = 3;
  // gaussian_blur; radius 0 derives the kernel extent from sigma.
  double blur_sigma = 1.5;
  int blur_radius = 0;
  // external: shell command with {input} and {output} placeholders.
  std::string command;
};

// Robust noise estimate from the finest diagonal subband:
// median(|HH1|) / 0.6745.
double estimate_noise_sigma(const WaveletPyramid& pyr);

// Per-subband threshold T = sigma_n^2 / sigma_x with
// sigma_x = sqrt(max(E[c^2] - sigma_n^2, 0)); detail coefficients are treated
// as zero-mean, so E[c^2] stands in for the subband variance. When the signal
// estimate vanishes the threshold is max|c|, which zeroes the subband.
double bayes_shrink_threshold(std::span<const double> subband, double sigma_noise);

// sign(c) * max(|c| - t, 0)
double soft_threshold(double c, double t);

// Denoised reference for saturation analysis. Output samples stay in
// [0, 255]; the identity kind returns its input bit-exactly.
Plane denoise(const Plane& u, const DenoiserSpec& spec);

}  // namespace ugcsat
