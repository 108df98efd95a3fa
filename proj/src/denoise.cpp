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

#include "ugcsat/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ugcsat/subprocess.hpp"

namespace ugcsat {

DenoiserKind parse_denoiser_kind(const std::string& name) {
  if (name == "bayes_shrink") return DenoiserKind::bayes_shrink;
  if (name == "gaussian_blur") return DenoiserKind::gaussian_blur;
  if (name == "identity") return DenoiserKind::identity;
  if (name == "external") return DenoiserKind::external;
  throw std::invalid_argument("unknown denoiser kind: " + name);
}

const char* denoiser_kind_name(DenoiserKind kind) {
  switch (kind) {
    case DenoiserKind::bayes_shrink: return "bayes_shrink";
    case DenoiserKind::gaussian_blur: return "gaussian_blur";
    case DenoiserKind::identity: return "identity";
    case DenoiserKind::external: return "external";
  }
  throw std::logic_error("unreachable denoiser kind");
}

double estimate_noise_sigma(const WaveletPyramid& pyr) {
  if (pyr.levels.empty()) {
    throw std::invalid_argument("estimate_noise_sigma: pyramid has no levels");
  }
  std::vector<double> mags;
  mags.reserve(pyr.levels.front().hh.v.size());
  for (double c : pyr.levels.front().hh.v) mags.push_back(std::fabs(c));
  if (mags.empty()) return 0.0;
  const std::size_t m = mags.size() / 2;
  std::nth_element(mags.begin(), mags.begin() + m, mags.end());
  double med = mags[m];
  if (mags.size() % 2 == 0) {
    med = (med + *std::max_element(mags.begin(), mags.begin() + m)) / 2.0;
  }
  return med / 0.6745;
}

double bayes_shrink_threshold(std::span<const double> subband, double sigma_noise) {
  if (subband.empty()) {
    throw std::invalid_argument("bayes_shrink_threshold: empty subband");
  }
  if (!(sigma_noise >= 0.0)) {
    throw std::invalid_argument("bayes_shrink_threshold: sigma_noise must be >= 0");
  }
  if (sigma_noise == 0.0) return 0.0;
  double energy = 0.0;
  double max_abs = 0.0;
  for (double c : subband) {
    energy += c * c;
    max_abs = std::max(max_abs, std::fabs(c));
  }
  const double var = energy / static_cast<double>(subband.size());
  const double sigma_x = std::sqrt(std::max(var - sigma_noise * sigma_noise, 0.0));
  if (sigma_x == 0.0) return max_abs;
  return sigma_noise * sigma_noise / sigma_x;
}

double soft_threshold(double c, double t) {
  const double mag = std::fabs(c) - t;
  if (mag <= 0.0) return 0.0;
  return std::copysign(mag, c);
}

namespace {

void shrink_subband(CoeffMat& band, double sigma_noise) {
  const double t = bayes_shrink_threshold(band.v, sigma_noise);
  for (double& c : band.v) c = soft_threshold(c, t);
}

Plane denoise_bayes_shrink(const Plane& u, const DenoiserSpec& spec) {
  WaveletPyramid pyr = dwt2(u, spec.levels, spec.wavelet);
  const double sigma = estimate_noise_sigma(pyr);
  // Zero estimated noise means every threshold is zero; return the input
  // itself rather than a transform round trip so the no-op case is exact.
  if (sigma == 0.0) return u;
  for (PyramidLevel& level : pyr.levels) {
    shrink_subband(level.lh, sigma);
    shrink_subband(level.hl, sigma);
    shrink_subband(level.hh, sigma);
  }
  Plane out = idwt2(pyr);
  out.clamp();
  return out;
}

Plane denoise_gaussian_blur(const Plane& u, const DenoiserSpec& spec) {
  if (!(spec.blur_sigma > 0.0)) {
    throw std::invalid_argument("gaussian_blur: sigma must be > 0");
  }
  const int radius = spec.blur_radius > 0
                         ? spec.blur_radius
                         : static_cast<int>(std::ceil(3.0 * spec.blur_sigma));
  std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
  double norm = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    const double w = std::exp(-0.5 * (k / spec.blur_sigma) * (k / spec.blur_sigma));
    kernel[static_cast<std::size_t>(k + radius)] = w;
    norm += w;
  }
  for (double& w : kernel) w /= norm;

  // Separable convolution with whole-sample mirror extension at the borders.
  const auto mirror = [](int i, int n) {
    if (n == 1) return 0;
    const int period = 2 * (n - 1);
    i = ((i % period) + period) % period;
    return i < n ? i : period - i;
  };
  Plane tmp(u.width, u.height);
  for (int y = 0; y < u.height; ++y) {
    for (int x = 0; x < u.width; ++x) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        acc += kernel[static_cast<std::size_t>(k + radius)] *
               u.at(mirror(x + k, u.width), y);
      }
      tmp.at(x, y) = acc;
    }
  }
  Plane out(u.width, u.height);
  for (int y = 0; y < u.height; ++y) {
    for (int x = 0; x < u.width; ++x) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        acc += kernel[static_cast<std::size_t>(k + radius)] *
               tmp.at(x, mirror(y + k, u.height));
      }
      out.at(x, y) = acc;
    }
  }
  out.clamp();
  return out;
}

}  // namespace

Plane denoise(const Plane& u, const DenoiserSpec& spec) {
  switch (spec.kind) {
    case DenoiserKind::identity:
      return u;
    case DenoiserKind::bayes_shrink:
      return denoise_bayes_shrink(u, spec);
    case DenoiserKind::gaussian_blur:
      return denoise_gaussian_blur(u, spec);
    case DenoiserKind::external:
      return run_external_image_filter(u, spec.command, "denoise(external)");
  }
  throw std::logic_error("unreachable denoiser kind");
}

}  // namespace ugcsat
