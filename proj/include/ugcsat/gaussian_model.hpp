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
#include <cstdint>
#include <vector>

namespace ugcsat {

// Scalar Gaussian noisy-source channel: a zero-mean pristine source x with
// variance var_x, observed as u = x + eta where eta is independent zero-mean
// Gaussian noise with variance var_eta.
struct GaussianChannel {
  double var_x;
  double var_eta;

  GaussianChannel(double vx, double ve);
  double var_u() const { return var_x + var_eta; }
};

// Gain of the linear MMSE estimator y = a*u: a = var_x / var_u, in (0, 1].
double mmse_gain(const GaussianChannel& ch);

// MMSE estimation error var_x*var_eta/var_u; the distortion floor no
// encoder-decoder can beat at any rate.
double d0(const GaussianChannel& ch);

// Distortion-rate of coding u against itself: var_u * 2^(-2R).
double traditional_drf(const GaussianChannel& ch, double rate);

// Distortion-rate of coding u against the pristine x:
// d0 + (var_x^2/var_u) * 2^(-2R). Saturates at d0 as R grows.
double ugc_drf(const GaussianChannel& ch, double rate);

// |dD_ugc/dR| / |dD/dR| = (var_x/var_u)^2, rate-independent.
double derivative_ratio(const GaussianChannel& ch);

struct RdPoint {
  double rate;
  double distortion;
};

// Sampled rate-distortion curve. Rates must be strictly increasing and
// distortions non-increasing; validate() throws otherwise.
struct RdCurve {
  std::vector<RdPoint> points;
  void validate() const;
};

RdCurve traditional_curve(const GaussianChannel& ch, double rate_min,
                          double rate_max, double rate_step);
RdCurve ugc_curve(const GaussianChannel& ch, double rate_min, double rate_max,
                  double rate_step);

struct GaussianCurveRow {
  double rate;
  double d_traditional;
  double d_ugc;
  double d0;
};

// Three-curve table over a uniform rate grid, one row per rate.
std::vector<GaussianCurveRow> gaussian_curve_table(const GaussianChannel& ch,
                                                   double rate_min,
                                                   double rate_max,
                                                   double rate_step);

// Monte-Carlo estimate of the estimate-then-compress decomposition
// E[(x-u_hat)^2] = D0 + E[(y-u_hat)^2], where u_hat is a mid-rise uniform
// quantization of the MMSE estimate y over +-4 sigma_y.
struct DecompositionEstimate {
  double empirical_d_ugc;         // mean (x - u_hat)^2
  double empirical_d_y;           // mean (y - u_hat)^2
  double d0;                      // analytic floor for the channel
  double gap;                     // empirical_d_ugc - empirical_d_y - d0
  double gap_se;                  // standard error of the gap estimate
  double orthogonality_residual;  // mean (x - y) * u_hat
  double orthogonality_se;
};

DecompositionEstimate monte_carlo_decomposition(const GaussianChannel& ch,
                                                std::size_t n_samples,
                                                int quantizer_levels,
                                                std::uint64_t seed);

}  // namespace ugcsat
