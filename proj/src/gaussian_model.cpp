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

#include "ugcsat/gaussian_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ugcsat/rng.hpp"

namespace ugcsat {

GaussianChannel::GaussianChannel(double vx, double ve) : var_x(vx), var_eta(ve) {
  if (!std::isfinite(vx) || vx <= 0.0) {
    throw std::invalid_argument("GaussianChannel: var_x must be finite and > 0");
  }
  if (!std::isfinite(ve) || ve < 0.0) {
    throw std::invalid_argument("GaussianChannel: var_eta must be finite and >= 0");
  }
}

double mmse_gain(const GaussianChannel& ch) { return ch.var_x / ch.var_u(); }

double d0(const GaussianChannel& ch) {
  return ch.var_x * ch.var_eta / ch.var_u();
}

namespace {

void require_rate(double rate) {
  if (!std::isfinite(rate) || rate < 0.0) {
    throw std::invalid_argument("rate must be finite and >= 0, got " +
                                std::to_string(rate));
  }
}

}  // namespace

double traditional_drf(const GaussianChannel& ch, double rate) {
  require_rate(rate);
  return ch.var_u() * std::exp2(-2.0 * rate);
}

double ugc_drf(const GaussianChannel& ch, double rate) {
  require_rate(rate);
  const double var_y = ch.var_x * ch.var_x / ch.var_u();
  return d0(ch) + var_y * std::exp2(-2.0 * rate);
}

double derivative_ratio(const GaussianChannel& ch) {
  const double a = mmse_gain(ch);
  return a * a;
}

void RdCurve::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const RdPoint& p = points[i];
    if (!std::isfinite(p.rate) || p.rate < 0.0 || !std::isfinite(p.distortion) ||
        p.distortion < 0.0) {
      throw std::invalid_argument("RdCurve: point " + std::to_string(i) +
                                  " out of domain");
    }
    if (i > 0) {
      if (p.rate <= points[i - 1].rate) {
        throw std::invalid_argument("RdCurve: rates must be strictly increasing");
      }
      if (p.distortion > points[i - 1].distortion) {
        throw std::invalid_argument("RdCurve: distortions must be non-increasing");
      }
    }
  }
}

namespace {

std::vector<double> rate_grid(double rate_min, double rate_max, double rate_step) {
  if (!std::isfinite(rate_min) || rate_min < 0.0 || rate_max < rate_min ||
      !(rate_step > 0.0)) {
    throw std::invalid_argument("rate grid: need 0 <= min <= max and step > 0");
  }
  std::vector<double> rates;
  const int n = static_cast<int>(std::floor((rate_max - rate_min) / rate_step + 1e-9));
  rates.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) rates.push_back(rate_min + i * rate_step);
  return rates;
}

}  // namespace

RdCurve traditional_curve(const GaussianChannel& ch, double rate_min,
                          double rate_max, double rate_step) {
  RdCurve c;
  for (double r : rate_grid(rate_min, rate_max, rate_step)) {
    c.points.push_back({r, traditional_drf(ch, r)});
  }
  c.validate();
  return c;
}

RdCurve ugc_curve(const GaussianChannel& ch, double rate_min, double rate_max,
                  double rate_step) {
  RdCurve c;
  for (double r : rate_grid(rate_min, rate_max, rate_step)) {
    c.points.push_back({r, ugc_drf(ch, r)});
  }
  c.validate();
  return c;
}

std::vector<GaussianCurveRow> gaussian_curve_table(const GaussianChannel& ch,
                                                   double rate_min,
                                                   double rate_max,
                                                   double rate_step) {
  const RdCurve trad = traditional_curve(ch, rate_min, rate_max, rate_step);
  const RdCurve ugc = ugc_curve(ch, rate_min, rate_max, rate_step);
  const double floor = d0(ch);
  std::vector<GaussianCurveRow> rows;
  rows.reserve(trad.points.size());
  for (std::size_t i = 0; i < trad.points.size(); ++i) {
    rows.push_back({trad.points[i].rate, trad.points[i].distortion,
                    ugc.points[i].distortion, floor});
  }
  return rows;
}

DecompositionEstimate monte_carlo_decomposition(const GaussianChannel& ch,
                                                std::size_t n_samples,
                                                int quantizer_levels,
                                                std::uint64_t seed) {
  if (n_samples < 10000) {
    throw std::invalid_argument("monte_carlo_decomposition: need >= 1e4 samples");
  }
  if (quantizer_levels < 2) {
    throw std::invalid_argument("monte_carlo_decomposition: need >= 2 levels");
  }

  const double a = mmse_gain(ch);
  const double sigma_x = std::sqrt(ch.var_x);
  const double sigma_eta = std::sqrt(ch.var_eta);
  const double sigma_y = std::sqrt(ch.var_x * ch.var_x / ch.var_u());
  const double lo = -4.0 * sigma_y;
  const double step = 8.0 * sigma_y / quantizer_levels;

  std::mt19937_64 rng(seed);
  double sum_dx = 0.0, sum_dy = 0.0;
  double sum_g = 0.0, sum_g2 = 0.0;  // g = (x - u_hat)^2 - (y - u_hat)^2
  double sum_o = 0.0, sum_o2 = 0.0;  // o = (x - y) * u_hat

  for (std::size_t i = 0; i < n_samples; ++i) {
    const GaussianPair z = gaussian_pair(rng);
    const double x = sigma_x * z.z0;
    const double u = x + sigma_eta * z.z1;
    const double y = a * u;

    // Mid-rise uniform quantizer over +-4 sigma_y with saturation.
    int idx = static_cast<int>(std::floor((y - lo) / step));
    if (idx < 0) idx = 0;
    if (idx >= quantizer_levels) idx = quantizer_levels - 1;
    const double u_hat = lo + (idx + 0.5) * step;

    const double dx = x - u_hat;
    const double dy = y - u_hat;
    const double g = dx * dx - dy * dy;
    const double o = (x - y) * u_hat;
    sum_dx += dx * dx;
    sum_dy += dy * dy;
    sum_g += g;
    sum_g2 += g * g;
    sum_o += o;
    sum_o2 += o * o;
  }

  const double n = static_cast<double>(n_samples);
  DecompositionEstimate est{};
  est.empirical_d_ugc = sum_dx / n;
  est.empirical_d_y = sum_dy / n;
  est.d0 = d0(ch);
  est.gap = est.empirical_d_ugc - est.empirical_d_y - est.d0;
  const double var_g = std::max(0.0, sum_g2 / n - (sum_g / n) * (sum_g / n));
  est.gap_se = std::sqrt(var_g / n);
  est.orthogonality_residual = sum_o / n;
  const double var_o = std::max(0.0, sum_o2 / n - (sum_o / n) * (sum_o / n));
  est.orthogonality_se = std::sqrt(var_o / n);
  return est;
}

}  // namespace ugcsat
