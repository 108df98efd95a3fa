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
#include <vector>

#include "ugcsat/plane.hpp"

namespace ugcsat {

// Orthogonal Daubechies families; haar is db1.
enum class WaveletFamily { haar, db2, db4 };

WaveletFamily parse_wavelet_family(const std::string& name);
const char* wavelet_family_name(WaveletFamily family);

// Decomposition filter pair. dec_hi is the quadrature mirror of dec_lo.
struct WaveletFilters {
  std::vector<double> dec_lo;
  std::vector<double> dec_hi;
};

const WaveletFilters& wavelet_filters(WaveletFamily family);

// Row-major coefficient array. Unlike Plane, values are unbounded.
struct CoeffMat {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  CoeffMat() = default;
  CoeffMat(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c) {}
  double& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
};

// One decomposition level. Subband naming: first letter is the filter
// applied along rows (x direction), second along columns. in_rows/in_cols are
// the dimensions of the signal this level decomposed, needed to invert.
struct PyramidLevel {
  CoeffMat lh;  // low x, high y
  CoeffMat hl;  // high x, low y
  CoeffMat hh;  // high x, high y (diagonal)
  int in_rows = 0;
  int in_cols = 0;
};

// levels[0] is the finest scale; approx is the final approximation subband.
struct WaveletPyramid {
  WaveletFamily family = WaveletFamily::db2;
  std::vector<PyramidLevel> levels;
  CoeffMat approx;
};

// Single-level 1-D analysis with symmetric (half-sample) boundary extension.
// Output subbands have length (n + filter_len - 1) / 2.
void dwt1d(std::span<const double> x, const WaveletFilters& f,
           std::vector<double>& lo, std::vector<double>& hi);

// Inverse of dwt1d; n_out is the original signal length.
std::vector<double> idwt1d(std::span<const double> lo, std::span<const double> hi,
                           const WaveletFilters& f, int n_out);

// Separable 2-D DWT, `levels` >= 1 and 2^levels <= min(width, height).
WaveletPyramid dwt2(const Plane& p, int levels, WaveletFamily family);

// Inverse transform. Rejects pyramids with inconsistent subband shapes.
Plane idwt2(const WaveletPyramid& pyr);

}  // namespace ugcsat
