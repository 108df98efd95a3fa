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

#include "ugcsat/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ugcsat {

WaveletFamily parse_wavelet_family(const std::string& name) {
  if (name == "haar" || name == "db1") return WaveletFamily::haar;
  if (name == "db2") return WaveletFamily::db2;
  if (name == "db4") return WaveletFamily::db4;
  throw std::invalid_argument("unknown wavelet family: " + name);
}

const char* wavelet_family_name(WaveletFamily family) {
  switch (family) {
    case WaveletFamily::haar: return "haar";
    case WaveletFamily::db2: return "db2";
    case WaveletFamily::db4: return "db4";
  }
  return "?";
}

namespace {

std::vector<double> qmf_highpass(const std::vector<double>& lo) {
  const std::size_t len = lo.size();
  std::vector<double> hi(len);
  for (std::size_t k = 0; k < len; ++k) {
    const double s = (k % 2 == 0) ? -1.0 : 1.0;
    hi[k] = s * lo[len - 1 - k];
  }
  return hi;
}

WaveletFilters make_filters(std::vector<double> lo) {
  WaveletFilters f;
  f.dec_hi = qmf_highpass(lo);
  f.dec_lo = std::move(lo);
  return f;
}

const WaveletFilters& haar_filters() {
  static const WaveletFilters f = [] {
    const double s = 1.0 / std::sqrt(2.0);
    return make_filters({s, s});
  }();
  return f;
}

const WaveletFilters& db2_filters() {
  static const WaveletFilters f = [] {
    const double r3 = std::sqrt(3.0);
    const double d = 4.0 * std::sqrt(2.0);
    return make_filters(
        {(1.0 - r3) / d, (3.0 - r3) / d, (3.0 + r3) / d, (1.0 + r3) / d});
  }();
  return f;
}

const WaveletFilters& db4_filters() {
  // Daubechies extremal-phase 8-tap lowpass.
  static const WaveletFilters f = make_filters(
      {-0.010597401784997278, 0.032883011666982945, 0.030841381835986965,
       -0.18703481171888114, -0.02798376941698385, 0.6308807679295904,
       0.7148465705525415, 0.23037781330885523});
  return f;
}

// Half-sample symmetric extension folded to period 2n; valid for any index.
inline double sym_ext(std::span<const double> x, long i) {
  const long n = static_cast<long>(x.size());
  long p = i % (2 * n);
  if (p < 0) p += 2 * n;
  return p < n ? x[static_cast<std::size_t>(p)]
               : x[static_cast<std::size_t>(2 * n - 1 - p)];
}

int subband_len(int n, int filter_len) { return (n + filter_len - 1) / 2; }

}  // namespace

const WaveletFilters& wavelet_filters(WaveletFamily family) {
  switch (family) {
    case WaveletFamily::haar: return haar_filters();
    case WaveletFamily::db2: return db2_filters();
    case WaveletFamily::db4: return db4_filters();
  }
  throw std::invalid_argument("unknown wavelet family");
}

void dwt1d(std::span<const double> x, const WaveletFilters& f,
           std::vector<double>& lo, std::vector<double>& hi) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw std::invalid_argument("dwt1d: empty input");
  const int len = static_cast<int>(f.dec_lo.size());
  const int m = subband_len(n, len);
  lo.assign(m, 0.0);
  hi.assign(m, 0.0);
  for (int t = 0; t < m; ++t) {
    double acc_lo = 0.0;
    double acc_hi = 0.0;
    for (int j = 0; j < len; ++j) {
      const double e = sym_ext(x, 2L * t + 1 - j);
      acc_lo += f.dec_lo[j] * e;
      acc_hi += f.dec_hi[j] * e;
    }
    lo[t] = acc_lo;
    hi[t] = acc_hi;
  }
}

std::vector<double> idwt1d(std::span<const double> lo, std::span<const double> hi,
                           const WaveletFilters& f, int n_out) {
  if (lo.size() != hi.size()) {
    throw std::invalid_argument("idwt1d: subband length mismatch");
  }
  const int len = static_cast<int>(f.dec_lo.size());
  const int m = static_cast<int>(lo.size());
  if (n_out < 1 || m != subband_len(n_out, len)) {
    throw std::invalid_argument("idwt1d: subband length inconsistent with output length");
  }
  std::vector<double> r(static_cast<std::size_t>(n_out), 0.0);
  // Adjoint of the analysis operator; exact inverse for orthonormal filters.
  for (int t = 0; t < m; ++t) {
    const double a = lo[t];
    const double d = hi[t];
    for (int j = 0; j < len; ++j) {
      const long i = 2L * t + 1 - j;
      if (i >= 0 && i < n_out) {
        r[static_cast<std::size_t>(i)] += a * f.dec_lo[j] + d * f.dec_hi[j];
      }
    }
  }
  return r;
}

namespace {

void dwt2_level(const CoeffMat& in, const WaveletFilters& f, CoeffMat& ll,
                CoeffMat& lh, CoeffMat& hl, CoeffMat& hh) {
  const int len = static_cast<int>(f.dec_lo.size());
  const int mc = subband_len(in.cols, len);
  const int mr = subband_len(in.rows, len);

  CoeffMat low_x(in.rows, mc);
  CoeffMat high_x(in.rows, mc);
  std::vector<double> lo, hi;
  for (int r = 0; r < in.rows; ++r) {
    std::span<const double> row(&in.v[static_cast<std::size_t>(r) * in.cols],
                                static_cast<std::size_t>(in.cols));
    dwt1d(row, f, lo, hi);
    for (int c = 0; c < mc; ++c) {
      low_x.at(r, c) = lo[c];
      high_x.at(r, c) = hi[c];
    }
  }

  ll = CoeffMat(mr, mc);
  lh = CoeffMat(mr, mc);
  hl = CoeffMat(mr, mc);
  hh = CoeffMat(mr, mc);
  std::vector<double> col(static_cast<std::size_t>(in.rows));
  for (int c = 0; c < mc; ++c) {
    for (int r = 0; r < in.rows; ++r) col[static_cast<std::size_t>(r)] = low_x.at(r, c);
    dwt1d(col, f, lo, hi);
    for (int r = 0; r < mr; ++r) {
      ll.at(r, c) = lo[r];
      lh.at(r, c) = hi[r];
    }
    for (int r = 0; r < in.rows; ++r) col[static_cast<std::size_t>(r)] = high_x.at(r, c);
    dwt1d(col, f, lo, hi);
    for (int r = 0; r < mr; ++r) {
      hl.at(r, c) = lo[r];
      hh.at(r, c) = hi[r];
    }
  }
}

CoeffMat idwt2_level(const CoeffMat& ll, const CoeffMat& lh, const CoeffMat& hl,
                     const CoeffMat& hh, const WaveletFilters& f, int out_rows,
                     int out_cols) {
  auto same_shape = [](const CoeffMat& a, const CoeffMat& b) {
    return a.rows == b.rows && a.cols == b.cols;
  };
  if (!same_shape(ll, lh) || !same_shape(ll, hl) || !same_shape(ll, hh)) {
    throw std::invalid_argument("idwt2: inconsistent subband shapes");
  }
  const int mc = ll.cols;

  // Invert columns first (forward went rows then columns).
  CoeffMat low_x(out_rows, mc);
  CoeffMat high_x(out_rows, mc);
  std::vector<double> ca(static_cast<std::size_t>(ll.rows));
  std::vector<double> cd(static_cast<std::size_t>(ll.rows));
  for (int c = 0; c < mc; ++c) {
    for (int r = 0; r < ll.rows; ++r) {
      ca[static_cast<std::size_t>(r)] = ll.at(r, c);
      cd[static_cast<std::size_t>(r)] = lh.at(r, c);
    }
    std::vector<double> col = idwt1d(ca, cd, f, out_rows);
    for (int r = 0; r < out_rows; ++r) low_x.at(r, c) = col[static_cast<std::size_t>(r)];
    for (int r = 0; r < ll.rows; ++r) {
      ca[static_cast<std::size_t>(r)] = hl.at(r, c);
      cd[static_cast<std::size_t>(r)] = hh.at(r, c);
    }
    col = idwt1d(ca, cd, f, out_rows);
    for (int r = 0; r < out_rows; ++r) high_x.at(r, c) = col[static_cast<std::size_t>(r)];
  }

  CoeffMat out(out_rows, out_cols);
  for (int r = 0; r < out_rows; ++r) {
    std::span<const double> lo_row(&low_x.v[static_cast<std::size_t>(r) * mc],
                                   static_cast<std::size_t>(mc));
    std::span<const double> hi_row(&high_x.v[static_cast<std::size_t>(r) * mc],
                                   static_cast<std::size_t>(mc));
    std::vector<double> row = idwt1d(lo_row, hi_row, f, out_cols);
    std::copy(row.begin(), row.end(),
              out.v.begin() + static_cast<std::size_t>(r) * out_cols);
  }
  return out;
}

}  // namespace

WaveletPyramid dwt2(const Plane& p, int levels, WaveletFamily family) {
  if (levels < 1) throw std::invalid_argument("dwt2: levels must be >= 1");
  const int min_dim = std::min(p.width, p.height);
  if (min_dim < 1) throw std::invalid_argument("dwt2: empty plane");
  if ((1 << levels) > min_dim) {
    throw std::invalid_argument("dwt2: too many levels for a " +
                                std::to_string(p.width) + "x" +
                                std::to_string(p.height) + " plane");
  }

  const WaveletFilters& f = wavelet_filters(family);
  WaveletPyramid pyr;
  pyr.family = family;

  CoeffMat cur(p.height, p.width);
  cur.v = p.samples;
  for (int k = 0; k < levels; ++k) {
    PyramidLevel lv;
    lv.in_rows = cur.rows;
    lv.in_cols = cur.cols;
    CoeffMat ll;
    dwt2_level(cur, f, ll, lv.lh, lv.hl, lv.hh);
    pyr.levels.push_back(std::move(lv));
    cur = std::move(ll);
  }
  pyr.approx = std::move(cur);
  return pyr;
}

Plane idwt2(const WaveletPyramid& pyr) {
  if (pyr.levels.empty()) throw std::invalid_argument("idwt2: empty pyramid");
  const WaveletFilters& f = wavelet_filters(pyr.family);
  const int len = static_cast<int>(f.dec_lo.size());

  // Subband shapes must chain: each level's output dims are the next
  // (coarser) level's input dims, ending at the approximation subband.
  for (std::size_t k = 0; k < pyr.levels.size(); ++k) {
    const PyramidLevel& lv = pyr.levels[k];
    const int mr = subband_len(lv.in_rows, len);
    const int mc = subband_len(lv.in_cols, len);
    if (lv.hh.rows != mr || lv.hh.cols != mc) {
      throw std::invalid_argument("idwt2: inconsistent subband shapes");
    }
    const int next_rows = (k + 1 < pyr.levels.size()) ? pyr.levels[k + 1].in_rows
                                                      : pyr.approx.rows;
    const int next_cols = (k + 1 < pyr.levels.size()) ? pyr.levels[k + 1].in_cols
                                                      : pyr.approx.cols;
    if (next_rows != mr || next_cols != mc) {
      throw std::invalid_argument("idwt2: inconsistent subband shapes");
    }
  }

  CoeffMat cur = pyr.approx;
  for (std::size_t k = pyr.levels.size(); k-- > 0;) {
    const PyramidLevel& lv = pyr.levels[k];
    cur = idwt2_level(cur, lv.lh, lv.hl, lv.hh, f, lv.in_rows, lv.in_cols);
  }

  Plane out(cur.cols, cur.rows);
  out.samples = std::move(cur.v);
  return out;
}

}  // namespace ugcsat
