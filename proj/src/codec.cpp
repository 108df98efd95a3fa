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

#include "ugcsat/codec.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <memory>
#include <stdexcept>

#include <jpeglib.h>

#include "ugcsat/subprocess.hpp"

namespace ugcsat {

QualityGrid QualityGrid::standard() {
  QualityGrid g;
  for (int qv = 14; qv <= 90; qv += 4) g.values.push_back(qv);
  return g;
}

namespace {

void validate_grid(const QualityGrid& g) {
  if (g.values.empty()) throw std::invalid_argument("quality grid is empty");
  int prev = 0;
  for (int qv : g.values) {
    if (qv < 1 || qv > 100) {
      throw std::invalid_argument("quality value out of [1, 100]: " +
                                  std::to_string(qv));
    }
    if (qv <= prev) {
      throw std::invalid_argument("quality grid must be strictly increasing");
    }
    prev = qv;
  }
}

int parse_int_strict(const std::string& s, const char* what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) {
    throw std::invalid_argument(std::string(what) + ": bad integer '" + s + "'");
  }
  return v;
}

}  // namespace

QualityGrid parse_quality_grid(const std::string& text) {
  QualityGrid g;
  const std::size_t c1 = text.find(':');
  if (c1 == std::string::npos) {
    g.values.push_back(parse_int_strict(text, "quality grid"));
  } else {
    const std::size_t c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) {
      throw std::invalid_argument("quality grid must be min:max:step or a single value: " +
                                  text);
    }
    const int lo = parse_int_strict(text.substr(0, c1), "quality grid min");
    const int hi = parse_int_strict(text.substr(c1 + 1, c2 - c1 - 1), "quality grid max");
    const int step = parse_int_strict(text.substr(c2 + 1), "quality grid step");
    if (step < 1 || hi < lo) {
      throw std::invalid_argument("quality grid needs min <= max and step >= 1: " + text);
    }
    for (int qv = lo; qv <= hi; qv += step) g.values.push_back(qv);
  }
  validate_grid(g);
  return g;
}

namespace {

struct JpegError {
  jpeg_error_mgr pub;
  jmp_buf env;
  char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegError*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  longjmp(err->env, 1);
}

unsigned char to_byte(double v) {
  const long r = std::lround(v);
  return static_cast<unsigned char>(r < 0 ? 0 : (r > 255 ? 255 : r));
}

}  // namespace

std::vector<unsigned char> jpeg_encode(const Plane& p, int qv) {
  if (qv < 1 || qv > 100) {
    throw std::invalid_argument("jpeg_encode: quality out of [1, 100]: " +
                                std::to_string(qv));
  }
  if (p.width < 1 || p.height < 1 ||
      p.samples.size() != static_cast<std::size_t>(p.width) * p.height) {
    throw std::invalid_argument("jpeg_encode: invalid plane");
  }

  std::vector<unsigned char> bytes8(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) bytes8[i] = to_byte(p.samples[i]);

  jpeg_compress_struct cinfo;
  JpegError err;
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = jpeg_error_exit;

  // The destination pointer pair lives on the heap: libjpeg rewrites it
  // between setjmp and a potential longjmp, and it is read afterwards.
  struct MemDest {
    unsigned char* buf = nullptr;
    unsigned long size = 0;
    ~MemDest() { free(buf); }
  };
  const std::unique_ptr<MemDest> dest(new MemDest);

  if (setjmp(err.env)) {
    jpeg_destroy_compress(&cinfo);
    throw std::runtime_error(std::string("jpeg_encode failed at qv ") +
                             std::to_string(qv) + ": " + err.message);
  }

  jpeg_create_compress(&cinfo);
  jpeg_mem_dest(&cinfo, &dest->buf, &dest->size);
  cinfo.image_width = static_cast<JDIMENSION>(p.width);
  cinfo.image_height = static_cast<JDIMENSION>(p.height);
  cinfo.input_components = 1;
  cinfo.in_color_space = JCS_GRAYSCALE;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, qv, TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  while (cinfo.next_scanline < cinfo.image_height) {
    JSAMPROW row = bytes8.data() +
                   static_cast<std::size_t>(cinfo.next_scanline) * p.width;
    jpeg_write_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_compress(&cinfo);
  jpeg_destroy_compress(&cinfo);

  return std::vector<unsigned char>(dest->buf, dest->buf + dest->size);
}

Plane jpeg_decode(const std::vector<unsigned char>& data) {
  if (data.empty()) throw std::invalid_argument("jpeg_decode: empty stream");

  jpeg_decompress_struct cinfo;
  JpegError err;
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = jpeg_error_exit;

  if (setjmp(err.env)) {
    jpeg_destroy_decompress(&cinfo);
    throw std::runtime_error(std::string("jpeg_decode failed: ") + err.message);
  }

  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, data.data(), static_cast<unsigned long>(data.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_GRAYSCALE;
  jpeg_start_decompress(&cinfo);

  Plane p(static_cast<int>(cinfo.output_width),
          static_cast<int>(cinfo.output_height));
  std::vector<unsigned char> row(cinfo.output_width);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW ptr = row.data();
    const std::size_t y = cinfo.output_scanline;
    jpeg_read_scanlines(&cinfo, &ptr, 1);
    for (std::size_t x = 0; x < row.size(); ++x) {
      p.samples[y * cinfo.output_width + x] = row[x];
    }
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return p;
}

SweepEntry jpeg_encode_decode(const Plane& p, int qv) {
  SweepEntry e;
  e.qv = qv;
  std::vector<unsigned char> stream = jpeg_encode(p, qv);
  e.decoded = jpeg_decode(stream);
  if (!e.decoded.same_size(p)) {
    throw std::runtime_error("jpeg round trip changed dimensions at qv " +
                             std::to_string(qv));
  }
  e.bytes = stream.size();
  e.bpp = 8.0 * static_cast<double>(e.bytes) /
          (static_cast<double>(p.width) * p.height);
  return e;
}

QualitySweep sweep(const Plane& p, const QualityGrid& grid) {
  validate_grid(grid);
  QualitySweep s;
  s.entries.reserve(grid.values.size());
  for (int qv : grid.values) s.entries.push_back(jpeg_encode_decode(p, qv));
  return s;
}

DegradationKind parse_degradation_kind(const std::string& name) {
  if (name == "dct_quantize") return DegradationKind::dct_quantize;
  if (name == "recompress_jpeg") return DegradationKind::recompress_jpeg;
  if (name == "external") return DegradationKind::external;
  throw std::invalid_argument("unknown degradation kind: " + name);
}

const char* degradation_kind_name(DegradationKind kind) {
  switch (kind) {
    case DegradationKind::dct_quantize: return "dct_quantize";
    case DegradationKind::recompress_jpeg: return "recompress_jpeg";
    case DegradationKind::external: return "external";
  }
  throw std::logic_error("unreachable degradation kind");
}

namespace {

constexpr int kDctSize = 8;

// Orthonormal DCT-II basis, C[k][n].
struct DctBasis {
  double c[kDctSize][kDctSize];
  DctBasis() {
    const double pi = std::acos(-1.0);
    for (int k = 0; k < kDctSize; ++k) {
      const double alpha = k == 0 ? std::sqrt(1.0 / kDctSize) : std::sqrt(2.0 / kDctSize);
      for (int n = 0; n < kDctSize; ++n) {
        c[k][n] = alpha * std::cos(pi * (2 * n + 1) * k / (2.0 * kDctSize));
      }
    }
  }
};

Plane degrade_dct_quantize(const Plane& in, int qp) {
  if (qp < 0 || qp > 51) {
    throw std::invalid_argument("dct_quantize: qp out of [0, 51]: " +
                                std::to_string(qp));
  }
  static const DctBasis basis;
  const double step = std::exp2((qp - 4) / 6.0);

  Plane out = in;
  double block[kDctSize][kDctSize];
  double coef[kDctSize][kDctSize];
  double tmp[kDctSize][kDctSize];
  for (int by = 0; by + kDctSize <= in.height; by += kDctSize) {
    for (int bx = 0; bx + kDctSize <= in.width; bx += kDctSize) {
      for (int y = 0; y < kDctSize; ++y) {
        for (int x = 0; x < kDctSize; ++x) block[y][x] = in.at(bx + x, by + y);
      }
      // coef = C * block * C^T
      for (int k = 0; k < kDctSize; ++k) {
        for (int x = 0; x < kDctSize; ++x) {
          double acc = 0.0;
          for (int y = 0; y < kDctSize; ++y) acc += basis.c[k][y] * block[y][x];
          tmp[k][x] = acc;
        }
      }
      for (int k = 0; k < kDctSize; ++k) {
        for (int l = 0; l < kDctSize; ++l) {
          double acc = 0.0;
          for (int x = 0; x < kDctSize; ++x) acc += tmp[k][x] * basis.c[l][x];
          coef[k][l] = acc;
        }
      }
      for (int k = 0; k < kDctSize; ++k) {
        for (int l = 0; l < kDctSize; ++l) {
          if (k == 0 && l == 0) continue;
          coef[k][l] = std::round(coef[k][l] / step) * step;
        }
      }
      // block = C^T * coef * C
      for (int y = 0; y < kDctSize; ++y) {
        for (int l = 0; l < kDctSize; ++l) {
          double acc = 0.0;
          for (int k = 0; k < kDctSize; ++k) acc += basis.c[k][y] * coef[k][l];
          tmp[y][l] = acc;
        }
      }
      for (int y = 0; y < kDctSize; ++y) {
        for (int x = 0; x < kDctSize; ++x) {
          double acc = 0.0;
          for (int l = 0; l < kDctSize; ++l) acc += tmp[y][l] * basis.c[l][x];
          out.at(bx + x, by + y) = acc;
        }
      }
    }
  }
  out.clamp();
  return out;
}

}  // namespace

Plane synthesize_ugc(const Plane& pristine, const DegradationSpec& spec,
                     std::uint64_t seed) {
  (void)seed;
  switch (spec.kind) {
    case DegradationKind::dct_quantize:
      return degrade_dct_quantize(pristine, spec.qp);
    case DegradationKind::recompress_jpeg:
      return jpeg_encode_decode(pristine, spec.quality).decoded;
    case DegradationKind::external:
      return run_external_image_filter(pristine, spec.command,
                                       "synthesize_ugc(external)");
  }
  throw std::logic_error("unreachable degradation kind");
}

}  // namespace ugcsat
