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

#include "ugcsat/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace ugcsat {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& why) {
  throw std::runtime_error(path.string() + ": " + why);
}

std::uint8_t to_byte(double v) {
  const double c = std::min(255.0, std::max(0.0, v));
  return static_cast<std::uint8_t>(std::lround(c));
}

Plane read_png(const std::filesystem::path& path) {
  png_image img{};
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&img, path.string().c_str())) {
    fail(path, std::string("PNG read failed: ") + img.message);
  }
  const bool color = (img.format & PNG_FORMAT_FLAG_COLOR) != 0;
  img.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;

  const int w = static_cast<int>(img.width);
  const int h = static_cast<int>(img.height);
  const std::size_t channels = color ? 3 : 1;
  std::vector<std::uint8_t> buf(static_cast<std::size_t>(w) * h * channels);
  if (!png_image_finish_read(&img, nullptr, buf.data(), 0, nullptr)) {
    std::string msg = img.message;
    png_image_free(&img);
    fail(path, "PNG decode failed: " + msg);
  }

  Plane p(w, h);
  if (color) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::uint8_t* px = &buf[i * 3];
      double y = 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
      p.samples[i] = std::min(255.0, std::max(0.0, y));
    }
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) p.samples[i] = buf[i];
  }
  return p;
}

int pgm_token(std::istream& in, const std::filesystem::path& path) {
  // Tokens may be separated by whitespace and '#' comments.
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  if (c == EOF || !std::isdigit(c)) fail(path, "malformed PGM header");
  int value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    c = in.get();
  }
  return value;
}

Plane read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open");
  char magic[2];
  in.read(magic, 2);
  const bool ascii = magic[0] == 'P' && magic[1] == '2';
  const bool binary = magic[0] == 'P' && magic[1] == '5';
  if (!ascii && !binary) fail(path, "not a PGM file");

  const int w = pgm_token(in, path);
  const int h = pgm_token(in, path);
  const int maxval = pgm_token(in, path);
  if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255) {
    fail(path, "unsupported PGM geometry (8-bit only)");
  }

  Plane p(w, h);
  if (binary) {
    std::vector<std::uint8_t> buf(p.size());
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (static_cast<std::size_t>(in.gcount()) != buf.size()) fail(path, "truncated PGM");
    for (std::size_t i = 0; i < p.size(); ++i) p.samples[i] = buf[i];
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) {
      p.samples[i] = pgm_token(in, path);
    }
  }
  return p;
}

}  // namespace

Plane read_image_luma(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) fail(path, "cannot open");
  unsigned char magic[2] = {0, 0};
  probe.read(reinterpret_cast<char*>(magic), 2);
  probe.close();
  if (magic[0] == 0x89 && magic[1] == 'P') return read_png(path);
  if (magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5')) return read_pgm(path);
  fail(path, "unrecognized image format (PNG and PGM supported)");
}

void write_png_gray(const std::filesystem::path& path, const Plane& p) {
  std::vector<std::uint8_t> buf(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) buf[i] = to_byte(p.samples[i]);

  png_image img{};
  img.version = PNG_IMAGE_VERSION;
  img.width = static_cast<png_uint_32>(p.width);
  img.height = static_cast<png_uint_32>(p.height);
  img.format = PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&img, path.string().c_str(), 0, buf.data(), 0,
                               nullptr)) {
    fail(path, std::string("PNG write failed: ") + img.message);
  }
}

void write_pgm(const std::filesystem::path& path, const Plane& p) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open for writing");
  out << "P5\n" << p.width << " " << p.height << "\n255\n";
  std::vector<std::uint8_t> buf(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) buf[i] = to_byte(p.samples[i]);
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
  if (!out) fail(path, "PGM write failed");
}

std::vector<std::filesystem::path> list_frame_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (ext == ".png" || ext == ".pgm") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

FrameSet load_frame_set(const std::filesystem::path& source,
                        const FrameSampling& sampling) {
  if (sampling.start < 0 || sampling.stride < 1 || sampling.count < 0) {
    throw std::invalid_argument("load_frames: need start >= 0, stride >= 1, count >= 0");
  }

  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_regular_file(source)) {
    files.push_back(source);
  } else if (std::filesystem::is_directory(source)) {
    files = list_frame_files(source);
  } else {
    fail(source, "no such file or directory");
  }
  if (files.empty()) fail(source, "no frames found");

  const int total = static_cast<int>(files.size());
  std::vector<int> indices;
  if (sampling.count == 0) {
    for (int i = sampling.start; i < total; i += sampling.stride) indices.push_back(i);
    if (indices.empty()) {
      fail(source, "frame index " + std::to_string(sampling.start) +
                       " out of range (have " + std::to_string(total) + ")");
    }
  } else {
    for (int k = 0; k < sampling.count; ++k) {
      const int i = sampling.start + k * sampling.stride;
      if (i >= total) {
        fail(source, "frame index " + std::to_string(i) + " out of range (have " +
                         std::to_string(total) + ")");
      }
      indices.push_back(i);
    }
  }

  FrameSet set;
  set.frames.reserve(indices.size());
  for (int i : indices) {
    Plane p = read_image_luma(files[static_cast<std::size_t>(i)]);
    if (!set.frames.empty() && !set.frames.front().same_size(p)) {
      fail(files[static_cast<std::size_t>(i)],
           "frame dimensions differ from the first frame");
    }
    set.frames.push_back(std::move(p));
  }
  set.indices = std::move(indices);
  return set;
}

std::vector<Plane> load_frames(const std::filesystem::path& source,
                               const FrameSampling& sampling) {
  return load_frame_set(source, sampling).frames;
}

}  // namespace ugcsat
