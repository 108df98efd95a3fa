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

#include <filesystem>
#include <vector>

#include "ugcsat/plane.hpp"

namespace ugcsat {

// Reads a PNG or PGM image (dispatch on file magic) as a luma plane. Color
// inputs are converted with BT.601 weights (0.299, 0.587, 0.114); grayscale
// inputs are read exactly.
Plane read_image_luma(const std::filesystem::path& path);

// 8-bit grayscale writers; samples are rounded and clamped to [0, 255].
void write_png_gray(const std::filesystem::path& path, const Plane& p);
void write_pgm(const std::filesystem::path& path, const Plane& p);

// Sorted list of the .png/.pgm files directly inside `dir`.
std::vector<std::filesystem::path> list_frame_files(const std::filesystem::path& dir);

// Frame selection: indices start, start+stride, ... into the ordered frame
// list. count == 0 selects everything from start to the end.
struct FrameSampling {
  int start = 0;
  int stride = 1;
  int count = 0;
};

// Sampled frames together with their indices into the ordered frame list.
struct FrameSet {
  std::vector<Plane> frames;
  std::vector<int> indices;
};

// Loads frames from a directory of numbered image files, or a single image
// file (one-frame sequence). Throws on missing indices, unreadable files,
// or dimension mismatch across frames.
FrameSet load_frame_set(const std::filesystem::path& source,
                        const FrameSampling& sampling);
std::vector<Plane> load_frames(const std::filesystem::path& source,
                               const FrameSampling& sampling);

}  // namespace ugcsat
