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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "support/temp_dir.hpp"
#include "support/test_images.hpp"
#include "ugcsat/image_io.hpp"

using namespace ugcsat;
using ugcsat::testing::TempDir;
using ugcsat::testing::make_random_plane;
using ugcsat::testing::quantize8;

namespace {

Plane index_stamp(int index) {
  // 4x4 frame whose every sample encodes its index; lets sampling tests
  // verify which file was loaded.
  Plane p(4, 4);
  for (double& s : p.samples) s = static_cast<double>(index % 256);
  return p;
}

std::string frame_name(int index, const char* ext) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "frame_%06d.%s", index, ext);
  return buf;
}

}  // namespace

TEST_CASE("png round trip is exact for 8-bit content") {
  TempDir tmp("png");
  const Plane original = quantize8(make_random_plane(33, 17, 4));
  write_png_gray(tmp / "a.png", original);
  const Plane loaded = read_image_luma(tmp / "a.png");
  REQUIRE(loaded.same_size(original));
  CHECK(loaded.samples == original.samples);
}

TEST_CASE("pgm round trip is exact for 8-bit content") {
  TempDir tmp("pgm");
  const Plane original = quantize8(make_random_plane(16, 24, 5));
  write_pgm(tmp / "a.pgm", original);
  const Plane loaded = read_image_luma(tmp / "a.pgm");
  REQUIRE(loaded.same_size(original));
  CHECK(loaded.samples == original.samples);
}

TEST_CASE("writers round and clamp fractional samples") {
  TempDir tmp("round");
  Plane p(3, 1);
  p.samples = {41.4, 41.5, 300.0};
  write_png_gray(tmp / "r.png", p);
  const Plane loaded = read_image_luma(tmp / "r.png");
  CHECK(loaded.samples[0] == 41.0);
  CHECK(loaded.samples[1] == 42.0);
  CHECK(loaded.samples[2] == 255.0);
}

TEST_CASE("constant plane survives the file format") {
  TempDir tmp("gray");
  Plane p(12, 9);
  for (double& s : p.samples) s = 137.0;
  write_png_gray(tmp / "g.png", p);
  for (double s : read_image_luma(tmp / "g.png").samples) CHECK(s == 137.0);
}

TEST_CASE("list_frame_files sorts and filters") {
  TempDir tmp("list");
  const Plane p = index_stamp(0);
  write_png_gray(tmp / "b.png", p);
  write_png_gray(tmp / "a.png", p);
  write_pgm(tmp / "c.pgm", p);
  std::ofstream(tmp / "notes.txt") << "not a frame\n";
  std::filesystem::create_directory(tmp / "sub");

  const auto files = list_frame_files(tmp.dir());
  REQUIRE(files.size() == 3);
  CHECK(files[0].filename() == "a.png");
  CHECK(files[1].filename() == "b.png");
  CHECK(files[2].filename() == "c.pgm");
}

TEST_CASE("single file loads as a one-frame sequence") {
  TempDir tmp("single");
  write_png_gray(tmp / "only.png", index_stamp(9));
  const FrameSet set = load_frame_set(tmp / "only.png", FrameSampling{});
  REQUIRE(set.frames.size() == 1);
  CHECK(set.indices == std::vector<int>{0});
  CHECK(set.frames[0].samples[0] == 9.0);
}

TEST_CASE("sampling picks start, stride and count") {
  TempDir tmp("sampling");
  for (int i = 0; i < 400; ++i) write_pgm(tmp / frame_name(i, "pgm"), index_stamp(i));

  SUBCASE("start 15, stride 30, count 10") {
    const FrameSet set = load_frame_set(tmp.dir(), FrameSampling{15, 30, 10});
    REQUIRE(set.frames.size() == 10);
    for (int k = 0; k < 10; ++k) {
      const int expected = 15 + 30 * k;
      CHECK(set.indices[k] == expected);
      CHECK(set.frames[k].samples[0] == static_cast<double>(expected % 256));
    }
  }
  SUBCASE("count 0 walks to the end") {
    const FrameSet set = load_frame_set(tmp.dir(), FrameSampling{396, 2, 0});
    REQUIRE(set.indices == std::vector<int>({396, 398}));
  }
  SUBCASE("defaults load everything") {
    const FrameSet set = load_frame_set(tmp.dir(), FrameSampling{});
    CHECK(set.frames.size() == 400);
  }
  SUBCASE("first frame only") {
    const FrameSet set = load_frame_set(tmp.dir(), FrameSampling{0, 1, 1});
    REQUIRE(set.indices == std::vector<int>({0}));
  }
  SUBCASE("count beyond the sequence throws") {
    CHECK_THROWS_AS(load_frame_set(tmp.dir(), FrameSampling{390, 30, 3}),
                    std::runtime_error);
  }
  SUBCASE("negative start and zero stride throw") {
    CHECK_THROWS_AS(load_frame_set(tmp.dir(), FrameSampling{-1, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_frame_set(tmp.dir(), FrameSampling{0, 0, 1}),
                    std::invalid_argument);
  }
}

TEST_CASE("load_frames returns just the planes") {
  TempDir tmp("planes");
  for (int i = 0; i < 3; ++i) write_png_gray(tmp / frame_name(i, "png"), index_stamp(i));
  const std::vector<Plane> frames = load_frames(tmp.dir(), FrameSampling{1, 1, 2});
  REQUIRE(frames.size() == 2);
  CHECK(frames[0].samples[0] == 1.0);
  CHECK(frames[1].samples[0] == 2.0);
}

TEST_CASE("mixed frame dimensions are rejected") {
  TempDir tmp("dims");
  write_png_gray(tmp / "frame_000000.png", index_stamp(0));
  write_png_gray(tmp / "frame_000001.png", make_random_plane(5, 4, 1));
  CHECK_THROWS_AS(load_frame_set(tmp.dir(), FrameSampling{}), std::runtime_error);
}

TEST_CASE("missing sources throw") {
  TempDir tmp("missing");
  CHECK_THROWS(load_frame_set(tmp / "absent.png", FrameSampling{}));
  std::filesystem::create_directory(tmp / "empty");
  CHECK_THROWS(load_frame_set(tmp / "empty", FrameSampling{}));
}

TEST_CASE("garbage bytes are not an image") {
  TempDir tmp("garbage");
  std::ofstream(tmp / "bad.png", std::ios::binary) << "not png data";
  CHECK_THROWS_AS(read_image_luma(tmp / "bad.png"), std::runtime_error);
}
