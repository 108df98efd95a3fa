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

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <doctest.h>

#include "support/temp_dir.hpp"
#include "support/test_images.hpp"
#include "ugcsat/codec.hpp"
#include "ugcsat/image_io.hpp"
#include "ugcsat/pipeline.hpp"
#include "ugcsat/subprocess.hpp"

using namespace ugcsat;
using ugcsat::testing::TempDir;
using ugcsat::testing::make_detailed_test_image;
using ugcsat::testing::quantize8;

TEST_CASE("resolve_jobs") {
  CHECK(resolve_jobs(1) == 1);
  CHECK(resolve_jobs(7) == 7);
  CHECK(resolve_jobs(0) >= 1);
  CHECK_THROWS_AS(resolve_jobs(-1), std::invalid_argument);
}

TEST_CASE("parallel_for_indexed visits every index exactly once") {
  for (int jobs : {1, 4}) {
    std::vector<int> hits(100, 0);
    parallel_for_indexed(hits.size(), jobs,
                         [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("parallel_for_indexed with no work never calls the body") {
  bool called = false;
  parallel_for_indexed(0, 4, [&](std::size_t) { called = true; });
  CHECK_FALSE(called);
}

TEST_CASE("the lowest failing index decides the propagated error") {
  for (int jobs : {1, 4}) {
    CAPTURE(jobs);
    try {
      parallel_for_indexed(8, jobs, [&](std::size_t i) {
        if (i == 1 || i == 3) {
          throw std::runtime_error("boom " + std::to_string(i));
        }
      });
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "boom 1");
    }
  }
}

TEST_CASE("run_clip on one frame matches the pieces it is built from") {
  const Plane u = quantize8(make_detailed_test_image(32, 24, 13, 3.0));
  PipelineConfig config;
  config.grid = parse_quality_grid("14:90:20");
  config.jobs = 1;

  const ClipRunResult clip = run_clip({u}, {0}, config);
  REQUIRE(clip.frames.size() == 1);
  const FrameRunResult& fr = clip.frames[0];
  CHECK(fr.frame_index == 0);
  CHECK(clip.qv_star_clip == fr.analysis.qv_star_frame);

  REQUIRE(fr.sweep_rows.size() == config.grid.values.size());
  for (std::size_t i = 0; i < fr.sweep_rows.size(); ++i) {
    const SweepRow& row = fr.sweep_rows[i];
    CHECK(row.qv == config.grid.values[i]);
    CHECK(row.bytes == jpeg_encode(u, row.qv).size());
    CHECK(row.bpp == doctest::Approx(8.0 * static_cast<double>(row.bytes) /
                                     (32.0 * 24.0))
                         .epsilon(1e-12));
  }
}

TEST_CASE("run_clip is independent of the job count") {
  std::vector<Plane> frames;
  std::vector<int> indices;
  for (int i = 0; i < 4; ++i) {
    frames.push_back(quantize8(make_detailed_test_image(16, 16, 70 + i, 3.0)));
    indices.push_back(i);
  }
  PipelineConfig config;
  config.grid = parse_quality_grid("14:90:20");

  config.jobs = 1;
  const ClipRunResult a = run_clip(frames, indices, config);
  config.jobs = 4;
  const ClipRunResult b = run_clip(frames, indices, config);

  CHECK(a.qv_star_clip == b.qv_star_clip);
  REQUIRE(a.frames.size() == b.frames.size());
  for (std::size_t f = 0; f < a.frames.size(); ++f) {
    CHECK(a.frames[f].frame_index == b.frames[f].frame_index);
    CHECK(a.frames[f].analysis.qv_star_frame == b.frames[f].analysis.qv_star_frame);
    CHECK(a.frames[f].analysis.qv_star_block == b.frames[f].analysis.qv_star_block);
  }
}

TEST_CASE("the decoded sink sees every frame and quality pair") {
  std::vector<Plane> frames = {quantize8(make_detailed_test_image(16, 16, 80, 3.0)),
                               quantize8(make_detailed_test_image(16, 16, 81, 3.0))};
  PipelineConfig config;
  config.grid = parse_quality_grid("14:90:38");
  config.jobs = 2;

  std::map<std::pair<int, int>, std::size_t> seen;
  run_clip(frames, {5, 9}, config,
           [&](int frame_index, int qv, const std::vector<unsigned char>& stream) {
             seen[{frame_index, qv}] = stream.size();
           });

  REQUIRE(seen.size() == 2 * config.grid.values.size());
  for (int frame : {5, 9}) {
    for (int qv : config.grid.values) {
      REQUIRE(seen.count({frame, qv}) == 1);
      CHECK(seen[{frame, qv}] > 0);
    }
  }
  // The streams are the real encoder output.
  CHECK(seen[{5, 14}] == jpeg_encode(frames[0], 14).size());
  CHECK(seen[{9, 90}] == jpeg_encode(frames[1], 90).size());
}

TEST_CASE("run_clip_path reads directories and single files") {
  TempDir tmp("clip-path");
  const Plane f0 = quantize8(make_detailed_test_image(16, 16, 90, 3.0));
  const Plane f1 = quantize8(make_detailed_test_image(16, 16, 91, 3.0));
  write_png_gray(tmp / "frame_000000.png", f0);
  write_png_gray(tmp / "frame_000001.png", f1);

  PipelineConfig config;
  config.grid = parse_quality_grid("14:90:38");
  config.jobs = 1;

  const ClipRunResult from_dir = run_clip_path(tmp.dir(), config);
  const ClipRunResult direct = run_clip({f0, f1}, {0, 1}, config);
  CHECK(from_dir.qv_star_clip == direct.qv_star_clip);
  REQUIRE(from_dir.frames.size() == 2);
  CHECK(from_dir.frames[0].analysis.qv_star_frame ==
        direct.frames[0].analysis.qv_star_frame);

  const ClipRunResult single = run_clip_path(tmp / "frame_000001.png", config);
  REQUIRE(single.frames.size() == 1);
  CHECK(single.frames[0].frame_index == 0);
  CHECK(single.qv_star_clip == direct.frames[1].analysis.qv_star_frame);
}

TEST_CASE("run_clip validates its inputs") {
  PipelineConfig config;
  config.jobs = 1;
  CHECK_THROWS_AS(run_clip({}, {}, config), std::invalid_argument);
  const Plane u = quantize8(make_detailed_test_image(16, 16, 1, 3.0));
  CHECK_THROWS_AS(run_clip({u}, {0, 1}, config), std::invalid_argument);
}

TEST_CASE("run_command_capture reports exit codes and merges stderr") {
  CHECK(run_command_capture("exit 0").exit_code == 0);
  CHECK(run_command_capture("exit 7").exit_code == 7);

  const SubprocessResult out = run_command_capture("echo via-stdout");
  CHECK(out.exit_code == 0);
  CHECK(out.output.find("via-stdout") != std::string::npos);

  const SubprocessResult err = run_command_capture("echo via-stderr 1>&2");
  CHECK(err.exit_code == 0);
  CHECK(err.output.find("via-stderr") != std::string::npos);
}

TEST_CASE("external image filters") {
  const Plane u = quantize8(make_detailed_test_image(16, 16, 2, 3.0));

  SUBCASE("a copy command is an exact identity") {
    const Plane out = run_external_image_filter(u, "cp {input} {output}", "test");
    REQUIRE(out.same_size(u));
    CHECK(out.samples == u.samples);
  }
  SUBCASE("both placeholders are required") {
    CHECK_THROWS_AS(run_external_image_filter(u, "cp {input} out.png", "test"),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_external_image_filter(u, "cp in.png {output}", "test"),
                    std::invalid_argument);
  }
  SUBCASE("a failing command surfaces its captured output") {
    try {
      run_external_image_filter(u, "echo boom-ugc {input} {output} && false", "test");
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      const std::string what = e.what();
      CHECK(what.find("boom-ugc") != std::string::npos);
      CHECK(what.find("exit 1") != std::string::npos);
    }
  }
  SUBCASE("a command that writes nothing is an error") {
    CHECK_THROWS_AS(run_external_image_filter(u, "true {input} {output}", "test"),
                    std::runtime_error);
  }
  SUBCASE("an output with different dimensions is rejected") {
    TempDir tmp("ext-dims");
    write_png_gray(tmp / "small.png",
                   quantize8(make_detailed_test_image(8, 8, 3, 0.0)));
    const std::string cmd =
        "test -f {input} && cp " + (tmp / "small.png").string() + " {output}";
    CHECK_THROWS_AS(run_external_image_filter(u, cmd, "test"), std::runtime_error);
  }
}
