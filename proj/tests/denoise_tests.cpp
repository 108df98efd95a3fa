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

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "support/test_images.hpp"
#include "ugcsat/denoise.hpp"
#include "ugcsat/rng.hpp"
#include "ugcsat/wavelet.hpp"

using namespace ugcsat;
using ugcsat::testing::add_gaussian_noise;
using ugcsat::testing::make_natural_test_image;

TEST_CASE("denoiser kind names round-trip") {
  for (DenoiserKind k : {DenoiserKind::bayes_shrink, DenoiserKind::gaussian_blur,
                         DenoiserKind::identity, DenoiserKind::external}) {
    CHECK(parse_denoiser_kind(denoiser_kind_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_denoiser_kind("nlmeans"), std::invalid_argument);
}

TEST_CASE("noise estimate vanishes for a constant plane") {
  const Plane p(64, 64, 131.0);
  // Haar differences of equal samples are exact zeros; the db2 filter
  // leaves only float round-off in the detail band.
  CHECK(estimate_noise_sigma(dwt2(p, 1, WaveletFamily::haar)) == 0.0);
  CHECK(estimate_noise_sigma(dwt2(p, 1, WaveletFamily::db2)) < 1e-12);
}

TEST_CASE("noise estimate recovers a pure-noise sigma") {
  Plane p(256, 256, 0.0);
  GaussianSampler g(3);
  for (double& s : p.samples) s = 128.0 + 20.0 * g.next();
  const double sigma = estimate_noise_sigma(dwt2(p, 1, WaveletFamily::db2));
  CHECK(sigma > 17.0);
  CHECK(sigma < 23.0);
}

TEST_CASE("noise estimate tolerates signal leakage") {
  const Plane clean = make_natural_test_image(256, 256, 5, 0.0);
  const Plane noisy = add_gaussian_noise(clean, 10.0, 9);
  const double sigma = estimate_noise_sigma(dwt2(noisy, 1, WaveletFamily::db2));
  CHECK(sigma > 8.0);
  CHECK(sigma < 13.0);
}

TEST_CASE("noise estimate rejects an empty pyramid") {
  CHECK_THROWS_AS(estimate_noise_sigma(WaveletPyramid{}), std::invalid_argument);
}

TEST_CASE("bayes threshold formula") {
  const std::vector<double> band = {1.0, -2.0, 0.5, 2.5};

  SUBCASE("zero noise means no shrinkage") {
    CHECK(bayes_shrink_threshold(band, 0.0) == 0.0);
  }
  SUBCASE("subband variance of two sigma squared") {
    // E[c^2] = 2 with sigma_n = 1 gives sigma_x = 1 and T = 1.
    const std::vector<double> b = {std::sqrt(3.0), -1.0, 1.0, -std::sqrt(3.0)};
    CHECK(bayes_shrink_threshold(b, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("noise above the subband energy kills the subband") {
    const std::vector<double> weak = {0.1, -0.2, 0.3};
    const double t = bayes_shrink_threshold(weak, 10.0);
    for (double c : weak) {
      CHECK(soft_threshold(c, t) == 0.0);
    }
  }
  SUBCASE("invalid inputs") {
    CHECK_THROWS_AS(bayes_shrink_threshold({}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bayes_shrink_threshold(band, -1.0), std::invalid_argument);
  }
}

TEST_CASE("soft threshold") {
  CHECK(soft_threshold(5.0, 2.0) == 3.0);
  CHECK(soft_threshold(-5.0, 2.0) == -3.0);
  CHECK(soft_threshold(1.0, 2.0) == 0.0);
  CHECK(soft_threshold(-1.0, 2.0) == 0.0);
  CHECK(soft_threshold(7.5, 0.0) == 7.5);
  // Odd symmetry.
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const double c = 20.0 * (uniform_unit(rng) - 0.5);
    const double t = 5.0 * uniform_unit(rng);
    CHECK(soft_threshold(-c, t) == -soft_threshold(c, t));
  }
}

TEST_CASE("identity denoiser returns its input bit-exactly") {
  const Plane p = make_natural_test_image(48, 40, 2, 6.0);
  DenoiserSpec spec;
  spec.kind = DenoiserKind::identity;
  const Plane out = denoise(p, spec);
  CHECK(out.samples == p.samples);
}

TEST_CASE("bayes shrink improves psnr on noisy natural content") {
  const Plane clean = make_natural_test_image(256, 256, 5, 0.0);
  const Plane noisy = add_gaussian_noise(clean, 15.0, 9);
  DenoiserSpec spec;  // bayes_shrink, db2, 3 levels
  const Plane denoised = denoise(noisy, spec);
  CHECK(psnr(denoised, clean) > psnr(noisy, clean) + 1.0);
  for (double s : denoised.samples) {
    CHECK(s >= 0.0);
    CHECK(s <= 255.0);
  }
}

TEST_CASE("bayes shrink passes a constant plane through unchanged") {
  const Plane p(40, 40, 77.0);

  // Haar sees an exactly-zero detail band, which short-circuits to the
  // identity; db2 leaves round-off dust below any visible level.
  DenoiserSpec haar_spec;
  haar_spec.wavelet = WaveletFamily::haar;
  const Plane exact = denoise(p, haar_spec);
  CHECK(exact.samples == p.samples);

  DenoiserSpec spec;
  const Plane out = denoise(p, spec);
  REQUIRE(out.same_size(p));
  for (double s : out.samples) CHECK(s == doctest::Approx(77.0).epsilon(1e-12));
}

TEST_CASE("gaussian blur denoiser") {
  const Plane clean = make_natural_test_image(128, 128, 8, 0.0);
  const Plane noisy = add_gaussian_noise(clean, 15.0, 21);
  DenoiserSpec spec;
  spec.kind = DenoiserKind::gaussian_blur;

  SUBCASE("reduces noise") {
    const Plane out = denoise(noisy, spec);
    CHECK(mse(out, clean) < mse(noisy, clean));
  }
  SUBCASE("constant plane stays constant") {
    const Plane flat(32, 32, 150.0);
    const Plane out = denoise(flat, spec);
    for (double s : out.samples) {
      CHECK(s == doctest::Approx(150.0).epsilon(1e-12));
    }
  }
  SUBCASE("explicit radius matches the derived default") {
    // sigma 1.5 derives radius ceil(3 * 1.5) = 5.
    DenoiserSpec fixed = spec;
    fixed.blur_radius = 5;
    CHECK(denoise(noisy, fixed).samples == denoise(noisy, spec).samples);
  }
  SUBCASE("invalid sigma") {
    DenoiserSpec bad = spec;
    bad.blur_sigma = 0.0;
    CHECK_THROWS_AS(denoise(noisy, bad), std::invalid_argument);
  }
}

TEST_CASE("external denoiser round-trips through the filter command") {
  const Plane p = ugcsat::testing::quantize8(make_natural_test_image(32, 24, 6, 4.0));
  DenoiserSpec spec;
  spec.kind = DenoiserKind::external;
  spec.command = "cp {input} {output}";
  const Plane out = denoise(p, spec);
  REQUIRE(out.same_size(p));
  // The command copies the 8-bit file, so an already-quantized plane returns
  // exactly.
  CHECK(out.samples == p.samples);
}
