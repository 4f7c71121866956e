// Copyright 2026 The anisonorm Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "anisonorm/field_io.hpp"
#include "anisonorm/spectral.hpp"
#include "test_support.hpp"

namespace an = anisonorm;
using an::Field;
using an::Grid3;
using an::testing::pi;

namespace {

Field taylor(const Grid3& g) {
  return Field::sample_vector(g, [](double x, double y, double) {
    return std::array<double, 3>{std::sin(x) * std::cos(y), -std::cos(x) * std::sin(y), 0.0};
  });
}

}  // namespace

TEST(Grid3, RejectsOddOrSmallResolutionAndBadLengths) {
  EXPECT_THROW(Grid3({5, 8, 8}), an::InvalidArgument);
  EXPECT_THROW(Grid3({2, 8, 8}), an::InvalidArgument);
  EXPECT_THROW(Grid3({8, 8, 8}, {1.0, 0.0, 1.0}), an::InvalidArgument);
  EXPECT_THROW(Grid3({8, 8, 8}, {1.0, NAN, 1.0}), an::InvalidArgument);
  const Grid3 g({4, 6, 8}, {1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(g.cell_volume(), 6.0 / 192.0);
  EXPECT_EQ(g.spectral_points(), 3u * 6u * 8u);
  EXPECT_THROW(g.n(4), an::InvalidArgument);
}

TEST(Transform, RoundTripOf200RandomFields) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> half(2, 8);
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Grid3 g({2 * half(rng), 2 * half(rng), 2 * half(rng)}, {1.0 + trial % 3, 2 * pi, 0.5});
    const Field f = an::testing::random_samples(g, trial % 2 ? 3 : 1, rng);
    const Field back = an::to_physical(an::to_spectral(f));
    worst = std::max(worst, an::testing::relative_l2_difference(back, f));
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(Transform, SpectralInputIsLeftUntouchedByInverse) {
  std::mt19937_64 rng(3);
  const Grid3 g = Grid3::cube(8);
  const Field s = an::to_spectral(an::testing::random_samples(g, 1, rng));
  const Field copy = s;
  (void)an::to_physical(s);
  for (std::size_t i = 0; i < s.modes().size(); ++i) EXPECT_EQ(s.modes()[i], copy.modes()[i]);
}

TEST(SpectralDerivative, SingleModeExamples) {
  const Grid3 g = Grid3::cube(16);
  const Field f = Field::sample(g, [](double, double, double z) { return std::sin(z); });
  const Field want = Field::sample(g, [](double, double, double z) { return std::cos(z); });
  EXPECT_LE(an::testing::max_difference(an::spectral_derivative(f, 3), want), 1e-12);

  const Field h = Field::sample(g, [](double x, double, double) { return std::cos(2 * x); });
  const Field dh = Field::sample(g, [](double x, double, double) { return -2 * std::sin(2 * x); });
  EXPECT_LE(an::testing::max_difference(an::spectral_derivative(h, 1), dh), 1e-12);

  const Field zero = Field::scalar(g);
  for (int axis = 1; axis <= 3; ++axis) EXPECT_EQ(an::max_abs(an::spectral_derivative(zero, axis)), 0.0);
  EXPECT_THROW(an::spectral_derivative(f, 0), an::InvalidArgument);
  EXPECT_THROW(an::spectral_derivative(f, 4), an::InvalidArgument);
  EXPECT_THROW(an::spectral_derivative(taylor(g), 1), an::InvalidArgument);
}

TEST(SpectralDerivative, KeepsRepresentation) {
  const Grid3 g = Grid3::cube(8);
  const Field f = an::to_spectral(Field::sample(g, [](double x, double, double) { return std::sin(x); }));
  EXPECT_TRUE(an::spectral_derivative(f, 1).is_spectral());
}

TEST(SpectralDerivative, ExactForRandomBandLimitedFieldsOnNonCubicBoxes) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::array<double, 3> L{2 * pi, 3.0, 1.5 + trial * 0.1};
    const Grid3 g({18, 12, 24}, L);
    const auto mode_sum = an::testing::random_mode_sum(rng, 3, 6, L);
    const Field f = Field::sample(g, mode_sum);
    for (int axis = 1; axis <= 3; ++axis) {
      const Field want = Field::sample(
          g, [&](double x, double y, double z) { return mode_sum.derivative(axis, x, y, z); });
      EXPECT_LE(an::testing::max_difference(an::spectral_derivative(f, axis), want), 1e-10);
    }
  }
}

TEST(Divergence, Examples) {
  const Grid3 g = Grid3::cube(16);
  EXPECT_LE(an::max_abs(an::to_physical(an::divergence(taylor(g)))), 1e-12);
  const Field u = Field::sample_vector(
      g, [](double x, double, double) { return std::array<double, 3>{std::sin(x), 0.0, 0.0}; });
  const Field want = Field::sample(g, [](double x, double, double) { return std::cos(x); });
  EXPECT_LE(an::testing::max_difference(an::divergence(u), want), 1e-12);
  EXPECT_EQ(an::max_abs(an::divergence(Field::vector(g))), 0.0);
  EXPECT_THROW(an::divergence(Field::scalar(g)), an::InvalidArgument);
}

TEST(LerayProjection, AnnihilatesGradientsAndFixesSolenoidalFields) {
  const Grid3 g = Grid3::cube(16);
  const Field grad = Field::sample_vector(
      g, [](double x, double, double) { return std::array<double, 3>{std::cos(x), 0.0, 0.0}; });
  EXPECT_LE(an::max_abs(an::leray_project(grad)), 1e-12);
  const Field tv = taylor(g);
  EXPECT_LE(an::testing::max_difference(an::leray_project(tv), tv), 1e-12);
  EXPECT_THROW(an::leray_project(Field::scalar(g)), an::InvalidArgument);
}

TEST(LerayProjection, IdempotentDivergenceFreeAndMeanPreserving) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Grid3 g({8, 12, 16}, {1.0, 2.0, 2 * pi});
    Field u = an::testing::random_samples(g, 3, rng);
    const Field p = an::leray_project(u);
    EXPECT_LE(an::testing::max_difference(an::leray_project(p), p), 1e-12);
    EXPECT_LE(an::max_divergence(p), 1e-12 * std::max(1.0, an::max_abs(u)) * 10);
    for (int c = 0; c < 3; ++c) {
      double mean_u = 0, mean_p = 0;
      for (double x : u.values(c)) mean_u += x;
      for (double x : p.values(c)) mean_p += x;
      EXPECT_NEAR(mean_u, mean_p, 1e-9);
    }
  }
}

TEST(Operators, Linearity) {
  std::mt19937_64 rng(23);
  const Grid3 g = Grid3::cube(8);
  const Field a = an::testing::random_samples(g, 3, rng);
  const Field b = an::testing::random_samples(g, 3, rng);
  const double c = -1.75;
  const Field lhs = an::leray_project(c * a + b);
  const Field rhs = c * an::leray_project(a) + an::leray_project(b);
  EXPECT_LE(an::testing::max_difference(lhs, rhs), 1e-12 * 10);
  const Field dl = an::divergence(c * a + b);
  const Field dr = c * an::divergence(a) + an::divergence(b);
  EXPECT_LE(an::testing::max_difference(dl, dr), 1e-11);
  const Field sa = a.component(0), sb = b.component(0);
  const Field gl = an::spectral_derivative(c * sa + sb, 2);
  const Field gr = c * an::spectral_derivative(sa, 2) + an::spectral_derivative(sb, 2);
  EXPECT_LE(an::testing::max_difference(gl, gr), 1e-11);
}

TEST(Dealias, KeepsLowBandAndRemovesHighModes) {
  EXPECT_TRUE(an::inside_dealiasing_band(5, 16));
  EXPECT_FALSE(an::inside_dealiasing_band(6, 18));
  EXPECT_FALSE(an::inside_dealiasing_band(-6, 16));
  const Grid3 g = Grid3::cube(16);
  const Field low = Field::sample(g, [](double x, double y, double z) { return std::sin(5 * x) * std::cos(2 * y + z); });
  EXPECT_LE(an::testing::max_difference(an::dealias(low), low), 1e-13);
  const Field high = Field::sample(g, [](double, double, double z) { return std::cos(6 * z); });
  EXPECT_LE(an::max_abs(an::dealias(high)), 1e-14);
}

TEST(FieldFile, RoundTripIsBitExactAndHeaderIsLittleEndian) {
  std::mt19937_64 rng(29);
  const Grid3 g({4, 6, 8}, {1.0, 2.5, 2 * pi});
  const Field f = an::testing::random_samples(g, 3, rng);
  const auto bytes = an::encode_field(f);
  ASSERT_EQ(bytes.size(), an::ansf_header_bytes + 3 * g.points() * 8);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "ANSF");
  EXPECT_EQ(bytes[4], 1);
  EXPECT_EQ(bytes[5], 3);  // components, low byte first
  EXPECT_EQ(bytes[9], 4);  // n1
  const Field back = an::decode_field(bytes);
  ASSERT_EQ(back.components(), 3);
  EXPECT_TRUE(back.grid() == g);
  for (std::size_t i = 0; i < f.values().size(); ++i) EXPECT_EQ(back.values()[i], f.values()[i]);

  const auto path = std::filesystem::temp_directory_path() / "anisonorm_roundtrip.ansf";
  an::write_field(path, f);
  const Field disk = an::read_field(path);
  EXPECT_EQ(an::encode_field(disk), bytes);
  std::filesystem::remove(path);
}

TEST(FieldFile, RejectsCorruptInput) {
  const Grid3 g = Grid3::cube(4);
  auto bytes = an::encode_field(Field::scalar(g));
  auto bad = bytes;
  bad[0] = 'X';
  EXPECT_THROW(an::decode_field(bad), an::IoError);
  bad = bytes;
  bad[4] = 2;
  EXPECT_THROW(an::decode_field(bad), an::IoError);
  bad = bytes;
  bad.pop_back();
  EXPECT_THROW(an::decode_field(bad), an::IoError);
  EXPECT_THROW(an::read_field("/nonexistent/dir/x.ansf"), an::IoError);
}
