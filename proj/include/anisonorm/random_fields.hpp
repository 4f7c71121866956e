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

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "anisonorm/errors.hpp"
#include "anisonorm/grid.hpp"
#include "anisonorm/norms.hpp"
#include "anisonorm/spectral.hpp"

namespace anisonorm {

/// Gaussian stream whose output depends only on its seed: mt19937_64 for
/// bits, Box-Muller on 53-bit uniforms for normals (std distributions are
/// implementation-defined).
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Independent stream seed for (seed, trial, stream); order of evaluation
/// across trials never matters.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
  return mix64(mix64(mix64(seed) ^ trial) ^ (stream * 0xD1B54A32D192ED03ull));
}

/// Recipe for a seeded smooth test function: Gaussian Fourier coefficients
/// with |m_i| <= mode_cap, damped by 1/(1+|m|^2). With `window` the function
/// is multiplied by sin^4(pi x3 / L3), which vanishes at x3 = 0 and is itself
/// band-limited (modes |m3| <= 2), so the base uses |m3| <= mode_cap - 2 and the
/// product stays inside the cap.
struct TestFunctionRecipe {
  std::uint64_t seed = 1;
  std::uint64_t trial = 0;
  std::uint64_t stream = 0;
  int mode_cap = 4;
  bool window = false;
  bool mean_zero = false;
  /// Root-mean-square value of the result.
  double amplitude = 1.0;
};

namespace detail {

inline void require_band(const Grid3& g, int cap) {
  if (cap < 1) throw InvalidArgument("mode_cap must be at least 1");
  for (int axis = 1; axis <= 3; ++axis)
    if (!inside_dealiasing_band(cap, g.n(axis)))
      throw InvalidArgument("mode_cap " + std::to_string(cap) + " exceeds the dealiased band n/3 on axis " +
                            std::to_string(axis));
}

/// Random Hermitian-consistent half spectrum with |m1|,|m2| <= cap, |m3| <= cap3.
inline Field random_spectrum(const Grid3& g, int cap, int cap3, NormalStream& rng, bool mean_zero) {
  Field s(g, 1, Representation::spectral);
  auto c = s.modes();
  const int n2 = g.n(2), n3 = g.n(3);
  for (int m3 = -cap3; m3 <= cap3; ++m3) {
    for (int m2 = -cap; m2 <= cap; ++m2) {
      for (int m1 = 0; m1 <= cap; ++m1) {
        const double damp = 1.0 / (1.0 + m1 * m1 + m2 * m2 + m3 * m3);
        const std::size_t o = g.spectral_offset(m1, (m2 + n2) % n2, (m3 + n3) % n3);
        if (m1 > 0) {
          c[o] = damp * std::complex<double>(rng.normal(), rng.normal());
        } else if (m2 == 0 && m3 == 0) {
          c[o] = mean_zero ? 0.0 : damp * rng.normal();
        } else if (m3 > 0 || (m3 == 0 && m2 > 0)) {
          // The m1 = 0 plane stores both (m2, m3) and (-m2, -m3); keep them conjugate.
          const std::complex<double> z = damp * std::complex<double>(rng.normal(), rng.normal());
          c[o] = z;
          c[g.spectral_offset(0, (n2 - m2) % n2, (n3 - m3) % n3)] = std::conj(z);
        }
      }
    }
  }
  return s;
}

inline void normalize_rms(Field& f, double amplitude) {
  double sq = 0;
  for (double x : f.values()) sq += x * x;
  const double rms = std::sqrt(sq / static_cast<double>(f.values().size()));
  if (!(rms > 0)) throw ConsistencyError("random field came out identically zero");
  f *= amplitude / rms;
}

}  // namespace detail

/// Physical scalar field built from a recipe.
inline Field random_test_function(const Grid3& g, const TestFunctionRecipe& recipe) {
  detail::require_band(g, recipe.mode_cap);
  if (recipe.window && recipe.mean_zero)
    throw InvalidArgument("a windowed test function cannot also be forced to mean zero");
  NormalStream rng(stream_seed(recipe.seed, recipe.trial, recipe.stream));
  const int cap3 = recipe.window ? std::max(recipe.mode_cap - 2, 0) : recipe.mode_cap;
  Field f = to_physical(detail::random_spectrum(g, recipe.mode_cap, cap3, rng, recipe.mean_zero));
  if (recipe.window) {
    auto v = f.values();
    for (int k = 0; k < g.n(3); ++k) {
      const double w = std::pow(std::sin(std::numbers::pi * g.coordinate(3, k) / g.length(3)), 4);
      for (int j = 0; j < g.n(2); ++j)
        for (int i = 0; i < g.n(1); ++i) v[g.offset(i, j, k)] *= w;
    }
  }
  detail::normalize_rms(f, recipe.amplitude);
  return f;
}

/// Seeded band-limited divergence-free vector field: Gaussian coefficients
/// projected by Leray, dealiased, then scaled so that ||u||_2 = l2_norm.
inline Field random_solenoidal_field(const Grid3& g, std::uint64_t seed, int mode_cap, double l2_norm) {
  detail::require_band(g, mode_cap);
  if (!(l2_norm > 0) || !std::isfinite(l2_norm)) throw InvalidArgument("amplitude must be positive");
  NormalStream rng(stream_seed(seed, 0, 0));
  Field a = detail::random_spectrum(g, mode_cap, mode_cap, rng, true);
  Field b = detail::random_spectrum(g, mode_cap, mode_cap, rng, true);
  Field c = detail::random_spectrum(g, mode_cap, mode_cap, rng, true);
  Field u = to_physical(dealias(leray_project(Field::stack(a, b, c))));
  double sq = 0;
  for (double x : u.values()) sq += x * x;
  const double norm = std::sqrt(sq * g.cell_volume());
  if (!(norm > 0)) throw ConsistencyError("random solenoidal field came out identically zero");
  u *= l2_norm / norm;
  return u;
}

}  // namespace anisonorm
