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

#include <array>
#include <cmath>
#include <complex>

#include "anisonorm/fft.hpp"
#include "anisonorm/grid.hpp"

namespace anisonorm {

inline Field to_spectral(const Field& f) {
  if (f.is_spectral()) return f;
  Field out(f.grid(), f.components(), Representation::spectral);
  const auto& plan = fft::plan_3d(f.grid().resolution());
  for (int c = 0; c < f.components(); ++c) plan.forward(f.values(c), out.modes(c));
  return out;
}

inline Field to_physical(const Field& f) {
  if (f.is_physical()) return f;
  Field out(f.grid(), f.components(), Representation::physical);
  const auto& plan = fft::plan_3d(f.grid().resolution());
  for (int c = 0; c < f.components(); ++c) plan.inverse(f.modes(c), out.values(c));
  return out;
}

/// Returns `f` in the representation `rep`.
inline Field in_representation(const Field& f, Representation rep) {
  return rep == Representation::physical ? to_physical(f) : to_spectral(f);
}

namespace detail {

/// Calls fn(offset, k1, k2, k3, nyquist_mask) for every stored coefficient.
/// Wavenumbers on a Nyquist index are reported as 0 (derivatives vanish there).
template <class Fn>
void for_each_mode(const Grid3& g, Fn&& fn) {
  for (int i3 = 0; i3 < g.n(3); ++i3) {
    const double k3 = g.is_nyquist(3, i3) ? 0.0 : g.wavenumber(3, g.signed_mode(3, i3));
    for (int i2 = 0; i2 < g.n(2); ++i2) {
      const double k2 = g.is_nyquist(2, i2) ? 0.0 : g.wavenumber(2, g.signed_mode(2, i2));
      for (int m1 = 0; m1 < g.half_n1(); ++m1) {
        const double k1 = g.is_nyquist(1, m1) ? 0.0 : g.wavenumber(1, m1);
        fn(g.spectral_offset(m1, i2, i3), k1, k2, k3);
      }
    }
  }
}

/// Weight of a stored half-spectrum coefficient in a full-spectrum sum.
inline double hermitian_weight(const Grid3& g, int m1) {
  return (m1 == 0 || m1 == g.n(1) / 2) ? 1.0 : 2.0;
}

}  // namespace detail

/// Partial derivative along axis 1, 2 or 3. Exact for band-limited input;
/// Nyquist coefficients are zeroed. The result has the input's representation.
inline Field spectral_derivative(const Field& f, int axis) {
  if (axis < 1 || axis > 3)
    throw InvalidArgument("axis must be 1, 2 or 3, got " + std::to_string(axis));
  if (!f.is_scalar()) throw InvalidArgument("spectral_derivative expects a scalar field");
  Field s = to_spectral(f);
  auto modes = s.modes();
  const std::complex<double> i(0.0, 1.0);
  detail::for_each_mode(s.grid(), [&](std::size_t o, double k1, double k2, double k3) {
    const double k = axis == 1 ? k1 : (axis == 2 ? k2 : k3);
    modes[o] *= i * k;
  });
  return in_representation(s, f.representation());
}

/// Sum of d_i u_i for a 3-component field; returns a scalar field.
inline Field divergence(const Field& u) {
  if (!u.is_vector()) throw InvalidArgument("divergence expects a 3-component field");
  Field s = to_spectral(u);
  Field out(u.grid(), 1, Representation::spectral);
  auto d = out.modes();
  auto a = s.modes(0), b = s.modes(1), c = s.modes(2);
  const std::complex<double> i(0.0, 1.0);
  detail::for_each_mode(u.grid(), [&](std::size_t o, double k1, double k2, double k3) {
    d[o] = i * (k1 * a[o] + k2 * b[o] + k3 * c[o]);
  });
  return in_representation(out, u.representation());
}

/// Leray projection onto divergence-free fields: u_hat - k (k.u_hat)/|k|^2.
/// The mean (k = 0) is left unchanged.
inline Field leray_project(const Field& u) {
  if (!u.is_vector()) throw InvalidArgument("leray_project expects a 3-component field");
  Field s = to_spectral(u);
  auto a = s.modes(0), b = s.modes(1), c = s.modes(2);
  detail::for_each_mode(u.grid(), [&](std::size_t o, double k1, double k2, double k3) {
    const double k2sum = k1 * k1 + k2 * k2 + k3 * k3;
    if (k2sum == 0.0) return;
    const std::complex<double> dot = (k1 * a[o] + k2 * b[o] + k3 * c[o]) / k2sum;
    a[o] -= k1 * dot;
    b[o] -= k2 * dot;
    c[o] -= k3 * dot;
  });
  return in_representation(s, u.representation());
}

/// True when integer mode m survives the 2/3 rule on a grid of n points (3|m| < n).
inline bool inside_dealiasing_band(int m, int n) { return 3 * std::abs(m) < n; }

/// Zeroes every coefficient outside the 2/3 band on any axis.
inline Field dealias(const Field& f) {
  Field s = to_spectral(f);
  const Grid3& g = s.grid();
  for (int c = 0; c < s.components(); ++c) {
    auto m = s.modes(c);
    for (int i3 = 0; i3 < g.n(3); ++i3) {
      const bool keep3 = !g.is_nyquist(3, i3) && inside_dealiasing_band(g.signed_mode(3, i3), g.n(3));
      for (int i2 = 0; i2 < g.n(2); ++i2) {
        const bool keep2 = !g.is_nyquist(2, i2) && inside_dealiasing_band(g.signed_mode(2, i2), g.n(2));
        for (int m1 = 0; m1 < g.half_n1(); ++m1) {
          const bool keep1 = inside_dealiasing_band(m1, g.n(1));
          if (!(keep1 && keep2 && keep3)) m[g.spectral_offset(m1, i2, i3)] = 0.0;
        }
      }
    }
  }
  return in_representation(s, f.representation());
}

/// Grid maximum of |div u|.
inline double max_divergence(const Field& u) { return max_abs(to_physical(divergence(u))); }

}  // namespace anisonorm
