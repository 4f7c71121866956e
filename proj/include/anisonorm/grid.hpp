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
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "anisonorm/errors.hpp"

namespace anisonorm {

/// Uniform periodic grid on [0,L1) x [0,L2) x [0,L3).
///
/// Axes are numbered 1..3 as in the physical notation; x1 varies fastest in
/// storage. Resolutions must be even and at least 4 so that the Nyquist plane
/// and the real-to-complex half spectrum are unambiguous.
class Grid3 {
 public:
  static constexpr double two_pi = 2.0 * std::numbers::pi;

  explicit Grid3(std::array<int, 3> n, std::array<double, 3> length = {two_pi, two_pi, two_pi})
      : n_(n), length_(length) {
    for (int a = 0; a < 3; ++a) {
      if (n_[a] < 4 || n_[a] % 2 != 0)
        throw InvalidArgument("grid resolution n" + std::to_string(a + 1) +
                              " must be even and >= 4, got " + std::to_string(n_[a]));
      if (!(length_[a] > 0.0) || !std::isfinite(length_[a]))
        throw InvalidArgument("box length L" + std::to_string(a + 1) + " must be finite and > 0");
    }
  }

  static Grid3 cube(int n, double length = two_pi) { return Grid3({n, n, n}, {length, length, length}); }

  /// Resolution along axis 1, 2 or 3.
  int n(int axis) const { return n_[index(axis)]; }
  double length(int axis) const { return length_[index(axis)]; }
  double spacing(int axis) const { return length(axis) / n(axis); }
  double coordinate(int axis, int i) const { return spacing(axis) * i; }
  /// Angular wavenumber of integer mode m along an axis.
  double wavenumber(int axis, int m) const { return two_pi * m / length(axis); }

  const std::array<int, 3>& resolution() const { return n_; }
  const std::array<double, 3>& lengths() const { return length_; }

  std::size_t points() const {
    return static_cast<std::size_t>(n_[0]) * n_[1] * n_[2];
  }
  /// Number of complex coefficients of the real-to-complex half spectrum.
  std::size_t spectral_points() const {
    return static_cast<std::size_t>(n_[0] / 2 + 1) * n_[1] * n_[2];
  }
  int half_n1() const { return n_[0] / 2 + 1; }
  double volume() const { return length_[0] * length_[1] * length_[2]; }
  double cell_volume() const { return volume() / static_cast<double>(points()); }

  std::size_t offset(int i1, int i2, int i3) const {
    return static_cast<std::size_t>(i1) +
           static_cast<std::size_t>(n_[0]) * (static_cast<std::size_t>(i2) +
                                              static_cast<std::size_t>(n_[1]) * i3);
  }
  std::size_t spectral_offset(int m1, int i2, int i3) const {
    return static_cast<std::size_t>(m1) +
           static_cast<std::size_t>(half_n1()) *
               (static_cast<std::size_t>(i2) + static_cast<std::size_t>(n_[1]) * i3);
  }

  /// Signed integer mode for storage index i along axes 2 and 3 (axis 1 is
  /// stored as the non-negative half).
  int signed_mode(int axis, int i) const {
    int nn = n(axis);
    if (axis == 1) return i;
    return i <= nn / 2 - 1 ? i : i - nn;
  }
  bool is_nyquist(int axis, int i) const {
    return axis == 1 ? i == n_[0] / 2 : i == n(axis) / 2;
  }

  friend bool operator==(const Grid3& a, const Grid3& b) {
    return a.n_ == b.n_ && a.length_ == b.length_;
  }

 private:
  static std::size_t index(int axis) {
    if (axis < 1 || axis > 3)
      throw InvalidArgument("axis must be 1, 2 or 3, got " + std::to_string(axis));
    return static_cast<std::size_t>(axis - 1);
  }

  std::array<int, 3> n_;
  std::array<double, 3> length_;
};

enum class Representation { physical, spectral };

/// Scalar (1 component) or vector (3 component) field sampled on a Grid3.
///
/// Physical storage: components * n1*n2*n3 doubles, component-major with x1
/// fastest. Spectral storage: components * (n1/2+1)*n2*n3 complex
/// coefficients of the normalized expansion f(x) = sum_k c_k exp(i k.x).
class Field {
 public:
  using complex = std::complex<double>;

  Field(Grid3 grid, int components, Representation rep = Representation::physical)
      : grid_(std::move(grid)), components_(components), rep_(rep) {
    if (components != 1 && components != 3)
      throw InvalidArgument("a field has 1 or 3 components, got " + std::to_string(components));
    if (rep_ == Representation::physical)
      real_.assign(components_ * grid_.points(), 0.0);
    else
      modes_.assign(components_ * grid_.spectral_points(), complex(0.0, 0.0));
  }

  static Field scalar(const Grid3& grid) { return Field(grid, 1); }
  static Field vector(const Grid3& grid) { return Field(grid, 3); }

  /// Samples f(x1, x2, x3) at the grid nodes.
  template <class F>
  static Field sample(const Grid3& grid, F&& f) {
    Field out(grid, 1);
    auto v = out.values();
    for (int k = 0; k < grid.n(3); ++k)
      for (int j = 0; j < grid.n(2); ++j)
        for (int i = 0; i < grid.n(1); ++i)
          v[grid.offset(i, j, k)] =
              f(grid.coordinate(1, i), grid.coordinate(2, j), grid.coordinate(3, k));
    return out;
  }

  /// Samples a vector function returning std::array<double, 3>.
  template <class F>
  static Field sample_vector(const Grid3& grid, F&& f) {
    Field out(grid, 3);
    const std::size_t np = grid.points();
    auto v = out.values();
    for (int k = 0; k < grid.n(3); ++k)
      for (int j = 0; j < grid.n(2); ++j)
        for (int i = 0; i < grid.n(1); ++i) {
          std::array<double, 3> u =
              f(grid.coordinate(1, i), grid.coordinate(2, j), grid.coordinate(3, k));
          const std::size_t o = grid.offset(i, j, k);
          v[o] = u[0];
          v[np + o] = u[1];
          v[2 * np + o] = u[2];
        }
    return out;
  }

  const Grid3& grid() const { return grid_; }
  int components() const { return components_; }
  Representation representation() const { return rep_; }
  bool is_physical() const { return rep_ == Representation::physical; }
  bool is_spectral() const { return rep_ == Representation::spectral; }
  bool is_scalar() const { return components_ == 1; }
  bool is_vector() const { return components_ == 3; }

  std::span<double> values() {
    require(Representation::physical);
    return real_;
  }
  std::span<const double> values() const {
    require(Representation::physical);
    return real_;
  }
  /// Physical samples of component c (0-based).
  std::span<double> values(int c) { return values().subspan(c * grid_.points(), grid_.points()); }
  std::span<const double> values(int c) const {
    return values().subspan(c * grid_.points(), grid_.points());
  }

  std::span<complex> modes() {
    require(Representation::spectral);
    return modes_;
  }
  std::span<const complex> modes() const {
    require(Representation::spectral);
    return modes_;
  }
  std::span<complex> modes(int c) {
    return modes().subspan(c * grid_.spectral_points(), grid_.spectral_points());
  }
  std::span<const complex> modes(int c) const {
    return modes().subspan(c * grid_.spectral_points(), grid_.spectral_points());
  }

  /// Copy of component c as a scalar field in the same representation.
  Field component(int c) const {
    if (c < 0 || c >= components_)
      throw InvalidArgument("component index " + std::to_string(c) + " out of range");
    Field out(grid_, 1, rep_);
    if (is_physical()) {
      auto src = values(c);
      std::copy(src.begin(), src.end(), out.real_.begin());
    } else {
      auto src = modes(c);
      std::copy(src.begin(), src.end(), out.modes_.begin());
    }
    return out;
  }

  /// Stacks three scalar fields of one representation into a vector field.
  static Field stack(const Field& a, const Field& b, const Field& c) {
    if (!a.is_scalar() || !b.is_scalar() || !c.is_scalar())
      throw InvalidArgument("stack expects three scalar fields");
    if (!(a.grid_ == b.grid_ && a.grid_ == c.grid_) || a.rep_ != b.rep_ || a.rep_ != c.rep_)
      throw InvalidArgument("stack expects fields on one grid and representation");
    Field out(a.grid_, 3, a.rep_);
    if (out.is_physical()) {
      std::size_t np = a.grid_.points();
      std::copy(a.real_.begin(), a.real_.end(), out.real_.begin());
      std::copy(b.real_.begin(), b.real_.end(), out.real_.begin() + np);
      std::copy(c.real_.begin(), c.real_.end(), out.real_.begin() + 2 * np);
    } else {
      std::size_t ns = a.grid_.spectral_points();
      std::copy(a.modes_.begin(), a.modes_.end(), out.modes_.begin());
      std::copy(b.modes_.begin(), b.modes_.end(), out.modes_.begin() + ns);
      std::copy(c.modes_.begin(), c.modes_.end(), out.modes_.begin() + 2 * ns);
    }
    return out;
  }

  Field& operator*=(double c) {
    for (auto& x : real_) x *= c;
    for (auto& z : modes_) z *= c;
    return *this;
  }
  Field& operator+=(const Field& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < real_.size(); ++i) real_[i] += o.real_[i];
    for (std::size_t i = 0; i < modes_.size(); ++i) modes_[i] += o.modes_[i];
    return *this;
  }
  Field& operator-=(const Field& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < real_.size(); ++i) real_[i] -= o.real_[i];
    for (std::size_t i = 0; i < modes_.size(); ++i) modes_[i] -= o.modes_[i];
    return *this;
  }
  friend Field operator*(double c, Field f) { return f *= c; }
  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }

  /// True when no sample or coefficient is NaN or infinite.
  bool all_finite() const {
    for (double x : real_)
      if (!std::isfinite(x)) return false;
    for (const auto& z : modes_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

 private:
  void require(Representation r) const {
    if (rep_ != r)
      throw InvalidArgument(r == Representation::physical
                                ? "field is in spectral representation; physical values requested"
                                : "field is in physical representation; spectral modes requested");
  }
  void require_compatible(const Field& o) const {
    if (!(grid_ == o.grid_) || components_ != o.components_ || rep_ != o.rep_)
      throw InvalidArgument("fields differ in grid, component count or representation");
  }

  Grid3 grid_;
  int components_;
  Representation rep_;
  std::vector<double> real_;
  std::vector<complex> modes_;
};

/// Largest absolute sample over all components.
inline double max_abs(const Field& f) {
  double m = 0.0;
  for (double x : f.values()) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace anisonorm
