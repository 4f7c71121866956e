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
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "anisonorm/grid.hpp"
#include "anisonorm/spectral.hpp"

namespace anisonorm::testing {

inline constexpr double pi = std::numbers::pi;

/// Explicit trigonometric sum f(x) = sum_j c_j cos(k_j . x + phase_j), kept
/// in closed form so tests can differentiate and integrate it analytically.
struct ModeSum {
  struct Term {
    std::array<double, 3> k;
    double amplitude, phase;
  };
  std::vector<Term> terms;

  double operator()(double x1, double x2, double x3) const {
    double s = 0;
    for (const auto& t : terms) s += t.amplitude * std::cos(t.k[0] * x1 + t.k[1] * x2 + t.k[2] * x3 + t.phase);
    return s;
  }
  double derivative(int axis, double x1, double x2, double x3) const {
    double s = 0;
    for (const auto& t : terms)
      s -= t.amplitude * t.k[axis - 1] * std::sin(t.k[0] * x1 + t.k[1] * x2 + t.k[2] * x3 + t.phase);
    return s;
  }
};

/// Random mode sum with integer wavenumbers |m_i| <= cap on a box of lengths L.
inline ModeSum random_mode_sum(std::mt19937_64& rng, int cap, int terms, std::array<double, 3> L) {
  std::uniform_int_distribution<int> mode(-cap, cap);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  ModeSum f;
  for (int j = 0; j < terms; ++j) {
    ModeSum::Term t;
    for (int a = 0; a < 3; ++a) t.k[a] = 2 * pi * mode(rng) / L[a];
    t.amplitude = unit(rng);
    t.phase = pi * unit(rng);
    f.terms.push_back(t);
  }
  return f;
}

inline double max_difference(const Field& a, const Field& b) {
  double m = 0;
  auto x = a.values();
  auto y = b.values();
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

inline double relative_l2_difference(const Field& a, const Field& b) {
  double num = 0, den = 0;
  auto x = a.values();
  auto y = b.values();
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - y[i]) * (x[i] - y[i]);
    den += y[i] * y[i];
  }
  return den > 0 ? std::sqrt(num / den) : std::sqrt(num);
}

/// Kahan-summed sum of squares; naive summation biases long sums at the 1e-13 level.
inline double compensated_sum_of_squares(std::span<const double> v) {
  double sum = 0, comp = 0;
  for (double x : v) {
    const double y = x * x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

/// Rectangle-rule L2 norm on the periodic grid; exact for band-limited fields.
inline double quadrature_l2(const Field& u) {
  const Field p = to_physical(u);
  return std::sqrt(compensated_sum_of_squares(p.values()) * p.grid().cell_volume());
}

inline Field random_samples(const Grid3& g, int components, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Field f(g, components);
  for (auto& x : f.values()) x = normal(rng);
  return f;
}

}  // namespace anisonorm::testing
