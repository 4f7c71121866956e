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

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "anisonorm/errors.hpp"
#include "anisonorm/exponent.hpp"
#include "anisonorm/grid.hpp"
#include "anisonorm/spectral.hpp"

namespace anisonorm {

/// Inner exponent alpha along x3, outer exponent beta over (x1, x2).
struct MixedNormSpec {
  Exponent alpha;
  Exponent beta;
};

/// Time samples of a nonnegative scalar diagnostic.
class ScalarSeries {
 public:
  ScalarSeries() = default;
  ScalarSeries(std::vector<double> times, std::vector<double> values)
      : times_(std::move(times)), values_(std::move(values)) {
    if (times_.size() != values_.size())
      throw InvalidArgument("series times and values differ in length");
    for (std::size_t i = 0; i < times_.size(); ++i) {
      if (!std::isfinite(times_[i]) || !std::isfinite(values_[i]))
        throw InvalidArgument("series contains a non-finite entry");
      if (values_[i] < 0.0) throw InvalidArgument("series values must be nonnegative");
      if (i > 0 && !(times_[i] > times_[i - 1]))
        throw InvalidArgument("series times must be strictly increasing");
    }
  }

  std::size_t size() const { return times_.size(); }
  bool empty() const { return times_.empty(); }
  std::span<const double> times() const { return times_; }
  std::span<const double> values() const { return values_; }

  /// Appends a sample; the time must exceed the last one.
  void push_back(double t, double v) {
    if (!std::isfinite(t) || !std::isfinite(v) || v < 0.0)
      throw InvalidArgument("series sample must be finite and nonnegative");
    if (!times_.empty() && !(t > times_.back()))
      throw InvalidArgument("series times must be strictly increasing");
    times_.push_back(t);
    values_.push_back(v);
  }

 private:
  std::vector<double> times_;
  std::vector<double> values_;
};

namespace detail {

/// Deterministic pairwise sum.
inline double pairwise_sum(std::span<const double> x) {
  if (x.size() <= 8) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t h = x.size() / 2;
  return pairwise_sum(x.first(h)) + pairwise_sum(x.subspan(h));
}

inline void require_exponent(const Exponent& p, const char* name) {
  if (p.is_finite() && !(p.value() >= 1.0))
    throw InvalidArgument(std::string("exponent ") + name + " must lie in [1, inf]");
}

/// (sum |x|^p * weight)^(1/p), or max |x| for p = inf.
inline double weighted_lebesgue(std::span<const double> x, const Exponent& p, double weight) {
  if (p.is_infinite()) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  const double e = p.value();
  std::vector<double> powers(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]);
    powers[i] = a == 0.0 ? 0.0 : std::pow(a, e);
  }
  const double s = pairwise_sum(powers) * weight;
  return s == 0.0 ? 0.0 : std::pow(s, 1.0 / e);
}

inline const Field& require_scalar(const Field& f, const char* op) {
  if (!f.is_scalar()) throw InvalidArgument(std::string(op) + " expects a scalar field");
  return f;
}

}  // namespace detail

/// Isotropic Lebesgue norm over the box by the midpoint rule (grid max for p = inf).
inline double lp_norm(const Field& f, const Exponent& p) {
  detail::require_scalar(f, "lp_norm");
  detail::require_exponent(p, "p");
  Field phys = to_physical(f);
  return detail::weighted_lebesgue(phys.values(), p, phys.grid().cell_volume());
}

/// Per-column L^alpha norms along x3, returned as an n1*n2 array (x1 fastest).
inline std::vector<double> column_norms(const Field& f, const Exponent& alpha) {
  detail::require_scalar(f, "column_norms");
  detail::require_exponent(alpha, "alpha");
  Field phys = to_physical(f);
  const Grid3& g = phys.grid();
  auto v = phys.values();
  const int n1 = g.n(1), n2 = g.n(2), n3 = g.n(3);
  std::vector<double> column(n3);
  std::vector<double> out(static_cast<std::size_t>(n1) * n2);
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i < n1; ++i) {
      for (int k = 0; k < n3; ++k) column[k] = v[g.offset(i, j, k)];
      out[static_cast<std::size_t>(i) + static_cast<std::size_t>(n1) * j] =
          detail::weighted_lebesgue(column, alpha, g.spacing(3));
    }
  return out;
}

/// L^beta norm over (x1, x2) of a planar array produced by column_norms.
inline double planar_norm(std::span<const double> plane, const Grid3& g, const Exponent& beta) {
  detail::require_exponent(beta, "beta");
  if (plane.size() != static_cast<std::size_t>(g.n(1)) * g.n(2))
    throw InvalidArgument("planar array does not match the grid");
  return detail::weighted_lebesgue(plane, beta, g.spacing(1) * g.spacing(2));
}

/// Anisotropic norm || ||f||_{L^alpha_{x3}} ||_{L^beta_{x1,x2}}.
inline double mixed_norm(const Field& f, const MixedNormSpec& spec) {
  detail::require_scalar(f, "mixed_norm");
  detail::require_exponent(spec.alpha, "alpha");
  detail::require_exponent(spec.beta, "beta");
  return planar_norm(column_norms(f, spec.alpha), f.grid(), spec.beta);
}

/// (integral of v(t)^p dt)^(1/p) by the trapezoid rule; max value for p = inf.
inline double time_lebesgue(const ScalarSeries& series, const Exponent& p) {
  detail::require_exponent(p, "p");
  auto v = series.values();
  auto t = series.times();
  if (p.is_infinite()) {
    if (v.empty()) throw InvalidArgument("time_lebesgue needs at least one sample");
    return *std::max_element(v.begin(), v.end());
  }
  if (v.size() < 2) throw InvalidArgument("time_lebesgue needs at least 2 samples for finite p");
  const double e = p.value();
  std::vector<double> pieces(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double a = v[i] == 0.0 ? 0.0 : std::pow(v[i], e);
    const double b = v[i + 1] == 0.0 ? 0.0 : std::pow(v[i + 1], e);
    pieces[i] = 0.5 * (t[i + 1] - t[i]) * (a + b);
  }
  const double s = detail::pairwise_sum(pieces);
  return s == 0.0 ? 0.0 : std::pow(s, 1.0 / e);
}

/// Running trapezoid integral of a series, one entry per sample (first = 0).
inline std::vector<double> cumulative_trapezoid(const ScalarSeries& series) {
  auto v = series.values();
  auto t = series.times();
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t i = 1; i < v.size(); ++i)
    out[i] = out[i - 1] + 0.5 * (t[i] - t[i - 1]) * (v[i] + v[i - 1]);
  return out;
}

}  // namespace anisonorm
