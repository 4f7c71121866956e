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
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "anisonorm/errors.hpp"
#include "anisonorm/exponent.hpp"
#include "anisonorm/fft.hpp"
#include "anisonorm/grid.hpp"
#include "anisonorm/norms.hpp"
#include "anisonorm/params.hpp"
#include "anisonorm/spectral.hpp"

namespace anisonorm {

/// lhs <= C rhs evaluated on one function (or one column of it).
struct RatioReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  /// Column index i1 + n1 i2 for column-wise checks, 0 otherwise.
  std::size_t column = 0;
};

namespace detail {

inline RatioReport make_ratio(double lhs, double rhs, std::size_t column = 0) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs))
    throw ConsistencyError("inequality sides are not finite");
  if (rhs == 0.0) {
    if (lhs == 0.0) return {0.0, 0.0, 0.0, column};
    throw ConsistencyError("right-hand side vanishes while the left-hand side does not");
  }
  return {lhs, rhs, lhs / rhs, column};
}

/// base^e with 0^0 = 1.
inline double power(double base, double e) { return e == 0.0 ? 1.0 : std::pow(base, e); }

/// Trigonometric interpolant of one periodic column of length L.
class ColumnInterpolant {
 public:
  ColumnInterpolant(int n, double length, int oversample)
      : n_(n), dense_n_(n * oversample), kappa_(2 * std::numbers::pi / length), length_(length),
        coeff_(n / 2 + 1), padded_(dense_n_ / 2 + 1), dense_(dense_n_), dense_d_(dense_n_) {}

  void load(std::span<const double> samples) {
    fft::plan_1d(n_).forward(samples, coeff_);
    // Keep the Nyquist term as a plain cosine: halve it when it becomes an
    // interior mode of the padded spectrum.
    coeff_[n_ / 2] = std::complex<double>(coeff_[n_ / 2].real(), 0.0);
    std::fill(padded_.begin(), padded_.end(), std::complex<double>(0.0));
    for (int m = 0; m <= n_ / 2; ++m) padded_[m] = coeff_[m] * (m == n_ / 2 ? 0.5 : 1.0);
    const auto& dense_plan = fft::plan_1d(dense_n_);
    dense_plan.inverse(padded_, dense_);
    for (int m = 0; m <= n_ / 2; ++m) padded_[m] *= std::complex<double>(0.0, m * kappa_);
    dense_plan.inverse(padded_, dense_d_);
  }

  int dense_size() const { return dense_n_; }
  double dense_spacing() const { return length_ / dense_n_; }
  std::span<const double> dense_values() const { return dense_; }
  std::span<const double> dense_derivative() const { return dense_d_; }

  /// Value of the order-th derivative at z.
  double evaluate(double z, int order) const {
    const std::complex<double> step = std::polar(1.0, kappa_ * z);
    std::complex<double> w(1.0, 0.0);
    double sum = 0.0;
    for (int m = 0; m <= n_ / 2; ++m) {
      std::complex<double> term = coeff_[m] * w;
      const double k = m * kappa_;
      if (order == 1) term *= std::complex<double>(0.0, k);
      if (order == 2) term *= -k * k;
      if (order == 3) term *= std::complex<double>(0.0, -k * k * k);
      sum += (m == 0 || m == n_ / 2 ? 1.0 : 2.0) * term.real();
      w *= step;
    }
    return sum;
  }

  /// Root of the order-th derivative bracketed by [a, b] (values ga, gb of
  /// opposite sign): Newton steps, bisection whenever a step leaves the bracket.
  double refine_root(double a, double b, double ga, int order) const {
    double x = 0.5 * (a + b);
    for (int it = 0; it < 100; ++it) {
      const double g = evaluate(x, order);
      if (g == 0.0) return x;
      if ((g < 0) == (ga < 0)) {
        a = x;
        ga = g;
      } else {
        b = x;
      }
      const double dg = evaluate(x, order + 1);
      double next = dg != 0.0 ? x - g / dg : 0.5 * (a + b);
      if (!(next > a && next < b)) next = 0.5 * (a + b);
      if (std::abs(next - x) <= 1e-15 * length_ || b - a <= 1e-15 * length_) return next;
      x = next;
    }
    return x;
  }

 private:
  int n_, dense_n_;
  double kappa_, length_;
  std::vector<std::complex<double>> coeff_, padded_;
  std::vector<double> dense_, dense_d_;
};

/// Oscillation and exact total variation of |phi|^r along one periodic
/// column. |phi|^r is monotone between consecutive zeros of phi and phi',
/// and r * integral |phi|^(r-1) |phi'| equals that total variation, so the
/// partition {oversampled nodes} U {refined roots} evaluates both sides
/// without quadrature error from the kinks of the integrand.
inline std::pair<double, double> column_oscillation_and_variation(ColumnInterpolant& ip, double r) {
  const int m = ip.dense_size();
  const double h = ip.dense_spacing();
  auto v = ip.dense_values();
  auto d = ip.dense_derivative();
  std::vector<std::pair<double, double>> pts;  // (position, phi)
  pts.reserve(static_cast<std::size_t>(m) + 64);
  for (int j = 0; j < m; ++j) pts.emplace_back(j * h, v[j]);
  auto scan = [&](std::span<const double> g, int order) {
    for (int j = 0; j < m; ++j) {
      const int k = (j + 1) % m;
      if ((g[j] < 0 && g[k] > 0) || (g[j] > 0 && g[k] < 0)) {
        const double z = ip.refine_root(j * h, (j + 1) * h, g[j], order);
        pts.emplace_back(z, ip.evaluate(z, 0));
      }
    }
  };
  scan(v, 0);
  scan(d, 1);
  std::sort(pts.begin(), pts.end());
  double hmax = 0.0, hmin = std::numeric_limits<double>::infinity(), tv = 0.0;
  double prev = power(std::abs(pts.back().second), r);
  for (const auto& p : pts) {
    const double hv = power(std::abs(p.second), r);
    hmax = std::max(hmax, hv);
    hmin = std::min(hmin, hv);
    tv += std::abs(hv - prev);
    prev = hv;
  }
  return {hmax - hmin, tv};
}

inline std::vector<double> column_of(const Field& f, int i, int j) {
  const Grid3& g = f.grid();
  std::vector<double> c(g.n(3));
  auto v = f.values();
  for (int k = 0; k < g.n(3); ++k) c[k] = v[g.offset(i, j, k)];
  return c;
}

}  // namespace detail

/// Column form of the fundamental theorem of calculus:
///   max |phi|^r - min |phi|^r <= r * integral |phi|^(r-1) |d3 phi| dx3
/// on every (x1, x2) column. Returns the column with the largest ratio.
inline RatioReport ftc_column_bound(const Field& phi, double r, int oversample = 8) {
  detail::require_scalar(phi, "ftc_column_bound");
  if (!(r > 2) || !std::isfinite(r)) throw InvalidArgument("ftc_column_bound needs finite r > 2");
  if (oversample < 2) throw InvalidArgument("oversample must be at least 2");
  const Field p = to_physical(phi);
  const Grid3& g = p.grid();
  detail::ColumnInterpolant ip(g.n(3), g.length(3), oversample);
  RatioReport worst;
  for (int j = 0; j < g.n(2); ++j)
    for (int i = 0; i < g.n(1); ++i) {
      ip.load(detail::column_of(p, i, j));
      const auto [osc, tv] = detail::column_oscillation_and_variation(ip, r);
      const auto rep = detail::make_ratio(osc, tv, static_cast<std::size_t>(i) + g.n(1) * j);
      if (rep.ratio > worst.ratio || (i == 0 && j == 0)) worst = rep;
    }
  return worst;
}

/// Column exponent m = alpha (r-1)/(alpha-1) of the interpolation step.
inline Exponent interpolation_exponent(const Exponent& alpha, const Exponent& r) {
  const double ia = alpha.reciprocal(), ir = r.reciprocal();
  return Exponent::from_reciprocal((1.0 - ia) * ir / (1.0 - ir));
}

/// One-dimensional interpolation along x3, column by column:
///   ||phi||_{L^m} <= C ||d3 phi||_{L^alpha}^theta ||phi||_{L^s}^(1-theta),
/// m = alpha(r-1)/(alpha-1). Returns the column with the largest ratio.
inline RatioReport gn1d_check(const Field& phi, const Exponent& alpha, const Exponent& s, double theta,
                              const Exponent& r) {
  detail::require_scalar(phi, "gn1d_check");
  if (!(theta >= 0.0 && theta <= 1.0)) throw InvalidArgument("theta must lie in [0, 1]");
  if (!(r > Exponent(2.0))) throw InvalidArgument("r must exceed 2");
  const double residual = interpolation_balance_residual<double>(alpha, s, theta, r);
  if (!(residual <= 1e-10))
    throw PreconditionError("exponents violate the interpolation balance (residual " + format_double(residual) +
                            ")");
  const Field p = to_physical(phi);
  const auto lhs = column_norms(p, interpolation_exponent(alpha, r));
  const auto grad = column_norms(spectral_derivative(p, 3), alpha);
  const auto base = column_norms(p, s);
  RatioReport worst;
  for (std::size_t c = 0; c < lhs.size(); ++c) {
    const double rhs = detail::power(grad[c], theta) * detail::power(base[c], 1.0 - theta);
    if (lhs[c] == 0.0) continue;
    const auto rep = detail::make_ratio(lhs[c], rhs, c);
    if (rep.ratio > worst.ratio) worst = rep;
  }
  return worst;
}

/// Trilinear anisotropic estimate
///   |int phi f g| <= C A^(1/r) B^(theta(r-1)/r) S^((1-theta)(r-1)/r)
///                    ||f||^((r-2)/r) ||d1 f||^(1/r) ||d2 f||^(1/r) ||g||
/// with A = ||d3 phi||_{L^alpha_{x3} L^beta}, B = ||d3 phi||_{L^alpha_{x3} L^{theta(r-1)t}},
/// S = ||phi||_{L^s_{x3} L^{(1-theta)(r-1)a}}; every unlabelled norm is L^2.
/// Factors with exponent 0 are omitted (0^0 = 1).
inline RatioReport lemma22_ratio(const Field& phi, const Field& f, const Field& g, const Exponent& alpha,
                                 const Exponent& beta, const Exponent& s, const LemmaParams& params) {
  detail::require_scalar(phi, "lemma22_ratio");
  detail::require_scalar(f, "lemma22_ratio");
  detail::require_scalar(g, "lemma22_ratio");
  if (!(phi.grid() == f.grid()) || !(phi.grid() == g.grid()))
    throw InvalidArgument("lemma22_ratio expects fields on one grid");
  const Field pp = to_physical(phi), fp = to_physical(f), gp = to_physical(g);
  const Grid3& grid = pp.grid();

  std::vector<double> product(grid.points());
  for (std::size_t i = 0; i < product.size(); ++i) product[i] = pp.values()[i] * fp.values()[i] * gp.values()[i];
  const double lhs = std::abs(detail::pairwise_sum(product) * grid.cell_volume());

  const double ir = params.r.reciprocal();
  const double th = params.theta;
  const Field d3phi = spectral_derivative(pp, 3);
  double rhs = 1.0;
  if (ir > 0.0) rhs *= detail::power(mixed_norm(d3phi, {alpha, beta}), ir);
  if (th > 0.0) {
    // 1/(theta (r-1) t) in reciprocal form.
    const Exponent outer = Exponent::from_reciprocal(ir * params.t.reciprocal() / (th * (1.0 - ir)));
    rhs *= detail::power(mixed_norm(d3phi, {alpha, outer}), th * (1.0 - ir));
  }
  if (th < 1.0) {
    const Exponent outer = Exponent::from_reciprocal(ir * params.a.reciprocal() / ((1.0 - th) * (1.0 - ir)));
    rhs *= detail::power(mixed_norm(pp, {s, outer}), (1.0 - th) * (1.0 - ir));
  }
  const double f2 = lp_norm(fp, 2.0);
  rhs *= detail::power(f2, 1.0 - 2.0 * ir);
  if (ir > 0.0) {
    rhs *= detail::power(lp_norm(spectral_derivative(fp, 1), 2.0), ir);
    rhs *= detail::power(lp_norm(spectral_derivative(fp, 2), 2.0), ir);
  }
  rhs *= lp_norm(gp, 2.0);
  return detail::make_ratio(lhs, rhs);
}

/// Anisotropic Ladyzhenskaya inequality on a mean-zero field:
///   ||u||_r <= C ||u||_2^((6-r)/(2r)) prod_i ||d_i u||_2^((r-2)/(2r)),  2 < r <= 6.
inline RatioReport ladyzhenskaya_ratio(const Field& u, double r) {
  detail::require_scalar(u, "ladyzhenskaya_ratio");
  if (!(r > 2.0 && r <= 6.0)) throw InvalidArgument("ladyzhenskaya_ratio needs 2 < r <= 6");
  const Field p = to_physical(u);
  const double l2 = lp_norm(p, 2.0);
  const double mean = detail::pairwise_sum(p.values()) * p.grid().cell_volume();
  if (std::abs(mean) > 1e-10 * std::max(l2, 1e-300) * std::sqrt(p.grid().volume()))
    throw PreconditionError("ladyzhenskaya_ratio needs a mean-zero field (mean integral " + format_double(mean) +
                            ")");
  const double e0 = (6.0 - r) / (2.0 * r), e1 = (r - 2.0) / (2.0 * r);
  double rhs = detail::power(l2, e0);
  for (int axis = 1; axis <= 3; ++axis) rhs *= detail::power(lp_norm(spectral_derivative(p, axis), 2.0), e1);
  return detail::make_ratio(lp_norm(p, r), rhs);
}

}  // namespace anisonorm
