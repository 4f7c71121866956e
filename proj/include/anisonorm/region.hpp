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
#include <sstream>
#include <string>
#include <vector>

#include "anisonorm/errors.hpp"
#include "anisonorm/exponent.hpp"
#include "anisonorm/params.hpp"

namespace anisonorm {

struct RegionPoint {
  Rational alpha, beta;
  bool member = false;
};

/// Membership lattice of the (alpha, beta) hypothesis region of T11i or T11ii.
struct RegionGrid {
  Theorem theorem = Theorem::T11i;
  Rational alpha_max, beta_max, step;
  std::size_t alpha_count = 0, beta_count = 0;
  std::vector<RegionPoint> points;  // alpha fastest

  const RegionPoint& at(std::size_t ia, std::size_t ib) const { return points[ib * alpha_count + ia]; }
};

/// Samples the lattice {1 + i step} x {1 + j step} clipped to the bounds and
/// classifies each point with the exact-arithmetic check_spec.
inline RegionGrid region_sample(Theorem theorem, const Rational& alpha_max, const Rational& beta_max,
                                const Rational& step) {
  if (theorem != Theorem::T11i && theorem != Theorem::T11ii)
    throw InvalidArgument("region sampling covers T11i and T11ii");
  if (step <= 0) throw InvalidArgument("region step must be positive");
  if (alpha_max < 1 || beta_max < 1) throw InvalidArgument("region bounds must be at least 1");
  RegionGrid g{theorem, alpha_max, beta_max, step, 0, 0, {}};
  const Rational na = (alpha_max - 1) / step;
  const Rational nb = (beta_max - 1) / step;
  using boost::multiprecision::cpp_int;
  g.alpha_count = static_cast<std::size_t>(cpp_int(numerator(na) / denominator(na))) + 1;
  g.beta_count = static_cast<std::size_t>(cpp_int(numerator(nb) / denominator(nb))) + 1;
  if (g.alpha_count * g.beta_count > 4'000'000) throw InvalidArgument("region lattice too large");
  g.points.reserve(g.alpha_count * g.beta_count);
  for (std::size_t j = 0; j < g.beta_count; ++j) {
    const Rational b = 1 + step * j;
    for (std::size_t i = 0; i < g.alpha_count; ++i) {
      const Rational a = 1 + step * i;
      ExactCriterionSpec spec{theorem, ExactExponent(a), ExactExponent(b), {}, {}, {}};
      g.points.push_back({a, b, detail::evaluate_conditions(spec).admissible});
    }
  }
  return g;
}

/// CSV with columns alpha,beta,member.
inline std::string region_csv(const RegionGrid& g) {
  std::string out = "alpha,beta,member\n";
  for (const auto& p : g.points) {
    out += format_double(to_double(p.alpha));
    out += ',';
    out += format_double(to_double(p.beta));
    out += p.member ? ",1\n" : ",0\n";
  }
  return out;
}

/// One analytic edge of a hypothesis region, as (alpha, beta) vertices.
struct BoundaryCurve {
  std::string equation;
  std::vector<std::pair<double, double>> vertices;
};

/// Edges of the region: for T11i the lines alpha = 1, beta = 2 and
/// alpha = beta; for T11ii the lines beta = 2, alpha = beta and the curve
/// 1/alpha + 2/beta = 2, i.e. alpha = beta/(2 beta - 2) on 3/2 <= beta <= 2.
inline std::vector<BoundaryCurve> region_boundaries(Theorem theorem, double alpha_max, double beta_max) {
  std::vector<BoundaryCurve> curves;
  if (theorem == Theorem::T11i) {
    const double top = beta_max;
    curves.push_back({"alpha=1", {{1.0, 2.0}, {1.0, top}}});
    curves.push_back({"beta=2", {{1.0, 2.0}, {std::min(2.0, alpha_max), 2.0}}});
    const double end = std::min(alpha_max, beta_max);
    curves.push_back({"alpha=beta", {{2.0, 2.0}, {end, end}}});
  } else if (theorem == Theorem::T11ii) {
    curves.push_back({"beta=2", {{1.0, 2.0}, {2.0, 2.0}}});
    curves.push_back({"alpha=beta", {{1.5, 1.5}, {2.0, 2.0}}});
    BoundaryCurve c{"1/alpha+2/beta=2", {}};
    constexpr int kSegments = 64;
    for (int i = 0; i <= kSegments; ++i) {
      const double b = 1.5 + 0.5 * i / kSegments;
      c.vertices.emplace_back(b / (2 * b - 2), b);
    }
    curves.push_back(std::move(c));
  } else {
    throw InvalidArgument("region boundaries exist for T11i and T11ii");
  }
  return curves;
}

/// SVG on a unit-square viewport: alpha grows to the right, beta upwards.
/// Member cells are shaded, boundary curves drawn as polylines tagged with
/// their equation.
inline std::string region_svg(const RegionGrid& g) {
  const double a_lo = 1.0, a_hi = to_double(g.alpha_max);
  const double b_lo = 1.0, b_hi = to_double(g.beta_max);
  const double wa = a_hi > a_lo ? a_hi - a_lo : 1.0;
  const double wb = b_hi > b_lo ? b_hi - b_lo : 1.0;
  const double h = to_double(g.step);
  auto x = [&](double a) { return (a - a_lo) / wa; };
  auto y = [&](double b) { return 1.0 - (b - b_lo) / wb; };
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s.precision(6);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.12 -0.05 1.17 1.17\" width=\"600\" "
       "height=\"600\">\n";
  s << "<title>" << theorem_name(g.theorem) << " admissible (alpha, beta)</title>\n";
  s << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" stroke=\"black\" "
       "stroke-width=\"0.003\"/>\n";
  s << "<g fill=\"#8fb3d9\" stroke=\"none\">\n";
  for (const auto& p : g.points) {
    if (!p.member) continue;
    const double a = to_double(p.alpha), b = to_double(p.beta);
    s << "<rect x=\"" << x(a - h / 2) << "\" y=\"" << y(b + h / 2) << "\" width=\"" << h / wa
      << "\" height=\"" << h / wb << "\"/>\n";
  }
  s << "</g>\n";
  for (const auto& c : region_boundaries(g.theorem, a_hi, b_hi)) {
    s << "<polyline class=\"boundary\" data-equation=\"" << c.equation
      << "\" fill=\"none\" stroke=\"#b22222\" stroke-width=\"0.006\" points=\"";
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
      s << (i ? " " : "") << x(c.vertices[i].first) << ',' << y(c.vertices[i].second);
    s << "\"/>\n";
  }
  s << "<text x=\"0.5\" y=\"1.09\" font-size=\"0.05\" text-anchor=\"middle\">α</text>\n";
  s << "<text x=\"-0.08\" y=\"0.5\" font-size=\"0.05\" text-anchor=\"middle\">β</text>\n";
  s << "<text x=\"0\" y=\"1.045\" font-size=\"0.03\" text-anchor=\"middle\">" << a_lo << "</text>\n";
  s << "<text x=\"1\" y=\"1.045\" font-size=\"0.03\" text-anchor=\"middle\">" << a_hi << "</text>\n";
  s << "<text x=\"-0.03\" y=\"1\" font-size=\"0.03\" text-anchor=\"end\">" << b_lo << "</text>\n";
  s << "<text x=\"-0.03\" y=\"0.01\" font-size=\"0.03\" text-anchor=\"end\">" << b_hi << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace anisonorm
