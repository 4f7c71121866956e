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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "anisonorm/errors.hpp"
#include "anisonorm/norms.hpp"
#include "anisonorm/params.hpp"
#include "anisonorm/solver.hpp"
#include "anisonorm/spectral.hpp"

namespace anisonorm {

struct MonitorRow {
  double time = 0.0;
  double u3_norm = 0.0;          // ||u3(t)||_{L^s}
  double d3u3_mixed_norm = 0.0;  // || ||d3 u3(t)||_{L^alpha_x3} ||_{L^beta_x1x2}
  double grad_sq = 0.0;          // ||grad u(t)||_2^2
  double budget = 0.0;           // ||grad u(t)||_2^2 + nu int_0^t ||Laplace u||_2^2
};

/// Criterion quantities of one spec along one trajectory. Values are
/// margins: the hypotheses ask them to stay below some M, which is free.
struct CriterionReport {
  Theorem theorem = Theorem::T11i;
  /// Spec exponents as given or derived, printable in exact form when available.
  std::vector<std::pair<std::string, std::string>> spec_fields;
  Exponent u3_space, u3_time;
  MixedNormSpec d3u3_space;
  Exponent d3u3_time;
  std::vector<MonitorRow> rows;
  double quantity_u3 = 0.0;
  double quantity_d3u3 = 0.0;
  double h1_max = 0.0;
  double budget_max = 0.0;
  ScalarSeries h1_budget;
};

/// t -> ||grad u(t)||_2^2 + nu int_0^t ||Laplace u||_2^2 on the per-step diagnostics.
inline ScalarSeries h1_budget(const Trajectory& traj, double nu) {
  if (traj.diagnostics.empty()) throw InvalidArgument("h1_budget needs per-step diagnostics");
  if (!(nu > 0)) throw InvalidArgument("h1_budget needs nu > 0");
  const auto dissipation = cumulative_trapezoid(traj.series(&DiagnosticRow::lap_sq));
  ScalarSeries out;
  for (std::size_t i = 0; i < traj.diagnostics.size(); ++i)
    out.push_back(traj.diagnostics[i].time, traj.diagnostics[i].grad_sq + nu * dissipation[i]);
  return out;
}

/// Largest relative excess of ||u(t)||^2 + 2 nu int ||grad u||^2 over ||u0||^2.
/// Nonpositive when the discrete energy inequality holds exactly.
inline double energy_inequality_excess(const Trajectory& traj) {
  if (traj.diagnostics.empty()) throw InvalidArgument("energy check needs per-step diagnostics");
  const auto dissipated = cumulative_trapezoid(traj.series(&DiagnosticRow::grad_sq));
  const double e0 = traj.diagnostics.front().energy;
  if (!(e0 > 0)) return 0.0;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < traj.diagnostics.size(); ++i)
    worst = std::max(worst, (traj.diagnostics[i].energy + 2 * traj.nu * dissipated[i]) / e0 - 1.0);
  return worst;
}

namespace detail {

template <class T>
std::string exponent_text(const std::optional<Extended<T>>& e) {
  return e ? to_string(*e) : std::string();
}

inline std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
  return out;
}

}  // namespace detail

/// Evaluates u3 and d3 u3 norms per snapshot and aggregates them in time
/// with the exponents the theorem prescribes. The T11i criterion places no
/// condition on u3; its u3 column reports sup_t ||u3||_2 for reference.
template <class T>
CriterionReport evaluate_criterion(const Trajectory& traj, const CriterionSpecT<T>& spec) {
  if (spec.theorem == Theorem::PS || spec.theorem == Theorem::BdV)
    throw InvalidArgument(std::string(theorem_name(spec.theorem)) +
                          " constrains the full velocity; the monitor evaluates T11i, T11ii, T13, T14 and T15");
  const AdmissibilityReportT<T> adm = check_spec(spec);
  if (!adm.admissible)
    throw PreconditionError("inadmissible " + std::string(theorem_name(spec.theorem)) +
                            " spec, violated: " + detail::joined(adm.violated_conditions));
  if (traj.snapshots.size() < 2) throw InvalidArgument("evaluate_criterion needs at least 2 snapshots");

  CriterionReport rep;
  rep.theorem = spec.theorem;
  const auto beta = spec.beta ? spec.beta : adm.beta;
  const auto p = spec.p ? spec.p : adm.p;
  const auto q = spec.q ? spec.q : adm.q;
  rep.spec_fields = {{"theorem", std::string(theorem_name(spec.theorem))},
                     {"alpha", detail::exponent_text(spec.alpha)},
                     {"beta", detail::exponent_text(beta)},
                     {"s", detail::exponent_text(spec.s)},
                     {"q", detail::exponent_text(q)},
                     {"p", detail::exponent_text(p)}};
  const Exponent inf = Exponent::infinity();
  rep.d3u3_space = {to_exponent(*spec.alpha), to_exponent(*beta)};
  switch (spec.theorem) {
    case Theorem::T11i: rep.u3_space = Exponent(2.0), rep.u3_time = inf, rep.d3u3_time = inf; break;
    case Theorem::T11ii: rep.u3_space = Exponent(3.0), rep.u3_time = inf, rep.d3u3_time = inf; break;
    case Theorem::T13: rep.u3_space = to_exponent(*spec.s), rep.u3_time = inf, rep.d3u3_time = to_exponent(*p); break;
    case Theorem::T14:
    case Theorem::T15:
      rep.u3_space = to_exponent(*spec.s), rep.u3_time = to_exponent(*q), rep.d3u3_time = to_exponent(*p);
      break;
    default: break;
  }

  const ScalarSeries budget = h1_budget(traj, traj.nu);
  std::map<long, std::size_t> by_step;
  for (std::size_t i = 0; i < traj.diagnostics.size(); ++i) by_step[traj.diagnostics[i].step] = i;

  ScalarSeries u3_series, d3_series;
  for (const auto& snap : traj.snapshots) {
    const auto it = by_step.find(snap.step);
    if (it == by_step.end())
      throw ConsistencyError("no diagnostics row for snapshot step " + std::to_string(snap.step));
    const Field u3 = to_physical(snap.u).component(2);
    MonitorRow row;
    row.time = snap.time;
    row.u3_norm = lp_norm(u3, rep.u3_space);
    row.d3u3_mixed_norm = mixed_norm(to_physical(spectral_derivative(u3, 3)), rep.d3u3_space);
    row.grad_sq = traj.diagnostics[it->second].grad_sq;
    row.budget = budget.values()[it->second];
    u3_series.push_back(row.time, row.u3_norm);
    d3_series.push_back(row.time, row.d3u3_mixed_norm);
    rep.h1_max = std::max(rep.h1_max, row.grad_sq);
    rep.budget_max = std::max(rep.budget_max, row.budget);
    rep.rows.push_back(row);
  }
  rep.quantity_u3 = time_lebesgue(u3_series, rep.u3_time);
  rep.quantity_d3u3 = time_lebesgue(d3_series, rep.d3u3_time);
  rep.h1_budget = budget;
  return rep;
}

inline std::string time_norm_text(const Exponent& e) {
  return e.is_infinite() ? std::string("sup_t") : "L^" + to_string(e) + "_t";
}

/// Report CSV: commented header, one row per snapshot, then an aggregate row.
inline std::string monitor_csv(const CriterionReport& rep, const Grid3& grid, double nu) {
  std::string out = "# anisonorm monitor report\n# spec:";
  for (const auto& [k, v] : rep.spec_fields) out += ' ' + k + '=' + (v.empty() ? "-" : v);
  out += "\n# u3_norm: ||u3||_{L^" + to_string(rep.u3_space) + "}; aggregate " + time_norm_text(rep.u3_time) + '\n';
  out += "# d3u3_mixed_norm: || ||d3 u3||_{L^" + to_string(rep.d3u3_space.alpha) + "_x3} ||_{L^" +
         to_string(rep.d3u3_space.beta) + "_x1x2}; aggregate " + time_norm_text(rep.d3u3_time) + '\n';
  out += "# budget: ||grad u||_2^2 + nu int_0^t ||Laplace u||_2^2, nu = " + format_double(nu) + '\n';
  out += "# domain: periodic box " + format_double(grid.length(1)) + " x " + format_double(grid.length(2)) + " x " +
         format_double(grid.length(3)) + "; the criteria are stated on R^3, these are torus analogues\n";
  out += "# aggregate row: time column holds 'aggregate', grad_sq holds max over snapshots, budget holds its max\n";
  out += "time,u3_norm,d3u3_mixed_norm,grad_sq,budget\n";
  for (const auto& r : rep.rows)
    out += format_double(r.time) + ',' + format_double(r.u3_norm) + ',' + format_double(r.d3u3_mixed_norm) + ',' +
           format_double(r.grad_sq) + ',' + format_double(r.budget) + '\n';
  out += "aggregate," + format_double(rep.quantity_u3) + ',' + format_double(rep.quantity_d3u3) + ',' +
         format_double(rep.h1_max) + ',' + format_double(rep.budget_max) + '\n';
  return out;
}

}  // namespace anisonorm
