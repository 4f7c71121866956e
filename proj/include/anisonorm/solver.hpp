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
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "anisonorm/errors.hpp"
#include "anisonorm/field_io.hpp"
#include "anisonorm/grid.hpp"
#include "anisonorm/norms.hpp"
#include "anisonorm/random_fields.hpp"
#include "anisonorm/spectral.hpp"

namespace anisonorm {

enum class InitKind { taylor, random, file };

struct InitSpec {
  InitKind kind = InitKind::taylor;
  std::uint64_t seed = 1;
  int mode_cap = 4;
  /// L2 norm of the random initial field.
  double amplitude = 1.0;
  std::string path;
};

struct SolverConfig {
  Grid3 grid = Grid3::cube(32);
  double nu = 0.1;
  double dt = 1e-2;
  double t_end = 1.0;
  InitSpec init;
  int snapshot_every = 10;
};

inline void validate(const SolverConfig& c) {
  if (!(c.nu > 0) || !std::isfinite(c.nu)) throw InvalidArgument("nu must be positive and finite");
  if (!(c.dt > 0) || !std::isfinite(c.dt)) throw InvalidArgument("dt must be positive and finite");
  if (!(c.t_end > 0) || !std::isfinite(c.t_end)) throw InvalidArgument("t_end must be positive and finite");
  if (c.snapshot_every < 1) throw InvalidArgument("snapshot_every must be a positive step count");
  if (c.t_end / c.dt > 1e7) throw InvalidArgument("t_end/dt exceeds 1e7 steps");
}

/// Exact decaying solution e^{-2 nu t} (sin x1 cos x2, -cos x1 sin x2, 0) on a 2 pi box.
inline Field taylor_vortex(const Grid3& g, double nu, double t) {
  for (int a = 1; a <= 3; ++a)
    if (std::abs(g.length(a) - 2 * std::numbers::pi) > 1e-12)
      throw InvalidArgument("taylor_vortex needs box lengths 2 pi");
  const double decay = std::exp(-2 * nu * t);
  return Field::sample_vector(g, [&](double x, double y, double) {
    return std::array<double, 3>{decay * std::sin(x) * std::cos(y), -decay * std::cos(x) * std::sin(y), 0.0};
  });
}

/// Largest time step the CFL guard admits for a given peak speed.
inline double cfl_limit(const Grid3& g, double max_speed) {
  const double h = std::min({g.spacing(1), g.spacing(2), g.spacing(3)});
  return max_speed > 0 ? 0.5 * h / max_speed : std::numeric_limits<double>::infinity();
}

inline void check_cfl(const Field& u_physical, double dt) {
  const double speed = max_abs(u_physical);
  const double limit = cfl_limit(u_physical.grid(), speed);
  if (dt > limit)
    throw StepRejected("CFL guard: dt = " + format_double(dt) + " exceeds 0.5 h / max|u| = " + format_double(limit) +
                           " (max|u| = " + format_double(speed) + ")",
                       speed);
}

namespace detail {

/// P[-(u.grad)u]^ - nu |k|^2 u^ for a spectral state.
inline Field navier_stokes_rhs(const Field& s, double nu) {
  const Grid3& g = s.grid();
  const Field u = to_physical(s);
  const std::size_t np = g.points();
  const auto& plan = fft::plan_3d(g.resolution());
  std::vector<double> nonlinear(3 * np, 0.0);
  std::vector<std::complex<double>> scratch(g.spectral_points());
  std::vector<double> grad(np);
  for (int i = 0; i < 3; ++i) {
    auto ui = s.modes(i);
    for (int j = 0; j < 3; ++j) {
      for_each_mode(g, [&](std::size_t o, double k1, double k2, double k3) {
        const double k = j == 0 ? k1 : (j == 1 ? k2 : k3);
        scratch[o] = std::complex<double>(0.0, k) * ui[o];
      });
      plan.inverse(scratch, grad);
      auto uj = u.values(j);
      for (std::size_t p = 0; p < np; ++p) nonlinear[i * np + p] += uj[p] * grad[p];
    }
  }
  Field n(g, 3);
  std::copy(nonlinear.begin(), nonlinear.end(), n.values().begin());
  Field out = leray_project(dealias(to_spectral(n)));
  out *= -1.0;
  for (int c = 0; c < 3; ++c) {
    auto o_c = out.modes(c);
    auto s_c = s.modes(c);
    for_each_mode(g, [&](std::size_t o, double k1, double k2, double k3) {
      o_c[o] -= nu * (k1 * k1 + k2 * k2 + k3 * k3) * s_c[o];
    });
  }
  return out;
}

inline double band_leakage(const Field& s) {
  const Field d = dealias(s);
  double outside = 0.0, total = 0.0;
  for (std::size_t i = 0; i < s.modes().size(); ++i) {
    outside += std::norm(s.modes()[i] - d.modes()[i]);
    total += std::norm(s.modes()[i]);
  }
  return total > 0 ? std::sqrt(outside / total) : 0.0;
}

}  // namespace detail

namespace detail {

/// Validates a state for stepping and returns it in spectral form.
inline Field stepping_state(const Field& u, double nu, double dt) {
  if (!u.is_vector()) throw InvalidArgument("step expects a 3-component velocity");
  if (!(nu > 0) || !(dt > 0)) throw InvalidArgument("step needs nu > 0 and dt > 0");
  const Field phys = to_physical(u);
  const double speed = max_abs(phys);
  const double div = max_divergence(phys);
  if (div > 1e-10 * std::max(1.0, speed))
    throw PreconditionError("step input is not divergence-free (max |div u| = " + format_double(div) + ")");
  check_cfl(phys, dt);
  // Reuse spectral input as is; a physical round trip would add roundoff every step.
  Field s0 = u.representation() == Representation::spectral ? u : to_spectral(phys);
  if (band_leakage(s0) > 1e-10) throw PreconditionError("step input is not dealiased");
  return s0;
}

/// Projected, dealiased RK4 increment of a spectral state.
inline Field rk4_increment(const Field& s0, double nu, double dt) {
  const Field k1 = navier_stokes_rhs(s0, nu);
  const Field k2 = navier_stokes_rhs(s0 + (0.5 * dt) * k1, nu);
  const Field k3 = navier_stokes_rhs(s0 + (0.5 * dt) * k2, nu);
  const Field k4 = navier_stokes_rhs(s0 + dt * k3, nu);
  return leray_project(dealias((dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)));
}

/// state += delta with Kahan compensation; carry holds the lost low-order part.
inline void compensated_add(Field& state, Field& carry, const Field& delta) {
  auto u = state.modes();
  auto c = carry.modes();
  auto d = delta.modes();
  auto add = [](double& sum, double& comp, double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  for (std::size_t i = 0; i < u.size(); ++i) {
    double re = u[i].real(), im = u[i].imag(), cre = c[i].real(), cim = c[i].imag();
    add(re, cre, d[i].real());
    add(im, cim, d[i].imag());
    u[i] = {re, im};
    c[i] = {cre, cim};
  }
}

}  // namespace detail

/// One classical RK4 step of the projected, dealiased Navier-Stokes system.
/// Input must be divergence-free and dealiased; output keeps the input's
/// representation. The increment is projected, so the output stays solenoidal.
inline Field step(const Field& u, double nu, double dt) {
  Field next = detail::stepping_state(u, nu, dt);
  next += detail::rk4_increment(next, nu, dt);
  return in_representation(next, u.representation());
}

/// Per-step diagnostics; every quadratic quantity via Parseval on the spectral state.
struct DiagnosticRow {
  long step = 0;
  double time = 0.0;
  double energy = 0.0;    // ||u||_2^2
  double grad_sq = 0.0;   // ||grad u||_2^2
  double gradh_sq = 0.0;  // ||grad_h u||_2^2
  double lap_sq = 0.0;    // ||Laplace u||_2^2
  double max_div = 0.0;   // grid max |div u|
};

inline DiagnosticRow diagnose(const Field& u, long step_index, double time) {
  const Field s = to_spectral(u);
  const Grid3& g = s.grid();
  double e = 0, gr = 0, gh = 0, lap = 0;
  for (int c = 0; c < 3; ++c) {
    auto m = s.modes(c);
    int m1 = 0;
    detail::for_each_mode(g, [&](std::size_t o, double k1, double k2, double k3) {
      m1 = static_cast<int>(o % static_cast<std::size_t>(g.half_n1()));
      const double w = detail::hermitian_weight(g, m1) * std::norm(m[o]);
      const double kh = k1 * k1 + k2 * k2, kk = kh + k3 * k3;
      e += w;
      gr += w * kk;
      gh += w * kh;
      lap += w * kk * kk;
    });
  }
  const double V = g.volume();
  return {step_index, time, e * V, gr * V, gh * V, lap * V, max_divergence(s)};
}

struct Snapshot {
  long step = 0;
  double time = 0.0;
  Field u;
};

/// Time-ordered snapshots plus per-step diagnostics.
struct Trajectory {
  std::optional<SolverConfig> config;
  double nu = 0.0;
  std::vector<Snapshot> snapshots;
  std::vector<DiagnosticRow> diagnostics;

  /// Synthetic trajectory from given states; diagnostics are evaluated at the snapshots.
  static Trajectory from_snapshots(std::vector<std::pair<double, Field>> states, double nu) {
    Trajectory t;
    t.nu = nu;
    long idx = 0;
    for (auto& [time, u] : states) {
      if (!u.is_vector()) throw InvalidArgument("trajectory snapshots must be vector fields");
      if (!t.snapshots.empty() && !(time > t.snapshots.back().time))
        throw InvalidArgument("snapshot times must be strictly increasing");
      t.diagnostics.push_back(diagnose(u, idx, time));
      t.snapshots.push_back({idx, time, to_physical(u)});
      ++idx;
    }
    return t;
  }

  ScalarSeries series(double DiagnosticRow::*member) const {
    std::vector<double> times, values;
    for (const auto& d : diagnostics) {
      times.push_back(d.time);
      values.push_back(d.*member);
    }
    return ScalarSeries(std::move(times), std::move(values));
  }
};

/// Initial velocity of a config: exact vortex, seeded random solenoidal
/// field, or a file (projected and dealiased before use).
inline Field initial_field(const SolverConfig& c) {
  switch (c.init.kind) {
    case InitKind::taylor: return taylor_vortex(c.grid, c.nu, 0.0);
    case InitKind::random: return random_solenoidal_field(c.grid, c.init.seed, c.init.mode_cap, c.init.amplitude);
    case InitKind::file: {
      Field u = read_field(c.init.path);
      if (!u.is_vector()) throw InvalidArgument(c.init.path + ": initial field must have 3 components");
      if (!(u.grid() == c.grid)) throw InvalidArgument(c.init.path + ": grid does not match grid.n / grid.L");
      return to_physical(leray_project(dealias(u)));
    }
  }
  throw InvalidArgument("unknown init kind");
}

/// Integrates to t_end. Snapshots every `snapshot_every` steps plus the
/// first and final state; diagnostics every step. The state update is
/// Kahan-compensated so roundoff does not grow with the step count. The last step is
/// shortened so the run ends exactly at t_end. `on_snapshot` (optional)
/// sees each snapshot as it is produced.
inline Trajectory simulate(const SolverConfig& c, const std::function<void(const Snapshot&)>& on_snapshot = {},
                           bool keep_snapshots = true) {
  validate(c);
  Trajectory traj;
  traj.config = c;
  traj.nu = c.nu;
  Field u = to_spectral(initial_field(c));
  check_cfl(to_physical(u), c.dt);
  const long steps = static_cast<long>(std::ceil(c.t_end / c.dt - 1e-9));
  auto record = [&](long n, double t) {
    Snapshot s{n, t, to_physical(u)};
    if (on_snapshot) on_snapshot(s);
    if (keep_snapshots) traj.snapshots.push_back(std::move(s));
  };
  traj.diagnostics.push_back(diagnose(u, 0, 0.0));
  record(0, 0.0);
  Field carry(c.grid, 3, Representation::spectral);
  for (long n = 1; n <= steps; ++n) {
    const double t_prev = static_cast<double>(n - 1) * c.dt;
    const double t = n == steps ? c.t_end : static_cast<double>(n) * c.dt;
    const double h = t - t_prev;
    detail::compensated_add(u, carry, detail::rk4_increment(detail::stepping_state(u, c.nu, h), c.nu, h));
    traj.diagnostics.push_back(diagnose(u, n, t));
    if (n % c.snapshot_every == 0 || n == steps) {
      check_cfl(to_physical(u), c.dt);
      record(n, t);
    }
  }
  return traj;
}

}  // namespace anisonorm
