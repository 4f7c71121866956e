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


// Command-line front end. dispatch() is the whole program minus process
// plumbing, so tests can drive it in-process.

#pragma once

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "anisonorm/calibration.hpp"
#include "anisonorm/errors.hpp"
#include "anisonorm/monitor.hpp"
#include "anisonorm/params.hpp"
#include "anisonorm/region.hpp"
#include "anisonorm/run_config.hpp"
#include "anisonorm/trajectory_io.hpp"

namespace anisonorm::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_io = 2;

namespace detail {

inline std::string fixed6(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

/// "2.666667 (8/3)" for non-integers, "4" for integers, "inf".
inline std::string show(const ExactExponent& e) {
  if (e.is_infinite()) return "inf";
  const std::string exact = to_string(e.value());
  if (exact.find('/') == std::string::npos) return exact;
  return fixed6(to_double(e.value())) + " (" + exact + ")";
}

inline std::string show(const Rational& q) { return show(ExactExponent(q)); }

inline ExactExponent exact_flag(const std::string& name, const std::string& text) {
  auto v = parse_exact(text);
  if (!v) throw InvalidArgument("--" + name + ": cannot parse '" + text + "' as an exponent (e.g. 3, 3.5, 8/3, inf)");
  return *v;
}

inline std::optional<ExactExponent> optional_flag(const std::string& name, const std::string& text) {
  if (text.empty()) return std::nullopt;
  return exact_flag(name, text);
}

struct SpecFlags {
  std::string theorem, alpha, beta, s, q, p;

  void attach(CLI::App* app, bool require_theorem = true) {
    auto* t = app->add_option("--theorem", theorem, "criterion: ps, bdv, t11i, t11ii, t13, t14, t15");
    if (require_theorem) t->required();
    app->add_option("--alpha", alpha, "inner Lebesgue exponent along x3 (dimensionless; 8/3 and inf accepted)");
    app->add_option("--beta", beta, "outer Lebesgue exponent over (x1,x2) (dimensionless)");
    app->add_option("--s", s, "spatial Lebesgue exponent of u or u3 (dimensionless)");
    app->add_option("--q", q, "time exponent of the u or u3 norm (dimensionless)");
    app->add_option("--p", p, "time exponent of the d3u3 mixed norm (dimensionless)");
  }

  ExactCriterionSpec spec() const {
    const auto th = parse_theorem(theorem);
    if (!th) throw InvalidArgument("--theorem: unknown criterion '" + theorem + "'");
    return {*th, optional_flag("alpha", alpha), optional_flag("beta", beta), optional_flag("s", s),
            optional_flag("q", q), optional_flag("p", p)};
  }
};

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

inline void print_lemma(std::ostream& out, const ExactLemmaParams& lp, const ExactExponent& alpha,
                        const ExactExponent& beta, const ExactExponent& s) {
  out << "lemma context=" << context_name(lp.context) << " r=" << to_string(lp.r) << " theta=" << to_string(lp.theta)
      << " a=" << to_string(lp.a) << " t=" << to_string(lp.t) << '\n';
  const auto res = lemma_identity_residuals<Rational>(lp, alpha, beta, s);
  double worst = 0;
  for (const auto& r : res) worst = std::max(worst, to_double(r));
  out << "residuals max=" << format_double(worst) << (worst <= 1e-10 ? " (<1e-10)" : " (exceeds 1e-10)") << '\n';
  const auto bad = lemma_hypothesis_violations<Rational>(lp, alpha, beta, s);
  out << "lemma hypotheses " << (bad.empty() ? "hold" : "violated:");
  for (const auto& b : bad) out << " \"" << b << '"';
  out << '\n';
}

// ---------------------------------------------------------------- commands

inline int check_params(const SpecFlags& f, std::ostream& out) {
  const ExactCriterionSpec spec = f.spec();
  const auto rep = check_spec(spec);
  out << "theorem=" << theorem_name(spec.theorem) << '\n';
  out << "admissible=" << (rep.admissible ? "true" : "false") << '\n';
  for (const auto& v : rep.violated_conditions) out << "violated \"" << v << "\"\n";
  if (rep.beta) out << "beta=" << show(*rep.beta) << '\n';
  if (rep.p) out << "p=" << show(*rep.p) << '\n';
  if (rep.q) out << "q=" << show(*rep.q) << '\n';
  if (rep.scaling_sum) out << "scaling_sum=" << show(*rep.scaling_sum) << '\n';
  for (const auto& n : rep.notes) out << "note: " << n << '\n';
  if (rep.lemma) {
    const auto ex = context_exponents(rep.lemma->context,
                                      ExactLemmaInputs{*spec.alpha, spec.beta ? spec.beta : rep.beta, spec.s});
    print_lemma(out, *rep.lemma, ex.alpha, ex.beta, ex.s);
  }
  return rep.admissible ? exit_ok : exit_invalid;
}

inline int derive(const std::string& context, const std::string& alpha, const std::string& beta,
                  const std::string& s, std::ostream& out) {
  const auto ctx = parse_context(context);
  if (!ctx) throw InvalidArgument("--context: unknown context '" + context + "' (t11i, t11ii, t13, t14, t15, t145)");
  const ExactLemmaInputs in{exact_flag("alpha", alpha), optional_flag("beta", beta), optional_flag("s", s)};
  const auto lp = derive_lemma_params(*ctx, in);
  const auto ex = context_exponents(*ctx, in);
  out << "alpha=" << show(ex.alpha) << " beta=" << show(ex.beta) << " s=" << show(ex.s) << '\n';
  out << "r=" << show(lp.r) << '\n'
      << "theta=" << show(lp.theta) << '\n'
      << "a=" << show(lp.a) << '\n'
      << "t=" << show(lp.t) << '\n';
  print_lemma(out, lp, ex.alpha, ex.beta, ex.s);
  return exit_ok;
}

struct RegionFlags {
  std::string theorem = "t11i", step = "0.05", alpha_max = "6", beta_max = "6", out, svg;
};

inline int region(const RegionFlags& f, std::ostream& out) {
  const auto th = parse_theorem(f.theorem);
  if (!th) throw InvalidArgument("--theorem: unknown criterion '" + f.theorem + "'");
  auto finite = [](const std::string& name, const std::string& text) {
    const auto e = exact_flag(name, text);
    if (e.is_infinite()) throw InvalidArgument("--" + name + " must be finite");
    return e.value();
  };
  const RegionGrid g = region_sample(*th, finite("alpha-max", f.alpha_max), finite("beta-max", f.beta_max),
                                     finite("step", f.step));
  std::size_t inside = 0;
  for (const auto& p : g.points) inside += p.member ? 1 : 0;
  if (f.out.empty() && f.svg.empty()) out << region_csv(g);
  if (!f.out.empty()) write_file(f.out, region_csv(g));
  if (!f.svg.empty()) write_file(f.svg, region_svg(g));
  if (!f.out.empty() || !f.svg.empty())
    out << "theorem=" << theorem_name(*th) << " points=" << g.points.size() << " inside=" << inside << '\n';
  return exit_ok;
}

struct VerifyFlags {
  std::string check = "lemma22", context = "t11i", alpha = "2", beta = "4", s, out, calibration;
  double r = 3.0, amplitude = 1.0, tolerance = 1.05;
  int grid = 32, trials = 100, mode_cap = 8, calibration_grid = 0;
  std::uint64_t seed = 1;
  bool calibrate = false;
};

inline int verify_lemma(const VerifyFlags& f, std::ostream& out) {
  EnsembleConfig cfg;
  const auto check = parse_lab_check(f.check);
  if (!check) throw InvalidArgument("--check: expected ftc, gn, lemma22 or ladyzhenskaya, got '" + f.check + "'");
  cfg.check = *check;
  cfg.grid_n = f.grid;
  cfg.seed = f.seed;
  cfg.trials = f.trials;
  cfg.mode_cap = f.mode_cap;
  cfg.r = f.r;
  cfg.amplitude = f.amplitude;
  if (cfg.check == LabCheck::gn || cfg.check == LabCheck::lemma22) {
    const auto ctx = parse_context(f.context);
    if (!ctx) throw InvalidArgument("--context: unknown context '" + f.context + "'");
    cfg.context = *ctx;
    const auto a = parse_exponent(f.alpha);
    if (!a) throw InvalidArgument("--alpha: cannot parse '" + f.alpha + "'");
    std::optional<Exponent> b, s;
    if (!f.beta.empty() && !(b = parse_exponent(f.beta))) throw InvalidArgument("--beta: cannot parse '" + f.beta + "'");
    if (!f.s.empty() && !(s = parse_exponent(f.s))) throw InvalidArgument("--s: cannot parse '" + f.s + "'");
    if (*ctx == LemmaContext::T13) b.reset();
    cfg.inputs = LemmaInputs{*a, b, s};
  }
  const auto rows = run_ensemble(cfg);
  write_file(f.out, trials_csv(rows));
  const double worst = max_ratio(rows);
  out << "check=" << lab_check_name(cfg.check) << " grid=" << cfg.grid_n << " trials=" << cfg.trials
      << " max_ratio=" << format_double(worst) << '\n';
  if (f.calibration.empty()) return exit_ok;
  if (f.calibrate) {
    CalibrationEntry e{calibration_keys(cfg), worst};
    store_calibration(f.calibration, e);
    out << "stored " << e.keys.at("constant") << '=' << format_double(worst) << " in " << f.calibration << '\n';
    return exit_ok;
  }
  EnsembleConfig key_cfg = cfg;
  if (f.calibration_grid > 0) key_cfg.grid_n = f.calibration_grid;
  const auto keys = calibration_keys(key_cfg);
  const auto c = find_calibration(read_calibration(f.calibration), keys);
  if (!c) {
    std::string id;
    for (const auto& [k, v] : keys) id += ' ' + k + '=' + v;
    throw PreconditionError("no calibration entry matching" + id + " in " + f.calibration);
  }
  const double bound = *c * f.tolerance;
  const bool ok = worst <= bound;
  out << "calibrated=" << format_double(*c) << " bound=" << format_double(bound) << (ok ? " within" : " EXCEEDED")
      << '\n';
  return ok ? exit_ok : exit_invalid;
}

inline int simulate_cmd(const std::string& config_path, const std::string& out_override, std::ostream& out) {
  RunConfig cfg = read_run_config(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  TrajectoryWriter writer(cfg.out_dir, cfg);
  long snapshots = 0;
  const Trajectory traj = simulate(
      cfg.solver,
      [&](const Snapshot& s) {
        writer.add(s);
        ++snapshots;
      },
      false);
  writer.finish(traj.diagnostics);
  const auto& last = traj.diagnostics.back();
  out << "steps=" << last.step << " snapshots=" << snapshots << " t=" << format_double(last.time)
      << " energy=" << format_double(last.energy) << " max_div=" << format_double(last.max_div) << '\n';
  out << "energy_inequality_excess=" << format_double(energy_inequality_excess(traj)) << '\n';
  out << "wrote " << cfg.out_dir << '\n';
  return exit_ok;
}

inline int monitor_cmd(const std::string& dir, const SpecFlags& f, const std::string& out_path,
                       std::optional<double> threshold, std::ostream& out) {
  const ExactCriterionSpec spec = f.spec();
  const Trajectory traj = read_trajectory(dir);
  const CriterionReport rep = evaluate_criterion(traj, spec);
  const std::string csv = monitor_csv(rep, traj.snapshots.front().u.grid(), traj.nu);
  if (out_path.empty())
    out << csv;
  else
    write_file(out_path, csv);
  out << "quantity_u3=" << format_double(rep.quantity_u3) << " quantity_d3u3=" << format_double(rep.quantity_d3u3)
      << " h1_max=" << format_double(rep.h1_max) << " budget_max=" << format_double(rep.budget_max) << '\n';
  if (threshold) {
    const bool breach = rep.quantity_u3 > *threshold || rep.quantity_d3u3 > *threshold;
    out << "threshold=" << format_double(*threshold) << (breach ? " breached" : " respected") << '\n';
    if (breach) return exit_invalid;
  }
  return exit_ok;
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"anisonorm: anisotropic regularity criteria toolkit for 3D Navier-Stokes on a periodic box"};
  app.name("anisonorm");
  app.require_subcommand(1, 1);
  app.footer("Exit status: 0 success, 1 validation or precondition failure, 2 I/O failure.");

  detail::SpecFlags check_flags;
  auto* check = app.add_subcommand("check-params", "validate a criterion's exponents and derive the dependent ones");
  check_flags.attach(check);

  std::string ctx, d_alpha, d_beta, d_s;
  auto* derive = app.add_subcommand("derive", "print the trilinear-estimate parameters (r, theta, a, t) of a context");
  derive->add_option("--context", ctx, "exponent context: t11i, t11ii, t13, t14, t15 (t14/t15 share t145)")
      ->required();
  derive->add_option("--alpha", d_alpha, "inner exponent along x3 (dimensionless)")->required();
  derive->add_option("--beta", d_beta, "outer exponent over (x1,x2) (dimensionless; derived for t13)");
  derive->add_option("--s", d_s, "u3 spatial exponent (dimensionless; t13, t145)");

  detail::RegionFlags rf;
  auto* region = app.add_subcommand("region", "sample the (alpha,beta) admissibility region of t11i or t11ii");
  region->add_option("--theorem", rf.theorem, "t11i or t11ii")->capture_default_str();
  region->add_option("--step", rf.step, "lattice spacing in (alpha,beta) (dimensionless)")->capture_default_str();
  region->add_option("--alpha-max", rf.alpha_max, "upper alpha bound (dimensionless)")->capture_default_str();
  region->add_option("--beta-max", rf.beta_max, "upper beta bound (dimensionless)")->capture_default_str();
  region->add_option("--out", rf.out, "CSV output path (alpha,beta,member); stdout if neither --out nor --svg");
  region->add_option("--svg", rf.svg, "SVG output path");

  detail::VerifyFlags vf;
  auto* verify = app.add_subcommand("verify-lemma", "run a seeded inequality ensemble and write per-trial ratios");
  verify->add_option("--check", vf.check, "ftc, gn, lemma22 or ladyzhenskaya")->capture_default_str();
  verify->add_option("--context", vf.context, "exponent context for gn and lemma22")->capture_default_str();
  verify->add_option("--alpha", vf.alpha, "inner exponent (dimensionless)")->capture_default_str();
  verify->add_option("--beta", vf.beta, "outer exponent (dimensionless)")->capture_default_str();
  verify->add_option("--s", vf.s, "u3 exponent for t13/t145 contexts (dimensionless)");
  verify->add_option("--r", vf.r, "integrability exponent for ftc and ladyzhenskaya (dimensionless)")
      ->capture_default_str();
  verify->add_option("--grid", vf.grid, "samples per axis of the 2pi cube (points)")->capture_default_str()
      ->check(CLI::Range(4, 1024));
  verify->add_option("--seed", vf.seed, "ensemble seed (integer)")->capture_default_str();
  verify->add_option("--trials", vf.trials, "number of trials (count)")->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--mode-cap", vf.mode_cap, "largest wavenumber per axis of the test functions (modes)")
      ->capture_default_str();
  verify->add_option("--amplitude", vf.amplitude, "RMS amplitude of the test functions (field units)")
      ->capture_default_str();
  verify->add_option("--out", vf.out, "trial CSV output path (trial,lhs,rhs,ratio)")->required();
  verify->add_option("--calibration", vf.calibration, "calibration file to check against, or to write with --calibrate");
  verify->add_flag("--calibrate", vf.calibrate, "store the ensemble's max ratio as the calibrated constant");
  verify->add_option("--calibration-grid", vf.calibration_grid,
                     "grid of the calibration entry to compare with (points; default --grid)");
  verify->add_option("--tolerance", vf.tolerance, "allowed factor over the calibrated constant (dimensionless)")
      ->capture_default_str();

  std::string cfg_path, sim_out;
  auto* sim = app.add_subcommand("simulate", "integrate Navier-Stokes from a run config and write a trajectory");
  sim->add_option("--config", cfg_path, "run config file (key = value lines)")->required();
  sim->add_option("--out", sim_out, "trajectory directory (overrides out.dir)");

  detail::SpecFlags mon_flags;
  std::string traj_dir, mon_out;
  std::optional<double> threshold;
  auto* mon = app.add_subcommand("monitor", "evaluate a criterion's u3 and d3u3 quantities along a trajectory");
  mon->add_option("--trajectory", traj_dir, "trajectory directory written by simulate")->required();
  mon_flags.attach(mon);
  mon->add_option("--out", mon_out, "report CSV path; stdout if omitted");
  mon->add_option("--threshold", threshold, "bound M on both criterion quantities (norm units); exceeding it exits 1");

  if (!args.empty() && !args.front().empty() && args.front().front() != '-' && !app.get_subcommand_no_throw(args.front())) {
    err << "error: unknown command '" << args.front() << "'\n" << app.help();
    return exit_invalid;
  }
  std::vector<const char*> argv{"anisonorm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return exit_invalid;
  }

  try {
    if (*check) return detail::check_params(check_flags, out);
    if (*derive) return detail::derive(ctx, d_alpha, d_beta, d_s, out);
    if (*region) return detail::region(rf, out);
    if (*verify) return detail::verify_lemma(vf, out);
    if (*sim) return detail::simulate_cmd(cfg_path, sim_out, out);
    if (*mon) return detail::monitor_cmd(traj_dir, mon_flags, mon_out, threshold, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const StepRejected& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_invalid;
}

}  // namespace anisonorm::cli
