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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "anisonorm/errors.hpp"
#include "anisonorm/inequality.hpp"
#include "anisonorm/params.hpp"
#include "anisonorm/random_fields.hpp"

namespace anisonorm {

enum class LabCheck { ftc, gn, lemma22, ladyzhenskaya };

inline std::string_view lab_check_name(LabCheck c) {
  switch (c) {
    case LabCheck::ftc: return "ftc";
    case LabCheck::gn: return "gn";
    case LabCheck::lemma22: return "lemma22";
    case LabCheck::ladyzhenskaya: return "ladyzhenskaya";
  }
  return "?";
}

inline std::optional<LabCheck> parse_lab_check(std::string_view s) {
  for (LabCheck c : {LabCheck::ftc, LabCheck::gn, LabCheck::lemma22, LabCheck::ladyzhenskaya})
    if (s == lab_check_name(c)) return c;
  if (s == "lady") return LabCheck::ladyzhenskaya;
  return std::nullopt;
}

/// Seeded ensemble of one inequality check.
struct EnsembleConfig {
  LabCheck check = LabCheck::lemma22;
  int grid_n = 32;
  std::uint64_t seed = 1;
  int trials = 100;
  int mode_cap = 8;
  /// Integrability exponent for ftc and ladyzhenskaya.
  double r = 3.0;
  /// Exponent context for gn and lemma22.
  LemmaContext context = LemmaContext::T11i;
  LemmaInputs inputs{2.0, Exponent(4.0), std::nullopt};
  /// Multiplies the test functions; ratios must not depend on it.
  double amplitude = 1.0;
};

struct TrialRow {
  int trial = 0;
  RatioReport report;
};

/// Exponents (alpha, beta, s) and lemma parameters the config refers to.
struct ResolvedExponents {
  ContextExponentsT<double> exponents;
  LemmaParams params;
};

inline ResolvedExponents resolve(const EnsembleConfig& cfg) {
  return {context_exponents(cfg.context, cfg.inputs), derive_lemma_params(cfg.context, cfg.inputs)};
}

/// Runs trial t of the ensemble. Each argument function has its own stream
/// derived from (seed, t), so trials are independent of evaluation order.
inline RatioReport run_trial(const EnsembleConfig& cfg, int t) {
  const Grid3 grid = Grid3::cube(cfg.grid_n);
  auto recipe = [&](std::uint64_t stream, bool window, bool mean_zero) {
    TestFunctionRecipe rc;
    rc.seed = cfg.seed;
    rc.trial = static_cast<std::uint64_t>(t);
    rc.stream = stream;
    rc.mode_cap = cfg.mode_cap;
    rc.window = window;
    rc.mean_zero = mean_zero;
    rc.amplitude = cfg.amplitude;
    return random_test_function(grid, rc);
  };
  switch (cfg.check) {
    case LabCheck::ftc: return ftc_column_bound(recipe(0, true, false), cfg.r);
    case LabCheck::gn: {
      const auto res = resolve(cfg);
      return gn1d_check(recipe(0, true, false), res.exponents.alpha, res.exponents.s, res.params.theta,
                        res.params.r);
    }
    case LabCheck::lemma22: {
      const auto res = resolve(cfg);
      return lemma22_ratio(recipe(0, true, false), recipe(1, false, false), recipe(2, false, false),
                           res.exponents.alpha, res.exponents.beta, res.exponents.s, res.params);
    }
    case LabCheck::ladyzhenskaya: return ladyzhenskaya_ratio(recipe(0, false, true), cfg.r);
  }
  throw InvalidArgument("unknown check");
}

inline std::vector<TrialRow> run_ensemble(const EnsembleConfig& cfg) {
  if (cfg.trials < 1) throw InvalidArgument("trials must be at least 1");
  std::vector<TrialRow> rows;
  rows.reserve(static_cast<std::size_t>(cfg.trials));
  for (int t = 0; t < cfg.trials; ++t) rows.push_back({t, run_trial(cfg, t)});
  return rows;
}

inline double max_ratio(const std::vector<TrialRow>& rows) {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.report.ratio);
  return m;
}

/// Trial report CSV: trial,lhs,rhs,ratio.
inline std::string trials_csv(const std::vector<TrialRow>& rows) {
  std::string out = "trial,lhs,rhs,ratio\n";
  for (const auto& r : rows) {
    out += std::to_string(r.trial) + ',' + format_double(r.report.lhs) + ',' + format_double(r.report.rhs) + ',' +
           format_double(r.report.ratio) + '\n';
  }
  return out;
}

/// One calibrated constant: a line of space-separated key=value pairs.
///   constant=C_22 context=T11i alpha=2 beta=4 s=2 r=8/3 grid=64 seed=7 trials=100 mode_cap=8 value=...
/// Lines starting with '#' are comments.
struct CalibrationEntry {
  std::map<std::string, std::string> keys;  // everything except value
  double value = 0.0;

  std::string identity() const {
    std::string s;
    for (const auto& [k, v] : keys) s += k + '=' + v + ' ';
    return s;
  }
};

/// Identity keys of an ensemble's calibrated constant.
inline std::map<std::string, std::string> calibration_keys(const EnsembleConfig& cfg) {
  std::map<std::string, std::string> k;
  k["grid"] = std::to_string(cfg.grid_n);
  k["seed"] = std::to_string(cfg.seed);
  k["trials"] = std::to_string(cfg.trials);
  k["mode_cap"] = std::to_string(cfg.mode_cap);
  switch (cfg.check) {
    case LabCheck::ftc:
      k["constant"] = "C_ftc";
      k["r"] = format_double(cfg.r);
      break;
    case LabCheck::ladyzhenskaya:
      k["constant"] = "C_lad";
      k["r"] = format_double(cfg.r);
      break;
    case LabCheck::gn:
    case LabCheck::lemma22: {
      const auto res = resolve(cfg);
      k["constant"] = cfg.check == LabCheck::gn ? "C_gn" : "C_22";
      k["context"] = std::string(context_name(cfg.context));
      k["alpha"] = to_string(res.exponents.alpha);
      k["beta"] = to_string(res.exponents.beta);
      k["s"] = to_string(res.exponents.s);
      k["r"] = to_string(res.params.r);
      k["theta"] = format_double(res.params.theta);
      break;
    }
  }
  return k;
}

inline std::vector<CalibrationEntry> parse_calibration(std::istream& in, const std::string& source) {
  std::vector<CalibrationEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    CalibrationEntry e;
    bool has_value = false;
    std::istringstream ss{std::string(t)};
    std::string tok;
    while (ss >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0)
        throw IoError(source + ":" + std::to_string(lineno) + ": expected key=value, got '" + tok + "'");
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "value") {
        auto v = parse_exponent(val);
        if (!v || v->is_infinite()) throw IoError(source + ":" + std::to_string(lineno) + ": bad value");
        e.value = v->value();
        has_value = true;
      } else {
        e.keys[key] = val;
      }
    }
    if (!has_value || !e.keys.count("constant"))
      throw IoError(source + ":" + std::to_string(lineno) + ": entry needs constant= and value=");
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<CalibrationEntry> read_calibration(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open calibration file " + path.string());
  return parse_calibration(in, path.string());
}

inline std::optional<double> find_calibration(const std::vector<CalibrationEntry>& entries,
                                              const std::map<std::string, std::string>& keys) {
  for (const auto& e : entries)
    if (e.keys == keys) return e.value;
  return std::nullopt;
}

inline std::string format_calibration(const std::vector<CalibrationEntry>& entries) {
  std::string out =
      "# Empirical constants of the inequality lab: max ratio over a seeded ensemble.\n"
      "# Periodic box (torus) surrogate of the whole-space setting; constants are not sharp.\n";
  for (const auto& e : entries) {
    out += "constant=" + e.keys.at("constant");
    for (const auto& [k, v] : e.keys)
      if (k != "constant") out += ' ' + k + '=' + v;
    out += " value=" + format_double(e.value) + '\n';
  }
  return out;
}

/// Inserts or replaces the entry with the same identity keys, then rewrites the file.
inline void store_calibration(const std::filesystem::path& path, const CalibrationEntry& entry) {
  std::vector<CalibrationEntry> entries;
  if (std::filesystem::exists(path)) entries = read_calibration(path);
  bool replaced = false;
  for (auto& e : entries)
    if (e.keys == entry.keys) {
      e.value = entry.value;
      replaced = true;
    }
  if (!replaced) entries.push_back(entry);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write calibration file " + path.string());
  out << format_calibration(entries);
  if (!out) throw IoError("failed writing calibration file " + path.string());
}

}  // namespace anisonorm
