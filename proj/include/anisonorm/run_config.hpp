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

#include <charconv>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "anisonorm/errors.hpp"
#include "anisonorm/exponent.hpp"
#include "anisonorm/solver.hpp"

namespace anisonorm {

/// Parsed run configuration: solver settings plus the output directory.
///
/// File format: one `key = value` per line, `#` starts a comment. Keys:
///   grid.n          samples per axis, one value or three (even, >= 4)
///   grid.L          box lengths, one value or three; `2pi` accepted (default 2pi)
///   nu              viscosity (box units^2 / time)
///   dt              time step (time units)
///   t_end           final time (time units)
///   init.kind       taylor | random | file
///   init.seed       random seed (integer)
///   init.mode_cap   largest wavenumber of the random field per axis
///   init.amplitude  L2 norm of the random field
///   init.path       ANSF file for init.kind = file
///   snapshot_every  steps between snapshots (positive integer)
///   out.dir         output directory
struct RunConfig {
  SolverConfig solver;
  std::string out_dir = "run";
};

namespace detail {

inline std::vector<std::string> split_list(std::string_view v) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : v) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline double parse_real(const std::string& key, std::string_view text) {
  const auto t = trim(text);
  if (t == "2pi" || t == "2π") return 2 * std::numbers::pi;
  double v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || !std::isfinite(v))
    throw InvalidArgument(key + ": '" + std::string(t) + "' is not a finite real");
  return v;
}

inline long long parse_integer(const std::string& key, std::string_view text) {
  const auto t = trim(text);
  long long v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size())
    throw InvalidArgument(key + ": '" + std::string(t) + "' is not an integer");
  return v;
}

inline int parse_int_in(const std::string& key, std::string_view text, long long lo, long long hi) {
  const long long v = parse_integer(key, text);
  if (v < lo || v > hi)
    throw InvalidArgument(key + ": " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  return static_cast<int>(v);
}

}  // namespace detail

/// Parses config text; `source` names the origin in error messages.
inline RunConfig parse_run_config(std::istream& in, const std::string& source = "config") {
  RunConfig cfg;
  std::array<int, 3> n{32, 32, 32};
  std::array<double, 3> L{2 * std::numbers::pi, 2 * std::numbers::pi, 2 * std::numbers::pi};
  std::string line;
  int lineno = 0;
  std::map<std::string, int> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto t = detail::trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    const std::string where = source + ":" + std::to_string(lineno);
    if (eq == std::string_view::npos) throw InvalidArgument(where + ": expected 'key = value'");
    const std::string key(detail::trim(t.substr(0, eq)));
    const std::string value(detail::trim(t.substr(eq + 1)));
    if (seen.count(key)) throw InvalidArgument(where + ": duplicate key '" + key + "'");
    seen[key] = lineno;
    try {
      if (key == "grid.n") {
        const auto items = detail::split_list(value);
        if (items.size() != 1 && items.size() != 3) throw InvalidArgument(key + ": give one or three values");
        for (int a = 0; a < 3; ++a)
          n[a] = detail::parse_int_in(key, items[items.size() == 1 ? 0 : a], 4, 4096);
      } else if (key == "grid.L") {
        const auto items = detail::split_list(value);
        if (items.size() != 1 && items.size() != 3) throw InvalidArgument(key + ": give one or three values");
        for (int a = 0; a < 3; ++a) L[a] = detail::parse_real(key, items[items.size() == 1 ? 0 : a]);
      } else if (key == "nu") {
        cfg.solver.nu = detail::parse_real(key, value);
      } else if (key == "dt") {
        cfg.solver.dt = detail::parse_real(key, value);
      } else if (key == "t_end") {
        cfg.solver.t_end = detail::parse_real(key, value);
      } else if (key == "init.kind") {
        if (value == "taylor")
          cfg.solver.init.kind = InitKind::taylor;
        else if (value == "random")
          cfg.solver.init.kind = InitKind::random;
        else if (value == "file")
          cfg.solver.init.kind = InitKind::file;
        else
          throw InvalidArgument(key + ": expected taylor, random or file, got '" + value + "'");
      } else if (key == "init.seed") {
        const long long s = detail::parse_integer(key, value);
        if (s < 0) throw InvalidArgument(key + ": seed must be nonnegative");
        cfg.solver.init.seed = static_cast<std::uint64_t>(s);
      } else if (key == "init.mode_cap") {
        cfg.solver.init.mode_cap = detail::parse_int_in(key, value, 1, 1365);
      } else if (key == "init.amplitude") {
        cfg.solver.init.amplitude = detail::parse_real(key, value);
        if (!(cfg.solver.init.amplitude > 0)) throw InvalidArgument(key + ": must be positive");
      } else if (key == "init.path") {
        cfg.solver.init.path = value;
      } else if (key == "snapshot_every") {
        cfg.solver.snapshot_every = detail::parse_int_in(key, value, 1, std::numeric_limits<int>::max());
      } else if (key == "out.dir") {
        if (value.empty()) throw InvalidArgument(key + ": empty path");
        cfg.out_dir = value;
      } else {
        throw InvalidArgument("unknown key '" + key + "'");
      }
    } catch (const InvalidArgument& e) {
      const std::string msg = e.what();
      throw InvalidArgument(msg.rfind(source, 0) == 0 ? msg : where + ": " + msg);
    }
  }
  try {
    cfg.solver.grid = Grid3(n, L);
    validate(cfg.solver);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(source + ": " + e.what());
  }
  if (cfg.solver.init.kind == InitKind::file && cfg.solver.init.path.empty())
    throw InvalidArgument(source + ": init.kind = file needs init.path");
  return cfg;
}

inline RunConfig read_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  return parse_run_config(in, path.string());
}

/// Canonical text of a config; parse_run_config(format_run_config(c)) == c.
inline std::string format_run_config(const RunConfig& c) {
  const SolverConfig& s = c.solver;
  std::string out = "# anisonorm run configuration\n";
  out += "grid.n = " + std::to_string(s.grid.n(1)) + ' ' + std::to_string(s.grid.n(2)) + ' ' +
         std::to_string(s.grid.n(3)) + '\n';
  out += "grid.L = " + format_double(s.grid.length(1)) + ' ' + format_double(s.grid.length(2)) + ' ' +
         format_double(s.grid.length(3)) + '\n';
  out += "nu = " + format_double(s.nu) + '\n';
  out += "dt = " + format_double(s.dt) + '\n';
  out += "t_end = " + format_double(s.t_end) + '\n';
  const char* kind = s.init.kind == InitKind::taylor ? "taylor" : (s.init.kind == InitKind::random ? "random" : "file");
  out += std::string("init.kind = ") + kind + '\n';
  out += "init.seed = " + std::to_string(s.init.seed) + '\n';
  out += "init.mode_cap = " + std::to_string(s.init.mode_cap) + '\n';
  out += "init.amplitude = " + format_double(s.init.amplitude) + '\n';
  if (!s.init.path.empty()) out += "init.path = " + s.init.path + '\n';
  out += "snapshot_every = " + std::to_string(s.snapshot_every) + '\n';
  out += "out.dir = " + c.out_dir + '\n';
  return out;
}

}  // namespace anisonorm
