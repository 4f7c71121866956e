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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "anisonorm/errors.hpp"
#include "anisonorm/field_io.hpp"
#include "anisonorm/run_config.hpp"
#include "anisonorm/solver.hpp"

namespace anisonorm {

// Trajectory directory layout:
//   config.cfg        echo of the run configuration (supplies nu on reload)
//   index.csv         step,time,filename
//   diagnostics.csv   step,time,energy,grad_sq,gradh_sq,lap_sq,max_div
//   snap_%06d.ansf    one binary field per snapshot, numbered by step

inline constexpr const char* diagnostics_header = "step,time,energy,grad_sq,gradh_sq,lap_sq,max_div";

inline std::string snapshot_filename(long step) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snap_%06ld.ansf", step);
  return buf;
}

inline std::string diagnostics_csv(const std::vector<DiagnosticRow>& rows) {
  std::string out = std::string(diagnostics_header) + '\n';
  for (const auto& d : rows)
    out += std::to_string(d.step) + ',' + format_double(d.time) + ',' + format_double(d.energy) + ',' +
           format_double(d.grad_sq) + ',' + format_double(d.gradh_sq) + ',' + format_double(d.lap_sq) + ',' +
           format_double(d.max_div) + '\n';
  return out;
}

namespace detail {

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}

inline double csv_double(const std::string& cell, const std::string& where) {
  double v = 0;
  auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || p != cell.data() + cell.size()) throw IoError(where + ": bad number '" + cell + "'");
  return v;
}

inline long csv_long(const std::string& cell, const std::string& where) {
  long v = 0;
  auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || p != cell.data() + cell.size()) throw IoError(where + ": bad integer '" + cell + "'");
  return v;
}

/// Data rows of a CSV file with the expected header.
inline std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path, const std::string& header) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || detail::trim(line) != header)
    throw IoError(path.string() + ": expected header '" + header + "'");
  const std::size_t width = split_csv(header).size();
  std::vector<std::vector<std::string>> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    auto cells = split_csv(line);
    if (cells.size() != width)
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": expected " + std::to_string(width) + " fields");
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace detail

/// Streams a running simulation to disk; snapshots are written as they arrive.
class TrajectoryWriter {
 public:
  TrajectoryWriter(std::filesystem::path dir, const RunConfig& config) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create directory " + dir_.string() + ": " + ec.message());
    detail::write_text(dir_ / "config.cfg", format_run_config(config));
    index_ = "step,time,filename\n";
  }

  void add(const Snapshot& s) {
    const std::string name = snapshot_filename(s.step);
    write_field(dir_ / name, s.u);
    index_ += std::to_string(s.step) + ',' + format_double(s.time) + ',' + name + '\n';
    detail::write_text(dir_ / "index.csv", index_);
  }

  void finish(const std::vector<DiagnosticRow>& diagnostics) {
    detail::write_text(dir_ / "diagnostics.csv", diagnostics_csv(diagnostics));
  }

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::string index_;
};

/// Writes a complete in-memory trajectory.
inline void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj, const RunConfig& config) {
  TrajectoryWriter w(dir, config);
  for (const auto& s : traj.snapshots) w.add(s);
  w.finish(traj.diagnostics);
}

/// Loads a trajectory directory written by TrajectoryWriter.
inline Trajectory read_trajectory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw IoError("trajectory directory " + dir.string() + " not found");
  Trajectory traj;
  const RunConfig cfg = read_run_config(dir / "config.cfg");
  traj.config = cfg.solver;
  traj.nu = cfg.solver.nu;
  const auto index_path = (dir / "index.csv").string();
  for (const auto& row : detail::read_csv(dir / "index.csv", "step,time,filename")) {
    if (row[2].find('/') != std::string::npos || row[2].find('\\') != std::string::npos)
      throw IoError(index_path + ": snapshot name '" + row[2] + "' must be a plain file name");
    Snapshot s{detail::csv_long(row[0], index_path), detail::csv_double(row[1], index_path),
               read_field(dir / row[2])};
    if (!traj.snapshots.empty() && !(s.time > traj.snapshots.back().time))
      throw IoError(index_path + ": snapshot times are not strictly increasing");
    traj.snapshots.push_back(std::move(s));
  }
  const auto diag_path = (dir / "diagnostics.csv").string();
  for (const auto& row : detail::read_csv(dir / "diagnostics.csv", diagnostics_header)) {
    DiagnosticRow d;
    d.step = detail::csv_long(row[0], diag_path);
    d.time = detail::csv_double(row[1], diag_path);
    d.energy = detail::csv_double(row[2], diag_path);
    d.grad_sq = detail::csv_double(row[3], diag_path);
    d.gradh_sq = detail::csv_double(row[4], diag_path);
    d.lap_sq = detail::csv_double(row[5], diag_path);
    d.max_div = detail::csv_double(row[6], diag_path);
    traj.diagnostics.push_back(d);
  }
  return traj;
}

}  // namespace anisonorm
