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
#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "anisonorm/errors.hpp"
#include "anisonorm/grid.hpp"
#include "anisonorm/spectral.hpp"

namespace anisonorm {

// Binary field file ("ANSF", version 1), all integers and reals little-endian:
//   char[4] "ANSF" | u8 0x01 | u32 components | u32 n1 | u32 n2 | u32 n3 |
//   f64 L1 | f64 L2 | f64 L3 | f64 values[components*n1*n2*n3]
// Values are physical samples in storage order (component-major, x1 fastest).

namespace detail {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

template <class T>
void put_le(std::vector<unsigned char>& buf, T value) {
  auto bits = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big)
    for (std::size_t i = sizeof(T); i-- > 0;) buf.push_back(bits[i]);
  else
    buf.insert(buf.end(), bits.begin(), bits.end());
}

template <class T>
T get_le(const unsigned char* p) {
  std::array<unsigned char, sizeof(T)> bits;
  if constexpr (std::endian::native == std::endian::big)
    for (std::size_t i = 0; i < sizeof(T); ++i) bits[i] = p[sizeof(T) - 1 - i];
  else
    std::memcpy(bits.data(), p, sizeof(T));
  return std::bit_cast<T>(bits);
}

}  // namespace detail

/// Magic, version, four u32 and three f64.
inline constexpr std::size_t ansf_header_bytes = 4 + 1 + 4 * 4 + 3 * 8;

inline std::vector<unsigned char> encode_field(const Field& f) {
  Field p = to_physical(f);
  const Grid3& g = p.grid();
  std::vector<unsigned char> buf;
  buf.reserve(ansf_header_bytes + 8 * p.values().size());
  for (char c : {'A', 'N', 'S', 'F'}) buf.push_back(static_cast<unsigned char>(c));
  buf.push_back(0x01);
  detail::put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(p.components()));
  for (int a = 1; a <= 3; ++a) detail::put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(g.n(a)));
  for (int a = 1; a <= 3; ++a) detail::put_le<double>(buf, g.length(a));
  for (double x : p.values()) detail::put_le<double>(buf, x);
  return buf;
}

inline Field decode_field(const std::vector<unsigned char>& buf, const std::string& source = "buffer") {
  auto fail = [&](const std::string& why) -> IoError {
    return IoError(source + ": malformed field file: " + why);
  };
  if (buf.size() < ansf_header_bytes) throw fail("truncated header");
  if (std::memcmp(buf.data(), "ANSF", 4) != 0) throw fail("bad magic");
  if (buf[4] != 0x01) throw fail("unsupported version " + std::to_string(buf[4]));
  const unsigned char* p = buf.data() + 5;
  const auto comps = detail::get_le<std::uint32_t>(p);
  std::array<int, 3> n{};
  for (int a = 0; a < 3; ++a) n[a] = static_cast<int>(detail::get_le<std::uint32_t>(p + 4 + 4 * a));
  std::array<double, 3> L{};
  for (int a = 0; a < 3; ++a) L[a] = detail::get_le<double>(p + 16 + 8 * a);
  if (comps != 1 && comps != 3) throw fail("component count " + std::to_string(comps));
  Grid3 grid = [&] {
    try {
      return Grid3(n, L);
    } catch (const InvalidArgument& e) {
      throw fail(e.what());
    }
  }();
  Field f(grid, static_cast<int>(comps));
  auto v = f.values();
  if (buf.size() != ansf_header_bytes + 8 * v.size()) throw fail("payload size mismatch");
  const unsigned char* data = buf.data() + ansf_header_bytes;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = detail::get_le<double>(data + 8 * i);
    if (!std::isfinite(v[i])) throw fail("non-finite sample at index " + std::to_string(i));
  }
  return f;
}

inline void write_field(const std::filesystem::path& path, const Field& f) {
  auto buf = encode_field(f);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

inline Field read_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_field(buf, path.string());
}

}  // namespace anisonorm
