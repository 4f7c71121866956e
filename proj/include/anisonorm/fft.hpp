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

#include <fftw3.h>

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "anisonorm/errors.hpp"

namespace anisonorm::fft {

namespace detail {

// FFTW planning is not thread-safe; execution with new-array functions is.
inline std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

/// Real-to-complex transform pair over a 3D (or 1D) shape, planned once with
/// FFTW_ESTIMATE so results are reproducible run to run.
class Plan {
 public:
  /// dims are given slowest-first (FFTW row-major order).
  explicit Plan(std::vector<int> dims) : dims_(std::move(dims)) {
    std::size_t nreal = 1;
    for (int d : dims_) nreal *= static_cast<std::size_t>(d);
    nreal_ = nreal;
    ncomplex_ = nreal / dims_.back() * (dims_.back() / 2 + 1);
    std::vector<double> in(nreal_);
    std::vector<std::complex<double>> out(ncomplex_);
    std::lock_guard lock(detail::planner_mutex());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    const int rank = static_cast<int>(dims_.size());
    forward_ = fftw_plan_dft_r2c(rank, dims_.data(), in.data(),
                                 reinterpret_cast<fftw_complex*>(out.data()), flags);
    inverse_ = fftw_plan_dft_c2r(rank, dims_.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                 in.data(), flags | FFTW_DESTROY_INPUT);
    if (forward_ == nullptr || inverse_ == nullptr) throw ConsistencyError("FFTW planning failed");
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    std::lock_guard lock(detail::planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(inverse_);
  }

  std::size_t real_size() const { return nreal_; }
  std::size_t complex_size() const { return ncomplex_; }

  /// Normalized forward transform: out = DFT(in) / N.
  void forward(std::span<const double> in, std::span<std::complex<double>> out) const {
    check(in.size(), out.size());
    // r2c does not modify its input.
    fftw_execute_dft_r2c(forward_, const_cast<double*>(in.data()),
                         reinterpret_cast<fftw_complex*>(out.data()));
    const double scale = 1.0 / static_cast<double>(nreal_);
    for (auto& z : out) z *= scale;
  }

  /// Synthesis: out(x) = sum_k in_k exp(i k.x). The input is preserved.
  void inverse(std::span<const std::complex<double>> in, std::span<double> out) const {
    check(out.size(), in.size());
    std::vector<std::complex<double>> scratch(in.begin(), in.end());
    fftw_execute_dft_c2r(inverse_, reinterpret_cast<fftw_complex*>(scratch.data()), out.data());
  }

 private:
  void check(std::size_t nr, std::size_t nc) const {
    if (nr != nreal_ || nc != ncomplex_) throw InvalidArgument("transform size mismatch");
  }

  std::vector<int> dims_;
  std::size_t nreal_ = 0;
  std::size_t ncomplex_ = 0;
  fftw_plan forward_ = nullptr;
  fftw_plan inverse_ = nullptr;
};

/// Process-wide plan cache keyed by shape.
inline const Plan& plan_for(const std::vector<int>& dims) {
  static std::mutex m;
  static std::map<std::vector<int>, std::unique_ptr<Plan>> cache;
  std::lock_guard lock(m);
  auto it = cache.find(dims);
  if (it == cache.end()) it = cache.emplace(dims, std::make_unique<Plan>(dims)).first;
  return *it->second;
}

/// Plan for a grid with x1 fastest: FFTW dims (n3, n2, n1).
inline const Plan& plan_3d(const std::array<int, 3>& n) { return plan_for({n[2], n[1], n[0]}); }

inline const Plan& plan_1d(int n) { return plan_for({n}); }

}  // namespace anisonorm::fft
