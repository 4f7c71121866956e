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

#include <stdexcept>
#include <string>

namespace anisonorm {

/// Argument outside the documented domain of an operation (bad axis, p < 1, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called with inputs that violate its stated precondition,
/// e.g. exponents that are not admissible for the requested theorem.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Internal consistency check failed (should be impossible for valid input).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read, written, or has a malformed layout.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A time step violated the CFL guard.
class StepRejected : public std::runtime_error {
 public:
  StepRejected(const std::string& what, double max_speed)
      : std::runtime_error(what), max_speed_(max_speed) {}
  double max_speed() const noexcept { return max_speed_; }

 private:
  double max_speed_;
};

}  // namespace anisonorm
