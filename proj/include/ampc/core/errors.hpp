// Copyright 2026 The Annealed MPC Authors
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

#ifndef AMPC_CORE_ERRORS_HPP_
#define AMPC_CORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ampc {

// Invalid argument values (dimension mismatches, non-positive scales, ...).
// The message names the offending field.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A rollout produced a non-finite state or cost. Carries the step index at
// which integration failed; candidates in a batch are instead scored +inf.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, int step)
      : std::runtime_error(what + " at step " + std::to_string(step)), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

// Every candidate in a batch has infinite cost; no softmax weights exist.
class NoValidSampleError : public std::runtime_error {
 public:
  explicit NoValidSampleError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration parse or validation failure. The message carries the full
// key path so the CLI can print it verbatim.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ampc

#endif  // AMPC_CORE_ERRORS_HPP_
