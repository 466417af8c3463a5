// SPDX-License-Identifier: Apache-2.0
//
// atf-relay: analysis and simulation of accumulate-then-forward energy
// harvesting relays under co-channel interference
// Copyright (C) 2026 The atf-relay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atf {

/// Non-finite or out-of-range argument to a numerical routine.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Partial-fraction hypoexponential evaluation requested with (nearly) equal rates.
/// The quadrature route handles these inputs.
class DegenerateRates : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Zero-norm channel vector where a nonzero one is required.
class DegenerateChannel : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class GeometryError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Stationary system is singular or too ill-conditioned to trust.
class ReducibleChain : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A transition-matrix row does not sum to one.
class TransitionConsistencyError : public std::logic_error {
  public:
    TransitionConsistencyError(std::size_t row, double row_sum)
        : std::logic_error("transition matrix row " + std::to_string(row) + " sums to " +
                           std::to_string(row_sum)),
          row_(row),
          row_sum_(row_sum) {}

    std::size_t row() const noexcept { return row_; }
    double row_sum() const noexcept { return row_sum_; }

  private:
    std::size_t row_;
    double row_sum_;
};

/// Scenario file problem. `line` is 1-based, 0 when unknown.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string& key, int line, const std::string& what)
        : std::runtime_error(format(key, line, what)), key_(key), line_(line) {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

  private:
    static std::string format(const std::string& key, int line, const std::string& what) {
        std::string out = "config error";
        if (!key.empty()) out += " at key '" + key + "'";
        if (line > 0) out += " (line " + std::to_string(line) + ")";
        return out + ": " + what;
    }

    std::string key_;
    int line_;
};

}  // namespace atf
