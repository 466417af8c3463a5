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

#include <optional>
#include <string>
#include <vector>

#include "atf/config.hpp"
#include "atf/markov.hpp"
#include "atf/simulator.hpp"

namespace atf {

enum class SweepVariable { source_power_dbm, interferer_power_dbm, rate, levels_q, capacity };

struct SweepSpec {
    SweepVariable variable = SweepVariable::source_power_dbm;
    std::vector<double> grid;

    /// Throws ConfigError unless the grid is non-empty and strictly increasing.
    void validate() const;
};

const char* to_string(SweepVariable v);
SweepVariable parse_sweep_variable(const std::string& name);

/// Everything a run needs. Powers are in dBm here and converted to Watts by
/// system_config(); every default reproduces the reference parameter set.
struct Scenario {
    double source_power_dbm = 30.0;
    double interferer_power_dbm = 20.0;
    double efficiency = 0.5;
    int nakagami_m = 2;
    int relay_antennas = 4;
    double noise_relay_dbm = -80.0;
    double noise_dest_dbm = -80.0;
    double rate = 1.0;

    Topology topology;
    BatteryModel battery{0.5, 90};
    /// True when the scenario file sets battery.levels itself.
    bool levels_explicit = false;

    SimConfig sim;
    std::optional<SweepSpec> sweep;

    /// Linear-unit configuration with gains from the topology.
    SystemConfig system_config() const;
};

/// Parses the YAML scenario format. Unknown keys and malformed values raise
/// ConfigError with the key path and 1-based line number.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Copy of `base` with the swept variable set to `value`.
Scenario apply_sweep_value(Scenario base, SweepVariable variable, double value);

}  // namespace atf
