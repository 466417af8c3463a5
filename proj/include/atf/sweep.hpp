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

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "atf/scenario.hpp"

namespace atf {

inline constexpr const char* kCsvHeader =
    "var,analytic_throughput,analytic_outage,sim_throughput,sim_outage,tv_distance,mode_eh,mode_idfail,"
    "mode_forward,error";

/// One CSV record. Absent optionals are written as empty fields.
struct CsvRow {
    std::string var;
    std::optional<double> analytic_throughput;
    std::optional<double> analytic_outage;
    std::optional<double> sim_throughput;
    std::optional<double> sim_outage;
    std::optional<double> tv_distance;
    std::optional<std::array<std::uint64_t, 3>> mode_counts;
    std::string error;
};

/// Shortest round-trip decimal, '.' separator, independent of the C locale.
std::string format_number(double v);

/// RFC 4180 field quoting.
std::string csv_escape(const std::string& field);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const CsvRow& row);

struct RunOptions {
    bool analytic = true;
    bool simulate = true;
    bool baseline = false;  // simulate the three-slot scheme instead of ATF
};

/// Evaluates one scenario. Failures are caught and reported in `error`.
CsvRow evaluate_scenario(const Scenario& scenario, const RunOptions& opts, const std::string& label);

/// One row per grid point, in grid order. Points run concurrently; each point's
/// simulation seed is mix_seed(scenario seed, point index).
std::vector<CsvRow> run_sweep(const Scenario& base, const SweepSpec& spec, const RunOptions& opts);

}  // namespace atf
