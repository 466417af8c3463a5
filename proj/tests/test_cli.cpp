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

#include <doctest.h>

#include <sstream>

#include "atf/errors.hpp"
#include "atf/scenario.hpp"
#include "atf/sweep.hpp"

using namespace atf;

namespace {

// Returns the line reported by parse_scenario, or -1 if it did not throw.
int error_line(const std::string& text, std::string* key = nullptr) {
    try {
        (void)parse_scenario(text);
    } catch (const ConfigError& e) {
        if (key) *key = e.key();
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("empty scenario takes the reference defaults") {
    const auto s = parse_scenario("");
    CHECK(s.source_power_dbm == 30.0);
    CHECK(s.interferer_power_dbm == 20.0);
    CHECK(s.efficiency == 0.5);
    CHECK(s.nakagami_m == 2);
    CHECK(s.relay_antennas == 4);
    CHECK(s.noise_relay_dbm == -80.0);
    CHECK(s.noise_dest_dbm == -80.0);
    CHECK(s.topology.d_sd == 20.0);
    CHECK(s.topology.d_sr == 6.0);
    CHECK(s.topology.d_ir == std::vector<double>{12.0, 13.0, 14.0});
    CHECK(s.topology.pathloss_exponent == 2.0);
    CHECK(s.battery.capacity == 0.5);
    CHECK(s.battery.levels == 90);
    CHECK_FALSE(s.levels_explicit);
    CHECK_FALSE(s.sweep.has_value());
}

TEST_CASE("scenario values override defaults") {
    const auto s = parse_scenario(R"(system:
  source_power_dbm: 40
  rate: 2
topology:
  d_ir: [10, 11]
battery:
  levels: 20
simulation:
  blocks: 1000
  seed: 7
  fidelity: vector
  battery_mode: continuous
sweep:
  variable: interferer_power_dbm
  grid: [0, 10, 20]
)");
    CHECK(s.source_power_dbm == 40.0);
    CHECK(s.rate == 2.0);
    CHECK(s.topology.d_ir.size() == 2);
    CHECK(s.battery.levels == 20);
    CHECK(s.levels_explicit);
    CHECK(s.sim.num_blocks == 1000);
    CHECK(s.sim.seed == 7);
    CHECK(s.sim.fidelity == Fidelity::vector);
    CHECK(s.sim.battery_mode == BatteryMode::continuous);
    REQUIRE(s.sweep.has_value());
    CHECK(s.sweep->variable == SweepVariable::interferer_power_dbm);
    CHECK(s.sweep->grid.size() == 3);
    CHECK(s.system_config().num_interferers() == 2);
}

TEST_CASE("unknown keys name the key and line") {
    std::string key;
    CHECK(error_line("system:\n  source_power_dbm: 30\n  interferer_powr_dbm: 20\n", &key) == 3);
    CHECK(key == "system.interferer_powr_dbm");
    CHECK(error_line("sytem:\n  rate: 1\n", &key) == 1);
    CHECK(key == "sytem");
    CHECK(error_line("battery:\n  capacity: 0.5\n  levls: 3\n", &key) == 3);
}

TEST_CASE("malformed values are config errors") {
    std::string key;
    CHECK(error_line("system:\n  rate: fast\n", &key) == 2);
    CHECK(key == "system.rate");
    CHECK(error_line("simulation:\n  fidelity: exact\n", &key) == 2);
    CHECK(error_line("battery:\n  levels: 0\n") > 0);
    CHECK(error_line("topology:\n  d_sr: 30\n") > 0);
    CHECK(error_line("sweep:\n  variable: rate\n  grid: [3, 2]\n") > 0);
    CHECK(error_line("sweep:\n  variable: colour\n  grid: [1]\n", &key) == 2);
    CHECK(error_line("system: [1, 2\n") > 0);
}

TEST_CASE("sweep spec validation") {
    CHECK_THROWS_AS((SweepSpec{SweepVariable::rate, {}}.validate()), ConfigError);
    CHECK_THROWS_AS((SweepSpec{SweepVariable::rate, {1.0, 1.0}}.validate()), ConfigError);
    CHECK_NOTHROW((SweepSpec{SweepVariable::rate, {1.0, 2.0}}.validate()));
    CHECK(parse_sweep_variable("levels_q") == SweepVariable::levels_q);
    CHECK(std::string(to_string(SweepVariable::capacity)) == "capacity");
}

TEST_CASE("sweep values are applied") {
    Scenario base;
    CHECK(apply_sweep_value(base, SweepVariable::source_power_dbm, 42.0).source_power_dbm == 42.0);
    CHECK(apply_sweep_value(base, SweepVariable::levels_q, 7.0).battery.levels == 7);
    CHECK(apply_sweep_value(base, SweepVariable::capacity, 0.25).battery.capacity == 0.25);
    CHECK_THROWS_AS(apply_sweep_value(base, SweepVariable::levels_q, 2.5), ConfigError);
}

TEST_CASE("csv formatting") {
    std::ostringstream os;
    write_csv_header(os);
    CHECK(os.str() ==
          "var,analytic_throughput,analytic_outage,sim_throughput,sim_outage,tv_distance,mode_eh,mode_idfail,"
          "mode_forward,error\r\n");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1e-300) == "1e-300");
    CHECK(format_number(3.0) == "3");
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");

    CsvRow row;
    row.var = "x";
    row.analytic_throughput = 0.5;
    row.error = "bad, very";
    std::ostringstream line;
    write_csv_row(line, row);
    CHECK(line.str() == "x,0.5,,,,,,,,\"bad, very\"\r\n");
}

TEST_CASE("evaluation is byte-stable and reports failures in the error column") {
    Scenario s;
    s.battery.levels = 10;
    s.sim.num_blocks = 5000;
    const RunOptions opts;
    std::ostringstream a, b;
    write_csv_row(a, evaluate_scenario(s, opts, "p"));
    write_csv_row(b, evaluate_scenario(s, opts, "p"));
    CHECK(a.str() == b.str());
    const auto ok = evaluate_scenario(s, opts, "p");
    CHECK(ok.error.empty());
    CHECK(ok.tv_distance.has_value());

    Scenario bad = s;
    bad.nakagami_m = 0;
    const auto row = evaluate_scenario(bad, opts, "bad");
    CHECK_FALSE(row.error.empty());
}

TEST_CASE("sweeps keep grid order and derive per-point seeds") {
    Scenario s;
    s.battery.levels = 10;
    s.sim.num_blocks = 2000;
    const SweepSpec spec{SweepVariable::source_power_dbm, {20.0, 30.0, 40.0}};
    const auto rows = run_sweep(s, spec, RunOptions{});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].var == "20");
    CHECK(rows[2].var == "40");
    CHECK(*rows[2].analytic_throughput >= *rows[0].analytic_throughput);
    const auto again = run_sweep(s, spec, RunOptions{});
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].mode_counts == again[i].mode_counts);

    const SweepSpec levels{SweepVariable::levels_q, {1.5, 2.0}};
    const auto mixed = run_sweep(s, levels, RunOptions{});
    CHECK_FALSE(mixed[0].error.empty());
    CHECK(mixed[1].error.empty());
}

TEST_CASE("scenario files on disk") {
    CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.yaml"), ConfigError);
    try {
        (void)load_scenario(std::string(ATF_SOURCE_DIR) + "/tests/data/bad_key.yaml");
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("interferer_powr_dbm") != std::string::npos);
    }
}
