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

#include "atf/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "atf/errors.hpp"

namespace atf {

const char* to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::source_power_dbm: return "source_power_dbm";
        case SweepVariable::interferer_power_dbm: return "interferer_power_dbm";
        case SweepVariable::rate: return "rate";
        case SweepVariable::levels_q: return "levels_q";
        case SweepVariable::capacity: return "capacity";
    }
    return "?";
}

SweepVariable parse_sweep_variable(const std::string& name) {
    for (auto v : {SweepVariable::source_power_dbm, SweepVariable::interferer_power_dbm, SweepVariable::rate,
                   SweepVariable::levels_q, SweepVariable::capacity})
        if (name == to_string(v)) return v;
    throw ConfigError("sweep.variable", 0, "unknown sweep variable '" + name + "'");
}

void SweepSpec::validate() const {
    if (grid.empty()) throw ConfigError("sweep.grid", 0, "grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw ConfigError("sweep.grid", 0, "grid must be strictly increasing");
}

SystemConfig Scenario::system_config() const {
    SystemConfig cfg;
    cfg.source_power = dbm_to_watt(source_power_dbm);
    cfg.interferer_powers.assign(topology.d_ir.size(), dbm_to_watt(interferer_power_dbm));
    cfg.efficiency = efficiency;
    cfg.nakagami_m = nakagami_m;
    cfg.relay_antennas = relay_antennas;
    cfg.noise_relay = dbm_to_watt(noise_relay_dbm);
    cfg.noise_dest = dbm_to_watt(noise_dest_dbm);
    cfg.rate = rate;
    cfg = config_from_topology(std::move(cfg), topology);
    cfg.validate();
    return cfg;
}

namespace {

int line_of(const YAML::Node& node) { return node.Mark().line >= 0 ? node.Mark().line + 1 : 0; }

template <typename T>
T read(const YAML::Node& node, const std::string& key) {
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError(key, line_of(node), "malformed value '" + YAML::Dump(node) + "'");
    }
}

class Section {
  public:
    Section(const YAML::Node& node, std::string path, std::set<std::string> allowed)
        : node_(node), path_(std::move(path)) {
        if (!node_.IsMap()) throw ConfigError(path_, line_of(node_), "expected a mapping");
        for (const auto& kv : node_) {
            const auto key = kv.first.as<std::string>();
            if (!allowed.count(key)) throw ConfigError(qualify(key), line_of(kv.first), "unknown key");
        }
    }

    template <typename T>
    void get(const std::string& key, T& out) const {
        if (const auto v = node_[key]) out = read<T>(v, qualify(key));
    }

    YAML::Node child(const std::string& key) const { return node_[key]; }
    std::string qualify(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  private:
    YAML::Node node_;
    std::string path_;
};

Fidelity parse_fidelity(const std::string& s, const std::string& key, int line) {
    if (s == "vector") return Fidelity::vector;
    if (s == "scalar") return Fidelity::scalar;
    throw ConfigError(key, line, "expected 'vector' or 'scalar'");
}

BatteryMode parse_battery_mode(const std::string& s, const std::string& key, int line) {
    if (s == "discrete") return BatteryMode::discrete;
    if (s == "continuous") return BatteryMode::continuous;
    throw ConfigError(key, line, "expected 'discrete' or 'continuous'");
}

BaselineThreshold parse_baseline_threshold(const std::string& s, const std::string& key, int line) {
    if (s == "rate_compensated") return BaselineThreshold::rate_compensated;
    if (s == "two_slot") return BaselineThreshold::two_slot;
    throw ConfigError(key, line, "expected 'rate_compensated' or 'two_slot'");
}

void check(bool ok, const std::string& key, const YAML::Node& node, const std::string& what) {
    if (!ok) throw ConfigError(key, line_of(node), what);
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError("", e.mark.line + 1, e.msg);
    }
    Scenario s;
    if (root.IsNull()) return s;

    const Section top(root, "", {"system", "topology", "battery", "simulation", "sweep"});

    if (const auto node = top.child("system")) {
        const Section sys(node, "system",
                          {"source_power_dbm", "interferer_power_dbm", "efficiency", "nakagami_m", "relay_antennas",
                           "noise_relay_dbm", "noise_dest_dbm", "rate"});
        sys.get("source_power_dbm", s.source_power_dbm);
        sys.get("interferer_power_dbm", s.interferer_power_dbm);
        sys.get("efficiency", s.efficiency);
        sys.get("nakagami_m", s.nakagami_m);
        sys.get("relay_antennas", s.relay_antennas);
        sys.get("noise_relay_dbm", s.noise_relay_dbm);
        sys.get("noise_dest_dbm", s.noise_dest_dbm);
        sys.get("rate", s.rate);
        check(s.efficiency > 0 && s.efficiency <= 1, "system.efficiency", node, "must lie in (0, 1]");
        check(s.nakagami_m >= 1, "system.nakagami_m", node, "must be a positive integer");
        check(s.relay_antennas >= 1, "system.relay_antennas", node, "must be a positive integer");
        check(s.rate >= 0, "system.rate", node, "must be >= 0");
    }
    if (const auto node = top.child("topology")) {
        const Section topo(node, "topology", {"d_sd", "d_sr", "d_ir", "pathloss_exponent"});
        topo.get("d_sd", s.topology.d_sd);
        topo.get("d_sr", s.topology.d_sr);
        topo.get("d_ir", s.topology.d_ir);
        topo.get("pathloss_exponent", s.topology.pathloss_exponent);
        check(s.topology.d_sr > 0 && s.topology.d_sd > s.topology.d_sr, "topology.d_sr", node,
              "relay must lie strictly between source and destination");
        check(s.topology.pathloss_exponent >= 2 && s.topology.pathloss_exponent <= 5, "topology.pathloss_exponent",
              node, "must lie in [2, 5]");
        for (double d : s.topology.d_ir) check(d > 0, "topology.d_ir", node, "distances must be > 0");
    }
    if (const auto node = top.child("battery")) {
        const Section bat(node, "battery", {"capacity", "levels"});
        bat.get("capacity", s.battery.capacity);
        if (node["levels"]) s.levels_explicit = true;
        bat.get("levels", s.battery.levels);
        check(s.battery.capacity > 0, "battery.capacity", node, "must be > 0");
        check(s.battery.levels >= 1, "battery.levels", node, "must be >= 1");
    }
    if (const auto node = top.child("simulation")) {
        const Section sim(node, "simulation", {"blocks", "seed", "fidelity", "battery_mode", "baseline_threshold"});
        sim.get("blocks", s.sim.num_blocks);
        sim.get("seed", s.sim.seed);
        if (const auto v = node["fidelity"])
            s.sim.fidelity = parse_fidelity(read<std::string>(v, "simulation.fidelity"), "simulation.fidelity", line_of(v));
        if (const auto v = node["battery_mode"])
            s.sim.battery_mode =
                parse_battery_mode(read<std::string>(v, "simulation.battery_mode"), "simulation.battery_mode", line_of(v));
        if (const auto v = node["baseline_threshold"])
            s.sim.baseline_threshold = parse_baseline_threshold(read<std::string>(v, "simulation.baseline_threshold"),
                                                                "simulation.baseline_threshold", line_of(v));
        check(s.sim.num_blocks >= 1, "simulation.blocks", node, "must be >= 1");
    }
    if (const auto node = top.child("sweep")) {
        const Section sw(node, "sweep", {"variable", "grid"});
        SweepSpec spec;
        if (const auto v = node["variable"]) {
            try {
                spec.variable = parse_sweep_variable(read<std::string>(v, "sweep.variable"));
            } catch (const ConfigError& e) {
                throw ConfigError("sweep.variable", line_of(v), e.what());
            }
        }
        sw.get("grid", spec.grid);
        try {
            spec.validate();
        } catch (const ConfigError& e) {
            throw ConfigError(e.key(), line_of(node), "grid must be non-empty and strictly increasing");
        }
        s.sweep = spec;
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", 0, "cannot open scenario file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

Scenario apply_sweep_value(Scenario base, SweepVariable variable, double value) {
    switch (variable) {
        case SweepVariable::source_power_dbm: base.source_power_dbm = value; break;
        case SweepVariable::interferer_power_dbm: base.interferer_power_dbm = value; break;
        case SweepVariable::rate: base.rate = value; break;
        case SweepVariable::levels_q:
            if (value < 1 || value != std::floor(value)) throw ConfigError("sweep.grid", 0, "levels must be integers >= 1");
            base.battery.levels = static_cast<int>(value);
            base.levels_explicit = true;
            break;
        case SweepVariable::capacity: base.battery.capacity = value; break;
    }
    return base;
}

}  // namespace atf
