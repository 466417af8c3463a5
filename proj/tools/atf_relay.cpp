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

// Command-line front end: analytic evaluation, simulation, sweeps and the
// validation driver. CSV goes to --out or stdout; human-readable summaries go to
// stderr so that stdout stays machine-readable.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "atf/errors.hpp"
#include "atf/scenario.hpp"
#include "atf/sweep.hpp"
#include "atf/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

struct Options {
    std::string scenario;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> blocks;
    std::optional<atf::Fidelity> fidelity;
    std::optional<atf::BatteryMode> battery;
    bool baseline = false;
    bool quick = false;
    bool paper_levels = false;
    bool dump = false;
    bool inject_fault = false;
    std::string out;
};

const std::map<std::string, atf::Fidelity> kFidelity{{"vector", atf::Fidelity::vector},
                                                      {"scalar", atf::Fidelity::scalar}};
const std::map<std::string, atf::BatteryMode> kBattery{{"discrete", atf::BatteryMode::discrete},
                                                       {"continuous", atf::BatteryMode::continuous}};

const char* name(atf::Fidelity f) { return f == atf::Fidelity::vector ? "vector" : "scalar"; }
const char* name(atf::BatteryMode b) { return b == atf::BatteryMode::discrete ? "discrete" : "continuous"; }

atf::Scenario load(const Options& o) {
    atf::Scenario s = o.scenario.empty() ? atf::Scenario{} : atf::load_scenario(o.scenario);
    if (o.seed) s.sim.seed = *o.seed;
    if (o.blocks) s.sim.num_blocks = *o.blocks;
    if (o.fidelity) s.sim.fidelity = *o.fidelity;
    if (o.battery) s.sim.battery_mode = *o.battery;
    return s;
}

std::string sim_label(const atf::Scenario& s, bool baseline) {
    std::ostringstream os;
    os << (baseline ? "baseline" : "atf") << ':' << name(s.sim.fidelity) << ':' << name(s.sim.battery_mode)
       << ":seed=" << s.sim.seed << ":blocks=" << s.sim.num_blocks;
    return os.str();
}

// Writes header plus rows to --out (or stdout). Returns false if the file cannot be opened.
bool emit(const Options& o, const std::vector<atf::CsvRow>& rows) {
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file '" << o.out << "'\n";
            return false;
        }
    }
    std::ostream& out = o.out.empty() ? std::cout : file;
    atf::write_csv_header(out);
    for (const auto& r : rows) atf::write_csv_row(out, r);
    return static_cast<bool>(out);
}

int cmd_analytic(const Options& o) {
    const auto s = load(o);
    const auto cfg = s.system_config();
    const auto rep = atf::analytic_pipeline(cfg, s.battery);
    std::cerr << "throughput " << atf::format_number(rep.throughput) << " bit/s/Hz, outage "
              << atf::format_number(rep.outage) << ", first-hop outage " << atf::format_number(rep.first_hop_outage)
              << ", Q=" << s.battery.levels << '\n';
    if (o.dump) {
        const Eigen::IOFormat csv(Eigen::FullPrecision, Eigen::DontAlignCols, ",", "\n");
        std::cerr << "Z =\n" << rep.z.format(csv) << "\npi =\n" << rep.pi.transpose().format(csv) << '\n';
    }
    atf::CsvRow row;
    row.var = "analytic";
    row.analytic_throughput = rep.throughput;
    row.analytic_outage = rep.outage;
    return emit(o, {row}) ? kExitOk : kExitConfig;
}

int cmd_simulate(const Options& o) {
    const auto s = load(o);
    atf::RunOptions run;
    run.analytic = !o.baseline;
    run.baseline = o.baseline;
    const auto row = atf::evaluate_scenario(s, run, sim_label(s, o.baseline));
    if (!row.error.empty()) std::cerr << "simulation failed: " << row.error << '\n';
    else
        std::cerr << row.var << " throughput " << atf::format_number(*row.sim_throughput) << " outage "
                  << atf::format_number(*row.sim_outage) << '\n';
    if (!emit(o, {row})) return kExitConfig;
    return row.error.empty() ? kExitOk : kExitValidation;
}

int cmd_sweep(const Options& o) {
    auto s = load(o);
    // Desk-scale battery unless the scenario or --paper-levels asks otherwise.
    if (!s.levels_explicit && !o.paper_levels) s.battery.levels = 20;
    atf::SweepSpec spec = s.sweep.value_or(atf::SweepSpec{atf::SweepVariable::source_power_dbm,
                                                          {10.0, 20.0, 30.0, 40.0, 50.0}});
    spec.validate();
    atf::RunOptions run;
    run.baseline = o.baseline;
    run.analytic = true;
    auto rows = atf::run_sweep(s, spec, run);
    for (auto& r : rows) r.var = std::string(atf::to_string(spec.variable)) + "=" + r.var;
    std::size_t failed = 0;
    for (const auto& r : rows) failed += r.error.empty() ? 0 : 1;
    std::cerr << "sweep over " << atf::to_string(spec.variable) << ": " << rows.size() << " points, " << failed
              << " failed, Q=" << s.battery.levels << ", " << sim_label(s, o.baseline) << '\n';
    return emit(o, rows) ? kExitOk : kExitConfig;
}

int cmd_validate(const Options& o) {
    atf::ValidationOptions v;
    v.quick = o.quick;
    v.inject_fault = o.inject_fault;
    if (o.seed) v.seed = *o.seed;
    bool ok = true;
    for (const auto& r : atf::run_validation(v)) {
        std::cout << atf::format_check(r) << '\n';
        ok = ok && r.passed;
    }
    std::cout << (ok ? "all checks passed" : "validation FAILED") << '\n';
    return ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Accumulate-then-forward relay: analytic model, simulator and sweeps"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--scenario", o.scenario, "Scenario file (YAML)")->check(CLI::ExistingFile);
        sub->add_option("--seed", o.seed, "Base seed");
        sub->add_option("--out", o.out, "CSV output file (default: stdout)");
    };
    auto add_sim = [&](CLI::App* sub) {
        sub->add_option("--blocks", o.blocks, "Number of simulated blocks")->check(CLI::PositiveNumber);
        sub->add_option("--fidelity", o.fidelity, "Channel fidelity")
            ->transform(CLI::CheckedTransformer(kFidelity, CLI::ignore_case));
        sub->add_option("--battery", o.battery, "Battery model")
            ->transform(CLI::CheckedTransformer(kBattery, CLI::ignore_case));
        sub->add_flag("--baseline", o.baseline, "Simulate the three-slot scheme without accumulation");
    };

    auto* analytic = app.add_subcommand("analytic", "Stationary-law throughput and outage");
    add_common(analytic);
    analytic->add_flag("--dump", o.dump, "Print the transition matrix and stationary law to stderr");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of the protocol");
    add_common(simulate);
    add_sim(simulate);

    auto* sweep = app.add_subcommand("sweep", "Analytic and simulated results over a parameter grid");
    add_common(sweep);
    add_sim(sweep);
    sweep->add_flag("--paper-levels", o.paper_levels, "Use Q=90 instead of the desk-scale Q=20");

    auto* validate = app.add_subcommand("validate", "Property suites and acceptance criteria");
    validate->add_option("--seed", o.seed, "Base seed");
    validate->add_flag("--quick", o.quick, "Reduced sample counts with looser tolerances");
    validate->add_flag("--inject-fault", o.inject_fault, "Corrupt one transition case (negative control)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*analytic) return cmd_analytic(o);
        if (*simulate) return cmd_simulate(o);
        if (*sweep) return cmd_sweep(o);
        return cmd_validate(o);
    } catch (const atf::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}
