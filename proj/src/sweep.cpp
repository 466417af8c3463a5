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

#include "atf/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <thread>

#include "atf/rng.hpp"

namespace atf {

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << "\r\n"; }

void write_csv_row(std::ostream& out, const CsvRow& row) {
    auto num = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
    out << csv_escape(row.var) << ',' << num(row.analytic_throughput) << ',' << num(row.analytic_outage) << ','
        << num(row.sim_throughput) << ',' << num(row.sim_outage) << ',' << num(row.tv_distance) << ',';
    if (row.mode_counts) {
        out << (*row.mode_counts)[0] << ',' << (*row.mode_counts)[1] << ',' << (*row.mode_counts)[2];
    } else {
        out << ",,";
    }
    out << ',' << csv_escape(row.error) << "\r\n";
}

CsvRow evaluate_scenario(const Scenario& scenario, const RunOptions& opts, const std::string& label) {
    CsvRow row;
    row.var = label;
    try {
        const auto cfg = scenario.system_config();
        std::optional<AnalyticReport> analytic;
        if (opts.analytic) {
            analytic = analytic_pipeline(cfg, scenario.battery);
            row.analytic_throughput = analytic->throughput;
            row.analytic_outage = analytic->outage;
        }
        if (opts.simulate) {
            const auto rep = opts.baseline ? simulate_baseline_no_accumulation(cfg, scenario.sim)
                                           : simulate_atf(cfg, scenario.battery, scenario.sim);
            row.sim_throughput = rep.throughput;
            row.sim_outage = rep.outage;
            row.mode_counts = rep.mode_counts;
            if (analytic && !opts.baseline && scenario.sim.battery_mode == BatteryMode::discrete)
                row.tv_distance = empirical_vs_analytic(rep.level_histogram, analytic->pi).total_variation;
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

std::vector<CsvRow> run_sweep(const Scenario& base, const SweepSpec& spec, const RunOptions& opts) {
    spec.validate();
    std::vector<CsvRow> rows(spec.grid.size());
    auto point = [&](std::size_t i) {
        CsvRow row;
        try {
            auto s = apply_sweep_value(base, spec.variable, spec.grid[i]);
            s.sim.seed = mix_seed(base.sim.seed, i);
            row = evaluate_scenario(s, opts, format_number(spec.grid[i]));
        } catch (const std::exception& e) {
            row.var = format_number(spec.grid[i]);
            row.error = e.what();
        }
        return row;
    };
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < rows.size(); start += workers) {
        const std::size_t stop = std::min(rows.size(), start + workers);
        std::vector<std::future<CsvRow>> batch;
        for (std::size_t i = start; i < stop; ++i) batch.push_back(std::async(std::launch::async, point, i));
        for (std::size_t i = start; i < stop; ++i) rows[i] = batch[i - start].get();
    }
    return rows;
}

}  // namespace atf
