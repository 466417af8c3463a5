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

#include <cmath>

#include "atf/scenario.hpp"
#include "atf/simulator.hpp"

using namespace atf;

namespace {

SystemConfig reference(double ps_dbm = 30.0) {
    Scenario s;
    s.source_power_dbm = ps_dbm;
    return s.system_config();
}

SimConfig short_run(std::uint64_t blocks, Fidelity f, BatteryMode m = BatteryMode::discrete) {
    SimConfig s;
    s.num_blocks = blocks;
    s.seed = 42;
    s.fidelity = f;
    s.battery_mode = m;
    return s;
}

}  // namespace

TEST_CASE("simulation is deterministic for a fixed seed") {
    const auto cfg = reference();
    const BatteryModel b{0.5, 20};
    for (auto f : {Fidelity::scalar, Fidelity::vector}) {
        const auto sim = short_run(20000, f);
        const auto a = simulate_atf(cfg, b, sim);
        const auto c = simulate_atf(cfg, b, sim);
        CHECK(a.throughput == c.throughput);
        CHECK(a.mode_counts == c.mode_counts);
        CHECK(a.level_histogram == c.level_histogram);
        CHECK(a.transition_counts == c.transition_counts);
    }
    auto other = short_run(20000, Fidelity::scalar);
    other.seed = 43;
    CHECK(simulate_atf(cfg, b, other).mode_counts != simulate_atf(cfg, b, short_run(20000, Fidelity::scalar)).mode_counts);
}

TEST_CASE("report bookkeeping") {
    const auto cfg = reference();
    const BatteryModel b{0.5, 20};
    const auto rep = simulate_atf(cfg, b, short_run(50000, Fidelity::vector));
    CHECK(rep.num_blocks == 50000);
    CHECK(rep.mode_counts[0] + rep.mode_counts[1] + rep.mode_counts[2] == 50000);
    CHECK(rep.throughput == doctest::Approx(cfg.rate * (1.0 - rep.outage)).epsilon(1e-14));
    CHECK(rep.throughput == doctest::Approx(cfg.rate * rep.mode_counts[kModeForward] / 50000.0));
    CHECK(rep.level_histogram.size() == 21);
    CHECK(rep.level_histogram.sum() == doctest::Approx(1.0));
    CHECK(rep.transition_counts.sum() == 50000);
    CHECK(rep.mean_consumed > 0.0);
}

TEST_CASE("scalar fidelity agrees with the analytic chain") {
    const auto cfg = reference();
    const BatteryModel b{0.5, 20};
    const auto analytic = analytic_pipeline(cfg, b);
    const auto rep = simulate_atf(cfg, b, short_run(200000, Fidelity::scalar));
    const double sigma = std::sqrt(analytic.throughput * (1.0 - analytic.throughput) / 200000.0);
    CHECK(std::abs(rep.throughput - analytic.throughput) <= std::max(0.01, 4.0 * sigma));
    CHECK(empirical_vs_analytic(rep.level_histogram, analytic.pi).total_variation <= 0.05);
}

TEST_CASE("continuous battery") {
    const auto cfg = reference();
    const BatteryModel b{0.5, 20};
    const auto rep = simulate_atf(cfg, b, short_run(50000, Fidelity::scalar, BatteryMode::continuous));
    CHECK(rep.mode_counts[0] + rep.mode_counts[1] + rep.mode_counts[2] == 50000);
    // Exact bookkeeping can only help relative to rounding harvests down.
    const auto discrete = simulate_atf(cfg, b, short_run(50000, Fidelity::scalar));
    CHECK(rep.throughput >= discrete.throughput - 0.02);
}

TEST_CASE("no-accumulation baseline") {
    const auto cfg = reference(50.0);
    const auto rep = simulate_baseline_no_accumulation(cfg, short_run(50000, Fidelity::vector));
    CHECK(rep.mode_counts[0] + rep.mode_counts[1] + rep.mode_counts[2] == 50000);
    CHECK(rep.throughput >= 0.0);
    CHECK(rep.throughput <= cfg.rate);

    auto two_slot = short_run(50000, Fidelity::vector);
    two_slot.baseline_threshold = BaselineThreshold::two_slot;
    // The two-slot threshold is lower, so it decodes at least as often.
    CHECK(simulate_baseline_no_accumulation(reference(20.0), two_slot).throughput >=
          simulate_baseline_no_accumulation(reference(20.0), short_run(50000, Fidelity::vector)).throughput);
}

TEST_CASE("silent source yields zero throughput") {
    auto cfg = reference();
    cfg.source_power = 0.0;
    const auto rep = simulate_atf(cfg, {0.5, 10}, short_run(10000, Fidelity::vector));
    CHECK(rep.throughput == 0.0);
}

TEST_CASE("total variation distance") {
    Eigen::VectorXd h(3), p(3);
    h << 0.5, 0.5, 0.0;
    p << 0.25, 0.25, 0.5;
    const auto d = empirical_vs_analytic(h, p);
    CHECK(d.total_variation == doctest::Approx(0.5));
    CHECK(d.difference(2) == doctest::Approx(-0.5));
    CHECK(empirical_vs_analytic(p, p).total_variation == 0.0);
}
