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

#include <Eigen/Dense>

#include "atf/channel.hpp"
#include "atf/markov.hpp"

namespace atf {

/// `vector` draws full channel vectors and forms the MRC projections; `scalar`
/// draws the squared norms from their marginal laws independently.
enum class Fidelity { vector, scalar };

/// `discrete` quantizes harvests and requirements to the level grid; `continuous`
/// stores exact Joules.
enum class BatteryMode { discrete, continuous };

/// Per-hop decoding threshold of the three-slot baseline. `rate_compensated` uses
/// 2^(3R) - 1 so that one data third carries rate R; `two_slot` uses 2^(2R) - 1.
enum class BaselineThreshold { rate_compensated, two_slot };

struct SimConfig {
    std::uint64_t num_blocks = 1'000'000;
    std::uint64_t seed = 1;
    Fidelity fidelity = Fidelity::scalar;
    BatteryMode battery_mode = BatteryMode::discrete;
    BaselineThreshold baseline_threshold = BaselineThreshold::rate_compensated;
};

enum Mode : int { kModeHarvest = 0, kModeDecodeFail = 1, kModeForward = 2 };

struct SimReport {
    double throughput = 0.0;
    double outage = 0.0;
    /// Fraction of blocks that start at each level (discrete battery only).
    Eigen::VectorXd level_histogram;
    /// Level-to-level transition counts (discrete battery only).
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> transition_counts;
    std::array<std::uint64_t, 3> mode_counts{};
    std::uint64_t num_blocks = 0;
    double mean_harvested = 0.0;   // per harvesting block, Joules
    double mean_consumed = 0.0;    // per forward, Joules
    std::uint64_t redraws = 0;     // degenerate draws replaced
};

/// Block-by-block Monte Carlo execution of the accumulate-then-forward protocol.
/// Deterministic for a fixed SimConfig.
SimReport simulate_atf(const SystemConfig& cfg, const BatteryModel& b, const SimConfig& sim);

/// Three equal slots per block with no energy carried over: harvest, decode,
/// forward with everything harvested in the first slot.
/// Mode counts: harvest = decoded but second hop short of energy,
/// decode-fail = first hop outage, forward = delivered.
SimReport simulate_baseline_no_accumulation(const SystemConfig& cfg, const SimConfig& sim);

struct DivergenceReport {
    double total_variation = 0.0;
    Eigen::VectorXd difference;  // histogram - pi
};

/// Total-variation distance between an empirical level histogram and pi.
DivergenceReport empirical_vs_analytic(const Eigen::VectorXd& histogram, const Eigen::VectorXd& pi);

}  // namespace atf
