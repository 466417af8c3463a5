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

#include <cmath>
#include <vector>

namespace atf {

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

/// Physical-layer parameters of the source/relay/destination link with L interferers.
/// Linear units throughout: Watts for powers, dimensionless average power gains.
/// The block length is normalized to one, so an energy in Joules and a power in
/// Watts over a full block share magnitudes.
struct SystemConfig {
    double source_power = 1.0;               // P0
    std::vector<double> interferer_powers;   // P_l
    double efficiency = 0.5;                 // eta
    int nakagami_m = 2;
    int relay_antennas = 4;                  // N
    double gain_sr = 1.0;                    // Omega_0
    std::vector<double> interferer_gains;    // Omega_l
    double gain_rd = 1.0;                    // Lambda_0
    double noise_relay = 1e-11;              // sigma_R^2
    double noise_dest = 1e-11;               // sigma_D^2
    double rate = 1.0;                       // bits/s/Hz

    /// Decoding threshold 2^(2R) - 1.
    double threshold() const { return std::exp2(2.0 * rate) - 1.0; }

    std::size_t num_interferers() const { return interferer_powers.size(); }

    /// Throws DomainError on a violated invariant. Powers may be zero (a silent
    /// transmitter); gains and noise must be strictly positive.
    void validate() const;
};

/// Linear source-relay-destination geometry with interferers at given distances
/// from the relay.
struct Topology {
    double d_sd = 20.0;
    double d_sr = 6.0;
    std::vector<double> d_ir{12.0, 13.0, 14.0};
    double pathloss_exponent = 2.0;
};

/// 1 / (1 + d^alpha).
double path_loss_gain(double distance, double alpha);

/// Fills the gains of `base` from the geometry. Throws GeometryError when the
/// relay is not strictly between source and destination, or when the interferer
/// distance list does not match the interferer power list.
SystemConfig config_from_topology(SystemConfig base, const Topology& topo);

}  // namespace atf
