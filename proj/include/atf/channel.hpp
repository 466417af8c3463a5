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

#include <vector>

#include <Eigen/Dense>

#include "atf/config.hpp"
#include "atf/distributions.hpp"
#include "atf/rng.hpp"

namespace atf {

/// Squared norms that every per-block formula depends on. Produced either from a
/// full ChannelDraw or sampled directly from their marginal laws.
struct ChannelGains {
    double h0 = 0.0;                // |h0|^2
    double g0 = 0.0;                // |g0|^2
    std::vector<double> hl;         // |h_l|^2
    std::vector<double> vl;         // |h0^H h_l|^2 / |h0|^2
};

/// One block-fading realization of every channel vector.
struct ChannelDraw {
    Eigen::VectorXcd h0;               // source -> relay
    Eigen::VectorXcd g0;               // relay -> destination
    std::vector<Eigen::VectorXcd> hl;  // interferer l -> relay

    /// Norms and MRC projections. Throws DegenerateChannel when h0 is zero.
    ChannelGains gains() const;
};

/// Full vector draw: Nakagami-m h0 with uniform phases, CSCG g0 and h_l.
ChannelDraw sample_channel(RngStream& rng, const SystemConfig& cfg);

/// Marginal draw with the independence structure the analysis assumes:
/// |h0|^2 ~ Gamma(mN, N Omega_0), |g0|^2 ~ Gamma(N, N Lambda_0),
/// |h_l|^2 ~ Gamma(N, N Omega_l), |v_l|^2 ~ Exp(Omega_l), all independent.
ChannelGains sample_channel_gains(RngStream& rng, const SystemConfig& cfg);

/// Energy harvested over a block in which the relay only harvests:
/// (eta/2) P0 |h0|^2 + eta sum P_l |h_l|^2.
double harvested_energy_eh(const ChannelGains& g, const SystemConfig& cfg);
double harvested_energy_eh(const ChannelDraw& draw, const SystemConfig& cfg);

/// Energy harvested from interference alone during the second half-block:
/// (eta/2) sum P_l |h_l|^2.
double harvested_energy_cci_only(const ChannelGains& g, const SystemConfig& cfg);
double harvested_energy_cci_only(const ChannelDraw& draw, const SystemConfig& cfg);

/// Post-MRC SINR at the relay, P0 |h0|^2 / (sum P_l |v_l|^2 + sigma_R^2).
double mrc_sinr(const ChannelGains& g, const SystemConfig& cfg);
double mrc_sinr(const ChannelDraw& draw, const SystemConfig& cfg);

/// Relay transmit power that makes the MRT destination SNR equal the threshold.
double required_relay_power(const ChannelGains& g, const SystemConfig& cfg);
double required_relay_power(const ChannelDraw& draw, const SystemConfig& cfg);

/// MRT destination SNR P_R |g0|^2 / sigma_D^2.
double destination_snr(double relay_power, const ChannelGains& g, const SystemConfig& cfg);

/// CDF of the required relay power: sum_{i<N} z^i/i! e^{-z}, z = mu sigma_D^2 / (Lambda_0 x).
/// Zero for x <= 0.
double cdf_required_power(double x, const SystemConfig& cfg);

/// Single-gamma law of the harvest-only energy. Exact (no fit) when there is no
/// interference. ZeroDistribution when every power is zero.
EnergyDistribution eh_energy_gamma_params(const SystemConfig& cfg);

/// Single-gamma law of the interference-only energy; ZeroDistribution when L = 0.
EnergyDistribution cci_energy_gamma_params(const SystemConfig& cfg);

}  // namespace atf
