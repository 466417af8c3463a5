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

#include "atf/channel.hpp"

#include <algorithm>
#include <cmath>

#include "atf/errors.hpp"

namespace atf {

void SystemConfig::validate() const {
    auto nonneg = [](double v) { return std::isfinite(v) && v >= 0; };
    auto positive = [](double v) { return std::isfinite(v) && v > 0; };
    if (!nonneg(source_power)) throw DomainError("source power must be >= 0");
    if (!(efficiency > 0 && efficiency <= 1)) throw DomainError("efficiency must lie in (0, 1]");
    if (nakagami_m < 1) throw DomainError("Nakagami shape must be a positive integer");
    if (relay_antennas < 1) throw DomainError("relay antenna count must be >= 1");
    if (!positive(gain_sr) || !positive(gain_rd)) throw DomainError("link gains must be > 0");
    if (!positive(noise_relay) || !positive(noise_dest)) throw DomainError("noise powers must be > 0");
    if (!nonneg(rate)) throw DomainError("rate must be >= 0");
    if (interferer_powers.size() != interferer_gains.size())
        throw DomainError("interferer power and gain lists differ in length");
    for (double p : interferer_powers)
        if (!nonneg(p)) throw DomainError("interferer powers must be >= 0");
    for (double g : interferer_gains)
        if (!positive(g)) throw DomainError("interferer gains must be > 0");
}

double path_loss_gain(double distance, double alpha) {
    if (!(distance >= 0)) throw DomainError("distance must be >= 0");
    return 1.0 / (1.0 + std::pow(distance, alpha));
}

SystemConfig config_from_topology(SystemConfig base, const Topology& topo) {
    if (!(topo.d_sr > 0) || !(topo.d_sd > topo.d_sr))
        throw GeometryError("relay must lie strictly between source and destination");
    if (!(topo.pathloss_exponent >= 2 && topo.pathloss_exponent <= 5))
        throw GeometryError("path-loss exponent must lie in [2, 5]");
    if (topo.d_ir.size() != base.interferer_powers.size())
        throw GeometryError("interferer distance list does not match interferer power list");
    base.gain_sr = path_loss_gain(topo.d_sr, topo.pathloss_exponent);
    base.gain_rd = path_loss_gain(topo.d_sd - topo.d_sr, topo.pathloss_exponent);
    base.interferer_gains.clear();
    for (double d : topo.d_ir) {
        if (!(d > 0)) throw GeometryError("interferer distances must be > 0");
        base.interferer_gains.push_back(path_loss_gain(d, topo.pathloss_exponent));
    }
    return base;
}

ChannelGains ChannelDraw::gains() const {
    ChannelGains g;
    g.h0 = h0.squaredNorm();
    if (!(g.h0 > 0)) throw DegenerateChannel("source-relay channel has zero norm");
    g.g0 = g0.squaredNorm();
    const double h0_norm = std::sqrt(g.h0);
    g.hl.reserve(hl.size());
    g.vl.reserve(hl.size());
    for (const auto& h : hl) {
        g.hl.push_back(h.squaredNorm());
        g.vl.push_back(std::norm(h0.dot(h)) / (h0_norm * h0_norm));
    }
    return g;
}

ChannelDraw sample_channel(RngStream& rng, const SystemConfig& cfg) {
    const int n = cfg.relay_antennas;
    ChannelDraw d;
    d.h0 = sample_nakagami_vector(rng, n, cfg.nakagami_m, cfg.gain_sr);
    d.g0 = sample_complex_gaussian_vector(rng, n, cfg.gain_rd);
    d.hl.reserve(cfg.num_interferers());
    for (double omega : cfg.interferer_gains) d.hl.push_back(sample_complex_gaussian_vector(rng, n, omega));
    return d;
}

ChannelGains sample_channel_gains(RngStream& rng, const SystemConfig& cfg) {
    const double n = cfg.relay_antennas;
    ChannelGains g;
    g.h0 = sample_gamma(rng, cfg.nakagami_m * n, n * cfg.gain_sr);
    g.g0 = sample_gamma(rng, n, n * cfg.gain_rd);
    g.hl.reserve(cfg.num_interferers());
    g.vl.reserve(cfg.num_interferers());
    for (double omega : cfg.interferer_gains) {
        g.hl.push_back(sample_gamma(rng, n, n * omega));
        g.vl.push_back(sample_exponential(rng, omega));
    }
    return g;
}

namespace {

double interference_energy(const std::vector<double>& norms, const SystemConfig& cfg) {
    double sum = 0.0;
    for (std::size_t l = 0; l < norms.size(); ++l) sum += cfg.interferer_powers[l] * norms[l];
    return sum;
}

}  // namespace

double harvested_energy_eh(const ChannelGains& g, const SystemConfig& cfg) {
    return 0.5 * cfg.efficiency * cfg.source_power * g.h0 + cfg.efficiency * interference_energy(g.hl, cfg);
}

double harvested_energy_eh(const ChannelDraw& draw, const SystemConfig& cfg) {
    double cci = 0.0;
    for (std::size_t l = 0; l < draw.hl.size(); ++l) cci += cfg.interferer_powers[l] * draw.hl[l].squaredNorm();
    return 0.5 * cfg.efficiency * cfg.source_power * draw.h0.squaredNorm() + cfg.efficiency * cci;
}

double harvested_energy_cci_only(const ChannelGains& g, const SystemConfig& cfg) {
    return 0.5 * cfg.efficiency * interference_energy(g.hl, cfg);
}

double harvested_energy_cci_only(const ChannelDraw& draw, const SystemConfig& cfg) {
    double cci = 0.0;
    for (std::size_t l = 0; l < draw.hl.size(); ++l) cci += cfg.interferer_powers[l] * draw.hl[l].squaredNorm();
    return 0.5 * cfg.efficiency * cci;
}

double mrc_sinr(const ChannelGains& g, const SystemConfig& cfg) {
    if (!(g.h0 > 0)) throw DegenerateChannel("source-relay channel has zero norm");
    return cfg.source_power * g.h0 / (interference_energy(g.vl, cfg) + cfg.noise_relay);
}

double mrc_sinr(const ChannelDraw& draw, const SystemConfig& cfg) { return mrc_sinr(draw.gains(), cfg); }

double required_relay_power(const ChannelGains& g, const SystemConfig& cfg) {
    if (!(g.g0 > 0)) throw DegenerateChannel("relay-destination channel has zero norm");
    return cfg.threshold() * cfg.noise_dest / g.g0;
}

double required_relay_power(const ChannelDraw& draw, const SystemConfig& cfg) {
    const double g0 = draw.g0.squaredNorm();
    if (!(g0 > 0)) throw DegenerateChannel("relay-destination channel has zero norm");
    return cfg.threshold() * cfg.noise_dest / g0;
}

double destination_snr(double relay_power, const ChannelGains& g, const SystemConfig& cfg) {
    return relay_power * g.g0 / cfg.noise_dest;
}

double cdf_required_power(double x, const SystemConfig& cfg) {
    if (std::isnan(x)) throw DomainError("cdf_required_power: x is NaN");
    if (x <= 0) return 0.0;
    const double z = cfg.threshold() * cfg.noise_dest / (cfg.gain_rd * x);
    if (z == 0.0) return 1.0;
    // Poisson terms in log space so large z underflows cleanly to zero.
    double sum = 0.0;
    for (int i = 0; i < cfg.relay_antennas; ++i) sum += std::exp(i * std::log(z) - z - std::lgamma(i + 1.0));
    return std::clamp(sum, 0.0, 1.0);
}

EnergyDistribution eh_energy_gamma_params(const SystemConfig& cfg) {
    cfg.validate();
    const double n = cfg.relay_antennas;
    const double eta = cfg.efficiency;
    std::vector<GammaParams> summands;
    if (cfg.source_power > 0) summands.push_back({cfg.nakagami_m * n, 0.5 * eta * cfg.source_power * n * cfg.gain_sr});
    for (std::size_t l = 0; l < cfg.num_interferers(); ++l)
        if (cfg.interferer_powers[l] > 0)
            summands.push_back({n, eta * cfg.interferer_powers[l] * n * cfg.interferer_gains[l]});
    if (summands.empty()) return ZeroDistribution{};
    return moment_match_gamma_sum(summands);
}

EnergyDistribution cci_energy_gamma_params(const SystemConfig& cfg) {
    cfg.validate();
    const double n = cfg.relay_antennas;
    std::vector<GammaParams> summands;
    for (std::size_t l = 0; l < cfg.num_interferers(); ++l)
        if (cfg.interferer_powers[l] > 0)
            summands.push_back({n, 0.5 * cfg.efficiency * cfg.interferer_powers[l] * n * cfg.interferer_gains[l]});
    if (summands.empty()) return ZeroDistribution{};
    return moment_match_gamma_sum(summands);
}

}  // namespace atf
