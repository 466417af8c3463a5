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

#include "atf/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

#include "atf/errors.hpp"
#include "atf/quadrature.hpp"
#include "atf/rng.hpp"

namespace atf {

void GammaParams::validate() const {
    if (!std::isfinite(shape) || !(shape > 0)) throw DomainError("gamma shape must be finite and > 0");
    if (!std::isfinite(mean) || !(mean > 0)) throw DomainError("gamma mean must be finite and > 0");
}

double gamma_cdf(double x, const GammaParams& p) {
    p.validate();
    if (std::isnan(x)) throw DomainError("gamma_cdf: x is NaN");
    if (x <= 0) return 0.0;
    return regularized_lower_gamma(p.shape, p.shape * x / p.mean);
}

double energy_cdf(double x, const EnergyDistribution& dist) {
    if (const auto* g = std::get_if<GammaParams>(&dist)) return gamma_cdf(x, *g);
    return x > 0 ? 1.0 : 0.0;
}

double energy_mean(const EnergyDistribution& dist) {
    if (const auto* g = std::get_if<GammaParams>(&dist)) return g->mean;
    return 0.0;
}

GammaParams moment_match_gamma_sum(std::span<const GammaParams> summands) {
    if (summands.empty()) throw DomainError("moment_match_gamma_sum: no summands");
    double mean = 0.0;
    double variance = 0.0;
    for (const auto& s : summands) {
        s.validate();
        mean += s.mean;
        variance += s.variance();
    }
    if (summands.size() == 1) return summands.front();
    return {mean * mean / variance, mean};
}

void HypoExpParams::validate() const {
    if (means.empty()) throw DomainError("hypoexponential: no stages");
    for (double m : means)
        if (!std::isfinite(m) || !(m > 0)) throw DomainError("hypoexponential: stage mean must be > 0");
}

bool HypoExpParams::rates_distinct(double rel_gap) const {
    for (std::size_t i = 0; i < means.size(); ++i)
        for (std::size_t j = i + 1; j < means.size(); ++j)
            if (std::abs(means[i] - means[j]) < rel_gap * std::max(means[i], means[j])) return false;
    return true;
}

namespace {

// c_l / theta_l such that f_Y(y) = sum_l coef_l exp(-y / theta_l).
std::vector<double> partial_fraction_coefficients(const HypoExpParams& p) {
    p.validate();
    if (!p.rates_distinct()) throw DegenerateRates("hypoexponential stage means are not pairwise distinct");
    const auto& th = p.means;
    std::vector<double> coef(th.size());
    for (std::size_t l = 0; l < th.size(); ++l) {
        double c = 1.0 / th[l];
        for (std::size_t j = 0; j < th.size(); ++j)
            if (j != l) c *= th[l] / (th[l] - th[j]);
        coef[l] = c;
    }
    return coef;
}

}  // namespace

double hypoexp_pdf(double y, const HypoExpParams& p) {
    if (std::isnan(y)) throw DomainError("hypoexp_pdf: y is NaN");
    const auto coef = partial_fraction_coefficients(p);
    if (y < 0) return 0.0;
    if (p.means.size() >= 2 && y == 0) return 0.0;
    double f = 0.0;
    for (std::size_t l = 0; l < coef.size(); ++l) f += coef[l] * std::exp(-y / p.means[l]);
    return std::max(f, 0.0);
}

double hypoexp_pdf_phase_type(double y, const HypoExpParams& p) {
    p.validate();
    if (std::isnan(y)) throw DomainError("hypoexp_pdf_phase_type: y is NaN");
    if (y < 0) return 0.0;
    const auto n = static_cast<Eigen::Index>(p.means.size());
    Eigen::MatrixXd generator = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double rate = 1.0 / p.means[static_cast<std::size_t>(i)];
        generator(i, i) = -rate;
        if (i + 1 < n) generator(i, i + 1) = rate;
    }
    const Eigen::MatrixXd transient = (generator * y).exp();
    // Start in stage 0; absorb from the last stage.
    const double exit_rate = 1.0 / p.means.back();
    return std::max(transient(0, n - 1) * exit_rate, 0.0);
}

HypoExpParams interference_params(const SystemConfig& cfg) {
    HypoExpParams p;
    for (std::size_t l = 0; l < cfg.num_interferers(); ++l) {
        const double mean = cfg.interferer_powers[l] * cfg.interferer_gains[l];
        if (mean > 0) p.means.push_back(mean);
    }
    return p;
}

namespace {

double outage_closed(const SystemConfig& cfg) {
    const int k = cfg.nakagami_m * cfg.relay_antennas;
    const double a = cfg.nakagami_m * cfg.threshold() / (cfg.source_power * cfg.gain_sr);
    const double noise = cfg.noise_relay;
    const auto interference = interference_params(cfg);
    if (interference.means.empty()) return regularized_lower_gamma(double(k), a * noise);

    // Pr{success} = sum_l coef_l / b_l sum_{n<k} sum_{t<=n} Pois(n-t; a s) (a/b_l)^t,
    // with b_l = a + 1/theta_l and s the relay noise power.
    const auto coef = partial_fraction_coefficients(interference);
    const double noise_load = a * noise;
    std::vector<double> poisson(static_cast<std::size_t>(k), 0.0);
    if (noise_load == 0.0) {
        poisson[0] = 1.0;
    } else {
        for (int r = 0; r < k; ++r)
            poisson[r] = std::exp(r * std::log(noise_load) - noise_load - std::lgamma(r + 1.0));
    }

    double success = 0.0;
    for (std::size_t l = 0; l < coef.size(); ++l) {
        const double b = a + 1.0 / interference.means[l];
        const double ratio = a / b;
        double inner = 0.0;
        for (int n = 0; n < k; ++n) {
            double ratio_pow = 1.0;
            for (int t = 0; t <= n; ++t) {
                inner += poisson[n - t] * ratio_pow;
                ratio_pow *= ratio;
            }
        }
        success += coef[l] * inner / b;
    }
    return std::clamp(1.0 - success, 0.0, 1.0);
}

double outage_quadrature(const SystemConfig& cfg) {
    const double k = cfg.nakagami_m * cfg.relay_antennas;
    const double a = cfg.nakagami_m * cfg.threshold() / (cfg.source_power * cfg.gain_sr);
    const double noise = cfg.noise_relay;
    const auto interference = interference_params(cfg);
    if (interference.means.empty()) return regularized_lower_gamma(k, a * noise);

    const double scale = std::accumulate(interference.means.begin(), interference.means.end(), 0.0);
    auto integrand = [&](double y) {
        const double density = hypoexp_pdf_phase_type(y, interference);
        if (density == 0.0) return 0.0;
        return regularized_lower_gamma(k, a * (y + noise)) * density;
    };
    const auto result = integrate_half_line(integrand, scale, 1e-13, 1e-12, 20000);
    return std::clamp(result.value, 0.0, 1.0);
}

double outage_montecarlo(const SystemConfig& cfg, const MonteCarloOptions& mc) {
    if (mc.samples == 0) throw DomainError("first_hop_outage_prob: zero Monte Carlo samples");
    RngStream rng(mc.seed, mc.stream);
    const double k = cfg.nakagami_m * cfg.relay_antennas;
    const double signal_mean = cfg.source_power * cfg.relay_antennas * cfg.gain_sr;
    const auto interference = interference_params(cfg);
    const double mu = cfg.threshold();
    std::uint64_t failures = 0;
    for (std::uint64_t s = 0; s < mc.samples; ++s) {
        const double signal = sample_gamma(rng, k, signal_mean);
        double y = cfg.noise_relay;
        for (double m : interference.means) y += sample_exponential(rng, m);
        if (signal < mu * y) ++failures;
    }
    return static_cast<double>(failures) / static_cast<double>(mc.samples);
}

}  // namespace

double first_hop_outage_prob(const SystemConfig& cfg, OutageMethod method, const MonteCarloOptions& mc) {
    cfg.validate();
    if (cfg.source_power == 0.0) return 1.0;
    switch (method) {
        case OutageMethod::closed: return outage_closed(cfg);
        case OutageMethod::quadrature: return outage_quadrature(cfg);
        case OutageMethod::montecarlo: return outage_montecarlo(cfg, mc);
    }
    throw DomainError("first_hop_outage_prob: unknown method");
}

double first_hop_outage_prob(const SystemConfig& cfg) {
    const auto interference = interference_params(cfg);
    const bool closed_ok = interference.means.empty() || interference.rates_distinct();
    return first_hop_outage_prob(cfg, closed_ok ? OutageMethod::closed : OutageMethod::quadrature);
}

}  // namespace atf
