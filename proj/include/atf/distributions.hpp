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

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "atf/config.hpp"
#include "atf/special_functions.hpp"

namespace atf {

/// Gamma law parameterized by shape m and mean Omega (scale Omega / m).
struct GammaParams {
    double shape;
    double mean;

    double scale() const { return mean / shape; }
    double variance() const { return mean * mean / shape; }
    /// Throws DomainError unless shape and mean are finite and positive.
    void validate() const;
};

/// Law of a quantity that is identically zero. Its CDF is the unit step at 0.
struct ZeroDistribution {};

/// Harvested-energy law: a fitted gamma, or zero when no energy source is present.
using EnergyDistribution = std::variant<GammaParams, ZeroDistribution>;

/// Gamma CDF: P(shape, shape * x / mean).
double gamma_cdf(double x, const GammaParams& p);

/// gamma_cdf for a fitted law; for ZeroDistribution, 1 when x > 0 and 0 otherwise.
double energy_cdf(double x, const EnergyDistribution& dist);

/// Mean of an EnergyDistribution (0 for ZeroDistribution).
double energy_mean(const EnergyDistribution& dist);

/// Single-gamma fit of a sum of independent gamma variates that matches the
/// first two moments exactly: mean = sum a_j, shape = mean^2 / sum(a_j^2 / m_j).
GammaParams moment_match_gamma_sum(std::span<const GammaParams> summands);

/// Sum of independent exponentials; `means` holds the stage means.
struct HypoExpParams {
    std::vector<double> means;

    void validate() const;
    /// True when every pair of means differs by at least `rel_gap` relative to the larger.
    bool rates_distinct(double rel_gap = 1e-9) const;
};

/// Partial-fraction hypoexponential density. Throws DegenerateRates when two
/// stage means coincide within relative 1e-9.
double hypoexp_pdf(double y, const HypoExpParams& p);

/// Hypoexponential density valid for any stage means, including repeated ones,
/// via the phase-type form alpha * exp(S y) * s0.
double hypoexp_pdf_phase_type(double y, const HypoExpParams& p);

/// Aggregate post-combining interference law at the relay: stage means P_l * Omega_l.
HypoExpParams interference_params(const SystemConfig& cfg);

enum class OutageMethod { closed, quadrature, montecarlo };

struct MonteCarloOptions {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
};

/// Probability that the relay fails to decode: Pr{P0 |h0|^2 / (Y + sigma_R^2) < mu},
/// |h0|^2 ~ Gamma(mN, mean N Omega_0), Y hypoexponential with means P_l Omega_l.
///
/// `closed` is a finite partial-fraction sum and throws DegenerateRates for
/// repeated interference means; `quadrature` integrates the conditional gamma
/// CDF against the phase-type density of Y and accepts any input; `montecarlo`
/// samples both variates.
double first_hop_outage_prob(const SystemConfig& cfg, OutageMethod method,
                             const MonteCarloOptions& mc = {});

/// `closed` when applicable, `quadrature` otherwise.
double first_hop_outage_prob(const SystemConfig& cfg);

}  // namespace atf
