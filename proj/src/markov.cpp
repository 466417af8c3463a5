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

#include "atf/markov.hpp"

#include <algorithm>
#include <cmath>

namespace atf {

void BatteryModel::validate() const {
    if (!std::isfinite(capacity) || !(capacity > 0)) throw DomainError("battery capacity must be > 0");
    if (levels < 1) throw DomainError("battery must have at least one nonempty level");
}

EnergyLevel discretize_harvest(double x, const BatteryModel& b) {
    b.validate();
    if (std::isnan(x)) throw DomainError("discretize_harvest: x is NaN");
    if (x > b.capacity) return EnergyLevel(b.levels);
    // Initial guess from the ratio, then fixed up against the level grid itself so
    // the strict inequality holds exactly for the computed level energies.
    int i = static_cast<int>(std::ceil(x / b.capacity * b.levels)) - 1;
    i = std::clamp(i, 0, b.levels);
    while (i > 0 && !(b.level_energy(i) < x)) --i;
    while (i < b.levels && b.level_energy(i + 1) < x) ++i;
    return EnergyLevel(i);
}

EnergyLevel required_energy_level(double p_r, const BatteryModel& b) {
    b.validate();
    if (std::isnan(p_r) || p_r < 0) throw DomainError("required_energy_level: power must be >= 0");
    const double need = 0.5 * p_r;
    if (need > b.capacity) return EnergyLevel::infeasible();
    int j = static_cast<int>(std::floor(need / b.capacity * b.levels));
    j = std::clamp(j, 0, b.levels);
    while (j < b.levels && b.level_energy(j) < need) ++j;
    while (j > 0 && b.level_energy(j - 1) >= need) --j;
    return EnergyLevel(j);
}

ModelInputs make_model_inputs(const SystemConfig& cfg, OutageMethod method) {
    cfg.validate();
    ModelInputs in;
    in.eh_dist = eh_energy_gamma_params(cfg);
    in.cci_dist = cci_energy_gamma_params(cfg);
    in.power_cdf = [cfg](double x) { return cdf_required_power(x, cfg); };
    in.first_hop_outage = first_hop_outage_prob(cfg, method);
    return in;
}

ModelInputs make_model_inputs(const SystemConfig& cfg) {
    cfg.validate();
    ModelInputs in;
    in.eh_dist = eh_energy_gamma_params(cfg);
    in.cci_dist = cci_energy_gamma_params(cfg);
    in.power_cdf = [cfg](double x) { return cdf_required_power(x, cfg); };
    in.first_hop_outage = first_hop_outage_prob(cfg);
    return in;
}

namespace {

using testing::TransitionFault;

TransitionMatrix assemble(const ModelInputs& in, const BatteryModel& b, TransitionFault fault) {
    b.validate();
    if (!(in.first_hop_outage >= 0 && in.first_hop_outage <= 1))
        throw DomainError("first-hop outage must lie in [0, 1]");
    const int q = b.levels;
    const double outage = in.first_hop_outage;
    auto eps = [&](int i) { return b.level_energy(i); };

    // Harvest CDFs on the level grid, F(eps_k) for k = 0..Q, with eps_Q = C exactly.
    Eigen::VectorXd eh(q + 1), cci(q + 1), power(q + 1);
    for (int k = 0; k <= q; ++k) {
        const double e = eps(k);
        eh(k) = energy_cdf(e, in.eh_dist);
        cci(k) = energy_cdf(e, in.cci_dist);
        // Pr{P_R / 2 <= eps_k}: the stored energy eps_k supports a forward.
        power(k) = k == 0 ? 0.0 : in.power_cdf(2.0 * e);
    }
    // The CDFs are monotone; enforce it on the grid so that rounding in the last
    // ulp cannot produce a negative difference.
    for (int k = 1; k <= q; ++k) {
        eh(k) = std::max(eh(k), eh(k - 1));
        cci(k) = std::max(cci(k), cci(k - 1));
        power(k) = std::max(power(k), power(k - 1));
    }

    TransitionMatrix z = TransitionMatrix::Zero(q + 1, q + 1);

    // Empty battery: the relay can only harvest.
    for (int j = 0; j < q; ++j) z(0, j) = eh(j + 1) - eh(j);
    z(0, q) = 1.0 - eh(q);

    for (int i = 1; i <= q; ++i) {
        const double can = power(i);     // stored energy supports a forward
        const double cannot = 1.0 - can; // harvest-only block
        const double cci_weight = fault == TransitionFault::drop_cci_branch_on_diagonal && i < q ? 0.0 : 1.0;
        if (i < q) {
            z(i, i) = cannot * eh(1) + cci_weight * can * cci(1) * outage;
            for (int j = i + 1; j < q; ++j) {
                const int gained = j - i;
                z(i, j) = cannot * (eh(gained + 1) - eh(gained)) + outage * can * (cci(gained + 1) - cci(gained));
            }
            z(i, q) = cannot * (1.0 - eh(q - i)) + outage * can * (1.0 - cci(q - i));
        } else {
            z(q, q) = cannot + can * outage;
        }
        if (fault == TransitionFault::drop_discharge_from_full && i == q) continue;
        // Discharge by exactly (i - j) levels: (i-j-1) C/Q < P_R/2 <= (i-j) C/Q.
        for (int j = 0; j < i; ++j) z(i, j) = (1.0 - outage) * (power(i - j) - power(i - j - 1));
    }

    for (Eigen::Index r = 0; r < z.rows(); ++r) {
        const double sum = z.row(r).sum();
        if (!(std::abs(sum - 1.0) <= 1e-6)) throw TransitionConsistencyError(static_cast<std::size_t>(r), sum);
    }
    return z;
}

}  // namespace

TransitionMatrix build_transition_matrix(const ModelInputs& inputs, const BatteryModel& b) {
    return assemble(inputs, b, TransitionFault::none);
}

double throughput(double p_out, double rate) {
    if (!(p_out >= 0 && p_out <= 1)) throw DomainError("throughput: outage must lie in [0, 1]");
    return rate * (1.0 - p_out);
}

AnalyticReport analytic_pipeline(const SystemConfig& cfg, const BatteryModel& b) {
    AnalyticReport r;
    const auto inputs = make_model_inputs(cfg);
    r.z = build_transition_matrix(inputs, b);
    r.pi = stationary_distribution(r.z);
    r.outage = std::clamp(outage_probability(r.pi, r.z), 0.0, 1.0);
    r.throughput = throughput(r.outage, cfg.rate);
    r.first_hop_outage = inputs.first_hop_outage;
    r.eh_dist = inputs.eh_dist;
    r.cci_dist = inputs.cci_dist;
    return r;
}

namespace testing {

TransitionMatrix build_transition_matrix_with_fault(const ModelInputs& inputs, const BatteryModel& b,
                                                    TransitionFault fault) {
    return assemble(inputs, b, fault);
}

}  // namespace testing

}  // namespace atf
