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

#include "atf/errors.hpp"
#include "atf/markov.hpp"
#include "atf/scenario.hpp"

using namespace atf;

namespace {

SystemConfig reference(double ps_dbm = 30.0) {
    Scenario s;
    s.source_power_dbm = ps_dbm;
    return s.system_config();
}

}  // namespace

TEST_CASE("battery level grid") {
    const BatteryModel b{0.5, 20};
    CHECK(b.num_states() == 21);
    CHECK(b.level_energy(0) == 0.0);
    CHECK(b.level_energy(20) == 0.5);
    CHECK(b.level_energy(3) == doctest::Approx(0.075));
    CHECK_THROWS_AS((BatteryModel{0.5, 0}.validate()), DomainError);
    CHECK_THROWS_AS((BatteryModel{-1.0, 5}.validate()), DomainError);
}

TEST_CASE("harvest discretization rounds down strictly") {
    const BatteryModel b{1.0, 4};
    CHECK(discretize_harvest(0.0, b).index() == 0);
    CHECK(discretize_harvest(0.25, b).index() == 0);  // exactly on a level: strictly below
    CHECK(discretize_harvest(std::nextafter(0.25, 1.0), b).index() == 1);
    CHECK(discretize_harvest(0.74, b).index() == 2);
    CHECK(discretize_harvest(1.0, b).index() == 3);
    CHECK(discretize_harvest(7.0, b).index() == 4);
    const BatteryModel fine{0.5, 90};
    for (int k = 0; k < fine.levels; ++k) {
        CHECK(discretize_harvest(std::nextafter(fine.level_energy(k), 1.0), fine).index() == k);
        CHECK(discretize_harvest(std::nextafter(fine.level_energy(k + 1), 0.0), fine).index() == k);
    }
}

TEST_CASE("required energy rounds up") {
    const BatteryModel b{1.0, 4};
    CHECK(required_energy_level(0.0, b).index() == 0);
    CHECK(required_energy_level(0.5, b).index() == 1);  // P_R / 2 = 0.25 sits on level 1
    CHECK(required_energy_level(0.51, b).index() == 2);
    CHECK(required_energy_level(2.0, b).index() == 4);
    CHECK_FALSE(required_energy_level(2.01, b).feasible());
    CHECK(required_energy_level(2.01, b) == EnergyLevel::infeasible());
}

TEST_CASE("stationary law of small chains") {
    SUBCASE("two states") {
        TransitionMatrix z(2, 2);
        const double a = 0.3, b = 0.1;
        z << 1 - a, a, b, 1 - b;
        const auto pi = stationary_distribution(z);
        CHECK(pi(0) == doctest::Approx(b / (a + b)).epsilon(1e-14));
        CHECK(pi(1) == doctest::Approx(a / (a + b)).epsilon(1e-14));
    }
    SUBCASE("doubly stochastic gives the uniform law") {
        TransitionMatrix z(3, 3);
        z << 0.2, 0.5, 0.3, 0.5, 0.3, 0.2, 0.3, 0.2, 0.5;
        const auto pi = stationary_distribution(z);
        for (int i = 0; i < 3; ++i) CHECK(pi(i) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
    SUBCASE("reducible chain") {
        const TransitionMatrix z = TransitionMatrix::Identity(3, 3);
        CHECK_THROWS_AS(stationary_distribution(z), ReducibleChain);
    }
    SUBCASE("long double scalar") {
        Eigen::Matrix<long double, 2, 2> z;
        z << 0.9L, 0.1L, 0.4L, 0.6L;
        const auto pi = stationary_distribution(z);
        CHECK(static_cast<double>(pi(0)) == doctest::Approx(0.8).epsilon(1e-15));
    }
}

TEST_CASE("transition matrix of the reference configuration") {
    const auto in = make_model_inputs(reference());
    const BatteryModel b{0.5, 20};
    const auto z = build_transition_matrix(in, b);
    CHECK(z.rows() == 21);
    CHECK(max_row_sum_error(z) < 1e-9);
    CHECK(z.minCoeff() >= 0.0);
    CHECK(z.maxCoeff() <= 1.0);
    // Empty battery never discharges.
    CHECK(z(0, 0) == doctest::Approx(energy_cdf(b.level_energy(1), in.eh_dist)));
}

TEST_CASE("analytic pipeline against an independent implementation") {
    // Reference values from a scipy implementation of the same chain, with the
    // first-hop outage integrated by scipy.integrate.quad.
    const auto cfg = reference();
    const auto q20 = analytic_pipeline(cfg, {0.5, 20});
    CHECK(q20.throughput == doctest::Approx(0.422948517503978).epsilon(1e-9));
    CHECK(q20.outage == doctest::Approx(0.577051482496022).epsilon(1e-9));
    const auto q90 = analytic_pipeline(cfg, {0.5, 90});
    CHECK(q90.throughput == doctest::Approx(0.83354454501556).epsilon(1e-9));
    CHECK(q90.first_hop_outage == doctest::Approx(1.341963144e-6).epsilon(1e-8));
    CHECK(q90.throughput <= cfg.rate * 90.0 / 91.0 + 1e-12);

    Scenario quiet;
    quiet.source_power_dbm = 40.0;
    quiet.topology.d_ir.clear();
    CHECK(analytic_pipeline(quiet.system_config(), {0.5, 20}).throughput ==
          doctest::Approx(0.911309171513449).epsilon(1e-9));
}

TEST_CASE("outage and delivery are complementary") {
    const auto in = make_model_inputs(reference(25.0));
    for (int q : {1, 2, 5, 20, 50}) {
        const auto z = build_transition_matrix(in, {0.5, q});
        const auto pi = stationary_distribution(z);
        CHECK(stationary_residual(z, pi) < 1e-12);
        CHECK(outage_probability(pi, z) + delivery_probability(pi, z) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("a relay that never decodes never discharges") {
    auto cfg = reference();
    cfg.rate = 40.0;  // mu so large that the first hop is always in outage
    const auto in = make_model_inputs(cfg);
    CHECK(in.first_hop_outage == doctest::Approx(1.0));
    const auto z = build_transition_matrix(in, {0.5, 10});
    for (Eigen::Index i = 1; i < z.rows(); ++i)
        for (Eigen::Index j = 0; j < i; ++j) CHECK(z(i, j) == 0.0);
    CHECK(throughput(1.0, cfg.rate) == 0.0);
}

TEST_CASE("weak source and no interference") {
    auto cfg = reference();
    cfg.interferer_powers.clear();
    cfg.interferer_gains.clear();
    // With almost no harvest the battery is absorbed at level 0 and the
    // stationary system is too ill-conditioned to solve.
    cfg.source_power = 1e-12;
    CHECK_THROWS_AS(analytic_pipeline(cfg, {0.5, 10}), ReducibleChain);
    double previous = 1.0;
    for (double dbm : {20.0, 10.0, 0.0}) {
        cfg.source_power = dbm_to_watt(dbm);
        const auto rep = analytic_pipeline(cfg, {0.5, 10});
        CHECK(rep.throughput <= previous);
        previous = rep.throughput;
    }
    CHECK(previous < 1e-6);
}

TEST_CASE("corrupted transition case is caught with its row") {
    const auto in = make_model_inputs(reference(20.0));
    const BatteryModel b{0.5, 10};
    try {
        (void)testing::build_transition_matrix_with_fault(in, b, testing::TransitionFault::drop_discharge_from_full);
        FAIL("expected a TransitionConsistencyError");
    } catch (const TransitionConsistencyError& e) {
        CHECK(e.row() == 10);
        CHECK(e.row_sum() < 1.0);
    }
    CHECK_THROWS_AS(
        testing::build_transition_matrix_with_fault(in, b, testing::TransitionFault::drop_cci_branch_on_diagonal),
        TransitionConsistencyError);
}
