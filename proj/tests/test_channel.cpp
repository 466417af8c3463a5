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
#include <variant>

#include "atf/channel.hpp"
#include "atf/errors.hpp"
#include "atf/scenario.hpp"

using namespace atf;

namespace {

SystemConfig reference() { return Scenario{}.system_config(); }

}  // namespace

TEST_CASE("unit conversions") {
    CHECK(dbm_to_watt(30.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dbm_to_watt(-80.0) == doctest::Approx(1e-11).epsilon(1e-15));
    CHECK(watt_to_dbm(0.1) == doctest::Approx(20.0).epsilon(1e-15));
    for (double dbm = -100.0; dbm <= 60.0; dbm += 7.3)
        CHECK(watt_to_dbm(dbm_to_watt(dbm)) == doctest::Approx(dbm).epsilon(1e-12));
}

TEST_CASE("reference configuration") {
    const auto cfg = reference();
    CHECK(cfg.source_power == doctest::Approx(1.0));
    REQUIRE(cfg.num_interferers() == 3);
    CHECK(cfg.interferer_powers[0] == doctest::Approx(0.1));
    CHECK(cfg.gain_sr == doctest::Approx(1.0 / 37.0));
    CHECK(cfg.gain_rd == doctest::Approx(1.0 / 197.0));
    CHECK(cfg.interferer_gains[2] == doctest::Approx(1.0 / 197.0));
    CHECK(cfg.threshold() == 3.0);
    CHECK(cfg.relay_antennas == 4);
    CHECK(cfg.nakagami_m == 2);
    CHECK(cfg.efficiency == 0.5);
}

TEST_CASE("geometry validation") {
    SystemConfig base;
    Topology t;
    base.interferer_powers.assign(3, 0.1);
    t.d_sr = 25.0;
    CHECK_THROWS_AS(config_from_topology(base, t), GeometryError);
    t = Topology{};
    t.pathloss_exponent = 1.5;
    CHECK_THROWS_AS(config_from_topology(base, t), GeometryError);
    t = Topology{};
    t.d_ir = {12.0};
    CHECK_THROWS_AS(config_from_topology(base, t), GeometryError);
}

TEST_CASE("required relay power cdf") {
    // Reference values: scipy.stats.gamma(N, scale=Lambda_0).sf(mu sigma_D^2 / x).
    const auto cfg = reference();
    CHECK(cdf_required_power(5e-10, cfg) == doctest::Approx(0.0026327680883257536).epsilon(1e-12));
    CHECK(cdf_required_power(1e-9, cfg) == doctest::Approx(0.15941754060151592).epsilon(1e-12));
    CHECK(cdf_required_power(2e-9, cfg) == doctest::Approx(0.6573126274479224).epsilon(1e-12));
    CHECK(cdf_required_power(5e-9, cfg) == doctest::Approx(0.96777135884763688).epsilon(1e-12));
    CHECK(cdf_required_power(0.0, cfg) == 0.0);
    CHECK(cdf_required_power(-1.0, cfg) == 0.0);
    CHECK(cdf_required_power(1e300, cfg) == doctest::Approx(1.0));
}

TEST_CASE("per-block energy and power identities") {
    const auto cfg = reference();
    ChannelGains g;
    g.h0 = 2.0;
    g.g0 = 0.5;
    g.hl = {1.0, 0.5, 0.25};
    g.vl = {0.5, 0.1, 0.2};
    const double cci = cfg.efficiency * 0.1 * (1.0 + 0.5 + 0.25);
    CHECK(harvested_energy_eh(g, cfg) == doctest::Approx(0.5 * cfg.efficiency * 2.0 + cci));
    CHECK(harvested_energy_cci_only(g, cfg) == doctest::Approx(0.5 * cci));
    CHECK(mrc_sinr(g, cfg) == doctest::Approx(2.0 / (0.1 * 0.8 + cfg.noise_relay)));
    const double pr = required_relay_power(g, cfg);
    CHECK(pr == doctest::Approx(3.0 * cfg.noise_dest / 0.5));
    CHECK(destination_snr(pr, g, cfg) == doctest::Approx(cfg.threshold()).epsilon(1e-14));
}

TEST_CASE("channel draws") {
    const auto cfg = reference();
    RngStream rng(5, 0);
    const auto d = sample_channel(rng, cfg);
    CHECK(d.h0.size() == cfg.relay_antennas);
    CHECK(d.hl.size() == 3);
    const auto g = d.gains();
    const double v0 = std::norm(d.h0.dot(d.hl[0])) / d.h0.squaredNorm();
    CHECK(g.vl[0] == doctest::Approx(v0));
    CHECK(g.vl[0] <= g.hl[0] * (1 + 1e-12));  // Cauchy-Schwarz

    ChannelDraw zero = d;
    zero.h0.setZero();
    CHECK_THROWS_AS(zero.gains(), DegenerateChannel);

    RngStream a(11, 2), b(11, 2);
    CHECK(sample_channel(a, cfg).gains().h0 == sample_channel(b, cfg).gains().h0);
}

TEST_CASE("fitted energy laws") {
    const auto cfg = reference();
    const auto eh = std::get<GammaParams>(eh_energy_gamma_params(cfg));
    const auto cci = std::get<GammaParams>(cci_energy_gamma_params(cfg));
    double cci_mean = 0.0;
    for (std::size_t l = 0; l < 3; ++l) cci_mean += cfg.interferer_powers[l] * cfg.interferer_gains[l];
    cci_mean *= cfg.efficiency * cfg.relay_antennas;
    CHECK(eh.mean == doctest::Approx(0.5 * cfg.efficiency * cfg.relay_antennas * cfg.gain_sr + cci_mean));
    CHECK(cci.mean == doctest::Approx(0.5 * cci_mean));

    auto quiet = cfg;
    quiet.interferer_powers.assign(3, 0.0);
    CHECK(std::holds_alternative<ZeroDistribution>(cci_energy_gamma_params(quiet)));
    const auto only_source = std::get<GammaParams>(eh_energy_gamma_params(quiet));
    CHECK(only_source.shape == doctest::Approx(cfg.nakagami_m * cfg.relay_antennas));
}
