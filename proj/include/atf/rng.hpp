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

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace atf {

/// Seeded pseudo-random stream. Identical (seed, stream) pairs reproduce identical
/// sequences; distinct stream ids give independent sequences. Single owner.
class RngStream {
  public:
    using Engine = std::mt19937_64;

    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }
    Engine& engine() { return engine_; }

    double uniform();  // [0, 1)

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    Engine engine_;
};

/// SplitMix64 finalizer; used to derive per-point seeds.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

double sample_gamma(RngStream& rng, double shape, double mean);
double sample_exponential(RngStream& rng, double mean);

/// i.i.d. circularly symmetric complex Gaussian entries with variance `variance`.
Eigen::VectorXcd sample_complex_gaussian_vector(RngStream& rng, int size, double variance);

/// i.i.d. Nakagami-m magnitudes with average power `omega` and uniform phase.
Eigen::VectorXcd sample_nakagami_vector(RngStream& rng, int size, int m, double omega);

}  // namespace atf
