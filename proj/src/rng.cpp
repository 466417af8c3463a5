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

#include "atf/rng.hpp"

#include <cmath>
#include <numbers>

#include "atf/errors.hpp"

namespace atf {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
    const std::uint64_t a = splitmix64(seed);
    const std::uint64_t b = splitmix64(stream ^ 0xD1B54A32D192ED03ULL);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(make_engine(seed, stream)) {}

double RngStream::uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

double sample_gamma(RngStream& rng, double shape, double mean) {
    if (!std::isfinite(shape) || !(shape > 0) || !std::isfinite(mean) || !(mean > 0))
        throw DomainError("sample_gamma: shape and mean must be > 0");
    return std::gamma_distribution<double>(shape, mean / shape)(rng.engine());
}

double sample_exponential(RngStream& rng, double mean) {
    if (!std::isfinite(mean) || !(mean > 0)) throw DomainError("sample_exponential: mean must be > 0");
    return std::exponential_distribution<double>(1.0 / mean)(rng.engine());
}

Eigen::VectorXcd sample_complex_gaussian_vector(RngStream& rng, int size, double variance) {
    if (size < 1) throw DomainError("sample_complex_gaussian_vector: size must be >= 1");
    if (!std::isfinite(variance) || !(variance > 0))
        throw DomainError("sample_complex_gaussian_vector: variance must be > 0");
    std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
    Eigen::VectorXcd v(size);
    for (int i = 0; i < size; ++i) {
        const double re = normal(rng.engine());
        const double im = normal(rng.engine());
        v(i) = {re, im};
    }
    return v;
}

Eigen::VectorXcd sample_nakagami_vector(RngStream& rng, int size, int m, double omega) {
    if (size < 1) throw DomainError("sample_nakagami_vector: size must be >= 1");
    if (m < 1) throw DomainError("sample_nakagami_vector: shape must be a positive integer");
    if (!std::isfinite(omega) || !(omega > 0)) throw DomainError("sample_nakagami_vector: omega must be > 0");
    std::gamma_distribution<double> power(static_cast<double>(m), omega / m);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    Eigen::VectorXcd v(size);
    for (int i = 0; i < size; ++i) {
        const double magnitude = std::sqrt(power(rng.engine()));
        v(i) = std::polar(magnitude, phase(rng.engine()));
    }
    return v;
}

}  // namespace atf
