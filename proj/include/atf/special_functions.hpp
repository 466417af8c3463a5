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
#include <limits>

#include "atf/errors.hpp"

namespace atf {

namespace detail {

template <typename Scalar>
void check_gamma_args(Scalar shape, Scalar x) {
    if (!std::isfinite(shape) || !(shape > 0)) throw DomainError("incomplete gamma: shape must be finite and > 0");
    if (std::isnan(x) || x < 0) throw DomainError("incomplete gamma: x must be >= 0");
}

// x^a e^-x / Gamma(a), computed in log space.
template <typename Scalar>
Scalar gamma_prefactor(Scalar shape, Scalar x) {
    using std::exp;
    using std::lgamma;
    using std::log;
    return exp(shape * log(x) - x - lgamma(shape));
}

// Lower regularized P(a, x) by power series; converges quickly for x < a + 1.
template <typename Scalar>
Scalar gamma_p_series(Scalar shape, Scalar x) {
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    Scalar denom = shape;
    Scalar term = Scalar(1) / shape;
    Scalar sum = term;
    for (int n = 1; n < 100000; ++n) {
        denom += Scalar(1);
        term *= x / denom;
        sum += term;
        if (std::abs(term) < std::abs(sum) * eps) break;
    }
    return sum * gamma_prefactor(shape, x);
}

// Upper regularized Q(a, x) by modified Lentz continued fraction; for x >= a + 1.
template <typename Scalar>
Scalar gamma_q_continued_fraction(Scalar shape, Scalar x) {
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar tiny = std::numeric_limits<Scalar>::min() / eps;
    Scalar b = x + Scalar(1) - shape;
    Scalar c = Scalar(1) / tiny;
    Scalar d = Scalar(1) / b;
    Scalar h = d;
    for (int i = 1; i < 100000; ++i) {
        const Scalar an = -Scalar(i) * (Scalar(i) - shape);
        b += Scalar(2);
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = Scalar(1) / d;
        const Scalar delta = d * c;
        h *= delta;
        if (std::abs(delta - Scalar(1)) < eps) break;
    }
    return h * gamma_prefactor(shape, x);
}

}  // namespace detail

/// Regularized lower incomplete gamma function P(a, x) = gamma(a, x) / Gamma(a).
template <typename Scalar>
Scalar regularized_lower_gamma(Scalar shape, Scalar x) {
    detail::check_gamma_args(shape, x);
    if (x == 0) return Scalar(0);
    if (std::isinf(x)) return Scalar(1);
    if (x < shape + Scalar(1)) return detail::gamma_p_series(shape, x);
    return Scalar(1) - detail::gamma_q_continued_fraction(shape, x);
}

/// Regularized upper incomplete gamma function Q(a, x) = 1 - P(a, x), evaluated
/// without cancellation in the far tail.
template <typename Scalar>
Scalar regularized_upper_gamma(Scalar shape, Scalar x) {
    detail::check_gamma_args(shape, x);
    if (x == 0) return Scalar(1);
    if (std::isinf(x)) return Scalar(0);
    if (x < shape + Scalar(1)) return Scalar(1) - detail::gamma_p_series(shape, x);
    return detail::gamma_q_continued_fraction(shape, x);
}

}  // namespace atf
