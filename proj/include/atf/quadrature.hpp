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

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace atf {

template <typename Scalar>
struct QuadratureResult {
    Scalar value;
    Scalar error;
    int intervals;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename Scalar>
struct Segment {
    Scalar lo, hi, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

template <typename Scalar, typename F>
Segment<Scalar> kronrod15(F& f, Scalar lo, Scalar hi) {
    const Scalar center = Scalar(0.5) * (lo + hi);
    const Scalar half = Scalar(0.5) * (hi - lo);
    const Scalar fc = f(center);
    Scalar kronrod = fc * Scalar(kKronrodWeights[7]);
    Scalar gauss = fc * Scalar(kGaussWeights[3]);
    for (int j = 0; j < 7; ++j) {
        const Scalar dx = half * Scalar(kKronrodNodes[j]);
        const Scalar pair = f(center - dx) + f(center + dx);
        kronrod += Scalar(kKronrodWeights[j]) * pair;
        if (j % 2 == 1) gauss += Scalar(kGaussWeights[j / 2]) * pair;
    }
    return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (G7/K15) integration of f over [lo, hi].
/// Bisects the segment with the largest error estimate until the summed estimate
/// falls under max(abs_tol, rel_tol * |I|) or `max_intervals` is reached.
template <typename Scalar, typename F>
QuadratureResult<Scalar> integrate(F&& f, Scalar lo, Scalar hi, Scalar abs_tol = Scalar(1e-12),
                                   Scalar rel_tol = Scalar(1e-12), int max_intervals = 4000) {
    std::priority_queue<detail::Segment<Scalar>> heap;
    auto first = detail::kronrod15<Scalar>(f, lo, hi);
    Scalar total = first.value;
    Scalar error = first.error;
    heap.push(first);
    int count = 1;
    while (error > std::max(abs_tol, rel_tol * std::abs(total)) && count < max_intervals) {
        const auto worst = heap.top();
        heap.pop();
        const Scalar mid = Scalar(0.5) * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            // Segment cannot be split further in floating point; accept it.
            heap.push({worst.lo, worst.hi, worst.value, Scalar(0)});
            error -= worst.error;
            continue;
        }
        const auto left = detail::kronrod15<Scalar>(f, worst.lo, mid);
        const auto right = detail::kronrod15<Scalar>(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
    }
    // Re-sum to shed accumulated update round-off.
    Scalar value = 0, err = 0;
    while (!heap.empty()) {
        value += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return {value, err, count};
}

/// Integral over [0, inf) through y = scale * t / (1 - t). `scale` should be of
/// the order of the integrand's decay length.
template <typename Scalar, typename F>
QuadratureResult<Scalar> integrate_half_line(F&& f, Scalar scale, Scalar abs_tol = Scalar(1e-12),
                                             Scalar rel_tol = Scalar(1e-12), int max_intervals = 4000) {
    auto mapped = [&](Scalar t) -> Scalar {
        if (t >= Scalar(1)) return Scalar(0);
        const Scalar one_minus = Scalar(1) - t;
        const Scalar y = scale * t / one_minus;
        const Scalar value = f(y);
        return value == Scalar(0) ? Scalar(0) : value * scale / (one_minus * one_minus);
    };
    return integrate<Scalar>(mapped, Scalar(0), Scalar(1), abs_tol, rel_tol, max_intervals);
}

}  // namespace atf
