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

#include <compare>
#include <functional>
#include <type_traits>

#include <Eigen/Dense>

#include "atf/channel.hpp"
#include "atf/distributions.hpp"
#include "atf/errors.hpp"

namespace atf {

/// Finite battery with Q + 1 equally spaced levels 0, C/Q, ..., C.
struct BatteryModel {
    double capacity = 0.5;
    int levels = 90;

    double level_energy(int i) const {
        return i == levels ? capacity : static_cast<double>(i) * capacity / static_cast<double>(levels);
    }
    int num_states() const { return levels + 1; }
    void validate() const;
};

/// A battery level index, or the marker for an energy requirement above capacity.
class EnergyLevel {
  public:
    constexpr explicit EnergyLevel(int index) : index_(index) {}
    static constexpr EnergyLevel infeasible() { return EnergyLevel(-1); }

    constexpr bool feasible() const { return index_ >= 0; }
    constexpr int index() const { return index_; }

    constexpr auto operator<=>(const EnergyLevel&) const = default;

  private:
    int index_;
};

/// Largest level strictly below x, capped at Q; 0 when x <= C/Q.
EnergyLevel discretize_harvest(double x, const BatteryModel& b);

/// Smallest level whose energy is at least p_r / 2; infeasible when p_r / 2 > C.
EnergyLevel required_energy_level(double p_r, const BatteryModel& b);

/// Distributional inputs of the battery chain.
struct ModelInputs {
    EnergyDistribution eh_dist;              // harvest-only energy
    EnergyDistribution cci_dist;             // interference-only energy
    std::function<double(double)> power_cdf; // CDF of the required relay power
    double first_hop_outage = 0.0;           // Pr{relay fails to decode}
};

/// Builds the inputs from a configuration. `method` selects the first-hop outage
/// route; the default picks `closed` when the interference means are distinct.
ModelInputs make_model_inputs(const SystemConfig& cfg);
ModelInputs make_model_inputs(const SystemConfig& cfg, OutageMethod method);

template <typename Scalar>
using TransitionMatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using TransitionMatrix = TransitionMatrixT<double>;

template <typename Scalar>
using DistributionVectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using StationaryDist = DistributionVectorT<double>;

/// Battery-level transition matrix of the accumulate-then-forward relay. Rows are
/// checked, never renormalized: a row whose sum is off by more than 1e-6 raises
/// TransitionConsistencyError naming the row.
TransitionMatrix build_transition_matrix(const ModelInputs& inputs, const BatteryModel& b);

/// Largest |row sum - 1| over all rows.
template <typename Derived>
typename Derived::Scalar max_row_sum_error(const Eigen::MatrixBase<Derived>& z) {
    using Scalar = typename Derived::Scalar;
    return (z.rowwise().sum().array() - Scalar(1)).abs().maxCoeff();
}

/// Stationary law pi = (Z^T - I + B)^{-1} 1 with B the all-ones matrix, solved by
/// LU with partial pivoting, followed by two steps of iterative refinement with
/// the residual accumulated in extended precision. Nearly absorbing chains give
/// condition numbers near 1e8, and without refinement their tiny entries come out
/// slightly negative. Throws ReducibleChain when the reciprocal condition estimate
/// is below 1e-12.
template <typename Derived>
DistributionVectorT<typename Derived::Scalar> stationary_distribution(const Eigen::MatrixBase<Derived>& z) {
    using Scalar = typename Derived::Scalar;
    using Matrix = TransitionMatrixT<Scalar>;
    using Vector = DistributionVectorT<Scalar>;
    if (z.rows() != z.cols() || z.rows() == 0) throw DomainError("stationary_distribution: matrix must be square");
    const auto n = z.rows();
    const Matrix system = z.transpose() - Matrix::Identity(n, n) + Matrix::Ones(n, n);
    const Eigen::PartialPivLU<Matrix> lu(system);
    const Scalar rcond = lu.rcond();
    if (!(rcond >= Scalar(1e-12))) throw ReducibleChain("stationary system is singular or ill-conditioned");
    using Wide = std::conditional_t<std::is_same_v<Scalar, double>, long double, Scalar>;
    const TransitionMatrixT<Wide> wide = system.template cast<Wide>();
    Vector pi = lu.solve(Vector::Ones(n));
    for (int step = 0; step < 2; ++step) {
        const DistributionVectorT<Wide> r = DistributionVectorT<Wide>::Ones(n) - wide * pi.template cast<Wide>();
        pi += lu.solve(r.template cast<Scalar>());
    }
    return pi;
}

/// Infinity norm of Z^T pi - pi.
template <typename DerivedZ, typename DerivedPi>
typename DerivedZ::Scalar stationary_residual(const Eigen::MatrixBase<DerivedZ>& z,
                                              const Eigen::MatrixBase<DerivedPi>& pi) {
    return (z.transpose() * pi - pi).cwiseAbs().maxCoeff();
}

/// Stationary mass of non-discharging transitions: sum_i pi_i sum_{j >= i} Z_ij.
template <typename DerivedPi, typename DerivedZ>
typename DerivedZ::Scalar outage_probability(const Eigen::MatrixBase<DerivedPi>& pi,
                                             const Eigen::MatrixBase<DerivedZ>& z) {
    using Scalar = typename DerivedZ::Scalar;
    if (pi.size() != z.rows() || z.rows() != z.cols())
        throw DomainError("outage_probability: dimension mismatch");
    Scalar total = 0;
    for (Eigen::Index i = 0; i < z.rows(); ++i) total += pi(i) * z.row(i).tail(z.cols() - i).sum();
    return total;
}

/// Stationary mass of discharging (forwarding) transitions: sum_i pi_i sum_{j < i} Z_ij.
template <typename DerivedPi, typename DerivedZ>
typename DerivedZ::Scalar delivery_probability(const Eigen::MatrixBase<DerivedPi>& pi,
                                               const Eigen::MatrixBase<DerivedZ>& z) {
    using Scalar = typename DerivedZ::Scalar;
    Scalar total = 0;
    for (Eigen::Index i = 1; i < z.rows(); ++i) total += pi(i) * z.row(i).head(i).sum();
    return total;
}

/// R (1 - p_out).
double throughput(double p_out, double rate);

struct AnalyticReport {
    TransitionMatrix z;
    StationaryDist pi;
    double outage = 0.0;
    double throughput = 0.0;
    double first_hop_outage = 0.0;
    EnergyDistribution eh_dist;
    EnergyDistribution cci_dist;
};

AnalyticReport analytic_pipeline(const SystemConfig& cfg, const BatteryModel& b);

namespace testing {

/// Deliberately corrupted transition cases, used to prove the row-sum check fires.
enum class TransitionFault { none, drop_cci_branch_on_diagonal, drop_discharge_from_full };

TransitionMatrix build_transition_matrix_with_fault(const ModelInputs& inputs, const BatteryModel& b,
                                                    TransitionFault fault);

}  // namespace testing

}  // namespace atf
