// Copyright 2026 The hamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamsim/trotter.hpp"

#include <cmath>
#include <limits>

#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

constexpr Eigen::Index kDenseCap = 256;

std::size_t common_dim(std::span<const BlockDiagonalPart> parts) {
    if (parts.empty()) {
        throw InvalidInput("empty part list");
    }
    const std::size_t n = parts.front().dim();
    for (const auto &p : parts) {
        if (p.dim() != n) {
            throw InvalidInput("parts have different dimensions");
        }
    }
    return n;
}

} // namespace

int error_exponent(TrotterScheme scheme) { return scheme == TrotterScheme::First ? 2 : 3; }

TrotterStepper::TrotterStepper(std::span<const BlockDiagonalPart> parts, double dt,
                               TrotterScheme scheme)
    : dt_(dt), scheme_(scheme), dim_(common_dim(parts)) {
    if (!std::isfinite(dt)) {
        throw InvalidInput("time step must be finite");
    }
    const std::size_t l = parts.size();
    if (scheme == TrotterScheme::First) {
        for (const auto &p : parts) {
            schedule_.push_back(p.propagator(dt));
        }
        return;
    }
    std::vector<PartPropagator> halves;
    for (std::size_t i = 1; i < l; ++i) {
        halves.push_back(parts[i].propagator(0.5 * dt));
    }
    for (std::size_t i = halves.size(); i-- > 0;) {
        schedule_.push_back(halves[i]);
    }
    schedule_.push_back(parts[0].propagator(dt));
    for (const auto &h : halves) {
        schedule_.push_back(h);
    }
}

void TrotterStepper::step(StateVector &x) const {
    if (static_cast<std::size_t>(x.size()) != dim_) {
        throw InvalidInput("state dimension does not match parts");
    }
    for (const auto &u : schedule_) {
        u.apply_inplace(x);
    }
}

StateVector trotter_step_first(std::span<const BlockDiagonalPart> parts, double dt,
                               const StateVector &x) {
    StateVector y = x;
    TrotterStepper(parts, dt, TrotterScheme::First).step(y);
    return y;
}

StateVector trotter_step_symmetric(std::span<const BlockDiagonalPart> parts, double dt,
                                   const StateVector &x) {
    StateVector y = x;
    TrotterStepper(parts, dt, TrotterScheme::Symmetric).step(y);
    return y;
}

TrotterRun trotter_evolve(std::span<const BlockDiagonalPart> parts, double t, std::uint64_t m,
                          TrotterScheme scheme, const StateVector &x) {
    if (m == 0) {
        throw InvalidInput("step count must be positive");
    }
    const TrotterStepper stepper(parts, t / static_cast<double>(m), scheme);
    TrotterRun run{x, 0};
    for (std::uint64_t s = 0; s < m; ++s) {
        stepper.step(run.state);
    }
    run.part_applications = m * stepper.applications_per_step();
    return run;
}

double TrotterErrorEstimate::predicted_error(double t, double m, int k) const {
    const double e = k == 2 ? e2_norm : e3_norm;
    return std::pow(m, 1.0 - k) * std::pow(t, k) * e;
}

TrotterErrorEstimate commutator_error_norms(std::span<const BlockDiagonalPart> parts,
                                            NormKind kind) {
    const std::size_t n = common_dim(parts);
    if (static_cast<Eigen::Index>(n) > kDenseCap) {
        throw InvalidInput("commutator estimate limited to dimension 256");
    }
    std::vector<DenseOperator> dense;
    dense.reserve(parts.size());
    for (const auto &p : parts) {
        dense.push_back(p.dense());
    }
    return commutator_error_norms(std::span<const DenseOperator>(dense), kind);
}

TrotterErrorEstimate commutator_error_norms(std::span<const DenseOperator> parts,
                                            NormKind kind) {
    if (parts.empty()) {
        throw InvalidInput("empty part list");
    }
    const Eigen::Index n = parts.front().rows();
    if (n > kDenseCap) {
        throw InvalidInput("commutator estimate limited to dimension 256");
    }
    for (const auto &p : parts) {
        if (p.rows() != n || p.cols() != n) {
            throw InvalidInput("parts have different dimensions");
        }
    }
    const std::size_t l = parts.size();
    DenseOperator e2 = DenseOperator::Zero(n, n);
    DenseOperator e3 = DenseOperator::Zero(n, n);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = i + 1; j < l; ++j) {
            const DenseOperator cij = commutator(parts[i], parts[j]);
            e2 += cij;
            e3 += (2.0 * commutator(parts[i], cij) + commutator(parts[j], cij)) / 24.0;
            for (std::size_t k = j + 1; k < l; ++k) {
                e3 += (2.0 * commutator(parts[i], commutator(parts[j], parts[k])) +
                       commutator(parts[j], commutator(parts[i], parts[k]))) /
                      12.0;
            }
        }
    }
    e2 *= Complex(0.0, 0.5);
    return {operator_norm(e2, kind), operator_norm(e3, kind)};
}

std::uint64_t choose_steps(double t, double eps1, int k, double e_norm) {
    if (!(eps1 > 0.0) || !(t > 0.0)) {
        throw InvalidInput("choose_steps needs t > 0 and eps1 > 0");
    }
    if (k != 2 && k != 3) {
        throw InvalidInput("error exponent must be 2 or 3");
    }
    if (e_norm < 0.0) {
        throw InvalidInput("error norm must be non-negative");
    }
    if (e_norm == 0.0) {
        return 1;
    }
    const double x = std::pow(std::pow(t, k) * e_norm / eps1, 1.0 / (k - 1));
    if (!(x < 1e15)) {
        throw BudgetExceeded("required step count exceeds 1e15");
    }
    // Equality satisfies the bound; absorb rounding in the power.
    const double m = std::ceil(x * (1.0 - 1e-12));
    return m < 1.0 ? 1 : static_cast<std::uint64_t>(m);
}

RepetitionCost repetition_cost(double eps1, double eps) {
    if (!(eps1 > 0.0) || !(eps1 < 0.5)) {
        throw InvalidInput("repetition needs 0 < eps1 < 1/2");
    }
    if (!(eps > 0.0)) {
        throw InvalidInput("target error must be positive");
    }
    // log of 2^{R-1} eps1^{(R+1)/2} for odd R
    const double target = std::log(eps);
    for (int r = 1; r <= 100001; r += 2) {
        const double bound = (r - 1) * std::log(2.0) + 0.5 * (r + 1) * std::log(eps1);
        if (bound <= target + 1e-12 * std::abs(target)) {
            return {r, static_cast<double>(r)};
        }
        if (eps1 >= 0.25) {
            break; // bound is non-decreasing in R
        }
    }
    throw BudgetExceeded("majority repetition cannot reach the target error");
}

} // namespace hamsim
