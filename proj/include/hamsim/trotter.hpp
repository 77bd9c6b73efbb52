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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hamsim/hamiltonian.hpp"
#include "hamsim/linalg.hpp"

namespace hamsim {

enum class TrotterScheme {
    First,     // error exponent k = 2
    Symmetric, // error exponent k = 3
};

[[nodiscard]] int error_exponent(TrotterScheme scheme);

/**
 * Precomputed Trotter step over a fixed part list and step size. Parts are
 * applied in ascending list order for the first-order scheme. The symmetric
 * scheme applies H_l/2 ... H_2/2, H_1, H_2/2 ... H_l/2, which is the
 * palindromic half-step product with the two central halves fused.
 */
class TrotterStepper {
  public:
    TrotterStepper(std::span<const BlockDiagonalPart> parts, double dt, TrotterScheme scheme);

    void step(StateVector &x) const;
    [[nodiscard]] std::size_t applications_per_step() const { return schedule_.size(); }
    [[nodiscard]] double dt() const { return dt_; }
    [[nodiscard]] TrotterScheme scheme() const { return scheme_; }

  private:
    double dt_;
    TrotterScheme scheme_;
    std::size_t dim_;
    std::vector<PartPropagator> schedule_;
};

[[nodiscard]] StateVector trotter_step_first(std::span<const BlockDiagonalPart> parts, double dt,
                                             const StateVector &x);
[[nodiscard]] StateVector trotter_step_symmetric(std::span<const BlockDiagonalPart> parts,
                                                 double dt, const StateVector &x);

struct TrotterRun {
    StateVector state;
    std::uint64_t part_applications = 0;
};

/// m steps of size t/m.
[[nodiscard]] TrotterRun trotter_evolve(std::span<const BlockDiagonalPart> parts, double t,
                                        std::uint64_t m, TrotterScheme scheme,
                                        const StateVector &x);

struct TrotterErrorEstimate {
    double e2_norm = 0.0;
    double e3_norm = 0.0;

    /// Leading-order m^{1-k} t^k ||E^(k)||.
    [[nodiscard]] double predicted_error(double t, double m, int k) const;
};

/// Dense parts are capped at dimension 256.
[[nodiscard]] TrotterErrorEstimate commutator_error_norms(std::span<const BlockDiagonalPart> parts,
                                                          NormKind kind = NormKind::Spectral);
[[nodiscard]] TrotterErrorEstimate commutator_error_norms(std::span<const DenseOperator> parts,
                                                          NormKind kind = NormKind::Spectral);

/// Smallest m with m^{1-k} t^k E <= eps1; 1 when E = 0.
[[nodiscard]] std::uint64_t choose_steps(double t, double eps1, int k, double e_norm);

struct RepetitionCost {
    int repetitions = 1;
    /// Multiplier on the single-run cost.
    double cost_factor = 1.0;
};

/// Smallest odd R with 2^{R-1} eps1^{ceil(R/2)} <= eps.
[[nodiscard]] RepetitionCost repetition_cost(double eps1, double eps);

} // namespace hamsim
