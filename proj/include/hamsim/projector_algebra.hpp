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
#include <string>
#include <vector>

#include "hamsim/linalg.hpp"

namespace hamsim {

[[nodiscard]] DenseOperator rank_one_projector(const StateVector &e);

/// Two rank-one projectors and their overlap lambda = <e_i|e_j>.
struct ProjectorPair {
    StateVector e_i;
    StateVector e_j;
    DenseOperator p_i;
    DenseOperator p_j;
    Complex lambda;
    bool real_phase = false;
    std::uint64_t seed = 0;
};

/// Normalises both vectors; with real_phase e_j is rotated so lambda >= 0.
[[nodiscard]] ProjectorPair make_projector_pair(const StateVector &a, const StateVector &b,
                                                bool real_phase = false);
[[nodiscard]] ProjectorPair random_projector_pair(std::size_t n, std::uint64_t seed,
                                                  bool real_phase = false);

/// Orthonormal basis (N x 1 or N x 2) of span{e_i, e_j}.
[[nodiscard]] DenseOperator span_basis(const ProjectorPair &pair);
/// B^dagger A B for the span basis B.
[[nodiscard]] DenseOperator restrict_to_span(const ProjectorPair &pair, const DenseOperator &a);

struct ReflectionProductCheck {
    double algebraic = 0.0;   // (1-2P_i)(1-2P_j) vs -1 + 2|l|^2 + 2[P_i,P_j]
    double exponential = 0.0; // vs -exp(-2 asin|l| [P_i,P_j] / sqrt(|l|^2-|l|^4))
    double difference_square = 0.0; // (P_i-P_j)^2 vs (1-|l|^2) I
    double commutator_square = 0.0; // [P_i,P_j]^2 vs (|l|^4-|l|^2) I
    bool degenerate = false;  // |l| in {0, 1}: exponential form skipped
};
[[nodiscard]] ReflectionProductCheck check_reflection_product(const ProjectorPair &pair);

/// ||exp(-i(P_i+P_j)T) e_i + i e^{-iT} e_j|| at T = pi / (2 lambda); lambda real, > 0.
[[nodiscard]] double check_farhi_gutmann(const ProjectorPair &pair);

struct ConjugationCheck {
    double conjugation = 0.0;     // max over the phase grid
    double adjoint_cube = 0.0;    // [P,[P,[P,X]]] - [P,X]
    double reflection_cube = 0.0; // (ad R)^3 X - 4 ad R X
};
[[nodiscard]] std::span<const double> conjugation_phases();
[[nodiscard]] ConjugationCheck check_conjugation(const DenseOperator &p, const DenseOperator &x);

/// Unit-vector family e(x) = normalise(v0 + x v1).
struct ParametrizedProjector {
    StateVector v0;
    StateVector v1;
    double h = 1e-5;
    [[nodiscard]] StateVector vector(double x) const;
    [[nodiscard]] DenseOperator projector(double x) const;
    /// Central difference of P(x).
    [[nodiscard]] DenseOperator derivative(double x) const;
};

struct DerivativeCheck {
    double anticommutator = 0.0;    // P dP + dP P - dP
    double double_commutator = 0.0; // [P,[P,dP]] - dP
    double norm_defect = 0.0;       // | ||e(x)|| - 1 |
};
[[nodiscard]] DerivativeCheck check_derivative_identities(const ParametrizedProjector &family,
                                                          double x0);

/**
 * ||P_{w1} ... P_{wn} P_{w1} - l_{w1 w2} ... l_{wn w1} P_{w1}|| for rank-one
 * projectors onto `vectors` (normalised here).
 */
[[nodiscard]] double check_projector_word_reduction(std::span<const StateVector> vectors,
                                                    std::span<const std::size_t> word);

struct IdentityRow {
    std::string name;
    int instances = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::uint64_t worst_seed = 0;
    int degenerate = 0;
    [[nodiscard]] bool passed() const { return max_residual < tolerance; }
};

/// Every identity over `instances` seeds starting at base_seed.
[[nodiscard]] std::vector<IdentityRow> run_identity_suite(int instances = 100,
                                                          std::uint64_t base_seed = 1);

} // namespace hamsim
