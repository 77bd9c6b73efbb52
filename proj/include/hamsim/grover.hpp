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

#include <array>
#include <cstddef>

#include "hamsim/linalg.hpp"

namespace hamsim {

// All 2x2 operators act in the frame {|t>, |t_perp>}, |t> = (1, 0).

using BlochVector = std::array<double, 3>;

/// alpha = 2 asin(1/sqrt(N)), the rotation angle of one Grover step.
[[nodiscard]] double grover_angle(std::size_t n);
/// tau = (2N / sqrt(N-1)) asin(1/sqrt(N)), with U_G = exp(-i H_G tau).
[[nodiscard]] double grover_step_time(std::size_t n);

/// U_G = -(1 - 2|s><s|)(1 - 2|t><t|).
[[nodiscard]] DenseOperator grover_operator(std::size_t n);
/// (U_G)^q through the rotation angle; negative q iterates the inverse.
[[nodiscard]] DenseOperator grover_power(std::size_t n, double q);

/// |s> = (1/sqrt(N), sqrt((N-1)/N)).
[[nodiscard]] StateVector frame_start_state(std::size_t n);
/// N x 2 isometry whose columns are |t> and |t_perp>.
[[nodiscard]] DenseOperator frame_basis(std::size_t n);

struct SearchResult {
    long long steps = 0;
    double success_probability = 0.0;
};

/// Q = floor(pi / (2 alpha)) Grover steps applied to |s>.
[[nodiscard]] SearchResult search_run(std::size_t n);

/// exp(-iHt) for H = a|s><s| + |t><t| with the trace part removed.
[[nodiscard]] DenseOperator continuous_evolution(std::size_t n, double a, double t);
/// A with A^2 = ((1-a)/2)^2 + a/N.
[[nodiscard]] double rotation_rate(std::size_t n, double a);
/// Unit rotation axis of continuous_evolution on the Bloch sphere.
[[nodiscard]] BlochVector rotation_axis(std::size_t n, double a);

/// Q_T = acos(1/sqrt(N)) / (2 asin(1/sqrt(N))).
[[nodiscard]] double integral_steps(std::size_t n);

struct GroverDecomposition {
    double q = 0.0;
    double beta = 0.0;
};

/**
 * Parameters with U(t) = exp(i beta s3) (U_G)^Q exp(i(pi/2 + beta) s3). beta
 * is taken from the argument of the diagonal entry of U(t), which agrees with
 * the arctangent form while cos(At) > 0 and stays valid beyond it.
 */
[[nodiscard]] GroverDecomposition grover_decomposition(std::size_t n, double a, double t);
[[nodiscard]] DenseOperator decomposition_operator(std::size_t n,
                                                   const GroverDecomposition &d);

/// Residuals, compared modulo a global phase.
[[nodiscard]] double equivalence_check_integral(std::size_t n);
[[nodiscard]] double equivalence_check_fractional(std::size_t n, double t);
[[nodiscard]] double equivalence_check_unequal(std::size_t n, double a, double t);

[[nodiscard]] BlochVector bloch_map(const StateVector &psi);
[[nodiscard]] BlochVector bloch_map(const DenseOperator &rho);

/// max over a uniform t grid on [0, 2pi/A] of |<t|U(t)|s>|^2.
[[nodiscard]] double closest_approach_probability(std::size_t n, double a,
                                                  std::size_t grid = 4096);

} // namespace hamsim
