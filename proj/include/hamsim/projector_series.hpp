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
#include <functional>
#include <vector>

#include "hamsim/hamiltonian.hpp"
#include "hamsim/linalg.hpp"

namespace hamsim {

enum class SeriesScheme {
    Projection,
    Reflection,
    ProjectionUnequal,
    ReflectionUnequal,
    BchForm,
};

const char *to_string(SeriesScheme scheme);

/// Largest |t| accepted by the coefficient functions.
inline constexpr double kSeriesTimeCap = 64.0;

/**
 * Coefficients of the alternating-word expansion
 *
 *     identity I + sum_{k=1}^p first[k] (A1 A2 A1 ...)_k + second[k] (A2 A1 A2 ...)_k
 *
 * Index 0 of both tables holds the identity coefficient.
 */
struct SeriesCoefficients {
    SeriesScheme scheme = SeriesScheme::Projection;
    double t = 0.0;
    int p = 0;
    double a1 = 1.0;
    double a2 = 1.0;
    std::vector<Complex> first;
    std::vector<Complex> second;

    [[nodiscard]] Complex identity() const { return first.at(0); }
};

/// (-1)^k e^{-it} sum_{j>=k} (it)^j / j!
[[nodiscard]] Complex coeff_projection(int k, double t);
/// i^k J_k(t)
[[nodiscard]] Complex coeff_reflection(int k, double t);

[[nodiscard]] SeriesCoefficients projection_coeffs(double t, int p);
[[nodiscard]] SeriesCoefficients reflection_coeffs(double t, int p);

/**
 * Unequal-weight tables for H = a1 A1 + a2 A2, as truncated power series in
 * t of degree p + 30. Projection scheme gives (c_k, d_k) with c_0 = d_0 = 1.
 * Reflection scheme expands exp(i(a1 R1 + a2 R2)t/2) into (p_k, q_k).
 */
[[nodiscard]] SeriesCoefficients coeffs_unequal(SeriesScheme scheme, double a1, double a2,
                                                double t, int p);

/// Direct sums for p_0, p_1, q_1 of the unequal reflection expansion.
struct ReflectionInitialCoeffs {
    Complex p0, p1, q1;
};
[[nodiscard]] ReflectionInitialCoeffs reflection_initial_coeffs(double a1, double a2, double t);

/**
 * Product-form tables c^(1)_k (first) and c^(2)_k (second) for
 * exp(-iHt) = exp(-iH1 t) exp(-iH2 t) [I + sum_{k>=2} ...]. Entries at k < 2
 * are zero except the unit identity coefficient.
 */
[[nodiscard]] SeriesCoefficients bch_form_coeffs(double t, int p);

using ApplyFn = std::function<StateVector(const StateVector &)>;

/// identity x + sum_k first[k] W1_k x + second[k] W2_k x with 2p applications.
[[nodiscard]] StateVector apply_word_series(const SeriesCoefficients &coeffs, const ApplyFn &a1,
                                            const ApplyFn &a2, const StateVector &x);

struct SeriesRun {
    StateVector state;
    std::uint64_t steps = 0;
    double step = 0.0;
    std::uint64_t part_applications = 0;
};

/// m = ceil(t / dt) steps of size t / m.
[[nodiscard]] std::uint64_t series_steps(double t, double dt);

[[nodiscard]] SeriesRun evolve_projection_series(const BlockDiagonalPart &p1,
                                                 const BlockDiagonalPart &p2, double t, double dt,
                                                 int p, const StateVector &x);
[[nodiscard]] SeriesRun evolve_reflection_series(const BlockDiagonalPart &r1,
                                                 const BlockDiagonalPart &r2, double t, double dt,
                                                 int p, const StateVector &x);

/// Dense variants used with random projector pairs.
[[nodiscard]] SeriesRun evolve_projection_series(const DenseOperator &p1, const DenseOperator &p2,
                                                 double t, double dt, int p,
                                                 const StateVector &x);
[[nodiscard]] SeriesRun evolve_reflection_series(const DenseOperator &r1, const DenseOperator &r2,
                                                 double t, double dt, int p,
                                                 const StateVector &x);

/// exp(-i(a1 P1 + a2 P2)t) x via unequal projection or reflection tables.
[[nodiscard]] SeriesRun evolve_unequal_series(SeriesScheme scheme, const DenseOperator &p1,
                                              const DenseOperator &p2, double a1, double a2,
                                              double t, double dt, int p,
                                              const StateVector &x);

/// Right-hand side of the truncation constraint for one scheme.
[[nodiscard]] double truncation_bound(SeriesScheme scheme, double t, double dt, int p);
/// Minimal p <= 200 with truncation_bound < eps.
[[nodiscard]] int truncation_order(SeriesScheme scheme, double t, double dt, double eps);

/// Rank-one projector v v^dagger / |v|^2 with components (sum of 4 uniforms - 2).
[[nodiscard]] DenseOperator random_rank_one_projector(std::size_t n, std::uint64_t seed);

} // namespace hamsim
