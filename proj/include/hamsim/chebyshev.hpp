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
#include "hamsim/projector_series.hpp"

namespace hamsim {

struct SpectralWindow {
    double lo = -1.0;
    double hi = 1.0;

    [[nodiscard]] double center() const { return 0.5 * (hi + lo); }
    [[nodiscard]] double half_width() const { return 0.5 * (hi - lo); }
};

/// Gershgorin enclosure of the spectrum.
[[nodiscard]] SpectralWindow spectral_bounds(const DenseOperator &h);
[[nodiscard]] SpectralWindow spectral_bounds(std::span<const BlockDiagonalPart> parts);

struct Rescaling {
    double t_tilde = 0.0;
    Complex phase{1.0, 0.0}; // exp(-iHt) = phase * exp(-i H~ t~)
    bool degenerate = false; // lo == hi: pure phase evolution
};

[[nodiscard]] Rescaling rescale(const SpectralWindow &window, double t);
/// (2H - (hi + lo) I) / (hi - lo).
[[nodiscard]] DenseOperator rescale_operator(const DenseOperator &h,
                                             const SpectralWindow &window);

/// C_0 = J_0(t), C_k = 2 (-i)^k J_k(t).
[[nodiscard]] std::vector<Complex> chebyshev_coeffs(double t, int p);

/// sum_{k=0}^p C_k T_k(H~) x with p applications of H~.
[[nodiscard]] StateVector clenshaw_apply(const ApplyFn &h_tilde, std::span<const Complex> coeffs,
                                         const StateVector &x);

enum class ChebyshevMode { Stepped, OneShot };

/// Single-step truncation bound t^{p+1} / (2^p (p+1)!) (1 - t/(2(p+2)))^{-1}.
[[nodiscard]] double one_shot_bound(double t_tilde, int p);
/// Minimal p <= 512 with one_shot_bound < eps.
[[nodiscard]] int one_shot_order(double t_tilde, double eps);
/// m-step bound with per-step rescaled time s.
[[nodiscard]] double stepped_bound(double s, std::uint64_t m, int p);
/// 2 ln(t/eps) / ln(ln(t/eps)), rounded up.
[[nodiscard]] int heuristic_order(double t, double eps);

struct ChebyshevPlan {
    SpectralWindow window;
    ChebyshevMode mode = ChebyshevMode::Stepped;
    double t = 0.0;
    double t_tilde = 0.0;
    std::uint64_t m = 0;
    double step_tilde = 0.0;
    int p = 0;
    Complex step_phase{1.0, 0.0};
    std::vector<Complex> coeffs;
    bool degenerate = false;
};

/**
 * Stepped plans use the steps of rescaled length at most pi and choose p from
 * the m-step bound; one-shot plans use a single step. A non-negative
 * `order` overrides the chosen p.
 */
[[nodiscard]] ChebyshevPlan plan_chebyshev(const SpectralWindow &window, double t, double eps,
                                           ChebyshevMode mode, int order = -1);

struct ChebyshevRun {
    StateVector state;
    ChebyshevPlan plan;
    std::uint64_t h_applications = 0;
};

/// `h` applies the unscaled Hamiltonian.
[[nodiscard]] ChebyshevRun run_chebyshev(const ApplyFn &h, const ChebyshevPlan &plan,
                                         const StateVector &x);
[[nodiscard]] ChebyshevRun evolve_chebyshev(const DenseOperator &h, double t, double eps,
                                            ChebyshevMode mode, const StateVector &x);
[[nodiscard]] ChebyshevRun evolve_chebyshev(std::span<const BlockDiagonalPart> parts, double t,
                                            double eps, ChebyshevMode mode, const StateVector &x);

} // namespace hamsim
