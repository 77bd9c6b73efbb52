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

#include "hamsim/chebyshev.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/linalg.hpp"
#include "hamsim/projector_series.hpp"

namespace hamsim {

enum class Rounding { Truncate, Nearest };

const char *to_string(Rounding r);
Rounding parse_rounding(const std::string &name);

struct FixedPointConfig {
    int bits = 24; // per real component, 4..52
    Rounding rounding = Rounding::Truncate;

    void validate() const;
};

/**
 * b-bit sign-magnitude registers with one shared exponent: component j is
 * (re[j] + i im[j]) 2^(exponent - bits), |re[j]|, |im[j]| < 2^bits.
 */
struct DigitalState {
    FixedPointConfig config;
    int exponent = 0;
    std::vector<std::int64_t> re;
    std::vector<std::int64_t> im;
    /// Number of exponent increases forced by register overflow so far.
    int exponent_bumps = 0;

    [[nodiscard]] std::size_t dim() const { return re.size(); }
    [[nodiscard]] double ulp() const;
};

[[nodiscard]] DigitalState encode(const StateVector &x, const FixedPointConfig &cfg);
[[nodiscard]] StateVector decode(const DigitalState &s);

/// Exchanges the register pair of every 2x2 block of the part.
[[nodiscard]] DigitalState swap_registers(const DigitalState &s, const BlockDiagonalPart &part);

struct DigitalTerm {
    const DigitalState *source = nullptr;
    /// Per-component coefficient; one entry means a scalar.
    std::vector<Complex> coeff;
    /// Source component feeding output j; empty means identity.
    std::vector<std::size_t> index;
    /// Extra exact factor 2^shift.
    int shift = 0;
};

/**
 * out_j = sum_t coeff_t[j] 2^shift_t source_t[index_t[j]], with coefficients
 * quantised to the register width, exact integer products and a single
 * re-quantisation of the sum. The output keeps the largest source exponent
 * and bumps it on overflow.
 */
[[nodiscard]] DigitalState combine(std::span<const DigitalTerm> terms);

/// y = (r I + R) x for a reflection part, with off-diagonal access by swap.
[[nodiscard]] DigitalState fragment_apply(Complex r, const BlockDiagonalPart &reflection,
                                          const DigitalState &x);
/// y = r x + R z.
[[nodiscard]] DigitalState fragment_apply(Complex r, const DigitalState &x,
                                          const BlockDiagonalPart &reflection,
                                          const DigitalState &z);

/// Rescaled Hamiltonian (2H - (hi+lo)) / (hi-lo) in term form.
class DigitalHamiltonian {
  public:
    DigitalHamiltonian(std::span<const BlockDiagonalPart> parts, const SpectralWindow &window);

    /// Terms of factor * 2^shift * H~ applied to `y`.
    void append_terms(const DigitalState &y, double factor, int shift,
                      std::vector<DigitalTerm> &out) const;
    [[nodiscard]] std::size_t dim() const { return dim_; }

  private:
    std::size_t dim_;
    std::vector<Complex> diag_;
    std::vector<std::vector<Complex>> off_;
    std::vector<std::vector<std::size_t>> partner_;
};

/// One Clenshaw sum in fixed point; p applications of H~.
[[nodiscard]] DigitalState clenshaw_fixed_point(const DigitalHamiltonian &h,
                                                std::span<const Complex> coeffs,
                                                const DigitalState &x);

/// Full plan (all steps, with step phases) in fixed point.
[[nodiscard]] DigitalState chebyshev_fixed_point(std::span<const BlockDiagonalPart> parts,
                                                 const ChebyshevPlan &plan,
                                                 const FixedPointConfig &cfg,
                                                 const StateVector &x);

/// Reflection series with nested fragments, m steps of size t/m.
[[nodiscard]] DigitalState reflection_series_fixed_point(const BlockDiagonalPart &r1,
                                                         const BlockDiagonalPart &r2, double t,
                                                         double dt, int p,
                                                         const FixedPointConfig &cfg,
                                                         const StateVector &x);

struct RoundoffRow {
    int bits = 0;
    double error = 0.0; // ||decode(fixed) - floating||
    int exponent_bumps = 0;
};

/// Chebyshev plan run across register widths against the floating pipeline.
[[nodiscard]] std::vector<RoundoffRow> roundoff_scan(std::span<const BlockDiagonalPart> parts,
                                                     const ChebyshevPlan &plan,
                                                     std::span<const int> bits,
                                                     Rounding rounding, const StateVector &x);

/// Least-squares slope of log2(error) against bits.
[[nodiscard]] double roundoff_slope(std::span<const RoundoffRow> rows);

/// b-bit place value operator, diag(i 2^(1-b)) in big-endian bit order.
[[nodiscard]] DenseOperator place_value_operator(int b);
/// (1 + sigma_1)^{tensor b}.
[[nodiscard]] DenseOperator all_bits_mixer(int b);
/// N V_e^dagger (1 + sigma_1)^{tensor b} V_e with V_e = 2^(e-1) V.
[[nodiscard]] DenseOperator register_observable(std::size_t n, int b, int exponent);

struct LiftCheck {
    double direct = 0.0;
    double lifted = 0.0;
    double bound = 0.0; // 4 ||O_a|| 2^-b
    double mixer_defect = 0.0; // max |<x_j|(1+s1)^b|x_l> - 1|
    double place_value_defect = 0.0; // max |V|q> - q 2^(1-b)|q>|
    [[nodiscard]] bool within() const { return std::abs(direct - lifted) <= bound; }
};

/// Needs N <= 8, b <= 6 and real non-negative amplitudes.
[[nodiscard]] LiftCheck observable_lift_check(const DenseOperator &oa, int b,
                                              const RealVector &x, Rounding rounding);

} // namespace hamsim
