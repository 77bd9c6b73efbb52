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

#include "hamsim/projector_series.hpp"

#include <cmath>
#include <limits>

#include "hamsim/bessel.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/random.hpp"

namespace hamsim {

namespace {

using LComplex = std::complex<long double>;

constexpr int kMaxOrder = 200;
constexpr int kMaxUnequalOrder = 40;
constexpr int kGuardDegree = 30;

void check_time(double t) {
    if (!std::isfinite(t) || std::abs(t) > kSeriesTimeCap) {
        throw BudgetExceeded("series time outside |t| <= 64");
    }
}

void check_order(int p, int cap) {
    if (p < 0 || p > cap) {
        throw InvalidInput("series order must lie in [0, " + std::to_string(cap) + "]");
    }
}

bool dense_projector(const DenseOperator &p) {
    if (p.rows() != p.cols() || !is_hermitian(p, 1e-10)) {
        return false;
    }
    return ((p * p - p).cwiseAbs().maxCoeff()) <= 1e-10;
}

bool dense_reflection(const DenseOperator &r) {
    if (r.rows() != r.cols() || !is_hermitian(r, 1e-10)) {
        return false;
    }
    const auto id = DenseOperator::Identity(r.rows(), r.cols());
    return ((r * r - id).cwiseAbs().maxCoeff()) <= 1e-10;
}

/// Horner evaluation of sum_n c[n] t^n.
Complex horner(const std::vector<Complex> &c, double t) {
    LComplex acc = 0.0L;
    for (std::size_t n = c.size(); n-- > 0;) {
        acc = acc * static_cast<long double>(t) + LComplex(c[n].real(), c[n].imag());
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

void check_tail(const std::vector<Complex> &c, double t) {
    const std::size_t d = c.size() - 1;
    const double at = std::abs(t);
    const double tail =
        std::abs(c[d]) * std::pow(at, static_cast<double>(d)) +
        std::abs(c[d - 1]) * std::pow(at, static_cast<double>(d - 1));
    if (!(tail <= 1e-13)) {
        throw BudgetExceeded("t beyond the accuracy radius of the coefficient series");
    }
}

using SeriesTable = std::vector<std::vector<Complex>>;

/// c_k, d_k power-series coefficients for k <= p, degree d.
void projection_unequal_series(double a1, double a2, int p, int d, SeriesTable &c,
                               SeriesTable &dd) {
    const auto np = static_cast<std::size_t>(p) + 1;
    const auto nd = static_cast<std::size_t>(d) + 1;
    c.assign(np, std::vector<Complex>(nd, 0.0));
    dd.assign(np, std::vector<Complex>(nd, 0.0));
    c[0][0] = 1.0;
    dd[0][0] = 1.0;
    for (std::size_t k = 1; k < np; ++k) {
        for (std::size_t n = 0; n + 1 < nd; ++n) {
            const double inv = 1.0 / static_cast<double>(n + 1);
            c[k][n + 1] = -kI * a1 * (c[k][n] + dd[k - 1][n]) * inv;
            dd[k][n + 1] = -kI * a2 * (dd[k][n] + c[k - 1][n]) * inv;
        }
    }
}

/// p_k, q_k power-series coefficients for all words k <= d + 1, degree d.
void reflection_unequal_series(double a1, double a2, int d, SeriesTable &pk, SeriesTable &qk) {
    const auto nw = static_cast<std::size_t>(d) + 2;
    const auto nd = static_cast<std::size_t>(d) + 1;
    pk.assign(nw, std::vector<Complex>(nd, 0.0));
    qk.assign(nw, std::vector<Complex>(nd, 0.0));
    pk[0][0] = 1.0;
    qk[0][0] = 1.0;
    const Complex half_i(0.0, 0.5);
    for (std::size_t n = 0; n + 1 < nd; ++n) {
        const double inv = 1.0 / static_cast<double>(n + 1);
        const Complex id = half_i * (a1 * pk[1][n] + a2 * qk[1][n]) * inv;
        pk[0][n + 1] = id;
        qk[0][n + 1] = id;
        for (std::size_t k = 1; k + 1 < nw; ++k) {
            pk[k][n + 1] = half_i * (a1 * qk[k - 1][n] + a2 * qk[k + 1][n]) * inv;
            qk[k][n + 1] = half_i * (a2 * pk[k - 1][n] + a1 * pk[k + 1][n]) * inv;
        }
    }
}

SeriesRun run_series(const SeriesCoefficients &step_coeffs, Complex step_phase,
                     const ApplyFn &a1, const ApplyFn &a2, std::uint64_t m, double step,
                     const StateVector &x) {
    SeriesRun run{x, m, step, 0};
    for (std::uint64_t s = 0; s < m; ++s) {
        run.state = step_phase * apply_word_series(step_coeffs, a1, a2, run.state);
    }
    run.part_applications = m * 2 * static_cast<std::uint64_t>(step_coeffs.p);
    return run;
}

ApplyFn wrap(const BlockDiagonalPart &part) {
    return [&part](const StateVector &v) { return part.apply(v); };
}

ApplyFn wrap(const DenseOperator &op) {
    return [&op](const StateVector &v) -> StateVector { return op * v; };
}

void check_step_args(double t, double dt, int p) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw InvalidInput("evolution time must be finite and non-negative");
    }
    if (!(dt > 0.0)) {
        throw InvalidInput("time step must be positive");
    }
    check_order(p, kMaxOrder);
}

} // namespace

const char *to_string(SeriesScheme scheme) {
    switch (scheme) {
    case SeriesScheme::Projection:
        return "projection";
    case SeriesScheme::Reflection:
        return "reflection";
    case SeriesScheme::ProjectionUnequal:
        return "projection-unequal";
    case SeriesScheme::ReflectionUnequal:
        return "reflection-unequal";
    case SeriesScheme::BchForm:
        return "bch-form";
    }
    return "?";
}

Complex coeff_projection(int k, double t) {
    if (k < 0) {
        throw InvalidInput("coefficient index must be non-negative");
    }
    check_time(t);
    if (k == 0) {
        return 1.0;
    }
    const LComplex it(0.0L, static_cast<long double>(t));
    const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
    const LComplex back = std::exp(-it);
    if (static_cast<double>(k) <= std::abs(t)) {
        // head sum is dominated by its last terms here, so the subtraction is benign
        LComplex head = 0.0L;
        LComplex term = 1.0L;
        for (int j = 0; j < k; ++j) {
            head += term;
            term *= it / static_cast<long double>(j + 1);
        }
        const LComplex v = sign * (1.0L - back * head);
        return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
    LComplex term = 1.0L;
    for (int j = 1; j <= k; ++j) {
        term *= it / static_cast<long double>(j);
    }
    LComplex tail = 0.0L;
    for (int j = k; j < k + 2000; ++j) {
        tail += term;
        if (std::abs(term) <= 1e-20L * std::abs(tail)) {
            break;
        }
        term *= it / static_cast<long double>(j + 1);
    }
    const LComplex v = sign * back * tail;
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

Complex coeff_reflection(int k, double t) {
    if (k < 0) {
        throw InvalidInput("coefficient index must be non-negative");
    }
    check_time(t);
    const double j = bessel_table(t, k)[k];
    static constexpr Complex kPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPow[k % 4] * j;
}

SeriesCoefficients projection_coeffs(double t, int p) {
    check_time(t);
    check_order(p, kMaxOrder);
    SeriesCoefficients out{SeriesScheme::Projection, t, p, 1.0, 1.0, {}, {}};
    for (int k = 0; k <= p; ++k) {
        out.first.push_back(coeff_projection(k, t));
    }
    out.second = out.first;
    return out;
}

SeriesCoefficients reflection_coeffs(double t, int p) {
    check_time(t);
    check_order(p, kMaxOrder);
    SeriesCoefficients out{SeriesScheme::Reflection, t, p, 1.0, 1.0, {}, {}};
    const auto table = bessel_table(t, p);
    static constexpr Complex kPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int k = 0; k <= p; ++k) {
        out.first.push_back(kPow[k % 4] * table[k]);
    }
    out.second = out.first;
    return out;
}

SeriesCoefficients coeffs_unequal(SeriesScheme scheme, double a1, double a2, double t, int p) {
    check_time(t);
    check_order(p, kMaxUnequalOrder);
    if (!std::isfinite(a1) || !std::isfinite(a2) || std::abs(a1) > 1.0 || std::abs(a2) > 1.0) {
        throw InvalidInput("weights must lie in [-1, 1]");
    }
    const int d = p + kGuardDegree;
    SeriesTable first;
    SeriesTable second;
    if (scheme == SeriesScheme::ProjectionUnequal) {
        projection_unequal_series(a1, a2, p, d, first, second);
    } else if (scheme == SeriesScheme::ReflectionUnequal) {
        reflection_unequal_series(a1, a2, d, first, second);
    } else {
        throw InvalidInput("coeffs_unequal needs an unequal scheme");
    }
    SeriesCoefficients out{scheme, t, p, a1, a2, {}, {}};
    for (int k = 0; k <= p; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        check_tail(first[uk], t);
        check_tail(second[uk], t);
        out.first.push_back(horner(first[uk], t));
        out.second.push_back(horner(second[uk], t));
    }
    return out;
}

ReflectionInitialCoeffs reflection_initial_coeffs(double a1, double a2, double t) {
    check_time(t);
    const Complex half_it(0.0, 0.5 * t);
    ReflectionInitialCoeffs out{0.0, 0.0, 0.0};
    // f = (it/2)^n / n! with n = 2j and n = 2j + 1
    Complex even = 1.0;
    for (int j = 0; j < 400; ++j) {
        const Complex odd = even * half_it / static_cast<double>(2 * j + 1);
        Complex s0 = 0.0;
        Complex s1 = 0.0;
        Complex s1q = 0.0;
        double bj = 1.0; // C(j, l)
        double bj1 = 1.0; // C(j+1, l)
        for (int l = 0; l <= j; ++l) {
            s0 += bj * bj * std::pow(a1, 2 * (j - l)) * std::pow(a2, 2 * l);
            s1 += bj * bj1 * std::pow(a1, 2 * (j - l) + 1) * std::pow(a2, 2 * l);
            s1q += bj * bj1 * std::pow(a2, 2 * (j - l) + 1) * std::pow(a1, 2 * l);
            bj = bj * (j - l) / (l + 1);
            bj1 = bj1 * (j + 1 - l) / (l + 1);
        }
        const Complex d0 = even * s0;
        const Complex d1 = odd * s1;
        const Complex d1q = odd * s1q;
        out.p0 += d0;
        out.p1 += d1;
        out.q1 += d1q;
        if (j > 2 && std::abs(d0) + std::abs(d1) + std::abs(d1q) < 1e-30) {
            break;
        }
        even = odd * half_it / static_cast<double>(2 * j + 2);
    }
    return out;
}

SeriesCoefficients bch_form_coeffs(double t, int p) {
    check_time(t);
    check_order(p, kMaxUnequalOrder);
    SeriesCoefficients out{SeriesScheme::BchForm, t, p, 1.0, 1.0, {}, {}};
    std::vector<Complex> c;
    for (int k = 0; k <= p; ++k) {
        c.push_back(coeff_projection(k, t));
    }
    const Complex e = std::exp(Complex(0.0, t));
    const Complex e1sq = (e - 1.0) * (e - 1.0);
    out.first.assign(static_cast<std::size_t>(p) + 1, 0.0);
    out.second.assign(static_cast<std::size_t>(p) + 1, 0.0);
    out.first[0] = 1.0;
    out.second[0] = 1.0;
    for (int k = 2; k <= p; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        const Complex c1 = e * (c[uk - 1] + c[uk]) - c[uk - 1];
        out.first[uk] = c1;
        out.second[uk] = e1sq * (c[uk - 2] + c[uk - 1]) + c1;
    }
    return out;
}

StateVector apply_word_series(const SeriesCoefficients &coeffs, const ApplyFn &a1,
                              const ApplyFn &a2, const StateVector &x) {
    const int p = coeffs.p;
    StateVector y = coeffs.identity() * x;
    if (p == 0) {
        return y;
    }
    // factor k of a word starting with a: a for odd k, the other one for even k
    auto sweep = [&](const std::vector<Complex> &f, const ApplyFn &odd, const ApplyFn &even) {
        StateVector z = f[static_cast<std::size_t>(p)] * x;
        for (int k = p; k >= 2; --k) {
            z = (k % 2 == 1 ? odd : even)(z);
            z += f[static_cast<std::size_t>(k) - 1] * x;
        }
        return StateVector(odd(z));
    };
    y += sweep(coeffs.first, a1, a2);
    y += sweep(coeffs.second, a2, a1);
    return y;
}

std::uint64_t series_steps(double t, double dt) {
    if (!(dt > 0.0)) {
        throw InvalidInput("time step must be positive");
    }
    if (t <= 0.0) {
        return 0;
    }
    const double m = std::ceil(t / dt * (1.0 - 1e-14));
    if (!(m < 1e12)) {
        throw BudgetExceeded("series step count too large");
    }
    return static_cast<std::uint64_t>(m);
}

SeriesRun evolve_projection_series(const BlockDiagonalPart &p1, const BlockDiagonalPart &p2,
                                   double t, double dt, int p, const StateVector &x) {
    if (!p1.is_projector() || !p2.is_projector()) {
        throw InvalidInput("projection series needs projector parts");
    }
    check_step_args(t, dt, p);
    const auto m = series_steps(t, dt);
    if (m == 0) {
        return {x, 0, 0.0, 0};
    }
    const double step = t / static_cast<double>(m);
    return run_series(projection_coeffs(step, p), 1.0, wrap(p1), wrap(p2), m, step, x);
}

SeriesRun evolve_reflection_series(const BlockDiagonalPart &r1, const BlockDiagonalPart &r2,
                                   double t, double dt, int p, const StateVector &x) {
    if (!r1.is_reflection() || !r2.is_reflection()) {
        throw InvalidInput("reflection series needs reflection parts");
    }
    check_step_args(t, dt, p);
    const auto m = series_steps(t, dt);
    if (m == 0) {
        return {x, 0, 0.0, 0};
    }
    const double step = t / static_cast<double>(m);
    return run_series(reflection_coeffs(step, p), std::exp(Complex(0.0, -step)), wrap(r1),
                      wrap(r2), m, step, x);
}

SeriesRun evolve_projection_series(const DenseOperator &p1, const DenseOperator &p2, double t,
                                   double dt, int p, const StateVector &x) {
    if (!dense_projector(p1) || !dense_projector(p2)) {
        throw InvalidInput("projection series needs projectors");
    }
    check_step_args(t, dt, p);
    const auto m = series_steps(t, dt);
    if (m == 0) {
        return {x, 0, 0.0, 0};
    }
    const double step = t / static_cast<double>(m);
    return run_series(projection_coeffs(step, p), 1.0, wrap(p1), wrap(p2), m, step, x);
}

SeriesRun evolve_reflection_series(const DenseOperator &r1, const DenseOperator &r2, double t,
                                   double dt, int p, const StateVector &x) {
    if (!dense_reflection(r1) || !dense_reflection(r2)) {
        throw InvalidInput("reflection series needs reflections");
    }
    check_step_args(t, dt, p);
    const auto m = series_steps(t, dt);
    if (m == 0) {
        return {x, 0, 0.0, 0};
    }
    const double step = t / static_cast<double>(m);
    return run_series(reflection_coeffs(step, p), std::exp(Complex(0.0, -step)), wrap(r1),
                      wrap(r2), m, step, x);
}

SeriesRun evolve_unequal_series(SeriesScheme scheme, const DenseOperator &p1,
                                const DenseOperator &p2, double a1, double a2, double t,
                                double dt, int p, const StateVector &x) {
    if (!dense_projector(p1) || !dense_projector(p2)) {
        throw InvalidInput("unequal series needs projectors");
    }
    check_step_args(t, dt, p);
    const auto m = series_steps(t, dt);
    if (m == 0) {
        return {x, 0, 0.0, 0};
    }
    const double step = t / static_cast<double>(m);
    const auto coeffs = coeffs_unequal(scheme, a1, a2, step, p);
    if (scheme == SeriesScheme::ProjectionUnequal) {
        return run_series(coeffs, 1.0, wrap(p1), wrap(p2), m, step, x);
    }
    const auto id = DenseOperator::Identity(p1.rows(), p1.cols());
    const DenseOperator r1 = id - 2.0 * p1;
    const DenseOperator r2 = id - 2.0 * p2;
    return run_series(coeffs, std::exp(Complex(0.0, -0.5 * (a1 + a2) * step)), wrap(r1),
                      wrap(r2), m, step, x);
}

double truncation_bound(SeriesScheme scheme, double t, double dt, int p) {
    check_order(p, kMaxOrder);
    const double m = static_cast<double>(series_steps(t, dt));
    const double q = p + 1.0;
    const bool reflection =
        scheme == SeriesScheme::Reflection || scheme == SeriesScheme::ReflectionUnequal;
    if (reflection) {
        const double f = 1.0 - dt / (2.0 * (p + 2.0));
        if (f <= 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        return 2.0 * m * std::exp(q * std::log(0.5 * dt) - std::lgamma(q + 1.0)) / f;
    }
    const double f = 1.0 - dt / (p + 2.0);
    if (f <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 2.0 * m * std::exp(q * std::log(dt) - std::lgamma(q + 1.0)) / (f * f);
}

int truncation_order(SeriesScheme scheme, double t, double dt, double eps) {
    if (!(eps > 0.0) || !(dt > 0.0) || !(t >= 0.0)) {
        throw InvalidInput("truncation_order needs t >= 0, dt > 0, eps > 0");
    }
    for (int p = 0; p <= kMaxOrder; ++p) {
        if (truncation_bound(scheme, t, dt, p) < eps) {
            return p;
        }
    }
    throw BudgetExceeded("no truncation order up to 200 meets the error target");
}

DenseOperator random_rank_one_projector(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw InvalidInput("dimension must be positive");
    }
    SplitMix64 rng(seed);
    StateVector v(static_cast<Eigen::Index>(n));
    for (auto &c : v) {
        const double re = rng.bell();
        const double im = rng.bell();
        c = Complex(re, im);
    }
    v /= v.norm();
    return v * v.adjoint();
}

} // namespace hamsim
