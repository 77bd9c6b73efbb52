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

#include "hamsim/grover.hpp"

#include <cmath>

#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_n(std::size_t n) {
    if (n < 2) {
        throw InvalidInput("search space size must be at least 2");
    }
}

void check_a(double a) {
    if (!std::isfinite(a) || std::abs(a) > 1.0) {
        throw InvalidInput("weight a must lie in [-1, 1]");
    }
}

/// e^{i phi sigma_3}
DenseOperator phase_rotation(double phi) {
    DenseOperator d = DenseOperator::Zero(2, 2);
    d(0, 0) = std::exp(Complex(0.0, phi));
    d(1, 1) = std::exp(Complex(0.0, -phi));
    return d;
}

} // namespace

double grover_angle(std::size_t n) {
    check_n(n);
    return 2.0 * std::asin(1.0 / std::sqrt(static_cast<double>(n)));
}

double grover_step_time(std::size_t n) {
    check_n(n);
    const double nn = static_cast<double>(n);
    return 2.0 * nn / std::sqrt(nn - 1.0) * std::asin(1.0 / std::sqrt(nn));
}

DenseOperator grover_operator(std::size_t n) {
    check_n(n);
    const double nn = static_cast<double>(n);
    const double d = 1.0 - 2.0 / nn;
    const double o = 2.0 * std::sqrt(nn - 1.0) / nn;
    DenseOperator u(2, 2);
    u << d, o, -o, d;
    return u;
}

DenseOperator grover_power(std::size_t n, double q) {
    const double theta = q * grover_angle(n);
    DenseOperator u(2, 2);
    u << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return u;
}

StateVector frame_start_state(std::size_t n) {
    check_n(n);
    const double nn = static_cast<double>(n);
    StateVector s(2);
    s << 1.0 / std::sqrt(nn), std::sqrt((nn - 1.0) / nn);
    return s;
}

DenseOperator frame_basis(std::size_t n) {
    check_n(n);
    const auto m = static_cast<Eigen::Index>(n);
    DenseOperator b = DenseOperator::Zero(m, 2);
    b(0, 0) = 1.0;
    const double v = 1.0 / std::sqrt(static_cast<double>(n - 1));
    for (Eigen::Index j = 1; j < m; ++j) {
        b(j, 1) = v;
    }
    return b;
}

SearchResult search_run(std::size_t n) {
    const double alpha = grover_angle(n);
    SearchResult r;
    r.steps = static_cast<long long>(std::floor(kPi / (2.0 * alpha)));
    const StateVector psi = grover_power(n, static_cast<double>(r.steps)) * frame_start_state(n);
    r.success_probability = std::norm(psi[0]);
    return r;
}

double rotation_rate(std::size_t n, double a) {
    check_n(n);
    check_a(a);
    const double h = 0.5 * (1.0 - a);
    return std::sqrt(h * h + a / static_cast<double>(n));
}

BlochVector rotation_axis(std::size_t n, double a) {
    const double big_a = rotation_rate(n, a);
    const double nn = static_cast<double>(n);
    return {a * std::sqrt(nn - 1.0) / nn / big_a, 0.0, (0.5 * (1.0 - a) + a / nn) / big_a};
}

DenseOperator continuous_evolution(std::size_t n, double a, double t) {
    const double big_a = rotation_rate(n, a);
    const BlochVector axis = rotation_axis(n, a);
    const double c = std::cos(big_a * t);
    const double s = std::sin(big_a * t);
    DenseOperator u(2, 2);
    u << Complex(c, -axis[2] * s), Complex(0.0, -axis[0] * s), Complex(0.0, -axis[0] * s),
        Complex(c, axis[2] * s);
    return u;
}

double integral_steps(std::size_t n) {
    const double r = 1.0 / std::sqrt(static_cast<double>(n));
    return std::acos(r) / grover_angle(n);
}

GroverDecomposition grover_decomposition(std::size_t n, double a, double t) {
    const double big_a = rotation_rate(n, a);
    const BlochVector axis = rotation_axis(n, a);
    double arg = axis[0] * std::sin(big_a * t);
    if (std::abs(arg) > 1.0) {
        if (std::abs(arg) > 1.0 + 1e-12) {
            throw InvalidInput("asin argument outside [-1, 1]: parameters leave the principal branch");
        }
        arg = std::copysign(1.0, arg);
    }
    GroverDecomposition d;
    d.q = std::asin(arg) / grover_angle(n);
    const Complex u00(std::cos(big_a * t), -axis[2] * std::sin(big_a * t));
    d.beta = 0.5 * std::arg(u00) - 0.25 * kPi;
    return d;
}

DenseOperator decomposition_operator(std::size_t n, const GroverDecomposition &d) {
    return phase_rotation(d.beta) * grover_power(n, d.q) * phase_rotation(0.5 * kPi + d.beta);
}

double equivalence_check_integral(std::size_t n) {
    const double big_t = 0.5 * kPi * std::sqrt(static_cast<double>(n));
    DenseOperator reflect_t = DenseOperator::Identity(2, 2);
    reflect_t(0, 0) = -1.0;
    const DenseOperator rhs = kI * reflect_t * grover_power(n, integral_steps(n));
    return operator_distance(continuous_evolution(n, 1.0, big_t), rhs, true);
}

double equivalence_check_fractional(std::size_t n, double t) {
    return equivalence_check_unequal(n, 1.0, t);
}

double equivalence_check_unequal(std::size_t n, double a, double t) {
    const auto d = grover_decomposition(n, a, t);
    return operator_distance(continuous_evolution(n, a, t), decomposition_operator(n, d), true);
}

BlochVector bloch_map(const StateVector &psi) {
    if (psi.size() != 2) {
        throw InvalidInput("Bloch map needs a two-component state");
    }
    const Complex c = std::conj(psi[0]) * psi[1];
    return {2.0 * c.real(), 2.0 * c.imag(), std::norm(psi[0]) - std::norm(psi[1])};
}

BlochVector bloch_map(const DenseOperator &rho) {
    if (rho.rows() != 2 || rho.cols() != 2) {
        throw InvalidInput("Bloch map needs a 2x2 density matrix");
    }
    return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

double closest_approach_probability(std::size_t n, double a, std::size_t grid) {
    const double big_a = rotation_rate(n, a);
    const StateVector s = frame_start_state(n);
    double best = 0.0;
    for (std::size_t i = 0; i <= grid; ++i) {
        const double t = 2.0 * kPi / big_a * static_cast<double>(i) / static_cast<double>(grid);
        best = std::max(best, std::norm((continuous_evolution(n, a, t) * s)[0]));
    }
    return best;
}

} // namespace hamsim
