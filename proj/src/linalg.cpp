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

#include "hamsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hamsim/errors.hpp"

namespace hamsim {

const char *to_string(NormKind kind) {
    return kind == NormKind::Spectral ? "spectral" : "frobenius";
}

NormKind parse_norm(const std::string &name) {
    if (name == "spectral") {
        return NormKind::Spectral;
    }
    if (name == "frobenius") {
        return NormKind::Frobenius;
    }
    throw InvalidInput("unknown norm '" + name + "' (expected spectral|frobenius)");
}

StateVector linear_combination(Complex a, const StateVector &x, Complex b,
                               const StateVector &y) {
    if (x.size() != y.size()) {
        throw InvalidInput("linear_combination: dimension mismatch");
    }
    return a * x + b * y;
}

bool is_hermitian(const DenseOperator &h, double tol) {
    if (h.rows() != h.cols()) {
        return false;
    }
    return (h - h.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const DenseOperator &u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    const auto n = u.rows();
    return (u.adjoint() * u - DenseOperator::Identity(n, n)).cwiseAbs().maxCoeff() <=
           tol;
}

namespace {

double off_diagonal_mass(const DenseOperator &a) {
    double sum = 0.0;
    const auto n = a.rows();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index l = 0; l < n; ++l) {
            if (j != l) {
                sum += std::norm(a(j, l));
            }
        }
    }
    return std::sqrt(sum);
}

// Annihilates a(p,q) with the unitary G = diag(1, e^{-i phi}) * R(theta)
// acting on the (p,q) plane, A <- G^dagger A G, V <- V G.
void jacobi_rotate(DenseOperator &a, DenseOperator &v, Eigen::Index p, Eigen::Index q) {
    const Complex apq = a(p, q);
    const double g = std::abs(apq);
    if (g == 0.0) {
        return;
    }
    const Complex phase = apq / g; // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * g);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex em = std::conj(phase); // e^{-i phi}

    const auto n = a.rows();
    // Columns: A <- A G.
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * c - akq * s * em;
        a(k, q) = akp * s + akq * c * em;
    }
    // Rows: A <- G^dagger A.
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * c - vkq * s * em;
        v(k, q) = vkp * s + vkq * c * em;
    }
}

} // namespace

HermitianEigensystem::HermitianEigensystem(const DenseOperator &h) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw InvalidInput("eigensystem: matrix must be square and non-empty");
    }
    const double scale = std::max(h.norm(), 1e-300);
    if (!is_hermitian(h, 1e-12 * std::max(1.0, scale))) {
        throw InvalidInput("eigensystem: matrix is not Hermitian within tolerance");
    }
    const auto n = h.rows();
    DenseOperator a = 0.5 * (h + h.adjoint());
    DenseOperator v = DenseOperator::Identity(n, n);
    const double threshold = 1e-14 * scale;
    constexpr int kMaxSweeps = 100;
    while (off_diagonal_mass(a) > threshold) {
        if (sweeps_ == kMaxSweeps) {
            throw BudgetExceeded("eigensystem: Jacobi sweeps did not converge");
        }
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                jacobi_rotate(a, v, p, q);
            }
        }
        ++sweeps_;
    }
    values_ = a.diagonal().real();
    vectors_ = std::move(v);
}

StateVector HermitianEigensystem::evolve(double t, const StateVector &x) const {
    if (static_cast<std::size_t>(x.size()) != dim()) {
        throw InvalidInput("evolve: dimension mismatch");
    }
    StateVector coeffs = vectors_.adjoint() * x;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs(k) *= std::exp(Complex(0.0, -values_(k) * t));
    }
    return vectors_ * coeffs;
}

DenseOperator HermitianEigensystem::propagator(double t) const {
    Eigen::VectorXcd phases(values_.size());
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
        phases(k) = std::exp(Complex(0.0, -values_(k) * t));
    }
    return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

StateVector exact_evolve(const DenseOperator &h, double t, const StateVector &x) {
    if (h.rows() != x.size()) {
        throw InvalidInput("exact_evolve: dimension mismatch");
    }
    if (t == 0.0) {
        return x;
    }
    return HermitianEigensystem(h).evolve(t, x);
}

double spectral_norm(const DenseOperator &a) {
    if (a.size() == 0) {
        return 0.0;
    }
    const DenseOperator m = a.adjoint() * a;
    const auto n = m.rows();
    StateVector v(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        v(j) = Complex(1.0 + 0.01 * static_cast<double>(j), 0.1 * std::sin(1.0 + j));
    }
    v.normalize();
    double lambda = 0.0;
    constexpr int kMaxIterations = 4000;
    for (int it = 0; it < kMaxIterations; ++it) {
        StateVector w = m * v;
        const double next = v.dot(w).real();
        const double wn = w.norm();
        if (wn == 0.0) {
            return 0.0;
        }
        v = w / wn;
        if (it > 0 && std::abs(next - lambda) <= 1e-13 * std::abs(next)) {
            const double residual = (m * v - next * v).norm();
            if (residual <= 1e-10 * next) {
                return std::sqrt(std::max(next, 0.0));
            }
        }
        lambda = next;
    }
    // Clustered top singular values: fall back to the full decomposition.
    const HermitianEigensystem eig(0.5 * (m + m.adjoint()));
    return std::sqrt(std::max(eig.eigenvalues().maxCoeff(), 0.0));
}

double operator_norm(const DenseOperator &a, NormKind kind) {
    return kind == NormKind::Spectral ? spectral_norm(a) : a.norm();
}

double operator_distance(const DenseOperator &u, const DenseOperator &v,
                         bool mod_phase, NormKind kind) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw InvalidInput("operator_distance: dimension mismatch");
    }
    if (!mod_phase) {
        return operator_norm(u - v, kind);
    }
    const Complex overlap = (v.adjoint() * u).trace();
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : 1.0;
    return operator_norm(u - phase * v, kind);
}

double state_distance(const StateVector &x, const StateVector &y) {
    if (x.size() != y.size()) {
        throw InvalidInput("state_distance: dimension mismatch");
    }
    return (x - y).norm();
}

DenseOperator commutator(const DenseOperator &a, const DenseOperator &b) {
    return a * b - b * a;
}

} // namespace hamsim
