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

#include <complex>
#include <cstddef>
#include <string>

#include <Eigen/Dense>

namespace hamsim {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using DenseOperator = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

enum class NormKind { Spectral, Frobenius };

const char *to_string(NormKind kind);
NormKind parse_norm(const std::string &name);

/// Returns a*x + b*y. Throws InvalidInput on dimension mismatch.
StateVector linear_combination(Complex a, const StateVector &x, Complex b,
                               const StateVector &y);

bool is_hermitian(const DenseOperator &h, double tol = 1e-12);
bool is_unitary(const DenseOperator &u, double tol = 1e-10);

/**
 * Eigendecomposition H = V diag(w) V^dagger of a Hermitian matrix by cyclic
 * Jacobi rotations. Sweeps stop once the off-diagonal Frobenius mass drops
 * below 1e-14 ||H||_F.
 */
class HermitianEigensystem {
  public:
    explicit HermitianEigensystem(const DenseOperator &h);

    [[nodiscard]] const RealVector &eigenvalues() const { return values_; }
    [[nodiscard]] const DenseOperator &eigenvectors() const { return vectors_; }
    [[nodiscard]] std::size_t dim() const {
        return static_cast<std::size_t>(values_.size());
    }
    [[nodiscard]] int sweeps() const { return sweeps_; }

    /// exp(-i H t) x.
    [[nodiscard]] StateVector evolve(double t, const StateVector &x) const;
    /// Dense exp(-i H t).
    [[nodiscard]] DenseOperator propagator(double t) const;

  private:
    RealVector values_;
    DenseOperator vectors_;
    int sweeps_ = 0;
};

/// Brute-force oracle exp(-iHt)x; rejects non-Hermitian H.
StateVector exact_evolve(const DenseOperator &h, double t, const StateVector &x);

/// Largest singular value, by power iteration on A^dagger A.
double spectral_norm(const DenseOperator &a);
double operator_norm(const DenseOperator &a, NormKind kind);

/**
 * ||U - V|| in the requested norm. With mod_phase the global phase of V is
 * first aligned to U using phi = arg tr(V^dagger U), the Frobenius-optimal
 * choice.
 */
double operator_distance(const DenseOperator &u, const DenseOperator &v,
                         bool mod_phase = false,
                         NormKind kind = NormKind::Spectral);

/// Euclidean norm of x - y.
double state_distance(const StateVector &x, const StateVector &y);

/// [A, B] = AB - BA.
DenseOperator commutator(const DenseOperator &a, const DenseOperator &b);

} // namespace hamsim
