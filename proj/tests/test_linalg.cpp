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

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "hamsim/errors.hpp"
#include "hamsim/linalg.hpp"
#include "hamsim/random.hpp"

using namespace hamsim;

namespace {

DenseOperator eigen_propagator(const DenseOperator &h, double t) {
    Eigen::SelfAdjointEigenSolver<DenseOperator> es(h);
    const Eigen::VectorXcd phases =
        (es.eigenvalues().cast<Complex>() * Complex(0.0, -t)).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("Jacobi spectrum agrees with Eigen") {
    for (std::size_t n : {1u, 2u, 7u, 20u, 33u}) {
        const auto h = random_hermitian(n, 40 + n);
        const HermitianEigensystem jac(h);
        Eigen::SelfAdjointEigenSolver<DenseOperator> es(h);
        RealVector a = jac.eigenvalues();
        std::sort(a.data(), a.data() + a.size());
        CHECK((a - es.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, h.norm()));
        const DenseOperator v = jac.eigenvectors();
        CHECK((v.adjoint() * v - DenseOperator::Identity(v.rows(), v.cols())).norm() < 1e-12);
        CHECK((v * jac.eigenvalues().cast<Complex>().asDiagonal() * v.adjoint() - h).norm() <
              1e-11 * std::max(1.0, h.norm()));
    }
}

TEST_CASE("exact evolution matches an independent eigensolver") {
    const auto h = random_hermitian(24, 5);
    const auto x = random_state(24, 6);
    for (double t : {0.0, 0.3, 5.0, -2.0}) {
        const StateVector y = exact_evolve(h, t, x);
        CHECK(state_distance(y, eigen_propagator(h, t) * x) < 1e-11);
        CHECK(std::abs(y.norm() - 1.0) < 1e-13);
    }
    const HermitianEigensystem sys(h);
    CHECK(is_unitary(sys.propagator(1.7)));
    CHECK(state_distance(sys.evolve(-1.0, sys.evolve(1.0, x)), x) < 1e-12);
}

TEST_CASE("non-Hermitian input is rejected") {
    DenseOperator a = DenseOperator::Zero(2, 2);
    a(0, 1) = 1.0;
    CHECK_FALSE(is_hermitian(a));
    CHECK_THROWS_AS((void)exact_evolve(a, 1.0, StateVector::Ones(2)), InvalidInput);
}

TEST_CASE("spectral norm agrees with the largest singular value") {
    SplitMix64 rng(9);
    DenseOperator a(9, 6);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            a(i, j) = Complex(rng.bell(), rng.bell());
        }
    }
    Eigen::JacobiSVD<DenseOperator> svd(a);
    CHECK(std::abs(spectral_norm(a) - svd.singularValues()[0]) < 1e-9 * svd.singularValues()[0]);
    CHECK(operator_norm(a, NormKind::Frobenius) == doctest::Approx(a.norm()).epsilon(1e-14));
    CHECK(spectral_norm(DenseOperator::Zero(3, 3)) == 0.0);
}

TEST_CASE("distance modulo global phase") {
    const DenseOperator u = HermitianEigensystem(random_hermitian(5, 2)).propagator(1.0);
    const DenseOperator v = std::exp(Complex(0.0, 0.9)) * u;
    CHECK(operator_distance(u, v) > 0.5);
    CHECK(operator_distance(u, v, true) < 1e-12);
    CHECK(operator_distance(u, v, true, NormKind::Frobenius) < 1e-12);
}

TEST_CASE("commutator and linear combination") {
    const auto a = random_hermitian(4, 1);
    const auto b = random_hermitian(4, 2);
    CHECK((commutator(a, b) + commutator(b, a)).norm() < 1e-15);
    const auto x = random_state(4, 3);
    const auto y = random_state(4, 4);
    CHECK(state_distance(linear_combination(2.0, x, kI, y), 2.0 * x + kI * y) == 0.0);
    CHECK_THROWS_AS((void)linear_combination(1.0, x, 1.0, StateVector::Ones(3)), InvalidInput);
}

TEST_CASE("norm names") {
    CHECK(parse_norm("spectral") == NormKind::Spectral);
    CHECK(parse_norm("frobenius") == NormKind::Frobenius);
    CHECK(std::string(to_string(NormKind::Frobenius)) == "frobenius");
    CHECK_THROWS_AS((void)parse_norm("max"), InvalidInput);
}

}
