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

#include <cmath>

#include "hamsim/bessel.hpp"
#include "hamsim/chebyshev.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/projector_series.hpp"
#include "hamsim/random.hpp"

using namespace hamsim;

TEST_SUITE("chebyshev") {

TEST_CASE("coefficients are scaled Bessel values") {
    const auto c = chebyshev_coeffs(4.0, 12);
    const auto j = bessel_table(4.0, 12);
    CHECK(c[0] == Complex(j[0]));
    const Complex mi(0.0, -1.0);
    for (int k = 1; k <= 12; ++k) {
        CHECK(std::abs(c[k] - 2.0 * std::pow(mi, k) * j[k]) < 1e-15);
    }
}

TEST_CASE("Clenshaw sum equals the dense polynomial") {
    for (std::size_t n : {2u, 5u, 16u}) {
        const auto h = random_hermitian(n, n + 3);
        const auto window = spectral_bounds(h);
        const DenseOperator ht = rescale_operator(h, window);
        const auto x = random_state(n, 8);
        const auto coeffs = chebyshev_coeffs(3.0, 20);
        StateVector want = StateVector::Zero(static_cast<Eigen::Index>(n));
        DenseOperator t0 = DenseOperator::Identity(n, n);
        DenseOperator t1 = ht;
        want += coeffs[0] * (t0 * x) + coeffs[1] * (t1 * x);
        for (int k = 2; k <= 20; ++k) {
            DenseOperator t2 = 2.0 * ht * t1 - t0;
            want += coeffs[k] * (t2 * x);
            t0 = t1;
            t1 = t2;
        }
        int calls = 0;
        const StateVector got =
            clenshaw_apply([&](const StateVector &v) -> StateVector { ++calls; return ht * v; },
                           coeffs, x);
        CHECK(state_distance(got, want) < 1e-11);
        CHECK(calls == 20);
    }
}

TEST_CASE("Gershgorin window encloses the spectrum") {
    const auto h = random_hermitian(12, 4);
    const auto w = spectral_bounds(h);
    const auto values = HermitianEigensystem(h).eigenvalues();
    CHECK(values.minCoeff() >= w.lo);
    CHECK(values.maxCoeff() <= w.hi);
    const auto parts = laplacian_parts(8);
    const PartList list = {parts.first, parts.second};
    const auto wp = spectral_bounds(list);
    CHECK(wp.lo <= 0.0);
    CHECK(wp.hi >= 2.0 - 1e-12);
}

TEST_CASE("rescaling factors out a phase") {
    const auto h = random_hermitian(6, 1);
    const auto w = spectral_bounds(h);
    const auto r = rescale(w, 2.0);
    const auto x = random_state(6, 2);
    const StateVector a = exact_evolve(h, 2.0, x);
    const StateVector b = r.phase * exact_evolve(rescale_operator(h, w), r.t_tilde, x);
    CHECK(state_distance(a, b) < 1e-12);
    CHECK(rescale({1.0, 1.0}, 3.0).degenerate);
}

TEST_CASE("stepped plans meet the requested error") {
    for (double eps : {1e-6, 1e-10}) {
        for (std::uint64_t seed : {1u, 2u}) {
            const auto h = random_hermitian(32, seed);
            const auto x = random_state(32, seed + 10);
            const auto run = evolve_chebyshev(h, 10.0, eps, ChebyshevMode::Stepped, x);
            CHECK(state_distance(run.state, exact_evolve(h, 10.0, x)) < eps);
            CHECK(run.h_applications == run.plan.m * static_cast<std::uint64_t>(run.plan.p));
            CHECK(run.plan.step_tilde <= 3.141592653589793 + 1e-12);
        }
    }
}

TEST_CASE("block parts and dense input agree") {
    const auto parts = laplacian_parts(12);
    const PartList list = {parts.first, parts.second};
    const auto x = random_state(12, 5);
    const auto a = evolve_chebyshev(list, 7.0, 1e-9, ChebyshevMode::Stepped, x);
    CHECK(state_distance(a.state, exact_evolve(periodic_laplacian(12), 7.0, x)) < 1e-9);
    const auto b = evolve_chebyshev(list, 7.0, 1e-9, ChebyshevMode::OneShot, x);
    CHECK(state_distance(b.state, exact_evolve(periodic_laplacian(12), 7.0, x)) < 1e-9);
    CHECK(b.plan.m == 1);
}

TEST_CASE("degenerate window is a pure phase") {
    const DenseOperator h = 0.7 * DenseOperator::Identity(3, 3);
    const auto x = random_state(3, 1);
    const auto run = evolve_chebyshev(h, 2.0, 1e-10, ChebyshevMode::Stepped, x);
    CHECK(state_distance(run.state, std::exp(Complex(0.0, -1.4)) * x) < 1e-14);
}

TEST_CASE("one-shot bound and order selection") {
    for (double tt : {1.0, 10.0, 30.0}) {
        const int p = one_shot_order(tt, 1e-8);
        CHECK(one_shot_bound(tt, p) < 1e-8);
        CHECK(one_shot_bound(tt, p - 1) >= 1e-8);
        CHECK(p > std::exp(1.0) * tt / 2.0);
    }
    CHECK(std::isinf(one_shot_bound(10.0, 2)));
    CHECK(stepped_bound(2.0, 5, 20) == doctest::Approx(5 * one_shot_bound(2.0, 20)));
    CHECK(heuristic_order(100.0, 1e-6) > 0);
}

TEST_CASE("reflection series coefficients are Chebyshev coefficients in (R1+R2)/2") {
    // exp(i(R1+R2)t/2) expanded in T_k((R1+R2)/2): coefficient of T_k is C_k(-t)
    for (double t : {0.5, 2.0, 3.141592653589793}) {
        const auto r = reflection_coeffs(t, 15);
        const auto c = chebyshev_coeffs(-t, 15);
        CHECK(std::abs(r.first[0] - c[0]) < 1e-13);
        for (int k = 1; k <= 15; ++k) {
            CHECK(std::abs(r.first[k] - 0.5 * c[k]) < 1e-13);
            CHECK(std::abs(r.first[k] - (k % 2 == 0 ? 0.5 : -0.5) * chebyshev_coeffs(t, 15)[k]) <
                  1e-13);
        }
    }
}

}
