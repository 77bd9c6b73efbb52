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
#include <numbers>

#include "hamsim/errors.hpp"
#include "hamsim/grover.hpp"
#include "hamsim/hamiltonian.hpp"

using namespace hamsim;

TEST_SUITE("grover") {

TEST_CASE("Grover operator is the product of two reflections in the frame") {
    for (std::size_t n : {2u, 4u, 9u, 64u}) {
        const auto m = static_cast<Eigen::Index>(n);
        const StateVector s = uniform_state(n);
        StateVector t = StateVector::Zero(m);
        t[0] = 1.0;
        const DenseOperator id = DenseOperator::Identity(m, m);
        const DenseOperator full =
            -(id - 2.0 * s * s.adjoint()) * (id - 2.0 * t * t.adjoint());
        const DenseOperator b = frame_basis(n);
        CHECK((b.adjoint() * full * b - grover_operator(n)).norm() < 1e-14);
        DenseOperator cube = grover_operator(n) * grover_operator(n) * grover_operator(n);
        CHECK((grover_power(n, 3.0) - cube).norm() < 1e-13);
        CHECK(grover_step_time(n) > 0.0);
    }
}

TEST_CASE("search success") {
    const auto four = search_run(4);
    CHECK(four.steps == 1);
    CHECK(std::abs(four.success_probability - 1.0) < 1e-12);
    for (std::size_t n = 2; n <= (1u << 16); n *= 2) {
        const auto r = search_run(n);
        CHECK(r.success_probability >= 1.0 - 1.0 / static_cast<double>(n));
    }
}

TEST_CASE("continuous and discrete evolutions agree") {
    for (std::size_t n : {2u, 4u, 16u, 64u, 256u}) {
        CHECK(equivalence_check_integral(n) < 1e-10);
        for (double a : {-1.0, -0.5, 0.3, 1.0}) {
            const double period = std::numbers::pi / (2.0 * rotation_rate(n, a));
            for (int k = 0; k < 20; ++k) {
                const double t = period * k / 20.0;
                CHECK(equivalence_check_unequal(n, a, t) < 1e-10);
            }
        }
        CHECK(equivalence_check_fractional(n, 0.3) < 1e-10);
    }
}

TEST_CASE("continuous evolution is the exponential of the search Hamiltonian") {
    for (double a : {1.0, 0.3}) {
        const auto hs = search_hamiltonians({16, a});
        const DenseOperator u = HermitianEigensystem(hs.h_c).propagator(1.3);
        CHECK(operator_distance(u, continuous_evolution(16, a, 1.3), true) < 1e-12);
    }
}

TEST_CASE("axis and Bloch map") {
    const auto axis = rotation_axis(16, 0.3);
    CHECK(std::hypot(axis[0], axis[1], axis[2]) == doctest::Approx(1.0));
    StateVector t(2);
    t << 1.0, 0.0;
    const auto b = bloch_map(t);
    CHECK(b[2] == doctest::Approx(1.0));
    const auto s = frame_start_state(16);
    const auto bs = bloch_map(s);
    const auto br = bloch_map(DenseOperator(s * s.adjoint()));
    for (int i = 0; i < 3; ++i) {
        CHECK(bs[i] == doctest::Approx(br[i]));
    }
    CHECK(closest_approach_probability(16, 1.0) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(closest_approach_probability(16, 0.3) < 1.0 - 1e-3);
    CHECK_THROWS_AS((void)grover_angle(1), InvalidInput);
}

}
