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
#include "hamsim/hamiltonian.hpp"
#include "hamsim/projector_series.hpp"
#include "hamsim/random.hpp"

using namespace hamsim;

namespace {

struct GoldenRow {
    int k;
    double t;
    double re;
    double im;
};
#include "golden_values.inc"

double close_to(Complex a, Complex b) {
    return std::abs(a - b) / std::max(1e-300, std::abs(b));
}

DenseOperator reflection_of(const DenseOperator &p) {
    return DenseOperator::Identity(p.rows(), p.cols()) - 2.0 * p;
}

} // namespace

TEST_SUITE("projector-series") {

TEST_CASE("projection coefficients against the high-precision oracle") {
    for (const auto &row : kProjectionCoeff) {
        const Complex want(row.re, row.im);
        CHECK(close_to(coeff_projection(row.k, row.t), want) < 1e-13);
    }
    CHECK(coeff_projection(0, 3.0) == Complex(1.0));
}

TEST_CASE("reflection coefficients against the high-precision oracle") {
    for (const auto &row : kReflectionCoeff) {
        const Complex want(row.re, row.im);
        CHECK(std::abs(coeff_reflection(row.k, row.t) - want) <
              1e-13 * std::max(1e-3, std::abs(want)));
    }
}

TEST_CASE("tables share entries and index the identity at 0") {
    const auto p = projection_coeffs(2.0, 9);
    const auto r = reflection_coeffs(2.0, 9);
    CHECK(p.first.size() == 10);
    CHECK(p.first == p.second);
    CHECK(r.first == r.second);
    CHECK(p.identity() == Complex(1.0));
    CHECK(std::abs(r.identity() - coeff_reflection(0, 2.0)) < 1e-15);
    CHECK_THROWS_AS((void)projection_coeffs(2.0, -1), InvalidInput);
    CHECK_THROWS_AS((void)projection_coeffs(100.0, 4), BudgetExceeded);
}

TEST_CASE("converged series reproduce exact evolution for random projectors") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto p1 = random_rank_one_projector(8, seed);
        const auto p2 = random_rank_one_projector(8, seed + 100);
        const DenseOperator h = p1 + p2;
        const auto x = random_state(8, seed + 7);
        const StateVector exact = exact_evolve(h, 2.5, x);
        CHECK(state_distance(evolve_projection_series(p1, p2, 2.5, 1.0, 30, x).state, exact) <
              1e-12);
        CHECK(state_distance(
                  evolve_reflection_series(reflection_of(p1), reflection_of(p2), 2.5, 1.0, 30, x)
                      .state,
                  exact) < 1e-12);
    }
}

TEST_CASE("non-projector input is rejected") {
    const auto h = random_hermitian(4, 1);
    const auto x = random_state(4, 1);
    CHECK_THROWS_AS((void)evolve_projection_series(h, h, 1.0, 1.0, 4, x), InvalidInput);
    CHECK_THROWS_AS((void)evolve_reflection_series(h, h, 1.0, 1.0, 4, x), InvalidInput);
}

TEST_CASE("block parts agree with the dense path and count 2mp applications") {
    const auto parts = laplacian_parts(16);
    const auto x = random_state(16, 2);
    const auto a = evolve_projection_series(parts.first, parts.second, 10.0, 1.0, 12, x);
    const auto b = evolve_projection_series(parts.first.dense(), parts.second.dense(), 10.0, 1.0,
                                            12, x);
    CHECK(state_distance(a.state, b.state) < 1e-13);
    CHECK(a.steps == 10);
    CHECK(a.part_applications == 2 * 10 * 12);
    const auto r = evolve_reflection_series(parts.first.reflection(), parts.second.reflection(),
                                            10.0, std::numbers::pi, 9, x);
    CHECK(r.steps == 4);
    CHECK(r.step == doctest::Approx(2.5));
    CHECK(r.part_applications == 2 * 4 * 9);
}

TEST_CASE("step count rounds up") {
    CHECK(series_steps(0.0, 1.0) == 0);
    CHECK(series_steps(1.0, 1.0) == 1);
    CHECK(series_steps(100.0, std::numbers::pi) == 32);
    CHECK(series_steps(3.0000001, 1.0) == 4);
}

TEST_CASE("truncation bound is monotone and honoured") {
    for (auto scheme : {SeriesScheme::Projection, SeriesScheme::Reflection}) {
        double last = truncation_bound(scheme, 20.0, 1.0, 1);
        for (int p = 2; p < 30; ++p) {
            const double b = truncation_bound(scheme, 20.0, 1.0, p);
            CHECK(b <= last);
            last = b;
        }
        const int p = truncation_order(scheme, 20.0, 1.0, 1e-8);
        CHECK(truncation_bound(scheme, 20.0, 1.0, p) < 1e-8);
        CHECK(truncation_bound(scheme, 20.0, 1.0, p - 1) >= 1e-8);
        const auto parts = laplacian_parts(16);
        const auto x = random_state(16, 3);
        const StateVector exact = exact_evolve(periodic_laplacian(16), 20.0, x);
        const StateVector got =
            scheme == SeriesScheme::Projection
                ? evolve_projection_series(parts.first, parts.second, 20.0, 1.0, p, x).state
                : evolve_reflection_series(parts.first.reflection(), parts.second.reflection(),
                                           20.0, 1.0, p, x)
                      .state;
        CHECK(state_distance(got, exact) < 1e-8);
    }
}

TEST_CASE("unequal weights against dense exponentials") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const auto p1 = random_rank_one_projector(6, seed);
        const auto p2 = random_rank_one_projector(6, seed + 50);
        const auto x = random_state(6, seed + 9);
        for (auto [a1, a2] : {std::pair{0.3, -0.7}, std::pair{1.0, 0.5}, std::pair{-1.0, -1.0}}) {
            const StateVector exact = exact_evolve(a1 * p1 + a2 * p2, 3.0, x);
            CHECK(state_distance(evolve_unequal_series(SeriesScheme::ProjectionUnequal, p1, p2,
                                                       a1, a2, 3.0, 1.0, 25, x)
                                     .state,
                                 exact) < 1e-11);
            CHECK(state_distance(evolve_unequal_series(SeriesScheme::ReflectionUnequal, p1, p2,
                                                       a1, a2, 3.0, 1.0, 25, x)
                                     .state,
                                 exact) < 1e-11);
        }
    }
}

TEST_CASE("unequal tables reduce to the equal-weight ones") {
    const auto u = coeffs_unequal(SeriesScheme::ProjectionUnequal, 1.0, 1.0, 1.0, 10);
    const auto e = projection_coeffs(1.0, 10);
    for (int k = 0; k <= 10; ++k) {
        CHECK(std::abs(u.first[k] - e.first[k]) < 1e-13);
        CHECK(std::abs(u.second[k] - e.second[k]) < 1e-13);
    }
    const auto ru = coeffs_unequal(SeriesScheme::ReflectionUnequal, 1.0, 1.0, 1.0, 10);
    const auto re = reflection_coeffs(1.0, 10);
    for (int k = 1; k <= 10; ++k) {
        CHECK(std::abs(ru.first[k] - re.first[k]) < 1e-13);
    }
}

TEST_CASE("first reflection coefficients from the closed sums") {
    for (auto [a1, a2] : {std::pair{0.3, -0.7}, std::pair{0.9, 0.2}}) {
        const auto table = coeffs_unequal(SeriesScheme::ReflectionUnequal, a1, a2, 0.8, 6);
        const auto init = reflection_initial_coeffs(a1, a2, 0.8);
        CHECK(std::abs(table.first[0] - init.p0) < 1e-13);
        CHECK(std::abs(table.first[1] - init.p1) < 1e-13);
        CHECK(std::abs(table.second[1] - init.q1) < 1e-13);
    }
}

TEST_CASE("product form with correction words") {
    const auto p1 = random_rank_one_projector(5, 3);
    const auto p2 = random_rank_one_projector(5, 4);
    const auto x = random_state(5, 5);
    const double t = 0.6;
    const auto c = bch_form_coeffs(t, 30);
    CHECK(c.first[1] == Complex(0.0));
    CHECK(c.second[1] == Complex(0.0));
    const StateVector corr = apply_word_series(
        c, [&](const StateVector &v) -> StateVector { return p1 * v; },
        [&](const StateVector &v) -> StateVector { return p2 * v; }, x);
    const StateVector got = exact_evolve(p1, t, exact_evolve(p2, t, corr));
    CHECK(state_distance(got, exact_evolve(p1 + p2, t, x)) < 1e-12);
}

}
