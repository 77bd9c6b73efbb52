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
#include <vector>

#include "hamsim/chebyshev.hpp"
#include "hamsim/digital.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/projector_series.hpp"
#include "hamsim/random.hpp"

using namespace hamsim;

TEST_SUITE("digital") {

TEST_CASE("encode and decode") {
    const auto x = random_state(10, 3);
    for (auto r : {Rounding::Truncate, Rounding::Nearest}) {
        const FixedPointConfig cfg{20, r};
        const auto s = encode(x, cfg);
        const double ulp = s.ulp();
        const StateVector y = decode(s);
        for (Eigen::Index j = 0; j < x.size(); ++j) {
            const double bound = r == Rounding::Truncate ? ulp : 0.5 * ulp;
            CHECK(std::abs(y[j].real() - x[j].real()) <= bound);
            CHECK(std::abs(y[j].imag() - x[j].imag()) <= bound);
        }
        CHECK(s.exponent_bumps == 0);
    }
    StateVector near_one(1);
    near_one[0] = 1.0 - 1e-12;
    const auto s = encode(near_one, {8, Rounding::Nearest});
    CHECK(s.exponent_bumps == 1);
    CHECK(decode(s)[0].real() == 1.0);
    CHECK_THROWS_AS((void)encode(near_one, {3, Rounding::Truncate}), InvalidInput);
    CHECK(parse_rounding("nearest") == Rounding::Nearest);
    CHECK_THROWS_AS((void)parse_rounding("up"), InvalidInput);
}

TEST_CASE("combine is exact on representable data") {
    StateVector x(3);
    x << Complex(0.5, -0.25), Complex(0.125, 0.0), Complex(-0.75, 0.5);
    const auto s = encode(x, {16, Rounding::Truncate});
    const DigitalTerm terms[] = {
        {&s, {Complex(0.5, 0.0)}, {}, 0},
        {&s, {Complex(0.0, 0.25), Complex(1.0), Complex(-0.5)}, {2, 0, 1}, 1},
    };
    const auto out = combine(terms);
    const StateVector want =
        0.5 * x + 2.0 * StateVector((StateVector(3) << Complex(0.0, 0.25) * x[2], x[0], -0.5 * x[1])
                                        .finished());
    CHECK(state_distance(decode(out), want) == 0.0);
}

TEST_CASE("overflow raises the exponent") {
    StateVector x(2);
    x << 0.9, -0.6;
    const auto s = encode(x, {12, Rounding::Truncate});
    const DigitalTerm terms[] = {{&s, {Complex(3.0)}, {}, 0}};
    const auto out = combine(terms);
    CHECK(out.exponent > s.exponent);
    CHECK(out.exponent_bumps == out.exponent - s.exponent);
    CHECK(std::abs(decode(out)[0].real() - 2.7) < 2 * out.ulp());
}

TEST_CASE("fragments and swaps") {
    const auto parts = laplacian_parts(8);
    const auto r1 = parts.first.reflection();
    const auto x = random_state(8, 4);
    const auto s = encode(x, {30, Rounding::Nearest});
    const auto twice = swap_registers(swap_registers(s, r1), r1);
    CHECK(twice.re == s.re);
    CHECK(twice.im == s.im);
    const Complex r(0.3, -0.2);
    const auto y = fragment_apply(r, r1, s);
    const StateVector want = r * x + r1.apply(x);
    CHECK(state_distance(decode(y), want) < 8 * y.ulp());
    CHECK_THROWS_AS((void)fragment_apply(r, parts.first, s), InvalidInput);
}

TEST_CASE("fixed-point Clenshaw follows the floating recurrence") {
    const auto parts = laplacian_parts(16);
    const PartList list = {parts.first, parts.second};
    const auto window = spectral_bounds(list);
    const auto coeffs = chebyshev_coeffs(2.0, 14);
    const auto x = random_state(16, 5);
    const DigitalHamiltonian h(list, window);
    const auto s = encode(x, {36, Rounding::Nearest});
    const auto got = clenshaw_fixed_point(h, coeffs, s);
    const DenseOperator ht = rescale_operator(dense_sum(list), window);
    const StateVector want = clenshaw_apply(
        [&](const StateVector &v) -> StateVector { return ht * v; }, coeffs, x);
    CHECK(state_distance(decode(got), want) < 1e-8);
}

TEST_CASE("round-off scales one bit per bit") {
    const auto parts = laplacian_parts(16);
    const PartList list = {parts.first, parts.second};
    const auto plan = plan_chebyshev(spectral_bounds(list), 20.0, 1e-6, ChebyshevMode::Stepped);
    const auto x = random_state(16, 1);
    std::vector<int> bits;
    for (int b = 16; b <= 32; b += 4) {
        bits.push_back(b);
    }
    const auto rows = roundoff_scan(list, plan, bits, Rounding::Truncate, x);
    CHECK(rows.size() == bits.size());
    const double slope = roundoff_slope(rows);
    CHECK(slope >= -1.3);
    CHECK(slope <= -0.7);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].error < rows[i - 1].error);
    }
}

TEST_CASE("fixed-point reflection series") {
    const auto parts = laplacian_parts(8);
    const auto r1 = parts.first.reflection();
    const auto r2 = parts.second.reflection();
    const auto x = random_state(8, 6);
    const auto s = reflection_series_fixed_point(r1, r2, 5.0, 1.0, 14, {40, Rounding::Nearest}, x);
    const auto f = evolve_reflection_series(r1, r2, 5.0, 1.0, 14, x);
    CHECK(state_distance(decode(s), f.state) < 1e-9);
}

TEST_CASE("place value, mixer and register observable") {
    for (int b : {1, 2, 3, 5}) {
        const DenseOperator v = place_value_operator(b);
        const Eigen::Index dim = Eigen::Index{1} << b;
        for (Eigen::Index q = 0; q < dim; ++q) {
            CHECK(std::abs(v(q, q) - std::ldexp(static_cast<double>(q), 1 - b)) < 1e-15);
        }
        CHECK((v - DenseOperator(v.diagonal().asDiagonal())).norm() == 0.0);
        const DenseOperator mix = all_bits_mixer(b);
        CHECK((mix - DenseOperator::Ones(dim, dim)).norm() == 0.0);
    }
    const DenseOperator ob = register_observable(4, 3, 0);
    // <q|O|q'> = N q q' 2^(2(e-b))
    CHECK(std::abs(ob(3, 5) - 4.0 * 15.0 / 64.0) < 1e-15);
}

TEST_CASE("observable lift reproduces expectation values") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const std::size_t n = 2 + seed % 7;
        RealVector x = random_state(n, seed).cwiseAbs();
        x /= x.norm();
        const auto oa = random_hermitian(n, seed + 100);
        for (int b = 1; b <= 6; ++b) {
            const auto check = observable_lift_check(oa, b, x, Rounding::Nearest);
            CHECK(check.within());
            CHECK(check.mixer_defect == 0.0);
            CHECK(check.place_value_defect < 1e-15);
        }
    }
    const auto oa = random_hermitian(9, 1);
    CHECK_THROWS_AS((void)observable_lift_check(oa, 3, RealVector::Ones(9), Rounding::Nearest),
                    InvalidInput);
}

}
