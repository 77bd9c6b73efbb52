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
#include "hamsim/errors.hpp"

using namespace hamsim;

namespace {

struct GoldenRow {
    int k;
    double t;
    double re;
    double im;
};
#include "golden_values.inc"

} // namespace

TEST_SUITE("bessel") {

TEST_CASE("Miller recursion against the high-precision table") {
    for (const auto &row : kBesselJ) {
        const auto table = bessel_table(row.t, 60);
        CHECK(std::abs(table[row.k] - row.re) <= 1e-12 * std::abs(row.re));
    }
}

TEST_CASE("normalisation sum") {
    for (double t : {0.1, 1.0, 5.5, 20.0, 64.0, 300.0}) {
        const auto table = bessel_table(t, 10);
        // re-evaluate with enough orders to hold the whole sum
        const auto full = bessel_table(t, static_cast<int>(t + 10.0 * std::cbrt(t)) + 30);
        double s = full[0];
        for (int k = 2; k <= full.order(); k += 2) {
            s += 2.0 * full[k];
        }
        CHECK(std::abs(s - 1.0) < 1e-12);
        CHECK(table.order() == 10);
        CHECK(table[3] == doctest::Approx(full[3]).epsilon(1e-13));
    }
}

TEST_CASE("special arguments") {
    const auto zero = bessel_table(0.0, 5);
    CHECK(zero[0] == 1.0);
    for (int k = 1; k <= 5; ++k) {
        CHECK(zero[k] == 0.0);
    }
    const auto tiny = bessel_table(1e-10, 3);
    CHECK(tiny[1] == doctest::Approx(5e-11).epsilon(1e-14));
    const auto pos = bessel_table(7.3, 9);
    const auto neg = bessel_table(-7.3, 9);
    for (int k = 0; k <= 9; ++k) {
        CHECK(neg[k] == doctest::Approx((k % 2 == 0 ? 1 : -1) * pos[k]).epsilon(1e-15));
    }
    CHECK(miller_start_index(50.0, 10) > 50);
    CHECK(miller_start_index(1.0, 30) > 30);
    CHECK_THROWS_AS((void)bessel_table(1001.0, 3), BudgetExceeded);
    CHECK_THROWS_AS((void)bessel_table(1.0, -1), InvalidInput);
}

}
