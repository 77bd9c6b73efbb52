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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "hamsim/bessel.hpp"
#include "hamsim/projector_series.hpp"

using namespace hamsim;
using Big = boost::multiprecision::cpp_bin_float_100;

namespace {

// J_k(t) = sum_m (-1)^m (t/2)^(2m+k) / (m! (m+k)!)
Big bessel_series(int k, const Big &t) {
    const Big half = t / 2;
    Big term = 1;
    for (int j = 1; j <= k; ++j) {
        term *= half / j;
    }
    Big sum = 0;
    const Big h2 = half * half;
    for (int m = 0; m < 400; ++m) {
        sum += term;
        term *= -h2 / ((m + 1) * (m + 1 + k));
        if (m > 10 && abs(term) < abs(sum) * Big("1e-60") && abs(term) > 0) {
            break;
        }
    }
    return sum;
}

// c_k = (-1)^k e^{-it} sum_{j>=k} (it)^j / j!, real and imaginary parts
void projection_series(int k, const Big &t, Big &re, Big &im) {
    Big tr = 0;
    Big ti = 0;
    Big mag = 1;
    for (int j = 1; j <= k; ++j) {
        mag *= t / j;
    }
    for (int j = k; j < k + 600; ++j) {
        switch (j % 4) {
        case 0: tr += mag; break;
        case 1: ti += mag; break;
        case 2: tr -= mag; break;
        default: ti -= mag; break;
        }
        mag *= t / (j + 1);
        if (j > k + 10 && mag < Big("1e-60")) {
            break;
        }
    }
    const Big c = cos(t);
    const Big s = sin(t);
    const Big sign = (k % 2 == 0) ? 1 : -1;
    re = sign * (c * tr + s * ti);
    im = sign * (c * ti - s * tr);
}

} // namespace

TEST_SUITE("oracles") {

TEST_CASE("Miller recursion against the 100-digit power series") {
    for (double t : {0.01, 0.5, 2.0, 9.75, 21.0, 40.0, 64.0}) {
        const auto table = bessel_table(t, 60);
        for (int k = 0; k <= 60; ++k) {
            const double want = static_cast<double>(bessel_series(k, Big(t)));
            if (std::abs(want) < 1e-290) {
                continue;
            }
            INFO("k=" << k << " t=" << t);
            CHECK(std::abs(table[k] - want) <= 1e-12 * std::abs(want));
        }
    }
}

TEST_CASE("projection coefficients against the 100-digit sum") {
    for (double t : {0.25, 1.0, 3.141592653589793, 12.0, 40.0}) {
        for (int k : {1, 2, 3, 6, 11, 20, 35, 60}) {
            Big re, im;
            projection_series(k, Big(t), re, im);
            const Complex want(static_cast<double>(re), static_cast<double>(im));
            const Complex got = coeff_projection(k, t);
            INFO("k=" << k << " t=" << t);
            CHECK(std::abs(got - want) <= 1e-13 * std::max(std::abs(want), 1e-300) + 1e-300);
        }
    }
}

}
