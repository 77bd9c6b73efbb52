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

#include <vector>

namespace hamsim {

/// J_0(t) .. J_p(t).
struct BesselTable {
    double t = 0.0;
    std::vector<double> values;

    [[nodiscard]] int order() const { return static_cast<int>(values.size()) - 1; }
    [[nodiscard]] double operator[](int k) const { return values[static_cast<std::size_t>(k)]; }
};

/// First index of the downward recursion for orders up to p at argument t.
[[nodiscard]] int miller_start_index(double t, int p);

/**
 * Bessel functions of the first kind by Miller's downward recursion,
 * normalised with J_0 + 2 sum_k J_2k = 1. Negative t uses
 * J_k(-t) = (-1)^k J_k(t). Valid for |t| <= 1000.
 */
[[nodiscard]] BesselTable bessel_table(double t, int p);

} // namespace hamsim
