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

#include "hamsim/bessel.hpp"

#include <algorithm>
#include <cmath>

#include "hamsim/errors.hpp"

namespace hamsim {

int miller_start_index(double t, int p) {
    const double top = std::max(static_cast<double>(p), std::ceil(std::abs(t)));
    return static_cast<int>(top) + 15 +
           static_cast<int>(std::ceil(2.0 * std::sqrt(top * std::log(top + 2.0))));
}

BesselTable bessel_table(double t, int p) {
    if (p < 0) {
        throw InvalidInput("Bessel order must be non-negative");
    }
    if (!std::isfinite(t) || std::abs(t) > 1000.0) {
        throw BudgetExceeded("Bessel argument outside supported range");
    }
    BesselTable table{t, std::vector<double>(static_cast<std::size_t>(p) + 1, 0.0)};
    const double x = std::abs(t);
    if (x == 0.0) {
        table.values[0] = 1.0;
        return table;
    }
    if (x < 1e-8) {
        // leading two terms of the power series
        double lead = 1.0;
        for (int k = 0; k <= p; ++k) {
            if (k > 0) {
                lead *= 0.5 * x / k;
            }
            table.values[static_cast<std::size_t>(k)] = lead * (1.0 - 0.25 * x * x / (k + 1));
        }
    } else {
        const int l = miller_start_index(x, p);
        std::vector<double> j(static_cast<std::size_t>(l) + 2, 0.0);
        j[static_cast<std::size_t>(l)] = 1e-30;
        for (int k = l; k >= 1; --k) {
            const auto uk = static_cast<std::size_t>(k);
            j[uk - 1] = (2.0 * k / x) * j[uk] - j[uk + 1];
            if (std::abs(j[uk - 1]) > 1e250) {
                for (std::size_t i = uk - 1; i <= static_cast<std::size_t>(l); ++i) {
                    j[i] *= 1e-250;
                }
            }
        }
        double norm = j[0];
        for (int k = 2; k <= l; k += 2) {
            norm += 2.0 * j[static_cast<std::size_t>(k)];
        }
        for (int k = 0; k <= p; ++k) {
            table.values[static_cast<std::size_t>(k)] = j[static_cast<std::size_t>(k)] / norm;
        }
    }
    if (t < 0.0) {
        for (int k = 1; k <= p; k += 2) {
            table.values[static_cast<std::size_t>(k)] = -table.values[static_cast<std::size_t>(k)];
        }
    }
    return table;
}

} // namespace hamsim
