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

#include <cstdint>

#include "hamsim/linalg.hpp"

namespace hamsim {

/// splitmix64; small, seedable and identical on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform in [-1, 1).
    double symmetric() { return 2.0 * uniform() - 1.0; }
    /// Sum of four uniforms minus two: cheap bell-shaped sample.
    double bell() { return uniform() + uniform() + uniform() + uniform() - 2.0; }

  private:
    std::uint64_t state_;
};

/// Normalised state with components uniform in [-1,1) + i[-1,1).
[[nodiscard]] inline StateVector random_state(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    StateVector x(static_cast<Eigen::Index>(n));
    for (auto &v : x) {
        const double re = rng.symmetric();
        const double im = rng.symmetric();
        v = Complex(re, im);
    }
    return x / x.norm();
}

/// Random Hermitian matrix with bell-shaped entries.
[[nodiscard]] inline DenseOperator random_hermitian(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const auto m = static_cast<Eigen::Index>(n);
    DenseOperator h(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        h(j, j) = rng.bell();
        for (Eigen::Index l = j + 1; l < m; ++l) {
            const double re = rng.bell();
            const double im = rng.bell();
            h(j, l) = Complex(re, im);
            h(l, j) = std::conj(h(j, l));
        }
    }
    return h;
}

} // namespace hamsim
