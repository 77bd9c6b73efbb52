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

#include "hamsim/chebyshev.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "hamsim/bessel.hpp"
#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

constexpr int kOneShotCap = 512;
constexpr int kSteppedCap = 200;
constexpr double kPi = 3.14159265358979323846;

} // namespace

SpectralWindow spectral_bounds(const DenseOperator &h) {
    if (h.rows() == 0 || !is_hermitian(h, 1e-10)) {
        throw InvalidInput("spectral bounds need a non-empty Hermitian matrix");
    }
    SpectralWindow w{std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity()};
    for (Eigen::Index j = 0; j < h.rows(); ++j) {
        double radius = 0.0;
        for (Eigen::Index l = 0; l < h.cols(); ++l) {
            if (l != j) {
                radius += std::abs(h(j, l));
            }
        }
        w.lo = std::min(w.lo, h(j, j).real() - radius);
        w.hi = std::max(w.hi, h(j, j).real() + radius);
    }
    return w;
}

SpectralWindow spectral_bounds(std::span<const BlockDiagonalPart> parts) {
    if (parts.empty()) {
        throw InvalidInput("empty part list");
    }
    const std::size_t n = parts.front().dim();
    std::vector<double> diag(n, 0.0);
    std::map<std::pair<std::size_t, std::size_t>, Complex> off;
    for (const auto &part : parts) {
        if (part.dim() != n) {
            throw InvalidInput("parts have different dimensions");
        }
        for (const auto &b : part.blocks()) {
            diag[b.first] += b.d0;
            if (!b.single()) {
                diag[b.second] += b.d1;
                off[{b.first, b.second}] += b.off;
                off[{b.second, b.first}] += std::conj(b.off);
            }
        }
    }
    std::vector<double> radius(n, 0.0);
    for (const auto &[key, v] : off) {
        radius[key.first] += std::abs(v);
    }
    SpectralWindow w{std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity()};
    for (std::size_t j = 0; j < n; ++j) {
        w.lo = std::min(w.lo, diag[j] - radius[j]);
        w.hi = std::max(w.hi, diag[j] + radius[j]);
    }
    return w;
}

Rescaling rescale(const SpectralWindow &window, double t) {
    if (!(window.hi >= window.lo) || !std::isfinite(window.lo) || !std::isfinite(window.hi)) {
        throw InvalidInput("spectral window must satisfy lo <= hi");
    }
    Rescaling r;
    r.phase = std::exp(Complex(0.0, -window.center() * t));
    r.degenerate = window.hi == window.lo;
    r.t_tilde = t * window.half_width();
    return r;
}

DenseOperator rescale_operator(const DenseOperator &h, const SpectralWindow &window) {
    if (!(window.hi > window.lo)) {
        throw InvalidInput("degenerate window");
    }
    const auto id = DenseOperator::Identity(h.rows(), h.cols());
    return (2.0 * h - (window.hi + window.lo) * id) / (window.hi - window.lo);
}

std::vector<Complex> chebyshev_coeffs(double t, int p) {
    const auto table = bessel_table(t, p);
    static constexpr Complex kPow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    std::vector<Complex> c(static_cast<std::size_t>(p) + 1);
    c[0] = table[0];
    for (int k = 1; k <= p; ++k) {
        c[static_cast<std::size_t>(k)] = 2.0 * kPow[k % 4] * table[k];
    }
    return c;
}

StateVector clenshaw_apply(const ApplyFn &h_tilde, std::span<const Complex> coeffs,
                           const StateVector &x) {
    if (coeffs.empty()) {
        throw InvalidInput("Clenshaw needs at least one coefficient");
    }
    const std::size_t p = coeffs.size() - 1;
    if (p == 0) {
        return coeffs[0] * x;
    }
    StateVector y1 = coeffs[p] * x;               // y_{k+1}
    StateVector y2 = StateVector::Zero(x.size()); // y_{k+2}
    StateVector y3 = y2;                          // y_{k+3}
    for (std::size_t k = p; k-- > 0;) {
        StateVector y0 = coeffs[k] * x + 2.0 * h_tilde(y1) - y2;
        y3 = std::move(y2);
        y2 = std::move(y1);
        y1 = std::move(y0);
    }
    // y1 = y_0, y3 = y_2
    return 0.5 * (coeffs[0] * x + y1 - y3);
}

double one_shot_bound(double t_tilde, int p) {
    const double t = std::abs(t_tilde);
    if (t == 0.0) {
        return 0.0;
    }
    const double f = 1.0 - t / (2.0 * (p + 2.0));
    if (f <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::exp((p + 1.0) * std::log(t) - p * std::log(2.0) - std::lgamma(p + 2.0)) / f;
}

int one_shot_order(double t_tilde, double eps) {
    if (!(eps > 0.0)) {
        throw InvalidInput("target error must be positive");
    }
    for (int p = 0; p <= kOneShotCap; ++p) {
        if (one_shot_bound(t_tilde, p) < eps) {
            return p;
        }
    }
    throw BudgetExceeded("one-shot order exceeds 512");
}

double stepped_bound(double s, std::uint64_t m, int p) {
    return static_cast<double>(m) * one_shot_bound(s, p);
}

int heuristic_order(double t, double eps) {
    const double r = t / eps;
    if (!(r > std::exp(1.0))) {
        return 1;
    }
    const double l = std::log(r);
    const double ll = std::log(l);
    if (ll <= 0.0) {
        return 1;
    }
    return static_cast<int>(std::ceil(2.0 * l / ll));
}

ChebyshevPlan plan_chebyshev(const SpectralWindow &window, double t, double eps,
                             ChebyshevMode mode, int order) {
    if (!std::isfinite(t) || t < 0.0) {
        throw InvalidInput("evolution time must be finite and non-negative");
    }
    if (!(eps > 0.0)) {
        throw InvalidInput("target error must be positive");
    }
    const Rescaling r = rescale(window, t);
    ChebyshevPlan plan;
    plan.window = window;
    plan.mode = mode;
    plan.t = t;
    plan.t_tilde = r.t_tilde;
    plan.degenerate = r.degenerate;
    if (r.degenerate || t == 0.0) {
        plan.m = t == 0.0 ? 0 : 1;
        plan.step_phase = r.phase;
        plan.coeffs = {1.0};
        return plan;
    }
    if (mode == ChebyshevMode::OneShot) {
        plan.m = 1;
        plan.step_tilde = r.t_tilde;
        plan.p = order >= 0 ? order : one_shot_order(r.t_tilde, eps);
    } else {
        plan.m = static_cast<std::uint64_t>(std::ceil(r.t_tilde / kPi * (1.0 - 1e-14)));
        plan.m = std::max<std::uint64_t>(plan.m, 1);
        plan.step_tilde = r.t_tilde / static_cast<double>(plan.m);
        if (order >= 0) {
            plan.p = order;
        } else {
            plan.p = -1;
            for (int p = 0; p <= kSteppedCap; ++p) {
                if (stepped_bound(plan.step_tilde, plan.m, p) < eps) {
                    plan.p = p;
                    break;
                }
            }
            if (plan.p < 0) {
                throw BudgetExceeded("stepped Chebyshev order exceeds 200");
            }
        }
    }
    if (plan.p > kOneShotCap) {
        throw BudgetExceeded("Chebyshev order exceeds 512");
    }
    const double step_t = t / static_cast<double>(plan.m);
    plan.step_phase = std::exp(Complex(0.0, -window.center() * step_t));
    plan.coeffs = chebyshev_coeffs(plan.step_tilde, plan.p);
    return plan;
}

ChebyshevRun run_chebyshev(const ApplyFn &h, const ChebyshevPlan &plan, const StateVector &x) {
    ChebyshevRun run{x, plan, 0};
    if (plan.m == 0) {
        return run;
    }
    if (plan.degenerate) {
        run.state = plan.step_phase * x;
        return run;
    }
    const double c = plan.window.hi + plan.window.lo;
    const double inv = 1.0 / (plan.window.hi - plan.window.lo);
    const ApplyFn h_tilde = [&](const StateVector &v) -> StateVector {
        return (2.0 * h(v) - c * v) * inv;
    };
    for (std::uint64_t s = 0; s < plan.m; ++s) {
        run.state = plan.step_phase * clenshaw_apply(h_tilde, plan.coeffs, run.state);
    }
    run.h_applications = plan.m * static_cast<std::uint64_t>(plan.p);
    return run;
}

ChebyshevRun evolve_chebyshev(const DenseOperator &h, double t, double eps, ChebyshevMode mode,
                              const StateVector &x) {
    const auto plan = plan_chebyshev(spectral_bounds(h), t, eps, mode);
    return run_chebyshev([&h](const StateVector &v) -> StateVector { return h * v; }, plan, x);
}

ChebyshevRun evolve_chebyshev(std::span<const BlockDiagonalPart> parts, double t, double eps,
                              ChebyshevMode mode, const StateVector &x) {
    const auto plan = plan_chebyshev(spectral_bounds(parts), t, eps, mode);
    return run_chebyshev([parts](const StateVector &v) { return apply_sum(parts, v); }, plan, x);
}

} // namespace hamsim
