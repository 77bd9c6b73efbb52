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

#include "hamsim/digital.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

__extension__ typedef __int128 i128;

std::int64_t quantize(double v, Rounding r) {
    return static_cast<std::int64_t>(r == Rounding::Truncate ? std::trunc(v) : std::round(v));
}

/// v * 2^-sh with sign-magnitude rounding; sh may be negative.
i128 shift_round(i128 v, int sh, Rounding r) {
    if (sh <= 0) {
        return v << (-sh);
    }
    if (sh >= 126) {
        return 0;
    }
    const bool neg = v < 0;
    i128 mag = neg ? -v : v;
    if (r == Rounding::Nearest) {
        mag += static_cast<i128>(1) << (sh - 1);
    }
    mag >>= sh;
    return neg ? -mag : mag;
}

int exponent_for(double max_abs) {
    if (max_abs <= 0.0) {
        return 0;
    }
    return static_cast<int>(std::floor(std::log2(max_abs))) + 1;
}

DigitalState zero_like(const DigitalState &s) {
    DigitalState z;
    z.config = s.config;
    z.exponent = s.exponent;
    z.re.assign(s.dim(), 0);
    z.im.assign(s.dim(), 0);
    z.exponent_bumps = s.exponent_bumps;
    return z;
}

void check_reflection(const BlockDiagonalPart &r) {
    if (!r.is_reflection()) {
        throw InvalidInput("fragment needs a reflection part");
    }
}

/// Diagonal and swapped-partner coefficients of a part.
void part_coefficients(const BlockDiagonalPart &part, std::vector<Complex> &diag,
                       std::vector<Complex> &off) {
    diag.assign(part.dim(), 0.0);
    off.assign(part.dim(), 0.0);
    for (const auto &b : part.blocks()) {
        diag[b.first] = b.d0;
        if (!b.single()) {
            diag[b.second] = b.d1;
            off[b.first] = b.off;
            off[b.second] = std::conj(b.off);
        }
    }
}

} // namespace

const char *to_string(Rounding r) { return r == Rounding::Truncate ? "truncate" : "nearest"; }

Rounding parse_rounding(const std::string &name) {
    if (name == "truncate") {
        return Rounding::Truncate;
    }
    if (name == "nearest") {
        return Rounding::Nearest;
    }
    throw InvalidInput("unknown rounding mode '" + name + "'");
}

void FixedPointConfig::validate() const {
    if (bits < 4 || bits > 52) {
        throw InvalidInput("register width must lie in [4, 52]");
    }
}

double DigitalState::ulp() const { return std::ldexp(1.0, exponent - config.bits); }

DigitalState encode(const StateVector &x, const FixedPointConfig &cfg) {
    cfg.validate();
    double max_abs = 0.0;
    for (const auto &v : x) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw InvalidInput("cannot encode non-finite amplitudes");
        }
        max_abs = std::max({max_abs, std::abs(v.real()), std::abs(v.imag())});
    }
    DigitalState s;
    s.config = cfg;
    s.exponent = exponent_for(max_abs);
    const auto limit = static_cast<std::int64_t>(1) << cfg.bits;
    for (;;) {
        s.re.clear();
        s.im.clear();
        bool ok = true;
        for (const auto &v : x) {
            const auto qr = quantize(std::ldexp(v.real(), cfg.bits - s.exponent), cfg.rounding);
            const auto qi = quantize(std::ldexp(v.imag(), cfg.bits - s.exponent), cfg.rounding);
            ok = ok && std::abs(qr) < limit && std::abs(qi) < limit;
            s.re.push_back(qr);
            s.im.push_back(qi);
        }
        if (ok) {
            return s;
        }
        ++s.exponent;
        ++s.exponent_bumps;
    }
}

StateVector decode(const DigitalState &s) {
    StateVector x(static_cast<Eigen::Index>(s.dim()));
    const int sh = s.exponent - s.config.bits;
    for (std::size_t j = 0; j < s.dim(); ++j) {
        x[static_cast<Eigen::Index>(j)] =
            Complex(std::ldexp(static_cast<double>(s.re[j]), sh),
                    std::ldexp(static_cast<double>(s.im[j]), sh));
    }
    return x;
}

DigitalState swap_registers(const DigitalState &s, const BlockDiagonalPart &part) {
    if (part.dim() != s.dim()) {
        throw InvalidInput("part and register dimensions differ");
    }
    DigitalState out = s;
    for (const auto &b : part.blocks()) {
        if (!b.single()) {
            std::swap(out.re[b.first], out.re[b.second]);
            std::swap(out.im[b.first], out.im[b.second]);
        }
    }
    return out;
}

DigitalState combine(std::span<const DigitalTerm> terms) {
    if (terms.empty() || terms.front().source == nullptr) {
        throw InvalidInput("combine needs at least one term");
    }
    const DigitalState &first = *terms.front().source;
    const FixedPointConfig cfg = first.config;
    const int b = cfg.bits;
    const std::size_t n = first.dim();

    struct Prepared {
        const DigitalTerm *term;
        std::vector<std::int64_t> cre, cim;
        int e_total;
    };
    std::vector<Prepared> prep;
    prep.reserve(terms.size());
    int e_out = std::numeric_limits<int>::min();
    int bumps = 0;
    for (const auto &t : terms) {
        if (t.source == nullptr || t.source->dim() != n) {
            throw InvalidInput("combine terms have different dimensions");
        }
        if (t.source->config.bits != b || t.source->config.rounding != cfg.rounding) {
            throw InvalidInput("combine terms use different register formats");
        }
        if (t.coeff.size() != 1 && t.coeff.size() != n) {
            throw InvalidInput("coefficient vector has the wrong length");
        }
        if (!t.index.empty() && t.index.size() != n) {
            throw InvalidInput("index map has the wrong length");
        }
        double cmax = 0.0;
        for (const auto &c : t.coeff) {
            cmax = std::max({cmax, std::abs(c.real()), std::abs(c.imag())});
        }
        const int e_c = std::max(1, exponent_for(cmax));
        Prepared p{&t, {}, {}, e_c + t.source->exponent + t.shift - 2 * b};
        for (const auto &c : t.coeff) {
            p.cre.push_back(quantize(std::ldexp(c.real(), b - e_c), cfg.rounding));
            p.cim.push_back(quantize(std::ldexp(c.imag(), b - e_c), cfg.rounding));
        }
        e_out = std::max(e_out, t.source->exponent);
        bumps = std::max(bumps, t.source->exponent_bumps);
        prep.push_back(std::move(p));
    }
    int e_max = std::numeric_limits<int>::min();
    for (const auto &p : prep) {
        e_max = std::max(e_max, p.e_total);
    }
    int log_terms = 0;
    while ((std::size_t{1} << log_terms) < prep.size() + 1) {
        ++log_terms;
    }
    const int headroom = std::clamp(124 - (2 * b + 1) - log_terms, 0, 20);
    const int e_ref = e_max - headroom;

    std::vector<i128> acc_re(n, 0);
    std::vector<i128> acc_im(n, 0);
    for (const auto &p : prep) {
        const DigitalState &src = *p.term->source;
        const int d = p.e_total - e_ref;
        const bool scalar = p.cre.size() == 1;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t k = p.term->index.empty() ? j : p.term->index[j];
            const i128 cr = scalar ? p.cre[0] : p.cre[j];
            const i128 ci = scalar ? p.cim[0] : p.cim[j];
            if (cr == 0 && ci == 0) {
                continue;
            }
            const i128 vr = src.re[k];
            const i128 vi = src.im[k];
            acc_re[j] += shift_round(cr * vr - ci * vi, -d, Rounding::Truncate);
            acc_im[j] += shift_round(cr * vi + ci * vr, -d, Rounding::Truncate);
        }
    }

    DigitalState out;
    out.config = cfg;
    out.re.resize(n);
    out.im.resize(n);
    const i128 limit = static_cast<i128>(1) << b;
    for (;;) {
        const int sh = (e_out - b) - e_ref;
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            const i128 qr = shift_round(acc_re[j], sh, cfg.rounding);
            const i128 qi = shift_round(acc_im[j], sh, cfg.rounding);
            ok = qr < limit && -qr < limit && qi < limit && -qi < limit;
            out.re[j] = static_cast<std::int64_t>(qr);
            out.im[j] = static_cast<std::int64_t>(qi);
        }
        if (ok) {
            break;
        }
        ++e_out;
        ++bumps;
    }
    out.exponent = e_out;
    out.exponent_bumps = bumps;
    return out;
}

DigitalState fragment_apply(Complex r, const BlockDiagonalPart &reflection,
                            const DigitalState &x) {
    return fragment_apply(r, x, reflection, x);
}

DigitalState fragment_apply(Complex r, const DigitalState &x,
                            const BlockDiagonalPart &reflection, const DigitalState &z) {
    check_reflection(reflection);
    std::vector<Complex> diag;
    std::vector<Complex> off;
    part_coefficients(reflection, diag, off);
    const DigitalState swapped = swap_registers(z, reflection);
    const DigitalTerm terms[] = {
        {&x, {r}, {}, 0},
        {&z, diag, {}, 0},
        {&swapped, off, {}, 0},
    };
    return combine(terms);
}

DigitalHamiltonian::DigitalHamiltonian(std::span<const BlockDiagonalPart> parts,
                                       const SpectralWindow &window) {
    if (parts.empty()) {
        throw InvalidInput("empty part list");
    }
    if (!(window.hi > window.lo)) {
        throw InvalidInput("degenerate spectral window");
    }
    dim_ = parts.front().dim();
    const double a = 2.0 / (window.hi - window.lo);
    const double shift = -(window.hi + window.lo) / (window.hi - window.lo);
    diag_.assign(dim_, shift);
    for (const auto &part : parts) {
        if (part.dim() != dim_) {
            throw InvalidInput("parts have different dimensions");
        }
        std::vector<Complex> off(dim_, 0.0);
        std::vector<std::size_t> partner(dim_);
        bool any = false;
        for (std::size_t j = 0; j < dim_; ++j) {
            partner[j] = j;
        }
        for (const auto &b : part.blocks()) {
            diag_[b.first] += a * b.d0;
            if (!b.single()) {
                diag_[b.second] += a * b.d1;
                off[b.first] = a * b.off;
                off[b.second] = a * std::conj(b.off);
                partner[b.first] = b.second;
                partner[b.second] = b.first;
                any = true;
            }
        }
        if (any) {
            off_.push_back(std::move(off));
            partner_.push_back(std::move(partner));
        }
    }
}

void DigitalHamiltonian::append_terms(const DigitalState &y, double factor, int shift,
                                      std::vector<DigitalTerm> &out) const {
    std::vector<Complex> d(diag_);
    for (auto &c : d) {
        c *= factor;
    }
    out.push_back({&y, std::move(d), {}, shift});
    for (std::size_t i = 0; i < off_.size(); ++i) {
        std::vector<Complex> o(off_[i]);
        for (auto &c : o) {
            c *= factor;
        }
        out.push_back({&y, std::move(o), partner_[i], shift});
    }
}

DigitalState clenshaw_fixed_point(const DigitalHamiltonian &h, std::span<const Complex> coeffs,
                                  const DigitalState &x) {
    if (coeffs.empty()) {
        throw InvalidInput("Clenshaw needs at least one coefficient");
    }
    if (h.dim() != x.dim()) {
        throw InvalidInput("Hamiltonian and register dimensions differ");
    }
    const std::size_t p = coeffs.size() - 1;
    {
        const DigitalTerm t0[] = {{&x, {coeffs[p]}, {}, 0}};
        if (p == 0) {
            return combine(t0);
        }
    }
    const DigitalTerm tp[] = {{&x, {coeffs[p]}, {}, 0}};
    DigitalState y1 = combine(tp);
    DigitalState y2 = zero_like(x);
    DigitalState y3 = zero_like(x);
    std::vector<DigitalTerm> terms;
    for (std::size_t k = p; k-- > 0;) {
        terms.clear();
        terms.push_back({&x, {coeffs[k]}, {}, 0});
        h.append_terms(y1, 1.0, 1, terms); // 2 H~ as an exact shift
        terms.push_back({&y2, {Complex(-1.0, 0.0)}, {}, 0});
        DigitalState y0 = combine(terms);
        y3 = std::move(y2);
        y2 = std::move(y1);
        y1 = std::move(y0);
    }
    const DigitalTerm fin[] = {
        {&x, {coeffs[0]}, {}, -1},
        {&y1, {Complex(1.0, 0.0)}, {}, -1},
        {&y3, {Complex(-1.0, 0.0)}, {}, -1},
    };
    return combine(fin);
}

DigitalState chebyshev_fixed_point(std::span<const BlockDiagonalPart> parts,
                                   const ChebyshevPlan &plan, const FixedPointConfig &cfg,
                                   const StateVector &x) {
    DigitalState s = encode(x, cfg);
    if (plan.m == 0) {
        return s;
    }
    if (plan.degenerate) {
        const DigitalTerm t[] = {{&s, {plan.step_phase}, {}, 0}};
        return combine(t);
    }
    const DigitalHamiltonian h(parts, plan.window);
    std::vector<Complex> phased(plan.coeffs);
    for (auto &c : phased) {
        c *= plan.step_phase;
    }
    for (std::uint64_t step = 0; step < plan.m; ++step) {
        s = clenshaw_fixed_point(h, phased, s);
    }
    return s;
}

DigitalState reflection_series_fixed_point(const BlockDiagonalPart &r1,
                                           const BlockDiagonalPart &r2, double t, double dt,
                                           int p, const FixedPointConfig &cfg,
                                           const StateVector &x) {
    check_reflection(r1);
    check_reflection(r2);
    DigitalState s = encode(x, cfg);
    const auto m = series_steps(t, dt);
    if (m == 0) {
        return s;
    }
    const double step = t / static_cast<double>(m);
    auto coeffs = reflection_coeffs(step, p);
    const Complex phase = std::exp(Complex(0.0, -step));
    for (auto &c : coeffs.first) {
        c *= phase;
    }
    const auto &f = coeffs.first;
    auto sweep = [&](const DigitalState &v, const BlockDiagonalPart &odd,
                     const BlockDiagonalPart &even) {
        const DigitalTerm tp[] = {{&v, {f[static_cast<std::size_t>(p)]}, {}, 0}};
        DigitalState z = combine(tp);
        for (int k = p; k >= 2; --k) {
            z = fragment_apply(f[static_cast<std::size_t>(k) - 1], v, k % 2 == 1 ? odd : even, z);
        }
        // final factor without an added multiple of v
        return fragment_apply(0.0, v, odd, z);
    };
    for (std::uint64_t step_i = 0; step_i < m; ++step_i) {
        if (p == 0) {
            const DigitalTerm t0[] = {{&s, {f[0]}, {}, 0}};
            s = combine(t0);
            continue;
        }
        const DigitalState w1 = sweep(s, r1, r2);
        const DigitalState w2 = sweep(s, r2, r1);
        const DigitalTerm sum[] = {
            {&s, {f[0]}, {}, 0},
            {&w1, {Complex(1.0, 0.0)}, {}, 0},
            {&w2, {Complex(1.0, 0.0)}, {}, 0},
        };
        s = combine(sum);
    }
    return s;
}

std::vector<RoundoffRow> roundoff_scan(std::span<const BlockDiagonalPart> parts,
                                       const ChebyshevPlan &plan, std::span<const int> bits,
                                       Rounding rounding, const StateVector &x) {
    const auto reference =
        run_chebyshev([parts](const StateVector &v) { return apply_sum(parts, v); }, plan, x)
            .state;
    std::vector<RoundoffRow> rows;
    for (const int b : bits) {
        const FixedPointConfig cfg{b, rounding};
        const auto s = chebyshev_fixed_point(parts, plan, cfg, x);
        rows.push_back({b, state_distance(decode(s), reference), s.exponent_bumps});
    }
    return rows;
}

double roundoff_slope(std::span<const RoundoffRow> rows) {
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    double n = 0.0;
    for (const auto &r : rows) {
        if (!(r.error > 0.0)) {
            continue;
        }
        const double x = r.bits;
        const double y = std::log2(r.error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        n += 1.0;
    }
    if (n < 2.0) {
        throw InvalidInput("slope needs at least two non-zero errors");
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DenseOperator place_value_operator(int b) {
    if (b < 1 || b > 12) {
        throw InvalidInput("place value operator limited to 1..12 bits");
    }
    // sum_k 2^-k (1 - s3)/2 on bit k, bit 0 most significant
    const DenseOperator id = DenseOperator::Identity(2, 2);
    DenseOperator one = DenseOperator::Zero(2, 2);
    one(1, 1) = 1.0;
    const auto dim = static_cast<Eigen::Index>(1) << b;
    DenseOperator v = DenseOperator::Zero(dim, dim);
    for (int k = 0; k < b; ++k) {
        DenseOperator term = DenseOperator::Identity(1, 1);
        for (int i = 0; i < b; ++i) {
            const DenseOperator &f = i == k ? one : id;
            DenseOperator next(term.rows() * 2, term.cols() * 2);
            for (Eigen::Index r = 0; r < term.rows(); ++r) {
                for (Eigen::Index c = 0; c < term.cols(); ++c) {
                    next.block(2 * r, 2 * c, 2, 2) = term(r, c) * f;
                }
            }
            term = std::move(next);
        }
        v += std::ldexp(1.0, -k) * term;
    }
    return v;
}

DenseOperator all_bits_mixer(int b) {
    if (b < 1 || b > 12) {
        throw InvalidInput("mixer limited to 1..12 bits");
    }
    DenseOperator f(2, 2);
    f << 1.0, 1.0, 1.0, 1.0;
    DenseOperator out = DenseOperator::Identity(1, 1);
    for (int i = 0; i < b; ++i) {
        DenseOperator next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block(2 * r, 2 * c, 2, 2) = out(r, c) * f;
            }
        }
        out = std::move(next);
    }
    return out;
}

DenseOperator register_observable(std::size_t n, int b, int exponent) {
    const DenseOperator v = std::ldexp(1.0, exponent - 1) * place_value_operator(b);
    return static_cast<double>(n) * (v.adjoint() * all_bits_mixer(b) * v);
}

LiftCheck observable_lift_check(const DenseOperator &oa, int b, const RealVector &x,
                                Rounding rounding) {
    const auto n = x.size();
    if (n < 1 || n > 8 || oa.rows() != n || oa.cols() != n) {
        throw InvalidInput("observable lift needs N <= 8 and matching dimensions");
    }
    if (b < 1 || b > 6) {
        throw InvalidInput("observable lift needs 1 <= b <= 6");
    }
    if (!is_hermitian(oa, 1e-12)) {
        throw InvalidInput("observable must be Hermitian");
    }
    if ((x.array() < 0.0).any()) {
        throw InvalidInput("observable lift needs non-negative amplitudes");
    }
    int e = exponent_for(x.maxCoeff());
    const std::int64_t limit = std::int64_t{1} << b;
    std::vector<std::int64_t> q(static_cast<std::size_t>(n));
    for (;;) {
        bool ok = true;
        for (Eigen::Index j = 0; j < n; ++j) {
            q[static_cast<std::size_t>(j)] = quantize(std::ldexp(x[j], b - e), rounding);
            ok = ok && q[static_cast<std::size_t>(j)] < limit;
        }
        if (ok) {
            break;
        }
        ++e;
    }
    const DenseOperator ob = register_observable(static_cast<std::size_t>(n), b, e);
    const DenseOperator mixer = all_bits_mixer(b);
    const DenseOperator v = place_value_operator(b);

    LiftCheck out;
    out.direct = (x.cast<Complex>().adjoint() * oa * x.cast<Complex>())(0, 0).real();
    Complex lifted = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index l = 0; l < n; ++l) {
            const auto qj = static_cast<Eigen::Index>(q[static_cast<std::size_t>(j)]);
            const auto ql = static_cast<Eigen::Index>(q[static_cast<std::size_t>(l)]);
            lifted += oa(j, l) * ob(qj, ql);
            out.mixer_defect = std::max(out.mixer_defect, std::abs(mixer(qj, ql) - 1.0));
        }
    }
    out.lifted = lifted.real() / static_cast<double>(n);
    out.bound = 4.0 * spectral_norm(oa) * std::ldexp(1.0, -b);
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        const double expected = std::ldexp(static_cast<double>(i), 1 - b);
        out.place_value_defect = std::max(out.place_value_defect, std::abs(v(i, i) - expected));
        for (Eigen::Index k = 0; k < v.cols(); ++k) {
            if (k != i) {
                out.place_value_defect = std::max(out.place_value_defect, std::abs(v(i, k)));
            }
        }
    }
    return out;
}

} // namespace hamsim
