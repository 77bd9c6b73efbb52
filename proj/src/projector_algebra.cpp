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

#include "hamsim/projector_algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hamsim/errors.hpp"
#include "hamsim/random.hpp"

namespace hamsim {

namespace {

constexpr double kDegenerate = 1e-9;

StateVector normalised(const StateVector &v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidInput("cannot normalise a zero or non-finite vector");
    }
    return v / n;
}

DenseOperator identity_like(const DenseOperator &a) {
    return DenseOperator::Identity(a.rows(), a.cols());
}

} // namespace

DenseOperator rank_one_projector(const StateVector &e) { return e * e.adjoint(); }

ProjectorPair make_projector_pair(const StateVector &a, const StateVector &b, bool real_phase) {
    if (a.size() != b.size() || a.size() == 0) {
        throw InvalidInput("projector vectors must share a non-zero dimension");
    }
    ProjectorPair pair;
    pair.e_i = normalised(a);
    pair.e_j = normalised(b);
    pair.lambda = pair.e_i.dot(pair.e_j); // conjugates the first argument
    if (real_phase && std::abs(pair.lambda) > 0.0) {
        pair.e_j *= std::conj(pair.lambda) / std::abs(pair.lambda);
        pair.lambda = pair.e_i.dot(pair.e_j);
    }
    pair.real_phase = real_phase;
    pair.p_i = rank_one_projector(pair.e_i);
    pair.p_j = rank_one_projector(pair.e_j);
    return pair;
}

ProjectorPair random_projector_pair(std::size_t n, std::uint64_t seed, bool real_phase) {
    auto pair = make_projector_pair(random_state(n, seed),
                                    random_state(n, seed ^ 0x5DEECE66DULL), real_phase);
    pair.seed = seed;
    return pair;
}

DenseOperator span_basis(const ProjectorPair &pair) {
    StateVector w = pair.e_j - pair.lambda * pair.e_i;
    const double n = w.norm();
    if (n < kDegenerate) {
        DenseOperator b(pair.e_i.size(), 1);
        b.col(0) = pair.e_i;
        return b;
    }
    DenseOperator b(pair.e_i.size(), 2);
    b.col(0) = pair.e_i;
    b.col(1) = w / n;
    return b;
}

DenseOperator restrict_to_span(const ProjectorPair &pair, const DenseOperator &a) {
    const DenseOperator b = span_basis(pair);
    return b.adjoint() * a * b;
}

ReflectionProductCheck check_reflection_product(const ProjectorPair &pair) {
    ReflectionProductCheck out;
    const DenseOperator b = span_basis(pair);
    const DenseOperator pi = b.adjoint() * pair.p_i * b;
    const DenseOperator pj = b.adjoint() * pair.p_j * b;
    const DenseOperator id = identity_like(pi);
    const double l2 = std::norm(pair.lambda);
    const DenseOperator c = commutator(pi, pj);
    const DenseOperator product = (id - 2.0 * pi) * (id - 2.0 * pj);

    out.algebraic = (product - ((-1.0 + 2.0 * l2) * id + 2.0 * c)).norm();
    const DenseOperator diff = pi - pj;
    out.difference_square = (diff * diff - (1.0 - l2) * id).norm();
    out.commutator_square = (c * c - (l2 * l2 - l2) * id).norm();

    const double mag = std::abs(pair.lambda);
    if (mag < kDegenerate || 1.0 - mag < kDegenerate) {
        out.degenerate = true;
        return out;
    }
    // [P_i,P_j] is anti-Hermitian: write it as -i K with K Hermitian.
    const DenseOperator k = kI * c;
    const double scale = 2.0 * std::asin(mag) / std::sqrt(l2 - l2 * l2);
    const DenseOperator e = HermitianEigensystem(k).propagator(-scale);
    out.exponential = (product + e).norm();
    return out;
}

double check_farhi_gutmann(const ProjectorPair &pair) {
    if (std::abs(pair.lambda.imag()) > 1e-14 || !(pair.lambda.real() > 0.0)) {
        throw InvalidInput("Farhi-Gutmann check needs a real positive overlap");
    }
    const double t = std::numbers::pi / (2.0 * pair.lambda.real());
    const StateVector lhs = exact_evolve(pair.p_i + pair.p_j, t, pair.e_i);
    const StateVector rhs = -kI * std::exp(Complex(0.0, -t)) * pair.e_j;
    return state_distance(lhs, rhs);
}

std::span<const double> conjugation_phases() {
    static const std::array<double, 6> phases = {
        0.0, std::numbers::pi / 7.0, -std::numbers::pi / 7.0, std::numbers::pi / 2.0,
        std::numbers::pi, -std::numbers::pi / 2.0};
    return phases;
}

ConjugationCheck check_conjugation(const DenseOperator &p, const DenseOperator &x) {
    if (p.rows() != x.rows() || p.rows() > 16) {
        throw InvalidInput("conjugation check needs matching dimensions up to 16");
    }
    if ((p * p - p).norm() > 1e-12 || !is_hermitian(p)) {
        throw InvalidInput("conjugation check needs a projector");
    }
    ConjugationCheck out;
    const HermitianEigensystem eig(p);
    const DenseOperator ad1 = commutator(p, x);
    const DenseOperator ad2 = commutator(p, ad1);
    for (const double phi : conjugation_phases()) {
        const DenseOperator u = eig.propagator(-phi); // exp(i phi P)
        const DenseOperator lhs = u * x * u.adjoint();
        const DenseOperator rhs = x + kI * std::sin(phi) * ad1 + (std::cos(phi) - 1.0) * ad2;
        out.conjugation = std::max(out.conjugation, (lhs - rhs).norm());
    }
    out.adjoint_cube = (commutator(p, ad2) - ad1).norm();
    const DenseOperator r = identity_like(p) - 2.0 * p;
    const DenseOperator r1 = commutator(r, x);
    out.reflection_cube = (commutator(r, commutator(r, r1)) - 4.0 * r1).norm();
    return out;
}

StateVector ParametrizedProjector::vector(double x) const { return normalised(v0 + x * v1); }

DenseOperator ParametrizedProjector::projector(double x) const {
    return rank_one_projector(vector(x));
}

DenseOperator ParametrizedProjector::derivative(double x) const {
    if (!(h > 0.0)) {
        throw InvalidInput("finite-difference step must be positive");
    }
    return (projector(x + h) - projector(x - h)) / (2.0 * h);
}

DerivativeCheck check_derivative_identities(const ParametrizedProjector &family, double x0) {
    if (family.v0.size() != family.v1.size()) {
        throw InvalidInput("family vectors have different dimensions");
    }
    DerivativeCheck out;
    const DenseOperator p = family.projector(x0);
    const DenseOperator dp = family.derivative(x0);
    out.anticommutator = (p * dp + dp * p - dp).norm();
    out.double_commutator = (commutator(p, commutator(p, dp)) - dp).norm();
    for (const double x : {x0 - family.h, x0, x0 + family.h}) {
        out.norm_defect = std::max(out.norm_defect, std::abs(family.vector(x).norm() - 1.0));
    }
    return out;
}

double check_projector_word_reduction(std::span<const StateVector> vectors,
                                      std::span<const std::size_t> word) {
    if (word.empty()) {
        throw InvalidInput("empty projector word");
    }
    std::vector<StateVector> e;
    for (const auto &v : vectors) {
        if (v.size() != vectors.front().size()) {
            throw InvalidInput("projector vectors have different dimensions");
        }
        e.push_back(normalised(v));
    }
    for (const auto w : word) {
        if (w >= e.size()) {
            throw InvalidInput("word index out of range");
        }
    }
    const auto n = e.front().size();
    DenseOperator lhs = DenseOperator::Identity(n, n);
    Complex factor = 1.0;
    for (std::size_t k = 0; k < word.size(); ++k) {
        lhs = lhs * rank_one_projector(e[word[k]]);
        const std::size_t next = k + 1 < word.size() ? word[k + 1] : word.front();
        factor *= e[word[k]].dot(e[next]);
    }
    lhs = lhs * rank_one_projector(e[word.front()]);
    return (lhs - factor * rank_one_projector(e[word.front()])).norm();
}

std::vector<IdentityRow> run_identity_suite(int instances, std::uint64_t base_seed) {
    if (instances < 1) {
        throw InvalidInput("identity suite needs at least one instance");
    }
    std::vector<IdentityRow> rows = {
        {"reflection-product", 0, 0.0, 1e-11, 0, 0},
        {"reflection-exponential", 0, 0.0, 1e-11, 0, 0},
        {"difference-square", 0, 0.0, 1e-12, 0, 0},
        {"commutator-square", 0, 0.0, 1e-12, 0, 0},
        {"farhi-gutmann", 0, 0.0, 1e-11, 0, 0},
        {"conjugation", 0, 0.0, 1e-11, 0, 0},
        {"adjoint-cube", 0, 0.0, 1e-11, 0, 0},
        {"reflection-cube", 0, 0.0, 1e-11, 0, 0},
        {"derivative-anticommutator", 0, 0.0, 1e-7, 0, 0},
        {"derivative-double-commutator", 0, 0.0, 1e-7, 0, 0},
        {"word-reduction", 0, 0.0, 1e-11, 0, 0},
    };
    auto record = [&rows](std::size_t row, double value, std::uint64_t seed) {
        auto &r = rows[row];
        ++r.instances;
        if (value > r.max_residual || r.instances == 1) {
            r.max_residual = std::max(r.max_residual, value);
            r.worst_seed = seed;
        }
    };
    for (int k = 0; k < instances; ++k) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(k);
        const std::size_t n = 2 + seed % 7;

        const auto pair = random_projector_pair(n, seed);
        const auto refl = check_reflection_product(pair);
        record(0, refl.algebraic, seed);
        if (refl.degenerate) {
            ++rows[1].degenerate;
        } else {
            record(1, refl.exponential, seed);
        }
        record(2, refl.difference_square, seed);
        record(3, refl.commutator_square, seed);

        const auto real_pair = random_projector_pair(n, seed, true);
        if (real_pair.lambda.real() > 1e-3) {
            record(4, check_farhi_gutmann(real_pair), seed);
        } else {
            ++rows[4].degenerate;
        }

        const std::size_t nx = 2 + seed % 15;
        const auto conj = check_conjugation(rank_one_projector(random_state(nx, seed)),
                                            random_hermitian(nx, seed ^ 0xA5A5A5A5ULL));
        record(5, conj.conjugation, seed);
        record(6, conj.adjoint_cube, seed);
        record(7, conj.reflection_cube, seed);

        SplitMix64 rng(seed);
        const ParametrizedProjector family{random_state(n, seed + 0x1000),
                                           random_state(n, seed + 0x2000), 1e-5};
        const auto deriv = check_derivative_identities(family, rng.symmetric());
        record(8, deriv.anticommutator, seed);
        record(9, deriv.double_commutator, seed);

        const std::vector<StateVector> vecs = {random_state(n, seed + 0x3000),
                                               random_state(n, seed + 0x4000),
                                               random_state(n, seed + 0x5000)};
        const std::size_t len = 1 + rng.next() % 6;
        std::vector<std::size_t> word(len);
        for (auto &w : word) {
            w = rng.next() % vecs.size();
        }
        record(10, check_projector_word_reduction(vecs, word), seed);
    }
    return rows;
}

} // namespace hamsim
