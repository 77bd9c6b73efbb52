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

#include "hamsim/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

void check_dim(std::size_t expected, Eigen::Index got) {
    if (static_cast<std::size_t>(got) != expected) {
        throw InvalidInput("dimension mismatch: expected " + std::to_string(expected) +
                           ", got " + std::to_string(got));
    }
}

} // namespace

void PartPropagator::apply_inplace(StateVector &x) const {
    check_dim(dim_, x.size());
    for (const auto &b : blocks_) {
        const auto f = static_cast<Eigen::Index>(b.first);
        if (b.first == b.second) {
            x[f] *= b.u00;
            continue;
        }
        const auto s = static_cast<Eigen::Index>(b.second);
        const Complex a = x[f];
        const Complex c = x[s];
        x[f] = b.u00 * a + b.u01 * c;
        x[s] = b.u10 * a + b.u11 * c;
    }
}

BlockDiagonalPart::BlockDiagonalPart(std::size_t dim, std::vector<Block> blocks, int color)
    : dim_(dim), color_(color), blocks_(std::move(blocks)) {
    if (dim_ == 0) {
        throw InvalidInput("part dimension must be positive");
    }
    std::vector<char> used(dim_, 0);
    auto claim = [&](std::size_t j) {
        if (j >= dim_) {
            throw InvalidInput("block index " + std::to_string(j) + " out of range");
        }
        if (used[j]) {
            throw InvalidInput("index " + std::to_string(j) + " appears in two blocks");
        }
        used[j] = 1;
    };
    for (const auto &b : blocks_) {
        if (!std::isfinite(b.d0) || !std::isfinite(b.d1) || !std::isfinite(b.off.real()) ||
            !std::isfinite(b.off.imag())) {
            throw InvalidInput("non-finite block entry");
        }
        claim(b.first);
        if (!b.single()) {
            claim(b.second);
        }
    }
}

StateVector BlockDiagonalPart::apply(const StateVector &x) const {
    StateVector y = StateVector::Zero(x.size());
    apply_add(x, y);
    return y;
}

void BlockDiagonalPart::apply_add(const StateVector &x, StateVector &y) const {
    check_dim(dim_, x.size());
    check_dim(dim_, y.size());
    for (const auto &b : blocks_) {
        const auto f = static_cast<Eigen::Index>(b.first);
        if (b.single()) {
            y[f] += b.d0 * x[f];
            continue;
        }
        const auto s = static_cast<Eigen::Index>(b.second);
        y[f] += b.d0 * x[f] + b.off * x[s];
        y[s] += std::conj(b.off) * x[f] + b.d1 * x[s];
    }
}

DenseOperator BlockDiagonalPart::dense() const {
    DenseOperator h = DenseOperator::Zero(static_cast<Eigen::Index>(dim_),
                                          static_cast<Eigen::Index>(dim_));
    for (const auto &b : blocks_) {
        const auto f = static_cast<Eigen::Index>(b.first);
        h(f, f) = b.d0;
        if (!b.single()) {
            const auto s = static_cast<Eigen::Index>(b.second);
            h(s, s) = b.d1;
            h(f, s) = b.off;
            h(s, f) = std::conj(b.off);
        }
    }
    return h;
}

bool BlockDiagonalPart::is_projector(double tol) const {
    for (const auto &b : blocks_) {
        if (b.single()) {
            if (std::abs(b.d0 * b.d0 - b.d0) > tol) {
                return false;
            }
            continue;
        }
        const double n2 = std::norm(b.off);
        // [[d0, o], [o*, d1]]^2 = [[d0^2+|o|^2, (d0+d1) o], [.., d1^2+|o|^2]]
        if (std::abs(b.d0 * b.d0 + n2 - b.d0) > tol ||
            std::abs(b.d1 * b.d1 + n2 - b.d1) > tol ||
            std::abs((b.d0 + b.d1 - 1.0) * b.off) > tol) {
            return false;
        }
    }
    return true;
}

bool BlockDiagonalPart::is_reflection(double tol) const {
    std::size_t covered = 0;
    for (const auto &b : blocks_) {
        if (b.single()) {
            if (std::abs(b.d0 * b.d0 - 1.0) > tol) {
                return false;
            }
            ++covered;
            continue;
        }
        const double n2 = std::norm(b.off);
        if (std::abs(b.d0 * b.d0 + n2 - 1.0) > tol ||
            std::abs(b.d1 * b.d1 + n2 - 1.0) > tol ||
            std::abs((b.d0 + b.d1) * b.off) > tol) {
            return false;
        }
        covered += 2;
    }
    return covered == dim_;
}

BlockDiagonalPart BlockDiagonalPart::scaled(double factor) const {
    auto blocks = blocks_;
    for (auto &b : blocks) {
        b.d0 *= factor;
        b.d1 *= factor;
        b.off *= factor;
    }
    return {dim_, std::move(blocks), color_};
}

BlockDiagonalPart BlockDiagonalPart::reflection() const {
    std::vector<char> used(dim_, 0);
    std::vector<Block> blocks;
    blocks.reserve(blocks_.size() + dim_);
    for (const auto &b : blocks_) {
        Block r = b;
        r.d0 = 1.0 - 2.0 * b.d0;
        r.d1 = 1.0 - 2.0 * b.d1;
        r.off = -2.0 * b.off;
        used[b.first] = 1;
        used[b.second] = 1;
        blocks.push_back(r);
    }
    for (std::size_t j = 0; j < dim_; ++j) {
        if (!used[j]) {
            blocks.push_back(Block{j, j, 1.0, 0.0, {}});
        }
    }
    return {dim_, std::move(blocks), color_};
}

void block_exponential(const Block &b, double dt, Complex &u00, Complex &u01, Complex &u10,
                       Complex &u11) {
    if (b.single()) {
        u00 = std::exp(Complex(0.0, -b.d0 * dt));
        u01 = u10 = 0.0;
        u11 = u00;
        return;
    }
    // H = c0 I + c.sigma with c.sigma = [[cz, off], [conj(off), -cz]]
    const double c0 = 0.5 * (b.d0 + b.d1);
    const double cz = 0.5 * (b.d0 - b.d1);
    const double mag = std::sqrt(cz * cz + std::norm(b.off));
    const Complex phase = std::exp(Complex(0.0, -c0 * dt));
    const double cs = std::cos(mag * dt);
    const double sn = mag > 0.0 ? std::sin(mag * dt) / mag : dt;
    u00 = phase * Complex(cs, -sn * cz);
    u11 = phase * Complex(cs, sn * cz);
    u01 = phase * (-kI * sn * b.off);
    u10 = phase * (-kI * sn * std::conj(b.off));
}

PartPropagator BlockDiagonalPart::propagator(double dt) const {
    std::vector<PartPropagator::UnitaryBlock> out;
    out.reserve(blocks_.size());
    for (const auto &b : blocks_) {
        PartPropagator::UnitaryBlock u{b.first, b.second, {}, {}, {}, {}};
        block_exponential(b, dt, u.u00, u.u01, u.u10, u.u11);
        out.push_back(u);
    }
    return {dim_, std::move(out)};
}

DenseOperator dense_sum(std::span<const BlockDiagonalPart> parts) {
    if (parts.empty()) {
        throw InvalidInput("empty part list");
    }
    const auto n = static_cast<Eigen::Index>(parts.front().dim());
    DenseOperator h = DenseOperator::Zero(n, n);
    for (const auto &p : parts) {
        check_dim(parts.front().dim(), static_cast<Eigen::Index>(p.dim()));
        h += p.dense();
    }
    return h;
}

StateVector apply_sum(std::span<const BlockDiagonalPart> parts, const StateVector &x) {
    StateVector y = StateVector::Zero(x.size());
    for (const auto &p : parts) {
        p.apply_add(x, y);
    }
    return y;
}

PartPair laplacian_parts(std::size_t length, double scale) {
    if (length < 4 || length % 2 != 0) {
        throw InvalidInput("lattice length must be even and at least 4");
    }
    std::vector<Block> first;
    std::vector<Block> second;
    for (std::size_t j = 0; j < length; j += 2) {
        first.push_back(Block{j, j + 1, scale, scale, Complex(-scale, 0.0)});
        second.push_back(Block{j + 1, (j + 2) % length, scale, scale, Complex(-scale, 0.0)});
    }
    return {BlockDiagonalPart(length, std::move(first), 0),
            BlockDiagonalPart(length, std::move(second), 1)};
}

DenseOperator periodic_laplacian(std::size_t length, double scale) {
    if (length < 3) {
        throw InvalidInput("lattice length must be at least 3");
    }
    const auto n = static_cast<Eigen::Index>(length);
    DenseOperator h = DenseOperator::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        h(j, j) = 2.0 * scale;
        h(j, (j + 1) % n) = -scale;
        h((j + 1) % n, j) = -scale;
    }
    return h;
}

SparseHamiltonianGraph::SparseHamiltonianGraph(std::size_t dim, std::vector<Edge> edges,
                                               std::vector<double> diagonal)
    : dim_(dim), edges_(std::move(edges)), diagonal_(std::move(diagonal)) {
    if (dim_ == 0) {
        throw InvalidInput("graph dimension must be positive");
    }
    if (diagonal_.empty()) {
        diagonal_.assign(dim_, 0.0);
    }
    if (diagonal_.size() != dim_) {
        throw InvalidInput("diagonal length does not match dimension");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<std::size_t> degree(dim_, 0);
    for (auto &e : edges_) {
        if (e.j == e.l) {
            throw InvalidInput("self-loop edge; use a diagonal entry");
        }
        if (e.j >= dim_ || e.l >= dim_) {
            throw InvalidInput("edge index out of range");
        }
        if (e.j > e.l) {
            std::swap(e.j, e.l);
            e.value = std::conj(e.value);
        }
        if (!seen.emplace(e.j, e.l).second) {
            throw InvalidInput("duplicate edge (" + std::to_string(e.j) + ", " +
                               std::to_string(e.l) + ")");
        }
        ++degree[e.j];
        ++degree[e.l];
    }
    max_degree_ = *std::max_element(degree.begin(), degree.end());
}

DenseOperator SparseHamiltonianGraph::dense() const {
    const auto n = static_cast<Eigen::Index>(dim_);
    DenseOperator h = DenseOperator::Zero(n, n);
    for (std::size_t j = 0; j < dim_; ++j) {
        h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = diagonal_[j];
    }
    for (const auto &e : edges_) {
        h(static_cast<Eigen::Index>(e.j), static_cast<Eigen::Index>(e.l)) = e.value;
        h(static_cast<Eigen::Index>(e.l), static_cast<Eigen::Index>(e.j)) = std::conj(e.value);
    }
    return h;
}

SparseHamiltonianGraph SparseHamiltonianGraph::from_dense(const DenseOperator &h, double tol) {
    if (!is_hermitian(h)) {
        throw InvalidInput("matrix is not Hermitian");
    }
    const auto n = h.rows();
    std::vector<Edge> edges;
    std::vector<double> diag(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        diag[static_cast<std::size_t>(j)] = h(j, j).real();
        for (Eigen::Index l = j + 1; l < n; ++l) {
            if (std::abs(h(j, l)) > tol) {
                edges.push_back(
                    Edge{static_cast<std::size_t>(j), static_cast<std::size_t>(l), h(j, l)});
            }
        }
    }
    return {static_cast<std::size_t>(n), std::move(edges), std::move(diag)};
}

SparseHamiltonianGraph parse_graph(std::istream &in) {
    std::vector<Edge> edges;
    std::vector<std::pair<std::size_t, double>> diag;
    std::size_t declared = 0;
    std::size_t largest = 0;
    bool any = false;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string &what) {
        throw InvalidInput("graph line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head)) {
            continue;
        }
        std::string extra;
        if (head == "dim") {
            long long n = 0;
            if (!(ss >> n) || n <= 0 || (ss >> extra)) {
                fail("expected 'dim N'");
            }
            declared = static_cast<std::size_t>(n);
        } else if (head == "diag") {
            long long j = -1;
            double v = 0.0;
            if (!(ss >> j >> v) || j < 0 || (ss >> extra)) {
                fail("expected 'diag j v'");
            }
            diag.emplace_back(static_cast<std::size_t>(j), v);
            largest = std::max(largest, static_cast<std::size_t>(j));
            any = true;
        } else {
            long long j = -1;
            long long l = -1;
            double re = 0.0;
            double im = 0.0;
            std::istringstream es(line);
            if (!(es >> j >> l >> re >> im) || j < 0 || l < 0 || (es >> extra)) {
                fail("expected 'j l re im'");
            }
            edges.push_back(Edge{static_cast<std::size_t>(j), static_cast<std::size_t>(l),
                                 Complex(re, im)});
            largest = std::max({largest, static_cast<std::size_t>(j),
                                static_cast<std::size_t>(l)});
            any = true;
        }
    }
    std::size_t dim = declared;
    if (dim == 0) {
        if (!any) {
            throw InvalidInput("graph has no entries");
        }
        dim = largest + 1;
    }
    std::vector<double> diagonal(dim, 0.0);
    for (const auto &[j, v] : diag) {
        if (j >= dim) {
            throw InvalidInput("diagonal index out of range");
        }
        diagonal[j] += v;
    }
    return {dim, std::move(edges), std::move(diagonal)};
}

SparseHamiltonianGraph read_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open graph file " + path);
    }
    return parse_graph(in);
}

EdgeColoring edge_coloring(const SparseHamiltonianGraph &graph) {
    const std::size_t n = graph.dim();
    std::vector<std::vector<char>> used(n);
    std::vector<std::vector<Block>> by_color;
    for (const auto &e : graph.edges()) {
        auto &uj = used[e.j];
        auto &ul = used[e.l];
        std::size_t c = 0;
        while ((c < uj.size() && uj[c]) || (c < ul.size() && ul[c])) {
            ++c;
        }
        for (auto *u : {&uj, &ul}) {
            if (u->size() <= c) {
                u->resize(c + 1, 0);
            }
            (*u)[c] = 1;
        }
        if (by_color.size() <= c) {
            by_color.resize(c + 1);
        }
        by_color[c].push_back(Block{e.j, e.l, 0.0, 0.0, e.value});
    }
    EdgeColoring out;
    out.colors = by_color.size();
    for (std::size_t c = 0; c < by_color.size(); ++c) {
        out.parts.emplace_back(n, std::move(by_color[c]), static_cast<int>(c));
    }
    std::vector<Block> diag;
    for (std::size_t j = 0; j < n; ++j) {
        if (graph.diagonal()[j] != 0.0) {
            diag.push_back(Block{j, j, graph.diagonal()[j], 0.0, {}});
        }
    }
    if (!diag.empty()) {
        out.parts.emplace_back(n, std::move(diag), static_cast<int>(out.colors));
    }
    return out;
}

SearchHamiltonians search_hamiltonians(const SearchModel &model) {
    if (model.n < 2) {
        throw InvalidInput("search space size must be at least 2");
    }
    if (!std::isfinite(model.a1)) {
        throw InvalidInput("a1 must be finite");
    }
    const double n = static_cast<double>(model.n);
    const double r = std::sqrt(n - 1.0) / n;
    SearchHamiltonians out;
    out.h_c.resize(2, 2);
    out.h_c << 1.0 + model.a1 / n, model.a1 * r, model.a1 * r, model.a1 * (n - 1.0) / n;
    out.h_g.resize(2, 2);
    out.h_g << 0.0, Complex(0.0, r), Complex(0.0, -r), 0.0;
    const StateVector s = uniform_state(model.n);
    out.h_c_full = model.a1 * (s * s.adjoint());
    out.h_c_full(0, 0) += 1.0;
    return out;
}

StateVector uniform_state(std::size_t n) {
    if (n == 0) {
        throw InvalidInput("dimension must be positive");
    }
    return StateVector::Constant(static_cast<Eigen::Index>(n),
                                 Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
}

} // namespace hamsim
