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

#include <sstream>

#include "hamsim/errors.hpp"
#include "hamsim/grover.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/random.hpp"

using namespace hamsim;

TEST_SUITE("hamiltonian") {

TEST_CASE("half Laplacian splits into two projectors") {
    for (std::size_t length : {4u, 6u, 16u, 128u}) {
        const auto parts = laplacian_parts(length);
        CHECK(parts.first.is_projector());
        CHECK(parts.second.is_projector());
        CHECK(parts.first.reflection().is_reflection());
        CHECK(parts.second.reflection().is_reflection());
        const PartList list = {parts.first, parts.second};
        CHECK((dense_sum(list) - periodic_laplacian(length)).norm() < 1e-15);
        const auto x = random_state(length, 3);
        CHECK(state_distance(apply_sum(list, x), periodic_laplacian(length) * x) < 1e-14);
    }
    const DenseOperator l = periodic_laplacian(4);
    CHECK(l(0, 0) == Complex(1.0));
    CHECK(l(0, 1) == Complex(-0.5));
    CHECK(l(0, 3) == Complex(-0.5));
    CHECK_THROWS_AS((void)laplacian_parts(5), InvalidInput);
    CHECK_THROWS_AS((void)laplacian_parts(2), InvalidInput);
}

TEST_CASE("block exponential against the dense oracle") {
    const Block b{0, 1, 0.7, -1.3, Complex(0.4, -0.9)};
    DenseOperator h(2, 2);
    h << b.d0, b.off, std::conj(b.off), b.d1;
    Complex u00, u01, u10, u11;
    for (double dt : {0.0, 0.01, 1.0, 7.5}) {
        block_exponential(b, dt, u00, u01, u10, u11);
        DenseOperator u(2, 2);
        u << u00, u01, u10, u11;
        CHECK((u - HermitianEigensystem(h).propagator(dt)).norm() < 1e-14);
    }
}

TEST_CASE("part propagator equals the exponential of the dense part") {
    const BlockDiagonalPart part(6, {{0, 3, 0.2, 0.5, Complex(1.0, 0.5)}, {1, 1, -0.4, 0.0, {}},
                                     {4, 2, 1.0, -1.0, Complex(0.0, 0.3)}});
    const auto x = random_state(6, 11);
    StateVector y = x;
    part.propagator(0.8).apply_inplace(y);
    CHECK(state_distance(y, exact_evolve(part.dense(), 0.8, x)) < 1e-14);
    CHECK(state_distance(part.apply(x), part.dense() * x) < 1e-15);
    const auto doubled = part.scaled(2.0);
    CHECK((doubled.dense() - 2.0 * part.dense()).norm() < 1e-15);
}

TEST_CASE("blocks must be disjoint and in range") {
    CHECK_THROWS_AS(BlockDiagonalPart(4, {{0, 1, 0, 0, {}}, {1, 2, 0, 0, {}}}), InvalidInput);
    CHECK_THROWS_AS(BlockDiagonalPart(4, {{0, 4, 0, 0, {}}}), InvalidInput);
    CHECK_THROWS_AS(BlockDiagonalPart(2, {{0, 1, std::nan(""), 0, {}}}), InvalidInput);
    const BlockDiagonalPart partial(4, {{0, 1, 0.5, 0.5, -0.5}});
    CHECK(partial.is_projector());
    CHECK_FALSE(partial.is_reflection());
    CHECK(partial.reflection().is_reflection());
}

TEST_CASE("graph parsing and edge coloring") {
    std::istringstream in("# ring with a chord\n"
                          "dim 6\n"
                          "0 1 1.0 0.0\n1 2 0.5 0.5\n2 3 1.0 0\n3 4 -1 0\n4 5 0 1\n5 0 2 0\n"
                          "0 3 0.25 0.0\n"
                          "diag 2 0.75\n");
    const auto g = parse_graph(in);
    CHECK(g.dim() == 6);
    CHECK(g.edges().size() == 7);
    CHECK(g.max_degree() == 3);
    const auto coloring = edge_coloring(g);
    CHECK(coloring.colors <= 2 * g.max_degree() - 1);
    CHECK((dense_sum(coloring.parts) - g.dense()).norm() < 1e-15);
    CHECK(is_hermitian(g.dense()));
    const auto back = SparseHamiltonianGraph::from_dense(g.dense());
    CHECK((back.dense() - g.dense()).norm() == 0.0);

    std::istringstream loop("0 0 1 0\n");
    CHECK_THROWS_AS((void)parse_graph(loop), InvalidInput);
    std::istringstream dup("0 1 1 0\n1 0 1 0\n");
    CHECK_THROWS_AS((void)parse_graph(dup), InvalidInput);
    CHECK_THROWS_AS((void)read_graph_file("/nonexistent/graph.txt"), IoError);
}

TEST_CASE("edge coloring of random dense Hamiltonians") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto h = random_hermitian(9, seed);
        const auto g = SparseHamiltonianGraph::from_dense(h);
        const auto coloring = edge_coloring(g);
        CHECK((dense_sum(coloring.parts) - h).norm() < 1e-14);
        for (const auto &part : coloring.parts) {
            CHECK(is_hermitian(part.dense()));
        }
    }
}

TEST_CASE("search Hamiltonians in the two-state frame") {
    for (std::size_t n : {2u, 4u, 16u}) {
        for (double a : {1.0, 0.3, -0.5}) {
            const auto hs = search_hamiltonians({n, a});
            const DenseOperator b = frame_basis(n);
            CHECK((b.adjoint() * hs.h_c_full * b - hs.h_c).norm() < 1e-14);
            CHECK(is_hermitian(hs.h_c));
            CHECK(is_hermitian(hs.h_g));
        }
    }
    CHECK(std::abs(uniform_state(8).norm() - 1.0) < 1e-15);
}

}
