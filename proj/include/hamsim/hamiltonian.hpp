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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hamsim/linalg.hpp"

namespace hamsim {

/**
 * One Hermitian block of a block-diagonal part: either a 1x1 block on index
 * `first` (when first == second) or the 2x2 block
 *
 *     [ d0         off ]   rows/cols (first, second)
 *     [ conj(off)  d1  ]
 *
 * Hermiticity holds by construction.
 */
struct Block {
    std::size_t first = 0;
    std::size_t second = 0;
    double d0 = 0.0;
    double d1 = 0.0;
    Complex off{};

    [[nodiscard]] bool single() const { return first == second; }
};

/// exp(-i H dt) for one part: unitary 2x2 / 1x1 blocks, identity elsewhere.
class PartPropagator {
  public:
    struct UnitaryBlock {
        std::size_t first;
        std::size_t second;
        Complex u00, u01, u10, u11;
    };

    PartPropagator(std::size_t dim, std::vector<UnitaryBlock> blocks)
        : dim_(dim), blocks_(std::move(blocks)) {}

    void apply_inplace(StateVector &x) const;
    [[nodiscard]] std::size_t dim() const { return dim_; }

  private:
    std::size_t dim_;
    std::vector<UnitaryBlock> blocks_;
};

/**
 * A colored Hamiltonian part H_i: disjoint 1x1 and 2x2 Hermitian blocks.
 * Indices not covered by any block carry a zero row and column.
 */
class BlockDiagonalPart {
  public:
    BlockDiagonalPart() = default;
    /// Throws InvalidInput if an index is out of range or used twice.
    BlockDiagonalPart(std::size_t dim, std::vector<Block> blocks, int color = 0);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] int color() const { return color_; }
    [[nodiscard]] const std::vector<Block> &blocks() const { return blocks_; }

    /// y = H x.
    [[nodiscard]] StateVector apply(const StateVector &x) const;
    /// y += H x.
    void apply_add(const StateVector &x, StateVector &y) const;
    [[nodiscard]] DenseOperator dense() const;

    [[nodiscard]] bool is_projector(double tol = 1e-12) const;
    [[nodiscard]] bool is_reflection(double tol = 1e-12) const;

    [[nodiscard]] BlockDiagonalPart scaled(double factor) const;
    /// I - 2H, with explicit unit 1x1 blocks on uncovered indices.
    [[nodiscard]] BlockDiagonalPart reflection() const;
    [[nodiscard]] PartPropagator propagator(double dt) const;

  private:
    std::size_t dim_ = 0;
    int color_ = 0;
    std::vector<Block> blocks_;
};

using PartList = std::vector<BlockDiagonalPart>;

[[nodiscard]] DenseOperator dense_sum(std::span<const BlockDiagonalPart> parts);
[[nodiscard]] StateVector apply_sum(std::span<const BlockDiagonalPart> parts,
                                    const StateVector &x);

/// exp(-i (c0 I + c.sigma) dt) for the 2x2 Hermitian block of `b`.
void block_exponential(const Block &b, double dt, Complex &u00, Complex &u01,
                       Complex &u10, Complex &u11);

struct PartPair {
    BlockDiagonalPart first;
    BlockDiagonalPart second;
};

/**
 * Periodic 1D lattice Laplacian (diag 2, neighbours -1) times `scale`, split
 * by the parity of the left site of each bond: first pairs (0,1),(2,3),...,
 * second pairs (1,2),...,(L-1,0). With scale 1/2 each half is a projector.
 */
[[nodiscard]] PartPair laplacian_parts(std::size_t length, double scale = 0.5);
[[nodiscard]] DenseOperator periodic_laplacian(std::size_t length, double scale = 0.5);

struct Edge {
    std::size_t j = 0;
    std::size_t l = 0;
    Complex value{}; // H(j,l); H(l,j) = conj(value)
};

/// Sparse Hermitian matrix as a graph; each off-diagonal pair stored once.
class SparseHamiltonianGraph {
  public:
    SparseHamiltonianGraph(std::size_t dim, std::vector<Edge> edges,
                           std::vector<double> diagonal);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<Edge> &edges() const { return edges_; }
    [[nodiscard]] const std::vector<double> &diagonal() const { return diagonal_; }
    [[nodiscard]] std::size_t max_degree() const { return max_degree_; }
    [[nodiscard]] DenseOperator dense() const;

    /// Entries with |H_jl| > tol become edges.
    static SparseHamiltonianGraph from_dense(const DenseOperator &h, double tol = 0.0);

  private:
    std::size_t dim_;
    std::vector<Edge> edges_;
    std::vector<double> diagonal_;
    std::size_t max_degree_ = 0;
};

/**
 * Text graph format, one record per line:
 *
 *     dim N           (optional; otherwise 1 + largest index)
 *     j l re im       off-diagonal element H(j,l), j != l
 *     diag j v        diagonal element
 *
 * Blank lines and lines starting with '#' are ignored.
 */
[[nodiscard]] SparseHamiltonianGraph parse_graph(std::istream &in);
[[nodiscard]] SparseHamiltonianGraph read_graph_file(const std::string &path);

struct EdgeColoring {
    /// Edge parts in color order, followed by the diagonal part if non-zero.
    PartList parts;
    std::size_t colors = 0;
};

/// Greedy first-fit edge coloring; uses at most 2d-1 colors.
[[nodiscard]] EdgeColoring edge_coloring(const SparseHamiltonianGraph &graph);

/// H = a1 |s><s| + |t><t| with |t> = e_0 and |s> uniform.
struct SearchModel {
    std::size_t n = 2;
    double a1 = 1.0;
};

struct SearchHamiltonians {
    DenseOperator h_c;      // 2x2 in the {|t>, |t_perp>} frame
    DenseOperator h_g;      // 2x2 generator of the Grover operator
    DenseOperator h_c_full; // N x N embedding of h_c
};

[[nodiscard]] SearchHamiltonians search_hamiltonians(const SearchModel &model);
/// Uniform superposition |s> in N dimensions.
[[nodiscard]] StateVector uniform_state(std::size_t n);

} // namespace hamsim
