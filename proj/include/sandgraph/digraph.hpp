#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "sandgraph/edge_model.hpp"
#include "sandgraph/int_matrix.hpp"

namespace sandgraph {

// Directed multigraph on vertices 0..n-1; multiplicity(i, j) counts edges
// from i to j. Loops are stored but never affect the laplacian.
class Digraph {
public:
    explicit Digraph(std::size_t n) : n_(n), mult_(n * n, 0) {
        if (n == 0) throw std::invalid_argument("digraph needs at least one vertex");
    }

    static Digraph from_multiplicities(const std::vector<std::vector<std::uint64_t>>& rows);

    std::size_t vertex_count() const { return n_; }
    std::uint64_t multiplicity(std::size_t i, std::size_t j) const { return mult_[i * n_ + j]; }
    void set_multiplicity(std::size_t i, std::size_t j, std::uint64_t m) { mult_[i * n_ + j] = m; }
    void add_edge(std::size_t i, std::size_t j, std::uint64_t m = 1) { mult_[i * n_ + j] += m; }

    std::uint64_t out_degree(std::size_t i) const; // includes loops
    std::uint64_t in_degree(std::size_t j) const;  // includes loops
    std::uint64_t edge_count_no_loops() const;

    bool operator==(const Digraph&) const = default;

private:
    std::size_t n_;
    std::vector<std::uint64_t> mult_;
};

// All n(n-1) off-diagonal multiplicities drawn independently from the model,
// row-major over ordered pairs; the diagonal stays zero. Deterministic for a
// given engine state.
Digraph sample_digraph(std::size_t n, const EdgeModel& model, std::mt19937_64& eng);

// Laplacian with firing vectors as columns: column j is the net chip
// movement when vertex j fires, entry (i, j) = -deg(j, i) off the diagonal
// and outdeg(j) - deg(j, j) at (j, j). Every column sums to zero, so the
// column span lies in the sum-zero sublattice.
IntMatrix laplacian(const Digraph& g);

// Laplacian with row and column v deleted.
IntMatrix reduced_laplacian(const Digraph& g, std::size_t v);

bool is_strongly_connected(const Digraph& g);

// Exact arborescence count toward the root, by brute-force enumeration of
// out-edge choices; restricted to n <= 7 and at most 20 non-loop edges.
mpz_class spanning_trees_toward(const Digraph& g, std::size_t root);

bool is_eulerian_balanced(const Digraph& g); // indeg == outdeg at every vertex

} // namespace sandgraph
