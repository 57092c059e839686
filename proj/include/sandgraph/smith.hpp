#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sandgraph/abelian_group.hpp"
#include "sandgraph/int_matrix.hpp"

namespace sandgraph {

// Diagonal d1 | d2 | ... | dr of the Smith normal form, with trailing zeros
// for rank deficiency. When transforms are requested, left * M * right is
// the diagonal matrix exactly and both transforms are unimodular.
struct SmithDecomposition {
    std::vector<mpz_class> diagonal; // length min(rows, cols)
    std::size_t rank = 0;            // number of nonzero diagonal entries
    std::optional<IntMatrix> left;   // rows x rows
    std::optional<IntMatrix> right;  // cols x cols
};

SmithDecomposition smith_normal_form(const IntMatrix& m, bool want_transforms = false);

struct Cokernel {
    AbelianGroup torsion;
    std::size_t free_rank = 0;
};

// Z^rows / M Z^cols as torsion + free part.
Cokernel cokernel(const IntMatrix& m);

// (Z/a)^rows / M (Z/a)^cols, computed one prime power at a time over the
// residue ring; equals the integral cokernel tensored with Z/a.
AbelianGroup cokernel_mod(const IntMatrix& m, std::uint64_t a);

// Exact determinant by fraction-free (Bareiss) elimination; det of the
// empty matrix is 1.
mpz_class determinant(const IntMatrix& m);

// Sylow parts of the torsion cokernel at the given primes, read off a Smith
// diagonal by p-adic valuation (no factoring of the diagonal needed).
AbelianGroup sylow_from_diagonal(const std::vector<mpz_class>& diagonal,
                                 const std::vector<std::uint64_t>& primes);

} // namespace sandgraph
