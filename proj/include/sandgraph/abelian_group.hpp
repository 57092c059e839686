#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sandgraph/partition.hpp"

namespace sandgraph {

// A finite abelian group up to isomorphism, stored as one partition per
// prime (its Sylow decomposition). Canonical form: every key is prime and
// maps to a nonempty partition. Immutable after construction.
class AbelianGroup {
public:
    AbelianGroup() = default; // trivial group

    static AbelianGroup trivial() { return AbelianGroup(); }

    // Validates primality of keys and drops empty partitions.
    static AbelianGroup from_sylow(std::map<std::uint64_t, Partition> sylow);

    // Direct sum of Z/dZ over the given orders. Entries must be >= 1;
    // entries equal to 1 vanish.
    static AbelianGroup from_cyclic_orders(const std::vector<mpz_class>& orders);

    static AbelianGroup cyclic(std::uint64_t n);

    const std::map<std::uint64_t, Partition>& sylow() const { return sylow_; }

    // Partition at p (empty when the Sylow part is trivial).
    const Partition& sylow_part(std::uint64_t p) const;

    bool is_trivial() const { return sylow_.empty(); }

    mpz_class order() const;

    bool operator==(const AbelianGroup&) const = default;
    auto operator<=>(const AbelianGroup&) const = default;

private:
    std::map<std::uint64_t, Partition> sylow_;
};

// Keeps exactly the Sylow parts at the given primes.
AbelianGroup sylow_restrict(const AbelianGroup& g, const std::vector<std::uint64_t>& primes);

// G tensor Z/aZ: parts are clipped at the p-adic valuation of a; a >= 1.
AbelianGroup tensor_mod(const AbelianGroup& g, std::uint64_t a);

// |Aut(G)|, multiplicative over primes, closed-form product per partition.
mpz_class aut_order(const AbelianGroup& g);

// |Hom(H, G)| = prod_p p^(sum_k lambda'_k mu'_k).
mpz_class hom_count(const AbelianGroup& h, const AbelianGroup& g);

// |Sur(H, G)| by Moebius inclusion-exclusion over the subgroups of G that
// contain pG (the only ones with nonzero Moebius weight).
mpz_class sur_count(const AbelianGroup& h, const AbelianGroup& g);

// True iff some surjection H ->> G exists: per-prime partition domination.
bool surjection_exists(const AbelianGroup& h, const AbelianGroup& g);

// True iff H has a cyclic subgroup C with H/C isomorphic to G: per-prime
// interlacing lambda_k >= mu_k >= lambda_{k+1}.
bool cyclic_quotient_witness(const AbelianGroup& h, const AbelianGroup& g);

bool is_cyclic(const AbelianGroup& g);

// All p-group types of order <= p^max_order_exponent, each exactly once.
std::vector<Partition> enumerate_p_groups(std::uint64_t p, unsigned max_order_exponent);

// Direct sum (Sylow partitions merged per prime).
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

// Invariant factors d1 | d2 | ... | dr, largest last.
std::vector<mpz_class> invariant_factors(const AbelianGroup& g);

// Compact display name, e.g. "1", "Z/6", "Z/4xZ/2".
std::string group_label(const AbelianGroup& g);

// Parses "1", "trivial", "Z/4xZ/2", "4x2", ... into a group.
AbelianGroup parse_group(const std::string& text);

} // namespace sandgraph
