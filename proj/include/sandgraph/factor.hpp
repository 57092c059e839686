#pragma once

#include <cstdint>
#include <map>

#include <gmpxx.h>

namespace sandgraph {

bool is_prime(std::uint64_t n);
bool is_prime(const mpz_class& n);

// Prime factorization, exponents keyed by prime. Trial division up to 10^5,
// then Miller-Rabin + Pollard-Brent rho on what remains. Intended for the
// sizes that actually occur in sandpile computations (invariant factors,
// gcds of cofactors); enormous semiprimes will be slow.
std::map<mpz_class, unsigned> factorize(const mpz_class& n);

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

// p-adic valuation of n (n != 0).
unsigned valuation(const mpz_class& n, const mpz_class& p);

} // namespace sandgraph
