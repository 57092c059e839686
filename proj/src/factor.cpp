#include "sandgraph/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace sandgraph {

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    // GMP runs BPSW plus extra Miller-Rabin rounds; no composite is known to
    // survive this, and certainly none below 2^64.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::uint64_t n) {
    return is_prime(mpz_class(static_cast<unsigned long>(n)));
}

unsigned valuation(const mpz_class& n, const mpz_class& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    mpz_class m = abs(n);
    unsigned v = 0;
    mpz_class q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

namespace {

void divide_out(mpz_class& m, std::uint64_t p, std::map<mpz_class, unsigned>& out) {
    while (m % p == 0) {
        ++out[mpz_class(static_cast<unsigned long>(p))];
        m /= static_cast<unsigned long>(p);
    }
}

// Pollard-Brent rho with deterministic parameters; n odd composite.
mpz_class pollard_brent(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
            mpz_class k = 0;
            while (k < r && g == 1) {
                ys = y;
                mpz_class lim = std::min(m, r - k);
                for (mpz_class i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                mpz_class d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
        // Degenerate cycle: retry with the next polynomial constant.
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n <= 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::map<mpz_class, unsigned> factorize(const mpz_class& n) {
    if (n <= 0) throw std::invalid_argument("factorize requires a positive integer");
    std::map<mpz_class, unsigned> out;
    mpz_class m = n;
    divide_out(m, 2, out);
    divide_out(m, 3, out);
    divide_out(m, 5, out);
    for (std::uint64_t p = 7; p <= 100000; p += 6) {
        if (mpz_class(static_cast<unsigned long>(p)) * p > m) break;
        divide_out(m, p, out);
        divide_out(m, p + 4, out);
    }
    factor_into(m, out);
    return out;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
    std::map<std::uint64_t, unsigned> out;
    for (const auto& [p, e] : factorize(mpz_class(static_cast<unsigned long>(n))))
        out[mpz_get_ui(p.get_mpz_t())] = e;
    return out;
}

} // namespace sandgraph
