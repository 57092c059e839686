#include "sandgraph/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "sandgraph/factor.hpp"

namespace sandgraph {

namespace {

// Quotient rounded to nearest, so remainders stay within |b|/2.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class r2 = 2 * abs(r);
    if (r2 > abs(b)) {
        if ((r > 0) == (b > 0))
            q += 1;
        else
            q -= 1;
    }
    return q;
}

// Elimination working state. When cap != 0 every entry is kept as a balanced
// representative modulo cap; this is a legitimate column operation against
// the lattice cap*Z^rows, which is contained in the column span whenever cap
// is the determinant of a nonsingular rows x rows submatrix.
struct Eliminator {
    IntMatrix w;
    IntMatrix* u; // row transform or nullptr
    IntMatrix* v; // column transform or nullptr
    mpz_class cap;

    std::size_t rows() const { return w.rows(); }
    std::size_t cols() const { return w.cols(); }

    void reduce_entry(mpz_class& x) const {
        if (cap == 0) return;
        x %= cap; // truncated; may be negative
        mpz_class twice = 2 * abs(x);
        if (twice > cap) x += x > 0 ? -cap : cap;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols(); ++j) std::swap(w.at(a, j), w.at(b, j));
        if (u)
            for (std::size_t j = 0; j < u->cols(); ++j) std::swap(u->at(a, j), u->at(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows(); ++i) std::swap(w.at(i, a), w.at(i, b));
        if (v)
            for (std::size_t i = 0; i < v->rows(); ++i) std::swap(v->at(i, a), v->at(i, b));
    }

    // row a -= q * row b
    void sub_row(std::size_t a, std::size_t b, const mpz_class& q, std::size_t from_col) {
        if (q == 0) return;
        for (std::size_t j = from_col; j < cols(); ++j) {
            w.at(a, j) -= q * w.at(b, j);
            reduce_entry(w.at(a, j));
        }
        if (u)
            for (std::size_t j = 0; j < u->cols(); ++j) u->at(a, j) -= q * u->at(b, j);
    }

    // col a -= q * col b
    void sub_col(std::size_t a, std::size_t b, const mpz_class& q, std::size_t from_row) {
        if (q == 0) return;
        for (std::size_t i = from_row; i < rows(); ++i) {
            w.at(i, a) -= q * w.at(i, b);
            reduce_entry(w.at(i, a));
        }
        if (v)
            for (std::size_t i = 0; i < v->rows(); ++i) v->at(i, a) -= q * v->at(i, b);
    }

    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols(); ++j) w.at(a, j) = -w.at(a, j);
        if (u)
            for (std::size_t j = 0; j < u->cols(); ++j) u->at(a, j) = -u->at(a, j);
    }

    // Smallest nonzero entry by (|value|, row, column) in the trailing
    // submatrix; false when the submatrix vanishes.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        mpz_class best;
        for (std::size_t i = t; i < rows(); ++i)
            for (std::size_t j = t; j < cols(); ++j) {
                const mpz_class& x = w.at(i, j);
                if (x == 0) continue;
                mpz_class a = abs(x);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    // Diagonalize from position t onward (no divisibility ordering yet).
    void diagonalize(std::size_t t) {
        std::size_t limit = std::min(rows(), cols());
        for (; t < limit; ++t) {
            std::size_t pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = false;
            while (!clean) {
                clean = true;
                for (std::size_t i = t + 1; i < rows(); ++i) {
                    if (w.at(i, t) == 0) continue;
                    mpz_class q = nearest_quotient(w.at(i, t), w.at(t, t));
                    sub_row(i, t, q, t);
                    if (w.at(i, t) != 0) { // remainder beats the pivot
                        swap_rows(t, i);
                        clean = false;
                    }
                }
                if (!clean) continue;
                for (std::size_t j = t + 1; j < cols(); ++j) {
                    if (w.at(t, j) == 0) continue;
                    mpz_class q = nearest_quotient(w.at(t, j), w.at(t, t));
                    sub_col(j, t, q, t);
                    if (w.at(t, j) != 0) {
                        swap_cols(t, j);
                        clean = false;
                    }
                }
            }
        }
    }
};

// Full-pivot Bareiss pass: rank, and the absolute determinant of the pivoted
// rank x rank submatrix (valid when rank == min dimension reached).
std::pair<std::size_t, mpz_class> bareiss_rank_det(IntMatrix b) {
    std::size_t limit = std::min(b.rows(), b.cols());
    mpz_class prev = 1, det = 1;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < limit; ++k) {
        std::size_t pi = k, pj = k;
        bool found = false;
        for (std::size_t i = k; i < b.rows() && !found; ++i)
            for (std::size_t j = k; j < b.cols() && !found; ++j)
                if (b.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != k)
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b.at(k, j), b.at(pi, j));
        if (pj != k)
            for (std::size_t i = 0; i < b.rows(); ++i) std::swap(b.at(i, k), b.at(i, pj));
        for (std::size_t i = k + 1; i < b.rows(); ++i) {
            for (std::size_t j = k + 1; j < b.cols(); ++j) {
                mpz_class num = b.at(k, k) * b.at(i, j) - b.at(i, k) * b.at(k, j);
                mpz_divexact(b.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            b.at(i, k) = 0;
        }
        prev = b.at(k, k);
        det = abs(prev);
        rank = k + 1;
    }
    return {rank, rank == 0 ? mpz_class(1) : det};
}

// Invariant factor chain from any unimodular diagonalization: repeated
// gcd/lcm swaps until each entry divides the next.
void enforce_chain(std::vector<mpz_class>& d) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (d[i] == 0 && d[j] != 0) {
                    std::swap(d[i], d[j]);
                    changed = true;
                }
                if (d[i] == 0 || d[j] == 0) continue;
                if (d[j] % d[i] != 0) {
                    mpz_class g = gcd(d[i], d[j]);
                    mpz_class l = d[i] / g * d[j];
                    d[i] = g;
                    d[j] = l;
                    changed = true;
                }
            }
    }
}

SmithDecomposition snf_diagonal_only(const IntMatrix& m) {
    // Work on the wide orientation so a full-row-rank determinant can cap
    // entry growth; the diagonal is invariant under transposition.
    const bool transpose = m.rows() > m.cols();
    IntMatrix a = transpose ? m.transposed() : m;

    mpz_class cap = 0;
    if (std::min(a.rows(), a.cols()) >= 12) {
        auto [rank, det] = bareiss_rank_det(a);
        if (rank == a.rows() && det != 0) cap = det;
    }

    Eliminator e{a, nullptr, nullptr, cap};
    e.diagonalize(0);

    std::size_t limit = std::min(a.rows(), a.cols());
    std::vector<mpz_class> d(limit, 0);
    for (std::size_t t = 0; t < limit; ++t) {
        d[t] = abs(e.w.at(t, t));
        if (cap != 0) d[t] = gcd(d[t], cap); // entry 0 stands for cap itself
    }
    enforce_chain(d);

    SmithDecomposition out;
    out.diagonal = std::move(d);
    out.rank = 0;
    for (const auto& x : out.diagonal)
        if (x != 0) ++out.rank;
    return out;
}

SmithDecomposition snf_with_transforms(const IntMatrix& m) {
    IntMatrix u = identity_matrix(m.rows());
    IntMatrix v = identity_matrix(m.cols());
    Eliminator e{m, &u, &v, 0};
    e.diagonalize(0);

    std::size_t limit = std::min(m.rows(), m.cols());
    // Push zero diagonal entries to the back.
    for (std::size_t t = 0; t < limit; ++t) {
        if (e.w.at(t, t) != 0) continue;
        for (std::size_t s = t + 1; s < limit; ++s)
            if (e.w.at(s, s) != 0) {
                e.swap_rows(t, s);
                e.swap_cols(t, s);
                break;
            }
    }
    // Divisibility chain via explicit column mixes plus re-elimination.
    while (true) {
        std::size_t bad = limit;
        for (std::size_t i = 0; i + 1 < limit; ++i) {
            const mpz_class& a = e.w.at(i, i);
            const mpz_class& b = e.w.at(i + 1, i + 1);
            if (a == 0 && b != 0) {
                bad = i;
                break;
            }
            if (a != 0 && b != 0 && b % a != 0) {
                bad = i;
                break;
            }
        }
        if (bad == limit) break;
        mpz_class minus_one = -1;
        e.sub_col(bad, bad + 1, minus_one, 0); // col bad += col bad+1
        e.diagonalize(bad);
    }
    for (std::size_t t = 0; t < limit; ++t)
        if (e.w.at(t, t) < 0) e.negate_row(t);

    SmithDecomposition out;
    out.diagonal.resize(limit);
    for (std::size_t t = 0; t < limit; ++t) out.diagonal[t] = e.w.at(t, t);
    out.rank = 0;
    for (const auto& x : out.diagonal)
        if (x != 0) ++out.rank;
    out.left = std::move(u);
    out.right = std::move(v);
    return out;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m, bool want_transforms) {
    return want_transforms ? snf_with_transforms(m) : snf_diagonal_only(m);
}

Cokernel cokernel(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m, false);
    std::vector<mpz_class> torsion_orders;
    for (const auto& d : s.diagonal)
        if (d > 1) torsion_orders.push_back(d);
    Cokernel c;
    c.torsion = AbelianGroup::from_cyclic_orders(torsion_orders);
    c.free_rank = m.rows() - s.rank;
    return c;
}

mpz_class determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix b = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b.at(k, k) == 0) {
            std::size_t pi = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (b.at(i, k) != 0) {
                    pi = i;
                    break;
                }
            if (pi == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(pi, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = b.at(k, k) * b.at(i, j) - b.at(i, k) * b.at(k, j);
                mpz_divexact(b.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            b.at(i, k) = 0;
        }
        prev = b.at(k, k);
    }
    return sign * b.at(n - 1, n - 1);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t modinv(std::uint64_t a, std::uint64_t m) {
    // Extended Euclid; a must be invertible.
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::logic_error("modinv: not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

// Elementary divisor exponents of (Z/p^k)^rows / W (Z/p^k)^cols, as the
// multiset of exponents in [0, k]; pivots with valuation >= k and missing
// rows contribute k.
std::vector<unsigned> local_exponents(std::vector<std::uint64_t> w, std::size_t rows,
                                      std::size_t cols, std::uint64_t p, unsigned k,
                                      std::uint64_t pk) {
    auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return w[i * cols + j]; };
    auto val = [&](std::uint64_t x) -> unsigned {
        if (x == 0) return k;
        unsigned v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };

    std::vector<unsigned> pivots;
    std::size_t limit = std::min(rows, cols);
    for (std::size_t t = 0; t < limit; ++t) {
        unsigned best_v = k;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                unsigned v = val(at(i, j));
                if (v < best_v) {
                    best_v = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best_v >= k) break; // submatrix vanishes mod p^k
        if (pi != t)
            for (std::size_t j = t; j < cols; ++j) std::swap(at(t, j), at(pi, j));
        if (pj != t)
            for (std::size_t i = t; i < rows; ++i) std::swap(at(i, t), at(i, pj));

        std::uint64_t pv = 1;
        for (unsigned q = 0; q < best_v; ++q) pv *= p;
        std::uint64_t unit = at(t, t) / pv;
        std::uint64_t inv = modinv(unit % pk, pk);
        for (std::size_t j = t; j < cols; ++j) at(t, j) = mulmod(at(t, j), inv, pk);
        // Now at(t,t) == p^v; clear the column (everything has valuation >= v).
        for (std::size_t i = t + 1; i < rows; ++i) {
            std::uint64_t e = at(i, t);
            if (e == 0) continue;
            std::uint64_t f = e / pv;
            for (std::size_t j = t; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, at(t, j), pk);
                at(i, j) = (at(i, j) + pk - sub) % pk;
            }
        }
        // Row entries right of the pivot are killed by column operations that
        // touch no other row (the column below the pivot is already zero).
        for (std::size_t j = t + 1; j < cols; ++j) at(t, j) = 0;
        pivots.push_back(best_v);
    }

    std::vector<unsigned> exps;
    for (std::size_t i = 0; i < rows; ++i)
        exps.push_back(i < pivots.size() ? std::min(pivots[i], k) : k);
    return exps;
}

} // namespace

AbelianGroup cokernel_mod(const IntMatrix& m, std::uint64_t a) {
    if (a == 0) throw std::invalid_argument("cokernel_mod: modulus must be positive");
    std::map<std::uint64_t, Partition> sylow;
    for (const auto& [p, k] : factorize(a)) {
        // p^k must stay below 2^62 so products fit in 128 bits.
        std::uint64_t pk = 1;
        for (unsigned q = 0; q < k; ++q) {
            if (pk > (1ULL << 62) / p) throw std::domain_error("cokernel_mod: prime power too large");
            pk *= p;
        }
        std::vector<std::uint64_t> w(m.rows() * m.cols());
        mpz_class tmp;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                mpz_mod_ui(tmp.get_mpz_t(), m.at(i, j).get_mpz_t(), pk);
                w[i * m.cols() + j] = mpz_get_ui(tmp.get_mpz_t());
            }
        auto exps = local_exponents(std::move(w), m.rows(), m.cols(), p, k, pk);
        Partition part = Partition::of(std::vector<unsigned>(exps.begin(), exps.end()));
        if (!part.empty()) sylow.emplace(p, std::move(part));
    }
    return AbelianGroup::from_sylow(std::move(sylow));
}

AbelianGroup sylow_from_diagonal(const std::vector<mpz_class>& diagonal,
                                 const std::vector<std::uint64_t>& primes) {
    std::map<std::uint64_t, Partition> sylow;
    for (std::uint64_t p : primes) {
        if (!is_prime(p)) throw std::invalid_argument("sylow_from_diagonal: non-prime");
        std::vector<unsigned> parts;
        mpz_class pz(static_cast<unsigned long>(p));
        for (const auto& d : diagonal)
            if (d > 1) parts.push_back(valuation(d, pz));
        Partition part = Partition::of(std::move(parts));
        if (!part.empty()) sylow.emplace(p, std::move(part));
    }
    return AbelianGroup::from_sylow(std::move(sylow));
}

} // namespace sandgraph
