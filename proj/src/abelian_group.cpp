#include "sandgraph/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <queue>
#include <sstream>

#include "sandgraph/factor.hpp"

namespace sandgraph {

Partition Partition::of(std::vector<unsigned> parts) {
    std::erase(parts, 0u);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::vector<unsigned> Partition::conjugate() const {
    std::vector<unsigned> conj;
    if (parts_.empty()) return conj;
    conj.resize(parts_[0], 0);
    for (unsigned e : parts_)
        for (unsigned k = 0; k < e; ++k) ++conj[k];
    return conj;
}

namespace {

void partitions_of(unsigned total, unsigned max_part, std::vector<unsigned>& acc,
                   std::vector<Partition>& out) {
    if (total == 0) {
        out.emplace_back(acc);
        return;
    }
    for (unsigned next = std::min(total, max_part); next >= 1; --next) {
        acc.push_back(next);
        partitions_of(total - next, next, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> all_partitions_up_to(unsigned max_sum) {
    std::vector<Partition> out;
    std::vector<unsigned> acc;
    for (unsigned total = 0; total <= max_sum; ++total)
        partitions_of(total, total == 0 ? 1 : total, acc, out);
    return out;
}

AbelianGroup AbelianGroup::from_sylow(std::map<std::uint64_t, Partition> sylow) {
    AbelianGroup g;
    for (auto& [p, part] : sylow) {
        if (part.empty()) continue;
        if (!is_prime(p)) throw std::invalid_argument("sylow key is not prime");
        g.sylow_.emplace(p, std::move(part));
    }
    return g;
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<mpz_class>& orders) {
    std::map<std::uint64_t, std::vector<unsigned>> parts;
    for (const mpz_class& d : orders) {
        if (d < 1) throw std::invalid_argument("cyclic order must be positive");
        for (const auto& [p, e] : factorize(d)) {
            if (!p.fits_ulong_p())
                throw std::invalid_argument("prime factor too large to track");
            parts[mpz_get_ui(p.get_mpz_t())].push_back(e);
        }
    }
    AbelianGroup g;
    for (auto& [p, v] : parts) {
        std::sort(v.begin(), v.end(), std::greater<>());
        g.sylow_.emplace(p, Partition(std::move(v)));
    }
    return g;
}

AbelianGroup AbelianGroup::cyclic(std::uint64_t n) {
    return from_cyclic_orders({mpz_class(static_cast<unsigned long>(n))});
}

const Partition& AbelianGroup::sylow_part(std::uint64_t p) const {
    static const Partition empty;
    auto it = sylow_.find(p);
    return it == sylow_.end() ? empty : it->second;
}

mpz_class AbelianGroup::order() const {
    mpz_class n = 1;
    for (const auto& [p, part] : sylow_) {
        mpz_class pp;
        mpz_ui_pow_ui(pp.get_mpz_t(), p, part.sum());
        n *= pp;
    }
    return n;
}

AbelianGroup sylow_restrict(const AbelianGroup& g, const std::vector<std::uint64_t>& primes) {
    std::map<std::uint64_t, Partition> kept;
    for (std::uint64_t p : primes) {
        if (!is_prime(p)) throw std::invalid_argument("sylow_restrict: non-prime in prime set");
        const Partition& part = g.sylow_part(p);
        if (!part.empty()) kept.emplace(p, part);
    }
    return AbelianGroup::from_sylow(std::move(kept));
}

AbelianGroup tensor_mod(const AbelianGroup& g, std::uint64_t a) {
    if (a == 0) throw std::invalid_argument("tensor_mod: modulus must be positive");
    std::map<std::uint64_t, Partition> out;
    for (const auto& [p, e] : factorize(a)) {
        const Partition& part = g.sylow_part(p);
        if (part.empty()) continue;
        std::vector<unsigned> clipped;
        for (unsigned lam : part.parts())
            clipped.push_back(std::min(lam, e));
        out.emplace(p, Partition::of(std::move(clipped)));
    }
    return AbelianGroup::from_sylow(std::move(out));
}

namespace {

mpz_class pow_p(std::uint64_t p, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

// |Aut| of a p-group of the given type (Hillar-Rhea product formula).
mpz_class aut_order_p(std::uint64_t p, const Partition& part) {
    std::vector<unsigned> e(part.parts().rbegin(), part.parts().rend()); // ascending
    std::size_t r = e.size();
    mpz_class total = 1;
    for (std::size_t k = 0; k < r; ++k) {
        std::size_t d_k = k, c_k = k;
        while (d_k + 1 < r && e[d_k + 1] == e[k]) ++d_k;
        while (c_k > 0 && e[c_k - 1] == e[k]) --c_k;
        total *= pow_p(p, d_k + 1) - pow_p(p, k);
        total *= pow_p(p, static_cast<unsigned long>(e[k]) * (r - (d_k + 1)));
        total *= pow_p(p, static_cast<unsigned long>(e[k] - 1) * (r - (c_k + 1) + 1));
    }
    return total;
}

unsigned long hom_exponent(const Partition& lambda, const Partition& mu) {
    auto lc = lambda.conjugate();
    auto mc = mu.conjugate();
    unsigned long s = 0;
    for (std::size_t k = 0; k < std::min(lc.size(), mc.size()); ++k)
        s += static_cast<unsigned long>(lc[k]) * mc[k];
    return s;
}

// --- concrete model of a single p-group, used to type preimage subgroups ---

struct ConcretePGroup {
    std::uint64_t p;
    std::vector<unsigned> exps;           // descending parts
    std::vector<std::uint64_t> mods;      // p^exps[i]
    std::vector<std::uint64_t> strides;
    std::uint64_t size = 1;

    ConcretePGroup(std::uint64_t prime, const Partition& part) : p(prime) {
        exps = part.parts();
        strides.resize(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i) {
            std::uint64_t m = 1;
            for (unsigned k = 0; k < exps[i]; ++k) m *= p;
            mods.push_back(m);
            strides[i] = size;
            size *= m;
        }
        if (size > 2'000'000)
            throw std::domain_error("sur_count: target Sylow part too large for lattice enumeration");
    }

    std::vector<std::uint64_t> coords(std::uint64_t idx) const {
        std::vector<std::uint64_t> c(mods.size());
        for (std::size_t i = 0; i < mods.size(); ++i) {
            c[i] = idx % mods[i];
            idx /= mods[i];
        }
        return c;
    }

    std::uint64_t index(const std::vector<std::uint64_t>& c) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < mods.size(); ++i) idx += strides[i] * (c[i] % mods[i]);
        return idx;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < mods.size(); ++i) {
            std::uint64_t ai = a % mods[i], bi = b % mods[i];
            a /= mods[i];
            b /= mods[i];
            idx += strides[i] * ((ai + bi) % mods[i]);
        }
        return idx;
    }

    // Exponent of the order of the element: smallest t with p^t * x = 0.
    unsigned order_exponent(std::uint64_t idx) const {
        unsigned t = 0;
        for (std::size_t i = 0; i < mods.size(); ++i) {
            std::uint64_t xi = idx % mods[i];
            idx /= mods[i];
            if (xi == 0) continue;
            unsigned v = 0;
            while (xi % p == 0) {
                xi /= p;
                ++v;
            }
            t = std::max(t, exps[i] - v);
        }
        return t;
    }
};

// Type of the subgroup generated by the given elements, recovered from the
// census of element orders (|K[p^j]| = p^(sum_i min(tau_i, j))).
Partition subgroup_type(const ConcretePGroup& g, const std::vector<std::uint64_t>& gens) {
    std::vector<bool> seen(g.size, false);
    std::vector<std::uint64_t> members{0};
    seen[0] = true;
    std::queue<std::uint64_t> work;
    work.push(0);
    while (!work.empty()) {
        std::uint64_t x = work.front();
        work.pop();
        for (std::uint64_t gen : gens) {
            std::uint64_t y = g.add(x, gen);
            if (!seen[y]) {
                seen[y] = true;
                members.push_back(y);
                work.push(y);
            }
        }
    }
    unsigned top = g.exps.empty() ? 0 : g.exps.front();
    std::vector<std::uint64_t> torsion(top + 1, 0); // torsion[j] = |K[p^j]|
    for (std::uint64_t x : members) {
        unsigned oe = g.order_exponent(x);
        for (unsigned j = oe; j <= top; ++j) ++torsion[j];
    }
    std::vector<unsigned> logs(top + 1, 0); // log_p of |K[p^j]|
    for (unsigned j = 1; j <= top; ++j) {
        std::uint64_t s = torsion[j];
        unsigned lg = 0;
        while (s > 1) {
            s /= g.p;
            ++lg;
        }
        logs[j] = lg;
    }
    std::vector<unsigned> conj; // conj[j-1] = #{i : tau_i >= j}
    for (unsigned j = 1; j <= top; ++j) conj.push_back(logs[j] - logs[j - 1]);
    std::vector<unsigned> parts;
    for (unsigned i = 1; i <= (conj.empty() ? 0u : conj[0]); ++i) {
        unsigned cnt = 0;
        for (unsigned c : conj)
            if (c >= i) ++cnt;
        parts.push_back(cnt);
    }
    return Partition::of(std::move(parts));
}

// Every subspace of F_p^r, as a list of basis rows (row-reduced echelon
// enumeration). r stays tiny for the target groups we count against.
void enumerate_subspaces(std::uint64_t p, unsigned r,
                         const std::function<void(const std::vector<std::vector<std::uint64_t>>&)>& visit) {
    std::vector<unsigned> pivots;
    std::vector<std::vector<std::uint64_t>> basis;

    // Recursive choice of pivot columns, then free entries.
    std::function<void(unsigned)> choose_pivots = [&](unsigned from) {
        // Fill free entries for the current pivot set.
        std::vector<std::vector<std::uint64_t>> rows(pivots.size(),
                                                     std::vector<std::uint64_t>(r, 0));
        for (std::size_t i = 0; i < pivots.size(); ++i) rows[i][pivots[i]] = 1;
        std::vector<std::pair<std::size_t, unsigned>> free_cells;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (unsigned j = pivots[i] + 1; j < r; ++j)
                if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
                    free_cells.emplace_back(i, j);
        std::function<void(std::size_t)> fill = [&](std::size_t cell) {
            if (cell == free_cells.size()) {
                visit(rows);
                return;
            }
            auto [i, j] = free_cells[cell];
            for (std::uint64_t v = 0; v < p; ++v) {
                rows[i][j] = v;
                fill(cell + 1);
            }
            rows[i][j] = 0;
        };
        fill(0);

        for (unsigned c = from; c < r; ++c) {
            pivots.push_back(c);
            choose_pivots(c + 1);
            pivots.pop_back();
        }
    };
    choose_pivots(0);
}

// One prime's surjection count via Moebius inversion over subgroups K with
// pG <= K <= G; mu(K, G) = (-1)^m p^C(m,2) where m = corank of K.
mpz_class sur_count_p(std::uint64_t p, const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return 1;
    ConcretePGroup g(p, mu);
    unsigned r = static_cast<unsigned>(mu.rank());

    // Generators of pG.
    std::vector<std::uint64_t> pg_gens;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<std::uint64_t> c(r, 0);
        c[i] = p % g.mods[i];
        if (c[i] != 0) pg_gens.push_back(g.index(c));
    }

    mpz_class total = 0;
    enumerate_subspaces(p, r, [&](const std::vector<std::vector<std::uint64_t>>& basis) {
        unsigned m = r - static_cast<unsigned>(basis.size());
        std::vector<std::uint64_t> gens = pg_gens;
        for (const auto& row : basis) gens.push_back(g.index(row));
        Partition tau = subgroup_type(g, gens);
        mpz_class coeff = pow_p(p, static_cast<unsigned long>(m) * (m - 1) / 2);
        if (m % 2 == 1) coeff = -coeff;
        total += coeff * pow_p(p, hom_exponent(lambda, tau));
    });
    return total;
}

} // namespace

mpz_class aut_order(const AbelianGroup& g) {
    mpz_class n = 1;
    for (const auto& [p, part] : g.sylow()) n *= aut_order_p(p, part);
    return n;
}

mpz_class hom_count(const AbelianGroup& h, const AbelianGroup& g) {
    mpz_class n = 1;
    for (const auto& [p, mu] : g.sylow())
        n *= pow_p(p, hom_exponent(h.sylow_part(p), mu));
    return n;
}

mpz_class sur_count(const AbelianGroup& h, const AbelianGroup& g) {
    mpz_class n = 1;
    for (const auto& [p, mu] : g.sylow()) {
        n *= sur_count_p(p, h.sylow_part(p), mu);
        if (n == 0) return 0;
    }
    return n;
}

bool surjection_exists(const AbelianGroup& h, const AbelianGroup& g) {
    for (const auto& [p, mu] : g.sylow()) {
        const Partition& lambda = h.sylow_part(p);
        for (std::size_t k = 1; k <= mu.rank(); ++k)
            if (mu.part(k) > lambda.part(k)) return false;
    }
    return true;
}

bool cyclic_quotient_witness(const AbelianGroup& h, const AbelianGroup& g) {
    // Union of primes on either side.
    std::vector<std::uint64_t> primes;
    for (const auto& [p, _] : h.sylow()) primes.push_back(p);
    for (const auto& [p, _] : g.sylow())
        if (h.sylow_part(p).empty()) primes.push_back(p);
    for (std::uint64_t p : primes) {
        const Partition& lambda = h.sylow_part(p);
        const Partition& mu = g.sylow_part(p);
        std::size_t len = std::max(lambda.rank(), mu.rank()) + 1;
        for (std::size_t k = 1; k <= len; ++k) {
            if (lambda.part(k) < mu.part(k)) return false;
            if (mu.part(k) < lambda.part(k + 1)) return false;
        }
    }
    return true;
}

bool is_cyclic(const AbelianGroup& g) {
    for (const auto& [p, part] : g.sylow())
        if (part.rank() > 1) return false;
    return true;
}

std::vector<Partition> enumerate_p_groups(std::uint64_t p, unsigned max_order_exponent) {
    if (!is_prime(p)) throw std::invalid_argument("enumerate_p_groups: p must be prime");
    return all_partitions_up_to(max_order_exponent);
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::map<std::uint64_t, Partition> merged;
    for (const auto& [p, part] : a.sylow()) merged[p] = part;
    for (const auto& [p, part] : b.sylow()) {
        std::vector<unsigned> parts = merged[p].parts();
        parts.insert(parts.end(), part.parts().begin(), part.parts().end());
        merged[p] = Partition::of(std::move(parts));
    }
    return AbelianGroup::from_sylow(std::move(merged));
}

std::vector<mpz_class> invariant_factors(const AbelianGroup& g) {
    std::size_t rank = 0;
    for (const auto& [p, part] : g.sylow()) rank = std::max(rank, part.rank());
    std::vector<mpz_class> factors;
    for (std::size_t i = rank; i >= 1; --i) {
        mpz_class f = 1;
        for (const auto& [p, part] : g.sylow()) f *= pow_p(p, part.part(i));
        factors.push_back(f); // ascending: smallest invariant factor first
    }
    return factors;
}

std::string group_label(const AbelianGroup& g) {
    if (g.is_trivial()) return "1";
    auto factors = invariant_factors(g);
    std::ostringstream os;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (it != factors.rbegin()) os << "x";
        os << "Z/" << it->get_str();
    }
    return os.str();
}

AbelianGroup parse_group(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty() || s == "1" || s == "trivial") return AbelianGroup::trivial();
    std::vector<mpz_class> orders;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find_first_of("x*", pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.rfind("Z/", 0) == 0) tok = tok.substr(2);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("cannot parse group: " + text);
        orders.emplace_back(tok);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return AbelianGroup::from_cyclic_orders(orders);
}

} // namespace sandgraph
