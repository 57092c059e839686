#include "sandgraph/digraph.hpp"

#include <functional>
#include <stdexcept>

namespace sandgraph {

Digraph Digraph::from_multiplicities(const std::vector<std::vector<std::uint64_t>>& rows) {
    Digraph g(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw std::invalid_argument("multiplicity matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) g.set_multiplicity(i, j, rows[i][j]);
    }
    return g;
}

std::uint64_t Digraph::out_degree(std::size_t i) const {
    std::uint64_t d = 0;
    for (std::size_t j = 0; j < n_; ++j) d += mult_[i * n_ + j];
    return d;
}

std::uint64_t Digraph::in_degree(std::size_t j) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += mult_[i * n_ + j];
    return d;
}

std::uint64_t Digraph::edge_count_no_loops() const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i != j) d += mult_[i * n_ + j];
    return d;
}

Digraph sample_digraph(std::size_t n, const EdgeModel& model, std::mt19937_64& eng) {
    if (n < 2) throw std::invalid_argument("sample_digraph: need n >= 2");
    Digraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            g.set_multiplicity(i, j, model.sample(eng));
        }
    return g;
}

IntMatrix laplacian(const Digraph& g) {
    std::size_t n = g.vertex_count();
    IntMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            l.at(i, j) = -mpz_class(static_cast<unsigned long>(g.multiplicity(j, i)));
        }
        l.at(j, j) = mpz_class(static_cast<unsigned long>(g.out_degree(j) - g.multiplicity(j, j)));
    }
    return l;
}

IntMatrix reduced_laplacian(const Digraph& g, std::size_t v) {
    if (v >= g.vertex_count()) throw std::out_of_range("reduced_laplacian: vertex out of range");
    return laplacian(g).without_row_and_column(v, v);
}

namespace {

void reach(const Digraph& g, std::size_t start, bool forward, std::vector<bool>& seen) {
    std::vector<std::size_t> stack{start};
    seen.assign(g.vertex_count(), false);
    seen[start] = true;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < g.vertex_count(); ++w) {
            if (seen[w]) continue;
            std::uint64_t m = forward ? g.multiplicity(u, w) : g.multiplicity(w, u);
            if (m > 0) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
}

} // namespace

bool is_strongly_connected(const Digraph& g) {
    std::vector<bool> seen;
    reach(g, 0, true, seen);
    for (bool b : seen)
        if (!b) return false;
    reach(g, 0, false, seen);
    for (bool b : seen)
        if (!b) return false;
    return true;
}

mpz_class spanning_trees_toward(const Digraph& g, std::size_t root) {
    std::size_t n = g.vertex_count();
    if (root >= n) throw std::out_of_range("spanning_trees_toward: vertex out of range");
    if (n > 7 || g.edge_count_no_loops() > 20)
        throw std::domain_error("spanning_trees_toward: instance over brute-force range");

    // Choose one outgoing edge for every non-root vertex; the choice is an
    // arborescence toward the root iff following choices always reaches it.
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < n; ++v)
        if (v != root) verts.push_back(v);

    std::vector<std::size_t> choice(n, n); // choice[v] = picked head
    mpz_class total = 0;

    auto reaches_root = [&]() {
        for (std::size_t v : verts) {
            std::size_t cur = v;
            std::size_t steps = 0;
            while (cur != root) {
                cur = choice[cur];
                if (++steps > n) return false; // walked into a cycle
            }
        }
        return true;
    };

    std::vector<std::size_t> idx(verts.size(), 0);
    std::function<void(std::size_t, mpz_class)> rec = [&](std::size_t k, mpz_class weight) {
        if (k == verts.size()) {
            if (reaches_root()) total += weight;
            return;
        }
        std::size_t v = verts[k];
        for (std::size_t w = 0; w < n; ++w) {
            if (w == v) continue;
            std::uint64_t m = g.multiplicity(v, w);
            if (m == 0) continue;
            choice[v] = w;
            rec(k + 1, weight * static_cast<unsigned long>(m));
        }
        choice[v] = n;
    };
    rec(0, 1);
    return total;
}

bool is_eulerian_balanced(const Digraph& g) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.in_degree(v) != g.out_degree(v)) return false;
    return true;
}

} // namespace sandgraph
