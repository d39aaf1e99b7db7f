#include "schrome/graph.hpp"

#include <algorithm>
#include <bit>

#include "schrome/error.hpp"

namespace schrome {

void SimpleGraph::add_edge(int u, int v) {
    require(u != v, "simple graph: no loops");
    adj_[u] |= std::uint32_t{1} << v;
    adj_[v] |= std::uint32_t{1} << u;
}

int SimpleGraph::num_edges() const {
    int total = 0;
    for (auto a : adj_) total += std::popcount(a);
    return total / 2;
}

int SimpleGraph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < num_nodes(); ++u)
        for (std::uint32_t t = adj_[u] >> (u + 1) << (u + 1); t; t &= t - 1)
            out.emplace_back(u, std::countr_zero(t));
    return out;
}

std::vector<int> SimpleGraph::degree_sequence() const {
    std::vector<int> deg;
    for (int v = 0; v < num_nodes(); ++v) deg.push_back(degree(v));
    std::sort(deg.begin(), deg.end());
    return deg;
}

namespace {

// Work representation for deletion-contraction: adjacency masks, node count.
struct G {
    int n;
    std::vector<std::uint32_t> adj;

    int edge_count() const {
        int t = 0;
        for (int v = 0; v < n; ++v) t += std::popcount(adj[v]);
        return t / 2;
    }
    bool complete() const {
        for (int v = 0; v < n; ++v)
            if (std::popcount(adj[v]) != n - 1) return false;
        return true;
    }
    std::uint32_t component_of(int v) const {
        std::uint32_t comp = std::uint32_t{1} << v;
        for (;;) {
            std::uint32_t grown = comp;
            for (std::uint32_t t = comp; t; t &= t - 1) grown |= adj[std::countr_zero(t)];
            if (grown == comp) return comp;
            comp = grown;
        }
    }
    G restrict_to(std::uint32_t mask) const {
        G out{std::popcount(mask), {}};
        std::vector<int> newid(n, -1);
        int k = 0;
        for (std::uint32_t t = mask; t; t &= t - 1) newid[std::countr_zero(t)] = k++;
        out.adj.assign(out.n, 0);
        for (int v = 0; v < n; ++v) {
            if (newid[v] < 0) continue;
            for (std::uint32_t t = adj[v] & mask; t; t &= t - 1)
                out.adj[newid[v]] |= std::uint32_t{1} << newid[std::countr_zero(t)];
        }
        return out;
    }
    G deleted(int u, int v) const {
        G out = *this;
        out.adj[u] &= ~(std::uint32_t{1} << v);
        out.adj[v] &= ~(std::uint32_t{1} << u);
        return out;
    }
    G contracted(int u, int v) const {
        // merge v into u, then drop v
        G tmp = *this;
        tmp.adj[u] |= tmp.adj[v];
        tmp.adj[u] &= ~(std::uint32_t{1} << u);
        tmp.adj[u] &= ~(std::uint32_t{1} << v);
        for (int w = 0; w < n; ++w)
            if (tmp.adj[w] & (std::uint32_t{1} << v)) {
                tmp.adj[w] &= ~(std::uint32_t{1} << v);
                if (w != u) tmp.adj[w] |= std::uint32_t{1} << u;
            }
        std::uint32_t keep = ((n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1)) &
                             ~(std::uint32_t{1} << v);
        return tmp.restrict_to(keep);
    }
};

IntPolynomial chrom_rec(const G& g) {
    if (g.n == 0) return IntPolynomial::monomial(0, 1);
    int e = g.edge_count();
    if (e == 0) return IntPolynomial::monomial(g.n, 1);

    // product over connected components
    std::uint32_t all = g.n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << g.n) - 1;
    std::uint32_t comp = g.component_of(0);
    if (comp != all) return chrom_rec(g.restrict_to(comp)) * chrom_rec(g.restrict_to(all & ~comp));

    if (g.complete()) return IntPolynomial::falling_factorial(g.n);
    if (e == g.n - 1) {  // connected with n-1 edges: a tree
        IntPolynomial out = IntPolynomial::monomial(1, 1);
        IntPolynomial rm1(std::vector<BigInt>{BigInt(-1), BigInt(1)});
        for (int i = 1; i < g.n; ++i) out = out * rm1;
        return out;
    }

    // deletion-contraction on an edge with maximal degree sum
    int bu = -1, bv = -1, best = -1;
    for (int u = 0; u < g.n; ++u)
        for (std::uint32_t t = g.adj[u] >> (u + 1) << (u + 1); t; t &= t - 1) {
            int v = std::countr_zero(t);
            int score = std::popcount(g.adj[u]) + std::popcount(g.adj[v]);
            if (score > best) {
                best = score;
                bu = u;
                bv = v;
            }
        }
    return chrom_rec(g.deleted(bu, bv)) - chrom_rec(g.contracted(bu, bv));
}

}  // namespace

IntPolynomial chromatic_polynomial_graph(const SimpleGraph& g) {
    G work{g.num_nodes(), {}};
    work.adj.reserve(work.n);
    for (int v = 0; v < work.n; ++v) work.adj.push_back(g.adjacency(v));
    return chrom_rec(work);
}

int chromatic_number_graph(const SimpleGraph& g) {
    if (g.num_nodes() == 0) return 0;
    IntPolynomial p = chromatic_polynomial_graph(g);
    for (int r = 1;; ++r)
        if (p.evaluate(r) > 0) return r;
}

}  // namespace schrome
