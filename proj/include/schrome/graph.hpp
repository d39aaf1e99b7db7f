#pragma once

#include <cstdint>
#include <vector>

#include "schrome/polynomial.hpp"

namespace schrome {

// Simple undirected graph on nodes 0..n-1, adjacency as bitmasks.
// Partition graphs never exceed ~20 nodes.
class SimpleGraph {
public:
    explicit SimpleGraph(int n) : adj_(n, 0) {}

    int num_nodes() const { return static_cast<int>(adj_.size()); }
    int num_edges() const;
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint32_t adjacency(int v) const { return adj_[v]; }
    int degree(int v) const;

    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degree_sequence() const;  // sorted ascending

private:
    std::vector<std::uint32_t> adj_;
};

// Exact chromatic polynomial by deletion-contraction, with shortcuts for
// edgeless graphs, trees, cliques, and disconnected graphs.
IntPolynomial chromatic_polynomial_graph(const SimpleGraph& g);

// Least r with a positive chromatic polynomial value.
int chromatic_number_graph(const SimpleGraph& g);

}  // namespace schrome
