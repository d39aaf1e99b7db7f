#pragma once

#include <functional>
#include <vector>

#include "schrome/bigint.hpp"
#include "schrome/complex.hpp"
#include "schrome/graph.hpp"

namespace schrome {

// A set partition of V(K): disjoint nonempty blocks covering the vertex set,
// kept sorted by smallest member.
struct Partition {
    std::vector<VertexSet> blocks;

    Partition() = default;
    explicit Partition(std::vector<VertexSet> b);

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    static Partition singletons(int m);
    bool operator==(const Partition&) const = default;
};

void validate_partition(const Partition& p, int m);

// True iff no s-face of K lies inside B.
bool is_independent(const SimplicialComplex& K, VertexSet B, int s);

// Connected components of K cap D[B].
std::vector<VertexSet> connected_components(const SimplicialComplex& K, VertexSet B);

// Refinement whose blocks are the connected components of the blocks of P.
Partition block_connected_refinement(const SimplicialComplex& K, const Partition& p);

// The graph G_0(P): nodes are blocks of P (in block order), two blocks joined
// iff their union is a connected vertex set of K.
SimpleGraph partition_graph(const SimplicialComplex& K, const Partition& p);

// Streams every block-connected s-independent partition of V(K), exactly once,
// in the canonical order produced by extending blocks from the smallest
// uncovered vertex lexicographically.
void for_each_bcp(const SimplicialComplex& K, int s,
                  const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_bcp(const SimplicialComplex& K, int s);

// Generalized variant: blocks are forbidden from containing any of the given
// vertex sets (for s-independence these are the s-faces).
void for_each_bcp_forbidden(const SimplicialComplex& K,
                            const std::vector<VertexSet>& forbidden,
                            const std::function<void(const Partition&)>& visit);

// counts[r] = number of partitions of the masked vertex set into r blocks
// containing none of the forbidden sets. Subset-DP memoized on the remaining
// vertex set; blocks always contain its smallest vertex.
std::vector<BigInt> restricted_partition_counts(int m, VertexSet universe,
                                                const std::vector<VertexSet>& forbidden);

// counts[r] = S(K,r,s) for r = 0..m(K).
std::vector<BigInt> independent_partition_counts(const SimplicialComplex& K, int s);

// S(K,r,s): partitions of V(K) into r s-independent blocks.
BigInt count_independent_partitions(const SimplicialComplex& K, int r, int s);

// All inclusion-maximal s-independent subsets of V(K), sorted.
std::vector<VertexSet> maximal_independent_sets(const SimplicialComplex& K, int s);

// Minimum number of maximal s-independent sets covering V(K) = chi_s(K),
// by exact branch-and-bound (greedy upper bound, counting lower bound,
// branch on the vertex in fewest sets).
int chromatic_number_setcover(const SimplicialComplex& K, int s);

}  // namespace schrome
