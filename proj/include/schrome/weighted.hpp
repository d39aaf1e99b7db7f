#pragma once

#include <map>
#include <vector>

#include "schrome/bigint.hpp"
#include "schrome/partition.hpp"

namespace schrome {

// The lattice L^s_m(w) of partitions of [m] into blocks that are singletons
// or have weight > s, built explicitly. Only used for small m (cross-checks
// and degenerate fallbacks); the recursion below is the production route.
struct WeightedPartitionLattice {
    int s = 0;
    std::vector<long> weights;        // weight of element i
    std::vector<Partition> elements;  // sorted: more blocks first, then lex

    std::size_t size() const { return elements.size(); }
    bool leq(std::size_t x, std::size_t y) const;  // refinement order
    std::size_t bottom() const;                    // all singletons
    std::size_t top() const;                       // one block; requires total > s
    bool has_top() const;
};

WeightedPartitionLattice weighted_lattice(const std::vector<long>& weights, int s);

// mu^s_m(w)(0,1) by the atom-sum recursion: order the elements so the last
// one has minimal weight, then sum over the atoms whose only non-singleton
// block {x_1..x_t, m} satisfies w(x_1) > s - w(m) (t = 1) or
// s >= w(x_1)+...+w(x_t) > s - w(m) (t > 1). Memoized on the weight multiset.
// Falls back to the explicit lattice when the recursion's precondition
// (weights of all but the last element summing past s) fails.
class WeightedMobius {
public:
    explicit WeightedMobius(int s) : s_(s) {}
    BigInt mu01(std::vector<long> weights);

private:
    int s_;
    std::map<std::vector<long>, BigInt> memo_;
};

BigInt mobius_weighted(const std::vector<long>& weights, int s);

// mu^s_m(1^m)(0,1) for m = s+2..m_max.
std::vector<BigInt> euler_sequence(int s, int m_max);

// Same with a fixed multiset of heavy weights padded by unit weights:
// m runs from max(|heavy|+1, m_min) to m_max, w = heavy + 1^(m-|heavy|).
std::vector<BigInt> euler_sequence_weighted(const std::vector<long>& heavy, int s,
                                            int m_min, int m_max);

// Reduced Euler characteristic of B(m,s), the poset of nonempty subsets of
// [m] of cardinality < s. Closed form (-1)^s C(m-1,s-1) and the direct
// alternating chain count of the order complex; bms_euler computes both and
// insists they agree. Requires 1 <= s <= m+1.
BigInt bms_euler_closed(int m, int s);
BigInt bms_euler_direct(int m, int s);
BigInt bms_euler(int m, int s);

}  // namespace schrome
