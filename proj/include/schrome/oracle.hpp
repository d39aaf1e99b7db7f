#pragma once

#include <functional>
#include <vector>

#include "schrome/bigint.hpp"
#include "schrome/complex.hpp"
#include "schrome/partition.hpp"

namespace schrome::oracle {

// Brute-force references. Never used by production paths; they exist so every
// derived constant in the docs and tests can be recomputed from first
// principles. All guards are lifted by SCHROME_GUARD_OVERRIDE.

// Counts maps V(K) -> [r] with no monochrome s-simplex by full enumeration.
// Guard: r^m <= 10^9.
BigInt brute_colorings(const SimplicialComplex& K, int r, int s);

// Every set partition of 0..m-1, restricted-growth-string order.
// Guard: m <= 12.
void for_each_set_partition(int m, const std::function<void(const Partition&)>& visit);

// S(K,r,s) by filtering all set partitions. Guard: m <= 12.
BigInt brute_partitions(const SimplicialComplex& K, int r, int s);

// All block-connected s-independent partitions by filtering. Guard: m <= 12.
std::vector<Partition> brute_bcp(const SimplicialComplex& K, int s);

// mu(x,y) for all y in a finite poset given by size and order predicate.
std::vector<BigInt> brute_mobius_from(std::size_t n,
                                      const std::function<bool(std::size_t, std::size_t)>& leq,
                                      std::size_t x);  // guard n <= 5000
std::vector<std::vector<BigInt>> brute_mobius(std::size_t n,
                                              const std::function<bool(std::size_t, std::size_t)>& leq);
// guard n <= 1500 (full matrix)

// S(K,r,s) by the second recurrence: split on whether the smallest vertex
// forms its own block or joins a block of the rest. Guard: m <= 10.
BigInt alt_stirling_recurrence(const SimplicialComplex& K, int r, int s);

}  // namespace schrome::oracle
