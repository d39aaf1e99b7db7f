#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "schrome/bigint.hpp"
#include "schrome/complex.hpp"
#include "schrome/partition.hpp"
#include "schrome/polynomial.hpp"

namespace schrome {

// A set of s-simplices of K, listed as vertex masks.
using SimplexSet = std::vector<VertexSet>;

// Smallest closed set of s-simplices containing S: iterate adding every
// s-face of K inside the support to a fixpoint.
SimplexSet closure(const SimplicialComplex& K, SimplexSet S, int s);

// Components under the smallest equivalence relation with
// s1 cap s2 != 0 => s1 ~ s2.
std::vector<SimplexSet> simplex_set_components(const SimplexSet& S);

VertexSet simplex_set_support(const SimplexSet& S);

// pi(S): component supports plus singletons for the untouched vertices.
Partition induced_partition(const SimplicialComplex& K, const SimplexSet& S);

// s-simplices monochrome under a coloring / inside a block of a partition.
SimplexSet monochrome_set_of_coloring(const SimplicialComplex& K,
                                      const std::vector<int>& col, int s);
SimplexSet monochrome_set_of_partition(const SimplicialComplex& K,
                                       const Partition& p, int s);

// Bitset over the face list of a lattice; width fixed per lattice.
struct FaceMask {
    std::vector<std::uint64_t> w;

    bool operator==(const FaceMask&) const = default;
    bool operator<(const FaceMask& o) const { return w < o.w; }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool subset_of(const FaceMask& o) const;
    int count() const;
    bool any() const;
    FaceMask and_with(const FaceMask& o) const;
    FaceMask or_with(const FaceMask& o) const;
};

inline constexpr std::size_t kLatticeGuard = 1000000;

// The s-chromatic lattice L^s(K): all subsets of F^s(K) with closed connected
// components, ordered by inclusion. Built by enumerating closed connected
// face sets over candidate supports, then taking unions of families with
// pairwise disjoint supports. When F^s(K) is empty the lattice is the single
// element {emptyset}.
class ChromaticLattice {
public:
    struct Element {
        FaceMask faces;
        VertexSet support = 0;
        int num_components = 0;
        int num_blocks = 0;  // |pi(S)|
    };

    // Refuses to build past max_elements (SCHROME_GUARD_OVERRIDE lifts).
    static ChromaticLattice build(const SimplicialComplex& K, int s,
                                  std::size_t max_elements = kLatticeGuard);

    std::size_t size() const { return elems_.size(); }
    const Element& element(std::size_t i) const { return elems_[i]; }
    const std::vector<VertexSet>& face_list() const { return face_list_; }
    SimplexSet faces_of(std::size_t i) const;

    std::size_t bottom() const { return 0; }
    std::size_t top() const { return elems_.size() - 1; }

    bool leq(std::size_t x, std::size_t y) const;
    std::size_t index_of(const FaceMask& m) const;  // size() when absent
    std::size_t meet(std::size_t x, std::size_t y) const;
    std::size_t join(std::size_t x, std::size_t y) const;

    const BigInt& mobius_from_bottom(std::size_t t) const { return mu0_[t]; }
    // mu(x,y) by the defining recursion, memoized; 0 when x is not below y.
    BigInt mobius(std::size_t x, std::size_t y) const;

    // sum_T mu(0,T) r^{|pi(T)|}
    IntPolynomial chrom_poly() const;
    // sum_T mu(0,T) S(|pi(T)|, r)
    BigInt stirling(int r) const;

    // Cover-step counts of all maximal chains from bottom to top.
    std::vector<int> maximal_chain_lengths() const;

    int num_vertices() const { return m_; }
    int s() const { return s_; }

private:
    int m_ = 0;
    int s_ = 0;
    std::vector<VertexSet> face_list_;
    std::vector<Element> elems_;  // sorted by (face count, mask)
    std::vector<BigInt> mu0_;
    std::map<FaceMask, std::size_t> index_;
    mutable std::map<std::pair<std::size_t, std::size_t>, BigInt> mu_cache_;
};

IntPolynomial chrom_poly_via_lattice(const SimplicialComplex& K, int s,
                                     std::size_t max_elements = kLatticeGuard);
BigInt stirling_via_lattice(const SimplicialComplex& K, int r, int s,
                            std::size_t max_elements = kLatticeGuard);

}  // namespace schrome
