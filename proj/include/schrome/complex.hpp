#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schrome/vset.hpp"

namespace schrome {

// Face counts by dimension: counts[s] = f_s, counts[0] = m(K).
// The empty face is never included.
struct FVector {
    std::vector<std::int64_t> counts;
    bool operator==(const FVector&) const = default;
};

// A finite simplicial complex on vertices 0..m-1, stored by its facets.
// Immutable after construction; every operation is pure, so instances can be
// shared freely across threads.
//
// Invariants: facets are pairwise non-contained, sorted lexicographically;
// every vertex appears in at least one facet (isolated vertices are singleton
// facets). External labels are kept for I/O; internal ids are dense.
class SimplicialComplex {
public:
    // Canonicalizes: duplicates and contained sets are dropped, labels are
    // sorted (numerically when all parse as integers) and mapped to 0..m-1.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);
    static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facets);
    // Facets already given as masks over 0..m-1; labels default to "0".."m-1".
    static SimplicialComplex from_masks(int m, std::vector<VertexSet> facets,
                                        std::vector<std::string> labels = {});

    int num_vertices() const { return m_; }
    int dimension() const { return dim_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    VertexSet vertex_set() const { return vfull(m_); }

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // All s-faces, sorted lexicographically; empty when s > dim or s < 0.
    std::vector<VertexSet> faces(int s) const;
    bool has_face(VertexSet simplex) const;

    SimplicialComplex skeleton(int s) const;
    FVector f_vector() const;

    // K cap D[U]: all faces of K inside U. Labels of kept vertices survive.
    SimplicialComplex induced(VertexSet U) const;

    // 1-skeleton adjacency of v.
    VertexSet adjacency(int v) const { return adj_[v]; }
    // Connected components of the induced complex on B; singletons allowed.
    std::vector<VertexSet> components(VertexSet B) const;
    bool connected(VertexSet B) const;

    bool operator==(const SimplicialComplex& o) const {
        return m_ == o.m_ && facets_ == o.facets_;
    }

private:
    int m_ = 0;
    int dim_ = 0;
    std::vector<VertexSet> facets_;
    std::vector<std::string> labels_;
    std::vector<VertexSet> adj_;

    static SimplicialComplex build(int m, std::vector<VertexSet> facets,
                                   std::vector<std::string> labels);
};

SimplicialComplex full_simplex(int m);  // D[m]

SimplicialComplex disjoint_union(const SimplicialComplex& K, const SimplicialComplex& L);

// One-point union identifying vK (a label of K) with vL (a label of L).
// The merged vertex keeps vK's label.
SimplicialComplex wedge(const SimplicialComplex& K, const SimplicialComplex& L,
                        const std::string& vK, const std::string& vL);

// Boundary of the cyclic n-polytope on m vertices: an n-subset of the ordered
// set [m] is a facet iff between any two non-members there is an even number
// of members (Gale evenness). Requires m > n >= 2.
SimplicialComplex cyclic_polytope_boundary(int m, int n);

}  // namespace schrome
