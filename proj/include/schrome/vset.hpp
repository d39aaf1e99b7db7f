#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace schrome {

// Vertices are dense integers 0..m-1 and a vertex set is a bitmask over them.
// Every complex in range has m <= 20, so 32 bits are plenty. A simplex is
// stored as the VertexSet of its vertices; its dimension is popcount-1.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 31;

inline int vcount(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }
inline VertexSet vbit(int v) { return VertexSet{1} << v; }
inline bool vcontains(VertexSet s, int v) { return (s >> v) & 1u; }
inline bool vsubset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
inline VertexSet vfull(int m) { return (VertexSet{1} << m) - 1; }

inline std::vector<int> to_vertices(VertexSet s) {
    std::vector<int> out;
    for (VertexSet t = s; t; t &= t - 1) out.push_back(lowest_vertex(t));
    return out;
}

// Lexicographic order on the ascending vertex lists; used wherever simplices
// or blocks must be emitted deterministically.
inline bool vlex_less(VertexSet a, VertexSet b) {
    while (a && b) {
        int va = lowest_vertex(a), vb = lowest_vertex(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

}  // namespace schrome
