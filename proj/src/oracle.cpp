#include "schrome/oracle.hpp"

#include <algorithm>

#include "schrome/error.hpp"

namespace schrome::oracle {

BigInt brute_colorings(const SimplicialComplex& K, int r, int s) {
    require(r >= 0, "brute_colorings: r must be >= 0");
    require(s >= 1, "brute_colorings: s must be >= 1");
    int m = K.num_vertices();
    guard(big_pow(BigInt(r), m) <= BigInt(1000000000), "brute_colorings: r^m over 10^9");
    if (r == 0) return 0;
    std::vector<VertexSet> faces = K.faces(s);
    std::vector<int> col(m, 0);
    BigInt count = 0;
    for (;;) {
        bool ok = true;
        for (VertexSet f : faces) {
            std::vector<int> vs = to_vertices(f);
            bool mono = true;
            for (std::size_t i = 1; i < vs.size(); ++i)
                if (col[vs[i]] != col[vs[0]]) {
                    mono = false;
                    break;
                }
            if (mono) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int pos = 0;
        while (pos < m && ++col[pos] == r) col[pos++] = 0;
        if (pos == m) break;
    }
    return count;
}

void for_each_set_partition(int m, const std::function<void(const Partition&)>& visit) {
    require(m >= 1, "set partitions: m must be >= 1");
    guard(m <= 12, "set partitions: enumeration limited to m <= 12");
    // restricted growth strings: a[v] = block of vertex v, a[v] <= 1+max(prefix)
    std::vector<int> a(m, 0);
    std::function<void(int, int)> rec = [&](int v, int maxb) {
        if (v == m) {
            std::vector<VertexSet> blocks(maxb + 1, 0);
            for (int u = 0; u < m; ++u) blocks[a[u]] |= vbit(u);
            visit(Partition{std::move(blocks)});
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            a[v] = b;
            rec(v + 1, std::max(maxb, b));
        }
    };
    a[0] = 0;
    rec(1, 0);
}

BigInt brute_partitions(const SimplicialComplex& K, int r, int s) {
    require(r >= 0, "brute_partitions: r must be >= 0");
    require(s >= 1, "brute_partitions: s must be >= 1");
    std::vector<VertexSet> faces = K.faces(s);
    BigInt count = 0;
    for_each_set_partition(K.num_vertices(), [&](const Partition& p) {
        if (p.num_blocks() != r) return;
        for (VertexSet b : p.blocks)
            for (VertexSet f : faces)
                if (vsubset(f, b)) return;
        ++count;
    });
    return count;
}

std::vector<Partition> brute_bcp(const SimplicialComplex& K, int s) {
    require(s >= 1, "brute_bcp: s must be >= 1");
    std::vector<VertexSet> faces = K.faces(s);
    std::vector<Partition> out;
    for_each_set_partition(K.num_vertices(), [&](const Partition& p) {
        for (VertexSet b : p.blocks) {
            for (VertexSet f : faces)
                if (vsubset(f, b)) return;
            if (!K.connected(b)) return;
        }
        out.push_back(p);
    });
    return out;
}

std::vector<BigInt> brute_mobius_from(std::size_t n,
                                      const std::function<bool(std::size_t, std::size_t)>& leq,
                                      std::size_t x) {
    guard(n <= 5000, "brute_mobius: poset limited to 5000 elements");
    require(x < n, "brute_mobius: source out of range");
    std::vector<std::size_t> above;
    for (std::size_t y = 0; y < n; ++y)
        if (leq(x, y)) above.push_back(y);
    // z < y implies fewer elements below z, so below-counts give a linear
    // extension of the interval [x, .)
    std::vector<std::size_t> below_count(n, 0);
    for (std::size_t y : above)
        for (std::size_t z : above)
            if (leq(z, y)) ++below_count[y];
    std::sort(above.begin(), above.end(),
              [&](std::size_t a, std::size_t b) { return below_count[a] < below_count[b]; });
    std::vector<BigInt> mu(n, BigInt(0));
    for (std::size_t i = 0; i < above.size(); ++i) {
        std::size_t y = above[i];
        if (y == x) {
            mu[y] = 1;
            continue;
        }
        BigInt acc = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (leq(above[j], y)) acc += mu[above[j]];
        mu[y] = -acc;
    }
    return mu;
}

std::vector<std::vector<BigInt>> brute_mobius(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
    guard(n <= 1500, "brute_mobius: full matrix limited to 1500 elements");
    std::vector<std::vector<BigInt>> out;
    out.reserve(n);
    for (std::size_t x = 0; x < n; ++x) out.push_back(brute_mobius_from(n, leq, x));
    return out;
}

namespace {

BigInt alt_rec(const SimplicialComplex& K, const std::vector<VertexSet>& faces, VertexSet W,
               int r) {
    if (W == 0) return r == 0 ? 1 : 0;
    if (r <= 0) return 0;
    auto independent = [&](VertexSet B) {
        for (VertexSet f : faces)
            if (vsubset(f, B)) return false;
        return true;
    };
    if (r == 1) return independent(W) ? 1 : 0;
    int v0 = lowest_vertex(W);
    VertexSet rest = W & ~vbit(v0);
    // v0 alone in its block, or joined to one block of a partition of the rest
    BigInt total = alt_rec(K, faces, rest, r - 1);
    std::vector<int> verts = to_vertices(rest);
    int k = static_cast<int>(verts.size());
    std::vector<int> a(k, 0);
    std::function<void(int, int)> enumerate = [&](int i, int maxb) {
        if (i == k) {
            if (maxb + 1 != r) return;
            std::vector<VertexSet> blocks(r, 0);
            for (int j = 0; j < k; ++j) blocks[a[j]] |= vbit(verts[j]);
            for (VertexSet b : blocks)
                if (!independent(b)) return;
            for (VertexSet b : blocks)
                if (independent(b | vbit(v0))) ++total;
            return;
        }
        if (maxb + 1 + (k - i) < r) return;  // cannot reach r blocks
        for (int b = 0; b <= std::min(maxb + 1, r - 1); ++b) {
            a[i] = b;
            enumerate(i + 1, std::max(maxb, b));
        }
    };
    if (k > 0) enumerate(1, 0);
    return total;
}

}  // namespace

BigInt alt_stirling_recurrence(const SimplicialComplex& K, int r, int s) {
    require(r >= 0, "alt_stirling_recurrence: r must be >= 0");
    require(s >= 1, "alt_stirling_recurrence: s must be >= 1");
    guard(K.num_vertices() <= 10, "alt_stirling_recurrence: limited to 10 vertices");
    return alt_rec(K, K.faces(s), K.vertex_set(), r);
}

}  // namespace schrome::oracle
