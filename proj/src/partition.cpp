#include "schrome/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "schrome/error.hpp"

namespace schrome {

Partition::Partition(std::vector<VertexSet> b) : blocks(std::move(b)) {
    std::sort(blocks.begin(), blocks.end(),
              [](VertexSet x, VertexSet y) { return lowest_vertex(x) < lowest_vertex(y); });
}

Partition Partition::singletons(int m) {
    std::vector<VertexSet> b;
    b.reserve(m);
    for (int v = 0; v < m; ++v) b.push_back(vbit(v));
    return Partition(std::move(b));
}

void validate_partition(const Partition& p, int m) {
    VertexSet seen = 0;
    for (VertexSet b : p.blocks) {
        require(b != 0, "partition: empty block");
        require((b & seen) == 0, "partition: blocks overlap");
        seen |= b;
    }
    require(seen == vfull(m), "partition: blocks must cover the vertex set");
}

bool is_independent(const SimplicialComplex& K, VertexSet B, int s) {
    require(vsubset(B, K.vertex_set()), "is_independent: B outside the vertex set");
    for (VertexSet f : K.faces(s))
        if (vsubset(f, B)) return false;
    return true;
}

std::vector<VertexSet> connected_components(const SimplicialComplex& K, VertexSet B) {
    require(vsubset(B, K.vertex_set()), "connected_components: B outside the vertex set");
    return K.components(B);
}

Partition block_connected_refinement(const SimplicialComplex& K, const Partition& p) {
    validate_partition(p, K.num_vertices());
    std::vector<VertexSet> blocks;
    for (VertexSet b : p.blocks)
        for (VertexSet c : K.components(b)) blocks.push_back(c);
    return Partition(std::move(blocks));
}

SimpleGraph partition_graph(const SimplicialComplex& K, const Partition& p) {
    int n = p.num_blocks();
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (K.connected(p.blocks[i] | p.blocks[j])) g.add_edge(i, j);
    return g;
}

namespace {

// Forbidden-set bookkeeping shared by the enumerator and the DP: for each
// vertex, the forbidden sets containing it, so extending a block by v only
// scans those.
struct Forbidden {
    std::vector<std::vector<VertexSet>> by_vertex;

    Forbidden(int m, const std::vector<VertexSet>& sets) : by_vertex(m) {
        for (VertexSet f : sets)
            for (VertexSet t = f; t; t &= t - 1) by_vertex[lowest_vertex(t)].push_back(f);
    }
    // B already clean; does B|v swallow a forbidden set through v?
    bool extension_ok(VertexSet B, int v) const {
        VertexSet B2 = B | vbit(v);
        for (VertexSet f : by_vertex[v])
            if (vsubset(f, B2)) return false;
        return true;
    }
    bool singleton_ok(int v) const {
        for (VertexSet f : by_vertex[v])
            if (f == vbit(v)) return false;
        return true;
    }
};

struct PartitionEnum {
    const SimplicialComplex* K = nullptr;  // set when blocks must be connected
    const Forbidden& forb;
    const std::function<void(const Partition&)>& visit;
    std::vector<VertexSet> stack;

    void run(VertexSet remaining) {
        if (remaining == 0) {
            visit(Partition{std::vector<VertexSet>(stack)});  // stack already in min-vertex order
            return;
        }
        int v0 = lowest_vertex(remaining);
        if (!forb.singleton_ok(v0)) return;  // no block can contain v0 at all
        std::vector<int> cands = to_vertices(remaining & ~vbit(v0));
        grow(vbit(v0), 0, cands, remaining);
    }

    // Blocks containing the smallest remaining vertex, extended in
    // lexicographic order.
    void grow(VertexSet B, std::size_t idx, const std::vector<int>& cands, VertexSet remaining) {
        if (!K || K->connected(B)) {
            stack.push_back(B);
            run(remaining & ~B);
            stack.pop_back();
        }
        for (std::size_t j = idx; j < cands.size(); ++j)
            if (forb.extension_ok(B, cands[j])) grow(B | vbit(cands[j]), j + 1, cands, remaining);
    }
};

}  // namespace

void for_each_bcp_forbidden(const SimplicialComplex& K, const std::vector<VertexSet>& forbidden,
                            const std::function<void(const Partition&)>& visit) {
    Forbidden forb(K.num_vertices(), forbidden);
    PartitionEnum e{&K, forb, visit, {}};
    e.run(K.vertex_set());
}

void for_each_bcp(const SimplicialComplex& K, int s,
                  const std::function<void(const Partition&)>& visit) {
    require(s >= 1, "bcp: s must be >= 1");
    for_each_bcp_forbidden(K, K.faces(s), visit);
}

std::vector<Partition> enumerate_bcp(const SimplicialComplex& K, int s) {
    std::vector<Partition> out;
    for_each_bcp(K, s, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<BigInt> restricted_partition_counts(int m, VertexSet universe,
                                                const std::vector<VertexSet>& forbidden) {
    Forbidden forb(m, forbidden);
    std::unordered_map<VertexSet, std::vector<BigInt>> memo;

    std::function<const std::vector<BigInt>&(VertexSet)> counts =
        [&](VertexSet W) -> const std::vector<BigInt>& {
        auto it = memo.find(W);
        if (it != memo.end()) return it->second;
        std::vector<BigInt> out(vcount(W) + 1, BigInt(0));
        if (W == 0) {
            out[0] = 1;
        } else {
            int v0 = lowest_vertex(W);
            if (forb.singleton_ok(v0)) {
                std::vector<int> cands = to_vertices(W & ~vbit(v0));
                std::function<void(VertexSet, std::size_t)> grow = [&](VertexSet B, std::size_t idx) {
                    {
                        const std::vector<BigInt>& sub = counts(W & ~B);
                        for (std::size_t k = 0; k + 1 < out.size() && k < sub.size(); ++k)
                            if (sub[k] != 0) out[k + 1] += sub[k];
                    }
                    for (std::size_t j = idx; j < cands.size(); ++j)
                        if (forb.extension_ok(B, cands[j])) grow(B | vbit(cands[j]), j + 1);
                };
                grow(vbit(v0), 0);
            }
        }
        return memo.emplace(W, std::move(out)).first->second;
    };

    std::vector<BigInt> result = counts(universe);
    result.resize(vcount(universe) + 1, BigInt(0));
    return result;
}

std::vector<BigInt> independent_partition_counts(const SimplicialComplex& K, int s) {
    require(s >= 1, "independent_partition_counts: s must be >= 1");
    return restricted_partition_counts(K.num_vertices(), K.vertex_set(), K.faces(s));
}

BigInt count_independent_partitions(const SimplicialComplex& K, int r, int s) {
    require(r >= 0, "count_independent_partitions: r must be >= 0");
    if (r > K.num_vertices()) return 0;
    return independent_partition_counts(K, s)[r];
}

namespace {

// Bron-Kerbosch generalized to the hypergraph of s-faces: candidates and
// excluded vertices are refiltered against the grown set at every step, which
// keeps the classic once-per-maximal-set guarantee.
void extend_mis(const std::vector<std::vector<VertexSet>>& by_vertex, VertexSet R,
                std::vector<int> P, std::vector<int> X, std::vector<VertexSet>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    auto ok = [&](VertexSet base, int u) {
        VertexSet grown = base | vbit(u);
        for (VertexSet f : by_vertex[u])
            if (vsubset(f, grown)) return false;
        return true;
    };
    for (std::size_t i = 0; i < P.size(); ++i) {
        int v = P[i];
        VertexSet R2 = R | vbit(v);
        std::vector<int> Pv, Xv;
        for (std::size_t j = i + 1; j < P.size(); ++j)
            if (ok(R2, P[j])) Pv.push_back(P[j]);
        for (int u : X)
            if (ok(R2, u)) Xv.push_back(u);
        for (std::size_t j = 0; j < i; ++j)
            if (ok(R2, P[j])) Xv.push_back(P[j]);
        extend_mis(by_vertex, R2, std::move(Pv), std::move(Xv), out);
    }
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const SimplicialComplex& K, int s) {
    require(s >= 1, "maximal_independent_sets: s must be >= 1");
    int m = K.num_vertices();
    std::vector<std::vector<VertexSet>> by_vertex(m);
    for (VertexSet f : K.faces(s))
        for (VertexSet t = f; t; t &= t - 1) by_vertex[lowest_vertex(t)].push_back(f);
    std::vector<int> P;
    for (int v = 0; v < m; ++v) P.push_back(v);  // singletons always independent for s >= 1
    std::vector<VertexSet> out;
    extend_mis(by_vertex, 0, std::move(P), {}, out);
    std::sort(out.begin(), out.end(), vlex_less);
    return out;
}

namespace {

struct SetCover {
    int m;
    const std::vector<VertexSet>& sets;
    int best;

    int greedy() const {
        VertexSet uncovered = vfull(m);
        int used = 0;
        while (uncovered) {
            int pick = -1, gain = -1;
            for (std::size_t i = 0; i < sets.size(); ++i) {
                int g = vcount(sets[i] & uncovered);
                if (g > gain) {
                    gain = g;
                    pick = static_cast<int>(i);
                }
            }
            uncovered &= ~sets[pick];
            ++used;
        }
        return used;
    }

    void rec(VertexSet uncovered, int used) {
        if (!uncovered) {
            best = std::min(best, used);
            return;
        }
        int maxgain = 0;
        for (VertexSet S : sets) maxgain = std::max(maxgain, vcount(S & uncovered));
        int lower = (vcount(uncovered) + maxgain - 1) / maxgain;
        if (used + lower >= best) return;
        // branch on the uncovered vertex contained in fewest sets
        int pick = -1, fewest = -1;
        for (VertexSet t = uncovered; t; t &= t - 1) {
            int v = lowest_vertex(t);
            int cnt = 0;
            for (VertexSet S : sets)
                if (vcontains(S, v)) ++cnt;
            if (fewest < 0 || cnt < fewest) {
                fewest = cnt;
                pick = v;
            }
        }
        std::vector<VertexSet> choices;
        for (VertexSet S : sets)
            if (vcontains(S, pick)) choices.push_back(S);
        std::sort(choices.begin(), choices.end(), [&](VertexSet a, VertexSet b) {
            return vcount(a & uncovered) > vcount(b & uncovered);
        });
        for (VertexSet S : choices) rec(uncovered & ~S, used + 1);
    }
};

}  // namespace

int chromatic_number_setcover(const SimplicialComplex& K, int s) {
    require(s >= 1, "chromatic_number_setcover: s must be >= 1");
    std::vector<VertexSet> sets = maximal_independent_sets(K, s);
    SetCover sc{K.num_vertices(), sets, 0};
    sc.best = sc.greedy();
    sc.rec(K.vertex_set(), 0);
    return sc.best;
}

}  // namespace schrome
