#include "schrome/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "schrome/error.hpp"

namespace schrome {

namespace {

bool parse_long(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

// Deterministic label order: numeric when every label parses as an integer,
// lexicographic otherwise.
std::vector<std::string> sort_labels(std::set<std::string> labels) {
    std::vector<std::string> out(labels.begin(), labels.end());
    std::vector<long long> nums(out.size());
    bool numeric = true;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!parse_long(out[i], nums[i])) {
            numeric = false;
            break;
        }
    if (numeric)
        std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
            long long x = 0, y = 0;
            parse_long(a, x);
            parse_long(b, y);
            return x != y ? x < y : a < b;
        });
    return out;
}

void sort_lex(std::vector<VertexSet>& v) { std::sort(v.begin(), v.end(), vlex_less); }

// Keeps only maximal sets, sorted lexicographically.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> out;
    for (VertexSet a : sets) {
        bool contained = false;
        for (VertexSet b : sets)
            if (a != b && vsubset(a, b)) {
                contained = true;
                break;
            }
        if (!contained) out.push_back(a);
    }
    sort_lex(out);
    return out;
}

void subsets_of(VertexSet face, int k, VertexSet acc, int min_v, std::vector<VertexSet>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (VertexSet t = face & ~(vbit(min_v) - 1); t; t &= t - 1) {
        int v = lowest_vertex(t);
        subsets_of(face, k - 1, acc | vbit(v), v + 1, out);
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::build(int m, std::vector<VertexSet> facets,
                                           std::vector<std::string> labels) {
    SimplicialComplex K;
    K.m_ = m;
    K.facets_ = maximal_sets(std::move(facets));
    K.labels_ = std::move(labels);
    K.dim_ = 0;
    for (VertexSet f : K.facets_) K.dim_ = std::max(K.dim_, vcount(f) - 1);
    K.adj_.assign(m, 0);
    for (VertexSet f : K.facets_)
        for (VertexSet t = f; t; t &= t - 1) K.adj_[lowest_vertex(t)] |= f;
    for (int v = 0; v < m; ++v) K.adj_[v] &= ~vbit(v);
    return K;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets) {
    require(!facets.empty(), "empty complex: no facets given");
    std::set<std::string> labelset;
    for (const auto& f : facets) {
        require(!f.empty(), "invalid facet: facets must be nonempty");
        for (const auto& l : f) labelset.insert(l);
    }
    std::vector<std::string> labels = sort_labels(std::move(labelset));
    require(static_cast<int>(labels.size()) <= kMaxVertices,
            "too many vertices: at most 31 supported");
    std::map<std::string, int> id;
    for (std::size_t i = 0; i < labels.size(); ++i) id[labels[i]] = static_cast<int>(i);
    std::vector<VertexSet> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        VertexSet mask = 0;
        for (const auto& l : f) mask |= vbit(id[l]);
        masks.push_back(mask);
    }
    return build(static_cast<int>(labels.size()), std::move(masks), std::move(labels));
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<int>>& facets) {
    std::vector<std::vector<std::string>> as_str;
    as_str.reserve(facets.size());
    for (const auto& f : facets) {
        std::vector<std::string> g;
        g.reserve(f.size());
        for (int v : f) g.push_back(std::to_string(v));
        as_str.push_back(std::move(g));
    }
    return from_facets(as_str);
}

SimplicialComplex SimplicialComplex::from_masks(int m, std::vector<VertexSet> facets,
                                                std::vector<std::string> labels) {
    require(m >= 1 && m <= kMaxVertices, "vertex count out of range");
    require(!facets.empty(), "empty complex: no facets given");
    VertexSet support = 0;
    for (VertexSet f : facets) {
        require(f != 0, "invalid facet: facets must be nonempty");
        require(vsubset(f, vfull(m)), "facet outside vertex range");
        support |= f;
    }
    // vertices missing from every facet become singleton facets
    for (VertexSet t = vfull(m) & ~support; t; t &= t - 1) facets.push_back(t & -t);
    if (labels.empty())
        for (int v = 0; v < m; ++v) labels.push_back(std::to_string(v));
    require(static_cast<int>(labels.size()) == m, "label count mismatch");
    return build(m, std::move(facets), std::move(labels));
}

std::vector<VertexSet> SimplicialComplex::faces(int s) const {
    std::vector<VertexSet> out;
    if (s < 0 || s > dim_) return out;
    for (VertexSet f : facets_)
        if (vcount(f) >= s + 1) subsets_of(f, s + 1, 0, 0, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    sort_lex(out);
    return out;
}

bool SimplicialComplex::has_face(VertexSet simplex) const {
    for (VertexSet f : facets_)
        if (vsubset(simplex, f)) return true;
    return false;
}

SimplicialComplex SimplicialComplex::skeleton(int s) const {
    require(s >= 0, "skeleton: s must be >= 0");
    if (s >= dim_) return *this;
    std::vector<VertexSet> cand = faces(s);
    for (VertexSet f : facets_)
        if (vcount(f) <= s) cand.push_back(f);
    return build(m_, std::move(cand), labels_);
}

FVector SimplicialComplex::f_vector() const {
    FVector fv;
    for (int s = 0; s <= dim_; ++s) fv.counts.push_back(static_cast<std::int64_t>(faces(s).size()));
    return fv;
}

SimplicialComplex SimplicialComplex::induced(VertexSet U) const {
    require(U != 0, "empty complex: induced vertex set is empty");
    require(vsubset(U, vertex_set()), "induced: U not inside the vertex set");
    std::vector<int> verts = to_vertices(U);
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    std::vector<int> newid(m_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        newid[verts[i]] = static_cast<int>(i);
        labels.push_back(labels_[verts[i]]);
    }
    std::vector<VertexSet> fac;
    for (VertexSet f : facets_) {
        VertexSet cut = f & U;
        if (cut == 0) continue;
        VertexSet remapped = 0;
        for (VertexSet t = cut; t; t &= t - 1) remapped |= vbit(newid[lowest_vertex(t)]);
        fac.push_back(remapped);
    }
    // every vertex of U lies in some facet of K, hence in some cut
    return build(static_cast<int>(verts.size()), std::move(fac), std::move(labels));
}

std::vector<VertexSet> SimplicialComplex::components(VertexSet B) const {
    std::vector<VertexSet> out;
    VertexSet left = B;
    while (left) {
        VertexSet comp = left & -left;
        for (;;) {
            VertexSet grown = comp;
            for (VertexSet t = comp; t; t &= t - 1) grown |= adj_[lowest_vertex(t)] & B;
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    std::sort(out.begin(), out.end(), vlex_less);
    return out;
}

bool SimplicialComplex::connected(VertexSet B) const {
    if (B == 0) return true;
    return components(B).size() == 1;
}

SimplicialComplex full_simplex(int m) {
    require(m >= 1, "full_simplex: m must be >= 1");
    require(m <= kMaxVertices, "full_simplex: at most 31 vertices");
    std::vector<std::string> labels;
    for (int v = 1; v <= m; ++v) labels.push_back(std::to_string(v));
    return SimplicialComplex::from_masks(m, {vfull(m)}, std::move(labels));
}

namespace {

// Make L's labels disjoint from `taken` by appending primes.
std::vector<std::string> fresh_labels(const SimplicialComplex& L, std::set<std::string>& taken) {
    std::vector<std::string> out;
    for (int v = 0; v < L.num_vertices(); ++v) {
        std::string l = L.label(v);
        while (taken.count(l)) l += "'";
        taken.insert(l);
        out.push_back(l);
    }
    return out;
}

}  // namespace

SimplicialComplex disjoint_union(const SimplicialComplex& K, const SimplicialComplex& L) {
    std::set<std::string> taken(K.labels().begin(), K.labels().end());
    std::vector<std::string> llabels = fresh_labels(L, taken);
    std::vector<std::vector<std::string>> facets;
    for (VertexSet f : K.facets()) {
        std::vector<std::string> g;
        for (int v : to_vertices(f)) g.push_back(K.label(v));
        facets.push_back(std::move(g));
    }
    for (VertexSet f : L.facets()) {
        std::vector<std::string> g;
        for (int v : to_vertices(f)) g.push_back(llabels[v]);
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex wedge(const SimplicialComplex& K, const SimplicialComplex& L,
                        const std::string& vK, const std::string& vL) {
    int iK = -1, iL = -1;
    for (int v = 0; v < K.num_vertices(); ++v)
        if (K.label(v) == vK) iK = v;
    for (int v = 0; v < L.num_vertices(); ++v)
        if (L.label(v) == vL) iL = v;
    require(iK >= 0, "unknown vertex: '" + vK + "' is not a vertex of the first complex");
    require(iL >= 0, "unknown vertex: '" + vL + "' is not a vertex of the second complex");
    std::set<std::string> taken(K.labels().begin(), K.labels().end());
    std::vector<std::string> llabels = fresh_labels(L, taken);
    llabels[iL] = vK;  // identify
    std::vector<std::vector<std::string>> facets;
    for (VertexSet f : K.facets()) {
        std::vector<std::string> g;
        for (int v : to_vertices(f)) g.push_back(K.label(v));
        facets.push_back(std::move(g));
    }
    for (VertexSet f : L.facets()) {
        std::vector<std::string> g;
        for (int v : to_vertices(f)) g.push_back(llabels[v]);
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cyclic_polytope_boundary(int m, int n) {
    require(n >= 2 && m > n, "cyclic polytope: need m > n >= 2");
    require(m <= kMaxVertices, "cyclic polytope: at most 31 vertices");
    std::vector<std::vector<int>> facets;
    // Gale evenness over n-subsets of the ordered set 1..m
    std::vector<int> pick(n);
    auto even_between = [&](const std::vector<int>& sigma) {
        std::vector<bool> in(m + 1, false);
        for (int x : sigma) in[x] = true;
        std::vector<int> comp;
        for (int x = 1; x <= m; ++x)
            if (!in[x]) comp.push_back(x);
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j) {
                int cnt = 0;
                for (int x : sigma)
                    if (comp[i] < x && x < comp[j]) ++cnt;
                if (cnt % 2 != 0) return false;
            }
        return true;
    };
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == n) {
            if (even_between(pick)) facets.push_back(pick);
            return;
        }
        for (int x = start; x <= m - (n - k - 1); ++x) {
            pick[k] = x;
            rec(x + 1, k + 1);
        }
    };
    rec(1, 0);
    return SimplicialComplex::from_facets(facets);
}

}  // namespace schrome
