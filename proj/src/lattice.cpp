#include "schrome/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "schrome/error.hpp"
#include "schrome/stirling.hpp"

namespace schrome {

bool FaceMask::subset_of(const FaceMask& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] & ~o.w[i]) return false;
    return true;
}

int FaceMask::count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
}

bool FaceMask::any() const {
    for (auto x : w)
        if (x) return true;
    return false;
}

FaceMask FaceMask::and_with(const FaceMask& o) const {
    FaceMask out = *this;
    for (std::size_t i = 0; i < w.size(); ++i) out.w[i] &= o.w[i];
    return out;
}

FaceMask FaceMask::or_with(const FaceMask& o) const {
    FaceMask out = *this;
    for (std::size_t i = 0; i < w.size(); ++i) out.w[i] |= o.w[i];
    return out;
}

SimplexSet closure(const SimplicialComplex& K, SimplexSet S, int s) {
    std::vector<VertexSet> all = K.faces(s);
    for (VertexSet f : S)
        require(std::find(all.begin(), all.end(), f) != all.end(),
                "closure: input contains a non-face");
    for (;;) {
        VertexSet support = 0;
        for (VertexSet f : S) support |= f;
        std::size_t before = S.size();
        for (VertexSet f : all)
            if (vsubset(f, support) && std::find(S.begin(), S.end(), f) == S.end())
                S.push_back(f);
        if (S.size() == before) break;
    }
    std::sort(S.begin(), S.end(), vlex_less);
    return S;
}

std::vector<SimplexSet> simplex_set_components(const SimplexSet& S) {
    std::vector<SimplexSet> comps;
    std::vector<bool> used(S.size(), false);
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (used[i]) continue;
        SimplexSet comp{S[i]};
        used[i] = true;
        VertexSet support = S[i];
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t j = 0; j < S.size(); ++j)
                if (!used[j] && (S[j] & support)) {
                    used[j] = true;
                    comp.push_back(S[j]);
                    support |= S[j];
                    grew = true;
                }
        }
        std::sort(comp.begin(), comp.end(), vlex_less);
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const SimplexSet& a, const SimplexSet& b) { return vlex_less(a[0], b[0]); });
    return comps;
}

VertexSet simplex_set_support(const SimplexSet& S) {
    VertexSet out = 0;
    for (VertexSet f : S) out |= f;
    return out;
}

Partition induced_partition(const SimplicialComplex& K, const SimplexSet& S) {
    std::vector<VertexSet> blocks;
    VertexSet support = simplex_set_support(S);
    for (const SimplexSet& comp : simplex_set_components(S))
        blocks.push_back(simplex_set_support(comp));
    for (VertexSet t = K.vertex_set() & ~support; t; t &= t - 1) blocks.push_back(t & -t);
    return Partition(std::move(blocks));
}

SimplexSet monochrome_set_of_coloring(const SimplicialComplex& K, const std::vector<int>& col,
                                      int s) {
    require(static_cast<int>(col.size()) == K.num_vertices(),
            "monochrome set: coloring must be total on the vertex set");
    SimplexSet out;
    for (VertexSet f : K.faces(s)) {
        std::vector<int> vs = to_vertices(f);
        bool mono = true;
        for (std::size_t i = 1; i < vs.size(); ++i)
            if (col[vs[i]] != col[vs[0]]) {
                mono = false;
                break;
            }
        if (mono) out.push_back(f);
    }
    return out;
}

SimplexSet monochrome_set_of_partition(const SimplicialComplex& K, const Partition& p, int s) {
    validate_partition(p, K.num_vertices());
    SimplexSet out;
    for (VertexSet f : K.faces(s))
        for (VertexSet b : p.blocks)
            if (vsubset(f, b)) {
                out.push_back(f);
                break;
            }
    return out;
}

ChromaticLattice ChromaticLattice::build(const SimplicialComplex& K, int s,
                                         std::size_t max_elements) {
    require(s >= 1, "lattice: s must be >= 1");
    ChromaticLattice L;
    L.m_ = K.num_vertices();
    L.s_ = s;
    L.face_list_ = K.faces(s);
    int nf = static_cast<int>(L.face_list_.size());
    std::size_t words = std::max<std::size_t>(1, (nf + 63) / 64);

    auto empty_mask = [&] {
        FaceMask fm;
        fm.w.assign(words, 0);
        return fm;
    };

    // Closed connected face sets, found through their supports: U carries one
    // iff the faces inside U are nonempty, connected under intersection, and
    // cover exactly U.
    struct Component {
        FaceMask faces;
        VertexSet support;
    };
    std::vector<Component> comps;
    if (nf > 0) {
        guard(L.m_ <= 22, "lattice too large: support scan needs 2^m subsets");
        for (VertexSet U = 0; U <= vfull(L.m_); ++U) {
            if (vcount(U) < s + 1) continue;
            std::vector<int> inside;
            VertexSet support = 0;
            for (int i = 0; i < nf; ++i)
                if (vsubset(L.face_list_[i], U)) {
                    inside.push_back(i);
                    support |= L.face_list_[i];
                }
            if (!inside.empty() && support == U) {
                // connectivity of the face set under shared vertices
                std::vector<bool> used(inside.size(), false);
                VertexSet reach = L.face_list_[inside[0]];
                used[0] = true;
                bool grew = true;
                while (grew) {
                    grew = false;
                    for (std::size_t j = 1; j < inside.size(); ++j)
                        if (!used[j] && (L.face_list_[inside[j]] & reach)) {
                            used[j] = true;
                            reach |= L.face_list_[inside[j]];
                            grew = true;
                        }
                }
                if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
                    Component c{empty_mask(), U};
                    for (int i : inside) c.faces.set(i);
                    comps.push_back(std::move(c));
                }
            }
        }
    }
    std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
        return a.faces.w < b.faces.w;
    });

    // Elements are unions of components with pairwise disjoint supports.
    struct Rec {
        const std::vector<Component>& comps;
        std::vector<Element>& elems;
        std::size_t limit;
        int m;

        void go(std::size_t start, FaceMask faces, VertexSet support, int ncomp) {
            guard(elems.size() < limit, "lattice too large: element guard tripped");
            elems.push_back(
                Element{faces, support, ncomp, ncomp + m - vcount(support)});
            for (std::size_t i = start; i < comps.size(); ++i)
                if ((comps[i].support & support) == 0)
                    go(i + 1, faces.or_with(comps[i].faces), support | comps[i].support,
                       ncomp + 1);
        }
    };
    Rec rec{comps, L.elems_, max_elements, L.m_};
    rec.go(0, empty_mask(), 0, 0);

    std::sort(L.elems_.begin(), L.elems_.end(), [](const Element& a, const Element& b) {
        int ca = a.faces.count(), cb = b.faces.count();
        return ca != cb ? ca < cb : a.faces.w < b.faces.w;
    });
    for (std::size_t i = 0; i < L.elems_.size(); ++i) L.index_[L.elems_[i].faces] = i;

    // mu(0,t) bottom-up: elements are sorted by face count, so every strict
    // predecessor appears earlier.
    L.mu0_.assign(L.elems_.size(), BigInt(0));
    for (std::size_t t = 0; t < L.elems_.size(); ++t) {
        if (t == 0) {
            L.mu0_[0] = 1;
            continue;
        }
        BigInt acc = 0;
        for (std::size_t z = 0; z < t; ++z)
            if (L.elems_[z].faces.subset_of(L.elems_[t].faces)) acc += L.mu0_[z];
        L.mu0_[t] = -acc;
    }
    return L;
}

SimplexSet ChromaticLattice::faces_of(std::size_t i) const {
    SimplexSet out;
    for (int f = 0; f < static_cast<int>(face_list_.size()); ++f)
        if (elems_[i].faces.test(f)) out.push_back(face_list_[f]);
    return out;
}

bool ChromaticLattice::leq(std::size_t x, std::size_t y) const {
    return elems_[x].faces.subset_of(elems_[y].faces);
}

std::size_t ChromaticLattice::index_of(const FaceMask& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? size() : it->second;
}

std::size_t ChromaticLattice::meet(std::size_t x, std::size_t y) const {
    std::size_t i = index_of(elems_[x].faces.and_with(elems_[y].faces));
    if (i == size()) throw VerificationError("lattice meet fell outside the lattice");
    return i;
}

std::size_t ChromaticLattice::join(std::size_t x, std::size_t y) const {
    FaceMask union_mask = elems_[x].faces.or_with(elems_[y].faces);
    FaceMask acc = elems_[top()].faces;
    for (const Element& e : elems_)
        if (union_mask.subset_of(e.faces)) acc = acc.and_with(e.faces);
    std::size_t i = index_of(acc);
    if (i == size()) throw VerificationError("lattice join fell outside the lattice");
    return i;
}

BigInt ChromaticLattice::mobius(std::size_t x, std::size_t y) const {
    if (!leq(x, y)) return 0;
    if (x == y) return 1;
    auto key = std::make_pair(x, y);
    auto it = mu_cache_.find(key);
    if (it != mu_cache_.end()) return it->second;
    BigInt acc = 0;
    for (std::size_t z = 0; z < elems_.size(); ++z)
        if (z != y && leq(x, z) && leq(z, y)) acc += mobius(x, z);
    BigInt out = -acc;
    mu_cache_.emplace(key, out);
    return out;
}

IntPolynomial ChromaticLattice::chrom_poly() const {
    std::vector<BigInt> coeffs(m_ + 1, BigInt(0));
    for (std::size_t t = 0; t < elems_.size(); ++t) coeffs[elems_[t].num_blocks] += mu0_[t];
    return IntPolynomial(std::move(coeffs));
}

BigInt ChromaticLattice::stirling(int r) const {
    std::vector<BigInt> by_blocks(m_ + 1, BigInt(0));
    for (std::size_t t = 0; t < elems_.size(); ++t) by_blocks[elems_[t].num_blocks] += mu0_[t];
    BigInt acc = 0;
    for (int n = 0; n <= m_; ++n)
        if (by_blocks[n] != 0) acc += by_blocks[n] * stirling2(n, r);
    return acc;
}

std::vector<int> ChromaticLattice::maximal_chain_lengths() const {
    std::size_t n = elems_.size();
    // covers[x]: the minimal elements above x
    std::vector<std::vector<std::size_t>> covers(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<std::size_t> ups;
        for (std::size_t y = 0; y < n; ++y)
            if (y != x && leq(x, y)) ups.push_back(y);
        for (std::size_t y : ups) {
            bool is_cover = true;
            for (std::size_t z : ups)
                if (z != y && leq(z, y)) {
                    is_cover = false;
                    break;
                }
            if (is_cover) covers[x].push_back(y);
        }
    }
    std::vector<int> lengths;
    std::vector<std::size_t> chain{bottom()};
    std::function<void(std::size_t, int)> dfs = [&](std::size_t x, int steps) {
        if (x == top()) {
            lengths.push_back(steps);
            return;
        }
        for (std::size_t y : covers[x]) dfs(y, steps + 1);
    };
    dfs(bottom(), 0);
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    return lengths;
}

IntPolynomial chrom_poly_via_lattice(const SimplicialComplex& K, int s,
                                     std::size_t max_elements) {
    return ChromaticLattice::build(K, s, max_elements).chrom_poly();
}

BigInt stirling_via_lattice(const SimplicialComplex& K, int r, int s, std::size_t max_elements) {
    require(r >= 0, "stirling_via_lattice: r must be >= 0");
    return ChromaticLattice::build(K, s, max_elements).stirling(r);
}

}  // namespace schrome
