#include "schrome/weighted.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "schrome/error.hpp"
#include "schrome/oracle.hpp"

namespace schrome {

bool WeightedPartitionLattice::leq(std::size_t x, std::size_t y) const {
    // refinement: every block of x lies inside a block of y
    for (VertexSet bx : elements[x].blocks) {
        bool inside = false;
        for (VertexSet by : elements[y].blocks)
            if (vsubset(bx, by)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

std::size_t WeightedPartitionLattice::bottom() const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].num_blocks() == static_cast<int>(weights.size())) return i;
    throw VerificationError("weighted lattice without bottom");
}

bool WeightedPartitionLattice::has_top() const {
    return elements.back().num_blocks() == 1;
}

std::size_t WeightedPartitionLattice::top() const {
    require(has_top(), "weighted lattice has no top element (total weight <= s)");
    return elements.size() - 1;
}

WeightedPartitionLattice weighted_lattice(const std::vector<long>& weights, int s) {
    int m = static_cast<int>(weights.size());
    require(m >= 1, "weighted lattice: need at least one element");
    require(s >= 1, "weighted lattice: s must be >= 1");
    for (long w : weights) require(w >= 1, "weighted lattice: weights must be positive");
    guard(m <= 10, "weighted lattice: explicit build limited to 10 elements");

    WeightedPartitionLattice L;
    L.s = s;
    L.weights = weights;
    auto block_weight = [&](VertexSet b) {
        long t = 0;
        for (int v : to_vertices(b)) t += weights[v];
        return t;
    };
    oracle::for_each_set_partition(m, [&](const Partition& p) {
        for (VertexSet b : p.blocks)
            if (vcount(b) > 1 && block_weight(b) <= s) return;
        L.elements.push_back(p);
    });
    std::sort(L.elements.begin(), L.elements.end(),
              [](const Partition& a, const Partition& b) {
                  if (a.num_blocks() != b.num_blocks()) return a.num_blocks() > b.num_blocks();
                  return a.blocks < b.blocks;
              });
    return L;
}

BigInt WeightedMobius::mu01(std::vector<long> weights) {
    require(!weights.empty(), "mobius_weighted: need at least one element");
    for (long w : weights) require(w >= 1, "mobius_weighted: weights must be positive");
    std::sort(weights.begin(), weights.end(), std::greater<long>());
    int m = static_cast<int>(weights.size());
    if (m == 1) return 1;  // single element: bottom = top
    long total = std::accumulate(weights.begin(), weights.end(), 0L);
    require(total > s_, "mobius_weighted: no top element (total weight <= s)");

    auto it = memo_.find(weights);
    if (it != memo_.end()) return it->second;

    long wm = weights.back();  // minimal weight goes last
    BigInt out;
    if (total - wm <= s_) {
        // the atom recursion needs the first m-1 elements to form a block;
        // degenerate weights fall back to the explicit lattice
        WeightedPartitionLattice L = weighted_lattice(weights, s_);
        std::vector<BigInt> mu = oracle::brute_mobius_from(
            L.size(), [&](std::size_t x, std::size_t y) { return L.leq(x, y); }, L.bottom());
        out = mu[L.top()];
    } else {
        // sum over atoms x with x meet (1..m-1)(m) = bottom: one non-singleton
        // block {x_1..x_t, m} with w(x_1) > s-w(m) for t=1, or
        // s >= w(x_1)+...+w(x_t) > s-w(m) for t>1.
        BigInt acc = 0;
        for (int t_count = 1; t_count <= std::max(1, s_); ++t_count) {
            std::vector<int> comb;
            std::function<void(int, long)> pick = [&](int start, long wsum) {
                if (static_cast<int>(comb.size()) == t_count) {
                    bool ok = t_count == 1 ? (wsum > s_ - wm) : (wsum <= s_ && wsum > s_ - wm);
                    if (!ok) return;
                    std::vector<long> child;
                    child.reserve(m - t_count);
                    std::size_t ci = 0;
                    for (int i = 0; i < m - 1; ++i) {
                        if (ci < comb.size() && comb[ci] == i) {
                            ++ci;
                            continue;
                        }
                        child.push_back(weights[i]);
                    }
                    child.push_back(wsum + wm);
                    acc += mu01(std::move(child));
                    return;
                }
                for (int i = start; i < m - 1; ++i) {
                    long w2 = wsum + weights[i];
                    if (t_count > 1 && w2 > s_) continue;  // t>1 blocks stay <= s
                    comb.push_back(i);
                    pick(i + 1, w2);
                    comb.pop_back();
                }
            };
            pick(0, 0);
        }
        out = -acc;
    }
    memo_.emplace(std::move(weights), out);
    return out;
}

BigInt mobius_weighted(const std::vector<long>& weights, int s) {
    require(s >= 1, "mobius_weighted: s must be >= 1");
    WeightedMobius wm(s);
    return wm.mu01(weights);
}

std::vector<BigInt> euler_sequence(int s, int m_max) {
    require(s >= 1, "euler_sequence: s must be >= 1");
    require(m_max >= s + 2, "euler_sequence: m_max must be at least s+2");
    WeightedMobius wm(s);
    std::vector<BigInt> out;
    for (int m = s + 2; m <= m_max; ++m) out.push_back(wm.mu01(std::vector<long>(m, 1)));
    return out;
}

std::vector<BigInt> euler_sequence_weighted(const std::vector<long>& heavy, int s, int m_min,
                                            int m_max) {
    require(s >= 1, "euler_sequence: s must be >= 1");
    int lo = std::max<int>(m_min, static_cast<int>(heavy.size()) + 1);
    require(m_max >= lo, "euler_sequence: empty range");
    WeightedMobius wm(s);
    std::vector<BigInt> out;
    for (int m = lo; m <= m_max; ++m) {
        std::vector<long> w = heavy;
        w.resize(m, 1);
        out.push_back(wm.mu01(std::move(w)));
    }
    return out;
}

BigInt bms_euler_closed(int m, int s) {
    require(m >= 1 && s >= 1 && s <= m + 1, "bms_euler: need 1 <= s <= m+1");
    BigInt binom = big_binomial(m - 1, s - 1);
    return s % 2 == 0 ? binom : -binom;
}

BigInt bms_euler_direct(int m, int s) {
    require(m >= 1 && s >= 1 && s <= m + 1, "bms_euler: need 1 <= s <= m+1");
    guard(m <= 16, "bms_euler_direct: subset poset limited to m <= 16");
    // order complex chains counted with alternating signs:
    // g(X) = 1 - sum_{Y < X} g(Y), reduced Euler char = sum g - 1.
    std::vector<VertexSet> elems;
    for (VertexSet X = 1; X <= vfull(m); ++X)
        if (vcount(X) < s) elems.push_back(X);
    std::sort(elems.begin(), elems.end(),
              [](VertexSet a, VertexSet b) { return vcount(a) != vcount(b) ? vcount(a) < vcount(b) : a < b; });
    std::vector<BigInt> g(elems.size());
    BigInt total = -1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        BigInt acc = 1;
        for (std::size_t j = 0; j < i; ++j)
            if (elems[j] != elems[i] && vsubset(elems[j], elems[i])) acc -= g[j];
        g[i] = acc;
        total += acc;
    }
    return total;
}

BigInt bms_euler(int m, int s) {
    BigInt closed = bms_euler_closed(m, s);
    BigInt direct = bms_euler_direct(m, s);
    if (closed != direct)
        throw VerificationError("bms_euler: closed form and order-complex count disagree");
    return closed;
}

}  // namespace schrome
