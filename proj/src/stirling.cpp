#include "schrome/stirling.hpp"

#include <unordered_map>

#include "schrome/error.hpp"
#include "schrome/vset.hpp"

namespace schrome {

std::vector<BigInt> stirling2_row(int m) {
    require(m >= 0, "stirling2: m must be >= 0");
    // S(m,r) = S(m-1,r-1) + r S(m-1,r)
    std::vector<BigInt> row{BigInt(1)};  // m = 0
    for (int n = 1; n <= m; ++n) {
        std::vector<BigInt> next(n + 1, BigInt(0));
        for (int r = 1; r <= n; ++r) {
            next[r] = (r - 1 < static_cast<int>(row.size()) ? row[r - 1] : BigInt(0));
            if (r < static_cast<int>(row.size())) next[r] += r * row[r];
        }
        row = std::move(next);
    }
    return row;
}

BigInt stirling2(int m, int r) {
    if (r < 0 || r > m) return 0;
    return stirling2_row(m)[r];
}

std::vector<BigInt> stirling_simplex_row(int m, int s) {
    require(m >= 0, "stirling_simplex: m must be >= 0");
    require(s >= 1, "stirling_simplex: s must be >= 1");
    // rows[j][r] for j = 0..m; S(m,r,s) = sum_{j=m-s}^{m-1} C(m-1,j) S(j,r-1,s)
    std::vector<std::vector<BigInt>> rows(m + 1);
    rows[0] = {BigInt(1)};
    for (int n = 1; n <= m; ++n) {
        rows[n].assign(n + 1, BigInt(0));
        for (int j = std::max(0, n - s); j <= n - 1; ++j) {
            BigInt c = big_binomial(n - 1, j);
            for (int r = 1; r <= n && r - 1 <= j; ++r) rows[n][r] += c * rows[j][r - 1];
        }
    }
    return rows[m];
}

BigInt stirling_simplex(int m, int r, int s) {
    if (r < 0 || r > m) return 0;
    return stirling_simplex_row(m, s)[r];
}

namespace {

// Subset DP for the weighted counts: the block containing the largest
// remaining element is chosen first, everything else recurses.
struct WeightedDP {
    const std::vector<long>& w;
    int s;
    std::unordered_map<VertexSet, std::vector<BigInt>> memo;

    const std::vector<BigInt>& counts(VertexSet M) {
        auto it = memo.find(M);
        if (it != memo.end()) return it->second;
        std::vector<BigInt> out(vcount(M) + 1, BigInt(0));
        if (M == 0) {
            out[0] = 1;
        } else {
            int top = 31 - std::countl_zero(M);
            // enumerate admissible blocks B containing top
            std::vector<int> cands = to_vertices(M & ~vbit(top));
            enumerate(vbit(top), w[top], 0, cands, M, out);
        }
        return memo.emplace(M, std::move(out)).first->second;
    }

    void enumerate(VertexSet B, long wsum, std::size_t idx, const std::vector<int>& cands,
                   VertexSet M, std::vector<BigInt>& out) {
        if (vcount(B) == 1 || wsum <= s) {  // admissible: singleton or weight <= s
            const std::vector<BigInt>& sub = counts(M & ~B);
            for (std::size_t k = 0; k + 1 < out.size() && k < sub.size(); ++k)
                if (sub[k] != 0) out[k + 1] += sub[k];
        }
        for (std::size_t j = idx; j < cands.size(); ++j) {
            long w2 = wsum + w[cands[j]];
            // a larger block is admissible only while its weight stays <= s
            if (w2 <= s) enumerate(B | vbit(cands[j]), w2, j + 1, cands, M, out);
        }
    }
};

}  // namespace

std::vector<BigInt> weighted_count_row(const std::vector<long>& weights, int s) {
    int m = static_cast<int>(weights.size());
    require(m >= 1 && m <= kMaxVertices, "weighted_count: need 1 <= |M| <= 31");
    require(s >= 1, "weighted_count: s must be >= 1");
    for (long x : weights) require(x >= 1, "weighted_count: weights must be positive");
    WeightedDP dp{weights, s, {}};
    return dp.counts(vfull(m));
}

BigInt weighted_count(const std::vector<long>& weights, int r, int s) {
    if (r < 0 || r > static_cast<int>(weights.size())) return 0;
    return weighted_count_row(weights, s)[r];
}

}  // namespace schrome
