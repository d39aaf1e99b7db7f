#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schrome/bigint.hpp"
#include "schrome/complex.hpp"
#include "schrome/lattice.hpp"
#include "schrome/polynomial.hpp"

namespace schrome {

enum class Method { automatic, partition, lattice, stirling };

// chi(K,r,s) as an exact polynomial. The three explicit methods are
// independent routes that must agree:
//   partition - sum of graph chromatic polynomials over BCP^s(K)
//   lattice   - Moebius sum over L^s(K) (LatticeTooLarge guard applies)
//   stirling  - falling-factorial form from the partition-count DP
// automatic resolves to stirling, the only route that scales past m ~ 10.
IntPolynomial chrom_poly(const SimplicialComplex& K, int s, Method method = Method::automatic);

// coeff[i] = S(K,i,s), from the subset DP.
FallingFactorialForm falling_factorial_form(const SimplicialComplex& K, int s);

// chi_s(K), computed three ways (falling-factorial support, exact set cover,
// least r with a positive polynomial value); VerificationError on mismatch.
int chromatic_number(const SimplicialComplex& K, int s);

// dim(K) x m(K) matrix with S(K,r,s) in row s, column r.
struct ChromaticTable {
    int m = 0;
    std::vector<std::vector<BigInt>> rows;  // rows[s-1][r-1]

    int dim() const { return static_cast<int>(rows.size()); }
    bool operator==(const ChromaticTable&) const = default;
};

ChromaticTable chromatic_table(const SimplicialComplex& K, int threads = 1);

// Table right-multiplied by the upper-triangular ([j]_i) matrix: row s lists
// the values chi(K,i,s) for i = 1..m.
std::vector<std::vector<BigInt>> table_values(const ChromaticTable& t);

// f_s = S(m,m-s) - table[s][m-s] for s = 1..dim; prepends f_0 = m.
FVector f_vector_from_table(const ChromaticTable& t);

// S-generalized chromatic polynomial: members are connected subcomplexes
// given by their vertex supports; a block is independent iff it contains no
// member's support. InvalidInput when a member induces a disconnected complex.
IntPolynomial generalized_chrom_poly(const SimplicialComplex& K,
                                     const std::vector<VertexSet>& member_supports);

IntPolynomial disjoint_union_poly(const IntPolynomial& pK, const IntPolynomial& pL);
IntPolynomial wedge_poly(const IntPolynomial& pK, const IntPolynomial& pL);

enum class LogConcavity { strict, weak, fails };
struct LogConcavityResult {
    LogConcavity kind = LogConcavity::strict;
    std::size_t fail_index = 0;  // index into the original sequence when kind == fails
    std::string str() const;
};

// Classifies a_{i-1} a_{i+1} vs a_i^2 over the support range (leading and
// trailing zeros ignored).
LogConcavityResult logconcavity_check(const std::vector<BigInt>& seq);

// True iff chi(K,.,s) equals chi(D[m(K)],.,s); when true the s-skeleton of K
// is checked to be complete (VerificationError otherwise).
bool skeleton_uniqueness_check(const SimplicialComplex& K, int s);

}  // namespace schrome
