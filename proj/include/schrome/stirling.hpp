#pragma once

#include <vector>

#include "schrome/bigint.hpp"

namespace schrome {

// Stirling numbers of the second kind S(m,r).
BigInt stirling2(int m, int r);
std::vector<BigInt> stirling2_row(int m);  // S(m,r) for r = 0..m

// S(m,r,s) = S(D[m],r,s): partitions of [m] into r blocks of size <= s,
// by the recurrence S(m,r,s) = sum_{j=m-s}^{m-1} C(m-1,j) S(j,r-1,s).
BigInt stirling_simplex(int m, int r, int s);
std::vector<BigInt> stirling_simplex_row(int m, int s);  // r = 0..m

// S(M,w,r,s): partitions of a weighted set into r admissible blocks, where a
// block is admissible iff it is a singleton or has weight at most s. With unit
// weights this is stirling_simplex(|M|,r,s).
BigInt weighted_count(const std::vector<long>& weights, int r, int s);
std::vector<BigInt> weighted_count_row(const std::vector<long>& weights, int s);

}  // namespace schrome
