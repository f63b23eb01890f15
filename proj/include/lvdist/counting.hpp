#pragma once

// Exact sizes of Lambda^+_{n,k} by the recursion over partitions of n,
// telephone numbers, and the leading coefficient b_n of
// |Lambda^+_{n,k}| ~ b_n k^{floor(n/2)}.

#include "lvdist/core.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace lvdist {

/// All partitions of n, ordered by descending lexicographic order of their
/// part lists: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<PartitionMult> partitions_mult(std::size_t n);

/// Memoized |Lambda^+_{n,k}|:
///
///     |L(n,k)| = 1 + k + sum_{alpha != (n), (1^n)} sum_{m<k} prod_i |L(l_i, m)|
///
/// with |L(0,k)| = |L(1,k)| = 1. Not thread-safe; use one table per thread.
class CountTable {
public:
    BigInt count(std::size_t n, std::size_t k);

private:
    const std::vector<PartitionMult>& mixed_partitions(std::size_t n);

    // rows_[n][k] = |L(n,k)|, extended on demand.
    std::map<std::size_t, std::vector<BigInt>> rows_;
    std::map<std::size_t, std::vector<PartitionMult>> partitions_;
};

BigInt count_distinguished(std::size_t n, std::size_t k);

/// a_0 = a_1 = 1, a_i = a_{i-1} + (i-1) a_{i-2}.
BigInt telephone(std::size_t i);

/// b_n from the parity recursions seeded with b_0..b_4 = 1, 1, 1, 2, 1.
Rational leading_coefficient_recursive(std::size_t n);
/// b_n = a_{floor((n+1)/2)} / floor(n/2)!.
Rational leading_coefficient_closed(std::size_t n);
/// Computes both and throws InternalError if they differ.
Rational leading_coefficient(std::size_t n);

} // namespace lvdist
