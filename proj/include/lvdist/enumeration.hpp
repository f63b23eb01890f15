#pragma once

// Exhaustive search for distinguished weights, the closed-form families for
// n = 2, 3, 4, and scatter records for plotting.

#include "lvdist/core.hpp"
#include "lvdist/modular_iteration.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace lvdist {

/// Candidates are anti-symmetric weights (x_1, ..., x_h, [0], -x_h, ..., -x_1)
/// with bound >= x_1 >= ... >= x_h >= 0 and h = floor(n/2).
struct SearchBox {
    std::size_t n = 0;
    std::size_t k = 0;
    BigInt bound = 0;
    ModularContext ctx{5};
};

/// All weights in the box with distinguished depth <= k, sorted
/// lexicographically descending. The result does not depend on `jobs`.
std::vector<Weight> enumerate_distinguished(const SearchBox& box, unsigned jobs = 1);

/// (n-1)(p^k - 1)/(p - 1): the largest entry of rho_family(n, k).
BigInt default_bound(std::size_t n, std::size_t k, const BigInt& p);

/// Builds the anti-symmetric weight with the given leading half.
Weight mirror_weight(std::span<const BigInt> half, std::size_t n);

enum class Family {
    n2,    // ((p^m-1)/(p-1)) * (1, -1)
    n3_a,  // 2 (p^m-1)/(p-1) * (1, 0, -1)
    n3_b,  // (p^{m+1}+p^m-2)/(p-1) * (1, 0, -1)
    n4_f1, // (p^m-1)/(p-1) * (3, 1, -1, -3)
    n4_f2, // ((p^{m+1}+2p^m-3)/(p-1), (p^m-1)/(p-1), ...)
    n4_f3, // ((p^{m+k+1}+p^{k+1}+p^k-3)/(p-1), (p^k-1)/(p-1), ...)
    n4_f4, // parity split on m, denominators 2(p-1)
};

std::size_t family_length(Family f) noexcept;
std::string_view family_name(Family f) noexcept;
/// Families that classify length n (n = 2, 3, 4).
std::vector<Family> families_for(std::size_t n);

struct FamilyParams {
    std::size_t m = 0;
    std::size_t k = 0;
};

/// Number of LV_p iterations the family member needs to reach zeros.
std::size_t family_depth(Family f, const FamilyParams& params);

/// Evaluates a closed form and confirms by forward iteration that its depth is
/// family_depth(f, params). Throws DomainError for a length mismatch,
/// parameters outside the family's range, a non-integral value, or a failed
/// forward check.
Weight closed_family(std::size_t n, Family f, const FamilyParams& params, const ModularContext& ctx);

/// Every family member with stated depth <= max_k, deduplicated and sorted
/// descending.
std::vector<Weight> generate_family_set(std::size_t n, const ModularContext& ctx, std::size_t max_k);

struct ScatterRecord {
    std::vector<BigInt> coords; // first floor(n/2) entries
    std::size_t depth = 0;

    friend bool operator==(const ScatterRecord&, const ScatterRecord&) = default;
};

/// Throws DomainError for a weight that is not distinguished within cap.
std::vector<ScatterRecord> scatter_records(std::span<const Weight> weights, const ModularContext& ctx,
                                           std::size_t cap);

} // namespace lvdist
