#pragma once

// Randomized checks of the structural identities of LV, shared by the
// `verify` subcommand and the test suites.

#include "lvdist/core.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lvdist {

/// Random weakly decreasing weight of length in [0, max_n] with entries in
/// [lo, hi].
Weight random_weight(std::mt19937_64& rng, std::size_t max_n, long lo, long hi);

/// Random single-clump weight (distinct values consecutive) of length in
/// [1, max_n] with entries in [lo, hi].
Weight random_clump(std::mt19937_64& rng, std::size_t max_n, long lo, long hi);

struct PropertyResult {
    std::string name;
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::string first_failure; // canonical form of the first failing input

    bool passed() const noexcept { return failures == 0; }
};

/// Runs R-commutation (LV and LV' on single clumps), the phi and E round
/// trips, the column-gap property and sum conservation over `samples`
/// random weights with n <= 8 and entries in [-50, 50].
std::vector<PropertyResult> run_property_suite(std::size_t samples, std::uint64_t seed);

} // namespace lvdist
