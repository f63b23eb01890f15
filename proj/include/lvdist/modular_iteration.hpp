#pragma once

// LV_p = (1/p) . LV and its iteration. A weight is distinguished when
// repeatedly applying LV_p to every resulting sequence ends with nothing but
// zeros.

#include "lvdist/core.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace lvdist {

/// A prime p. Every weight processed under the context must have length < p.
class ModularContext {
public:
    /// Throws DomainError if p is not prime.
    explicit ModularContext(BigInt p);
    explicit ModularContext(long p) : ModularContext(BigInt(p)) {}

    const BigInt& p() const noexcept { return p_; }
    /// Throws DomainError when p <= n.
    void require_length(std::size_t n) const;

private:
    BigInt p_;
};

/// LV followed by entrywise division by p. Returns nullopt when some entry of
/// LV(w) is not divisible by p; that is an ordinary outcome, not an error.
std::optional<OmegaElement> lv_p(const Weight& w, const ModularContext& ctx);

enum class TraceStatus { zeros, nonintegral, terminal_short, expanded, exhausted };

const char* to_string(TraceStatus s) noexcept;
/// Throws DomainError for unknown names.
TraceStatus trace_status_from_string(std::string_view name);

/// One node of the LV_p iteration tree.
///
/// zeros: every entry is 0 (the empty sequence included).
/// terminal_short: a single nonzero entry.
/// nonintegral: LV of the node is not divisible by p.
/// exhausted: still expandable but the iteration cap was reached.
/// expanded: `children[i-1]` is mu_i of LV_p(seq).
struct IterationTrace {
    Weight seq;
    TraceStatus status = TraceStatus::zeros;
    std::vector<IterationTrace> children;
    /// Number of LV_p applications between the root and this node.
    std::size_t level = 0;

    /// Largest number of expansions on a root-to-leaf path.
    std::size_t height() const noexcept;
    /// True when every leaf has status zeros.
    bool all_leaves_zero() const noexcept;

    friend bool operator==(const IterationTrace&, const IterationTrace&) = default;
};

IterationTrace iterate(const Weight& w, const ModularContext& ctx, std::size_t cap);

/// Minimal k <= cap with w in Lambda^+_{n,k}, or nullopt. Prunes at the first
/// failing node without building a trace.
std::optional<std::size_t> distinguished_depth(const Weight& w, const ModularContext& ctx,
                                               std::size_t cap);

/// Partitions read off a distinguished trace. An entry at level t+1 is a
/// partition of the multiplicity of part `parent_part` in entry `parent` of
/// level t.
struct RefinementEntry {
    PartitionMult partition;
    std::size_t parent = 0;
    std::size_t parent_part = 0;

    friend bool operator==(const RefinementEntry&, const RefinementEntry&) = default;
};

struct RefinementChain {
    std::vector<std::vector<RefinementEntry>> levels;

    /// Checks the parent links: each entry partitions its parent's multiplicity.
    bool is_consistent() const;
};

/// Throws DomainError if the trace is not distinguished.
RefinementChain refinement_chain(const IterationTrace& t);

/// (n-1, n-3, ..., 1-n) scaled by (p^m - 1)/(p - 1).
Weight rho_family(std::size_t n, std::size_t m, const ModularContext& ctx);

/// (p^m - 1)/(p - 1) = 1 + p + ... + p^{m-1}.
BigInt geometric_sum(const BigInt& p, std::size_t m);

} // namespace lvdist
