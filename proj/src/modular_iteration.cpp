#include "lvdist/modular_iteration.hpp"

#include "lvdist/lv_algorithm.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <random>

namespace lvdist {

namespace {

bool is_prime(const BigInt& p)
{
    if (p < 2)
        return false;
    for (long d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (p == d)
            return true;
        if (p % d == 0)
            return false;
    }
    if (p < 37 * 37)
        return true;
    std::mt19937_64 gen(0x5eed);
    return boost::multiprecision::miller_rabin_test(p, 32, gen);
}

std::optional<std::size_t> depth_within(const Weight& w, const BigInt& p, std::size_t cap)
{
    if (w.all_zero())
        return 0;
    if (w.size() <= 1 || cap == 0)
        return std::nullopt;
    const OmegaElement out = lv(w);
    std::size_t deepest = 0;
    // Check divisibility of the whole output before recursing so that the
    // common failure is cheap.
    for (const auto& m : out.parts())
        for (const auto& x : m.vec())
            if (x % p != 0)
                return std::nullopt;
    for (const auto& m : out.parts()) {
        std::vector<BigInt> q;
        q.reserve(m.size());
        for (const auto& x : m.vec())
            q.push_back(x / p);
        auto d = depth_within(Weight(std::move(q)), p, cap - 1);
        if (!d)
            return std::nullopt;
        deepest = std::max(deepest, *d);
    }
    return deepest + 1;
}

IterationTrace build(const Weight& w, const BigInt& p, std::size_t remaining, std::size_t level)
{
    IterationTrace node;
    node.seq = w;
    node.level = level;
    if (w.all_zero()) {
        node.status = TraceStatus::zeros;
    } else if (w.size() <= 1) {
        node.status = TraceStatus::terminal_short;
    } else if (remaining == 0) {
        node.status = TraceStatus::exhausted;
    } else {
        const OmegaElement out = lv(w);
        std::vector<Weight> divided;
        bool integral = true;
        for (const auto& m : out.parts()) {
            std::vector<BigInt> q;
            q.reserve(m.size());
            for (const auto& x : m.vec()) {
                if (x % p != 0) {
                    integral = false;
                    break;
                }
                q.push_back(x / p);
            }
            if (!integral)
                break;
            divided.emplace_back(std::move(q));
        }
        if (!integral) {
            node.status = TraceStatus::nonintegral;
        } else {
            node.status = TraceStatus::expanded;
            node.children.reserve(divided.size());
            for (const auto& d : divided)
                node.children.push_back(build(d, p, remaining - 1, level + 1));
        }
    }
    return node;
}

} // namespace

ModularContext::ModularContext(BigInt p) : p_(std::move(p))
{
    if (!is_prime(p_))
        throw DomainError("modulus " + p_.str() + " is not prime");
}

void ModularContext::require_length(std::size_t n) const
{
    if (p_ <= n)
        throw DomainError("prime " + p_.str() + " must exceed the weight length " + std::to_string(n));
}

std::optional<OmegaElement> lv_p(const Weight& w, const ModularContext& ctx)
{
    ctx.require_length(w.size());
    const OmegaElement out = lv(w);
    std::vector<Weight> mu;
    mu.reserve(out.length());
    for (const auto& m : out.parts()) {
        std::vector<BigInt> q;
        q.reserve(m.size());
        for (const auto& x : m.vec()) {
            if (x % ctx.p() != 0)
                return std::nullopt;
            q.push_back(x / ctx.p());
        }
        mu.emplace_back(std::move(q));
    }
    return OmegaElement(std::move(mu));
}

const char* to_string(TraceStatus s) noexcept
{
    switch (s) {
    case TraceStatus::zeros: return "zeros";
    case TraceStatus::nonintegral: return "nonintegral";
    case TraceStatus::terminal_short: return "terminal_short";
    case TraceStatus::expanded: return "expanded";
    case TraceStatus::exhausted: return "exhausted";
    }
    return "?";
}

TraceStatus trace_status_from_string(std::string_view name)
{
    for (auto s : {TraceStatus::zeros, TraceStatus::nonintegral, TraceStatus::terminal_short,
                   TraceStatus::expanded, TraceStatus::exhausted}) {
        if (name == to_string(s))
            return s;
    }
    throw DomainError("unknown trace status '" + std::string(name) + "'");
}

std::size_t IterationTrace::height() const noexcept
{
    if (status != TraceStatus::expanded)
        return 0;
    std::size_t h = 0;
    for (const auto& c : children)
        h = std::max(h, c.height());
    return h + 1;
}

bool IterationTrace::all_leaves_zero() const noexcept
{
    if (status == TraceStatus::expanded)
        return std::all_of(children.begin(), children.end(),
                           [](const IterationTrace& c) { return c.all_leaves_zero(); });
    return status == TraceStatus::zeros;
}

IterationTrace iterate(const Weight& w, const ModularContext& ctx, std::size_t cap)
{
    ctx.require_length(w.size());
    return build(w, ctx.p(), cap, 0);
}

std::optional<std::size_t> distinguished_depth(const Weight& w, const ModularContext& ctx,
                                               std::size_t cap)
{
    ctx.require_length(w.size());
    return depth_within(w, ctx.p(), cap);
}

bool RefinementChain::is_consistent() const
{
    for (std::size_t t = 1; t < levels.size(); ++t) {
        const auto& above = levels[t - 1];
        for (const auto& e : levels[t]) {
            if (e.parent >= above.size())
                return false;
            if (above[e.parent].partition.multiplicity(e.parent_part) != e.partition.n())
                return false;
        }
        // Every nonzero multiplicity of an expanded entry above must be refined.
        for (std::size_t idx = 0; idx < above.size(); ++idx) {
            const bool has_children = std::any_of(levels[t].begin(), levels[t].end(),
                                                  [&](const RefinementEntry& e) { return e.parent == idx; });
            if (!has_children)
                continue;
            const auto& mult = above[idx].partition.mult();
            for (std::size_t i = 1; i <= mult.size(); ++i) {
                if (mult[i - 1] == 0)
                    continue;
                const auto n = std::count_if(levels[t].begin(), levels[t].end(), [&](const RefinementEntry& e) {
                    return e.parent == idx && e.parent_part == i;
                });
                if (n != 1)
                    return false;
            }
        }
    }
    return true;
}

RefinementChain refinement_chain(const IterationTrace& t)
{
    if (!t.all_leaves_zero())
        throw DomainError("refinement chain requires a distinguished trace");

    struct Pending {
        const IterationTrace* node;
        std::size_t parent;
        std::size_t parent_part;
    };

    RefinementChain chain;
    std::vector<Pending> frontier{{&t, 0, 0}};
    while (!frontier.empty()) {
        std::vector<RefinementEntry> level;
        std::vector<Pending> next;
        for (const auto& item : frontier) {
            const IterationTrace& node = *item.node;
            if (node.seq.empty())
                continue;
            if (node.status == TraceStatus::zeros) {
                // A zero sequence of length l reads as the partition (1^l).
                level.push_back({PartitionMult({node.seq.size()}), item.parent, item.parent_part});
                continue;
            }
            std::vector<std::size_t> mult;
            for (const auto& c : node.children)
                mult.push_back(c.seq.size());
            const std::size_t idx = level.size();
            level.push_back({PartitionMult(std::move(mult)), item.parent, item.parent_part});
            for (std::size_t i = 0; i < node.children.size(); ++i)
                next.push_back({&node.children[i], idx, i + 1});
        }
        if (!level.empty())
            chain.levels.push_back(std::move(level));
        frontier = std::move(next);
    }
    return chain;
}

BigInt geometric_sum(const BigInt& p, std::size_t m)
{
    BigInt total = 0;
    BigInt power = 1;
    for (std::size_t i = 0; i < m; ++i) {
        total += power;
        power *= p;
    }
    return total;
}

Weight rho_family(std::size_t n, std::size_t m, const ModularContext& ctx)
{
    const BigInt scale = geometric_sum(ctx.p(), m);
    std::vector<BigInt> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long coeff = static_cast<long>(n) - 1 - 2 * static_cast<long>(i);
        out.push_back(scale * coeff);
    }
    return Weight(std::move(out));
}

} // namespace lvdist
