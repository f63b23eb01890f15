#include "lvdist/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

namespace lvdist {

namespace {

BigInt pow_big(const BigInt& base, std::size_t e)
{
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i)
        r *= base;
    return r;
}

// Exact division; throws when the closed form is not integral.
BigInt exact_div(const BigInt& num, const BigInt& den, Family f)
{
    if (num % den != 0) {
        throw DomainError(std::string("closed form ") + std::string(family_name(f)) +
                          " is not integral for these parameters");
    }
    return num / den;
}

// Depth-first walk over x_1 >= x_2 >= ... >= x_h >= 0 with x_1 fixed.
void scan_tail(std::vector<BigInt>& half, std::size_t pos, const SearchBox& box,
               std::vector<Weight>& found)
{
    if (pos == half.size()) {
        Weight w = mirror_weight(half, box.n);
        auto d = distinguished_depth(w, box.ctx, box.k);
        if (d && *d <= box.k)
            found.push_back(std::move(w));
        return;
    }
    const BigInt top = half[pos - 1];
    for (BigInt x = 0; x <= top; ++x) {
        half[pos] = x;
        scan_tail(half, pos + 1, box, found);
    }
}

} // namespace

Weight mirror_weight(std::span<const BigInt> half, std::size_t n)
{
    std::vector<BigInt> out(half.begin(), half.end());
    if (n % 2 == 1)
        out.emplace_back(0);
    for (auto it = half.rbegin(); it != half.rend(); ++it)
        out.push_back(-*it);
    return Weight(std::move(out));
}

BigInt default_bound(std::size_t n, std::size_t k, const BigInt& p)
{
    if (n == 0)
        return 0;
    return BigInt(n - 1) * geometric_sum(p, k);
}

std::vector<Weight> enumerate_distinguished(const SearchBox& box, unsigned jobs)
{
    box.ctx.require_length(box.n);
    if (box.bound < 0)
        throw DomainError("search bound must be nonnegative");
    const std::size_t h = box.n / 2;
    if (h == 0) {
        // Only the zero weight (or the empty weight) is anti-symmetric.
        std::vector<Weight> out;
        Weight w(std::vector<BigInt>(box.n, BigInt(0)));
        out.push_back(std::move(w));
        return out;
    }

    jobs = std::max(1u, jobs);
    std::vector<std::vector<Weight>> per_worker(jobs);
    auto worker = [&](unsigned id) {
        std::vector<BigInt> half(h);
        for (BigInt x1 = id; x1 <= box.bound; x1 += jobs) {
            half[0] = x1;
            scan_tail(half, 1, box, per_worker[id]);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(jobs);
        for (unsigned id = 0; id < jobs; ++id)
            threads.emplace_back(worker, id);
    }

    std::vector<Weight> all;
    for (auto& part : per_worker)
        std::move(part.begin(), part.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end(), std::greater<>{});
    return all;
}

std::size_t family_length(Family f) noexcept
{
    switch (f) {
    case Family::n2: return 2;
    case Family::n3_a:
    case Family::n3_b: return 3;
    default: return 4;
    }
}

std::string_view family_name(Family f) noexcept
{
    switch (f) {
    case Family::n2: return "n2";
    case Family::n3_a: return "n3-A";
    case Family::n3_b: return "n3-B";
    case Family::n4_f1: return "n4-F1";
    case Family::n4_f2: return "n4-F2";
    case Family::n4_f3: return "n4-F3";
    case Family::n4_f4: return "n4-F4";
    }
    return "?";
}

std::vector<Family> families_for(std::size_t n)
{
    switch (n) {
    case 2: return {Family::n2};
    case 3: return {Family::n3_a, Family::n3_b};
    case 4: return {Family::n4_f1, Family::n4_f2, Family::n4_f3, Family::n4_f4};
    default: throw DomainError("closed-form families exist only for n = 2, 3, 4");
    }
}

std::size_t family_depth(Family f, const FamilyParams& params)
{
    switch (f) {
    case Family::n2:
    case Family::n3_a:
    case Family::n4_f1: return params.m;
    case Family::n3_b:
    case Family::n4_f2: return params.m + 1;
    case Family::n4_f3: return params.k + params.m + 1;
    case Family::n4_f4: return params.k + params.m;
    }
    return 0;
}

Weight closed_family(std::size_t n, Family f, const FamilyParams& params, const ModularContext& ctx)
{
    if (family_length(f) != n) {
        throw DomainError("family " + std::string(family_name(f)) + " produces weights of length " +
                          std::to_string(family_length(f)) + ", not " + std::to_string(n));
    }
    ctx.require_length(n);
    const BigInt& p = ctx.p();
    const std::size_t m = params.m;
    const std::size_t k = params.k;

    std::vector<BigInt> half;
    switch (f) {
    case Family::n2:
        half = {geometric_sum(p, m)};
        break;
    case Family::n3_a:
        half = {2 * geometric_sum(p, m)};
        break;
    case Family::n3_b:
        half = {exact_div(pow_big(p, m + 1) + pow_big(p, m) - 2, p - 1, f)};
        break;
    case Family::n4_f1: {
        const BigInt g = geometric_sum(p, m);
        half = {3 * g, g};
        break;
    }
    case Family::n4_f2:
        half = {exact_div(pow_big(p, m + 1) + 2 * pow_big(p, m) - 3, p - 1, f), geometric_sum(p, m)};
        break;
    case Family::n4_f3:
        half = {exact_div(pow_big(p, m + k + 1) + pow_big(p, k + 1) + pow_big(p, k) - 3, p - 1, f),
                geometric_sum(p, k)};
        break;
    case Family::n4_f4: {
        if (m == 0)
            throw DomainError("family n4-F4 requires m >= 1");
        const BigInt den = 2 * (p - 1);
        const BigInt pmk = pow_big(p, m + k);
        const BigInt pk = pow_big(p, k);
        const BigInt pk1 = pow_big(p, k + 1);
        if (m % 2 == 0)
            half = {exact_div(pmk + 2 * pk1 + 3 * pk - 6, den, f), exact_div(pmk + pk - 2, den, f)};
        else
            half = {exact_div(pmk + pk1 + 4 * pk - 6, den, f), exact_div(pmk + pk1 - 2, den, f)};
        break;
    }
    }

    Weight w = mirror_weight(half, n);
    const std::size_t expected = family_depth(f, params);
    const auto depth = distinguished_depth(w, ctx, expected);
    if (!depth || *depth != expected) {
        throw DomainError("family " + std::string(family_name(f)) + " with m=" + std::to_string(m) +
                          ", k=" + std::to_string(k) + " does not reach zeros in exactly " +
                          std::to_string(expected) + " iterations");
    }
    return w;
}

std::vector<Weight> generate_family_set(std::size_t n, const ModularContext& ctx, std::size_t max_k)
{
    std::set<Weight, std::greater<>> found;
    auto take = [&](Family f, FamilyParams params) {
        if (family_depth(f, params) > max_k)
            return;
        try {
            found.insert(closed_family(n, f, params, ctx));
        } catch (const DomainError&) {
            // Degenerate parameter combination for this p; skipped.
        }
    };
    for (Family f : families_for(n)) {
        switch (f) {
        case Family::n4_f3:
            for (std::size_t m = 0; m < max_k; ++m)
                for (std::size_t k = 0; k + m + 1 <= max_k; ++k)
                    take(f, {m, k});
            break;
        case Family::n4_f4:
            for (std::size_t m = 1; m <= max_k; ++m)
                for (std::size_t k = 0; k + m <= max_k; ++k)
                    take(f, {m, k});
            break;
        default:
            for (std::size_t m = 0; m <= max_k; ++m)
                take(f, {m, 0});
            break;
        }
    }
    return {found.begin(), found.end()};
}

std::vector<ScatterRecord> scatter_records(std::span<const Weight> weights, const ModularContext& ctx,
                                           std::size_t cap)
{
    std::vector<ScatterRecord> out;
    out.reserve(weights.size());
    for (const auto& w : weights) {
        const auto depth = distinguished_depth(w, ctx, cap);
        if (!depth)
            throw DomainError("weight is not distinguished within " + std::to_string(cap) + " iterations");
        ScatterRecord rec;
        rec.coords.assign(w.vec().begin(), w.vec().begin() + static_cast<long>(w.size() / 2));
        rec.depth = *depth;
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace lvdist
