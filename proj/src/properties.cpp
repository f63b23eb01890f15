#include "lvdist/properties.hpp"

#include "lvdist/formats.hpp"
#include "lvdist/lv_algorithm.hpp"

#include <functional>

namespace lvdist {

Weight random_weight(std::mt19937_64& rng, std::size_t max_n, long lo, long hi)
{
    std::uniform_int_distribution<std::size_t> len(0, max_n);
    std::uniform_int_distribution<long> value(lo, hi);
    std::vector<BigInt> entries(len(rng));
    for (auto& x : entries)
        x = value(rng);
    return Weight::from_unsorted(std::move(entries));
}

Weight random_clump(std::mt19937_64& rng, std::size_t max_n, long lo, long hi)
{
    std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, max_n));
    const std::size_t n = len(rng);
    std::uniform_int_distribution<std::size_t> distinct_dist(1, n);
    const std::size_t distinct = std::min<std::size_t>(distinct_dist(rng), static_cast<std::size_t>(hi - lo + 1));
    std::uniform_int_distribution<long> top_dist(lo + static_cast<long>(distinct) - 1, hi);
    const long top = top_dist(rng);

    // Every distinct value appears once; the rest of the length is spread
    // randomly over them.
    std::vector<BigInt> entries;
    for (std::size_t i = 0; i < distinct; ++i)
        entries.emplace_back(top - static_cast<long>(i));
    std::uniform_int_distribution<std::size_t> pick(0, distinct - 1);
    for (std::size_t i = distinct; i < n; ++i)
        entries.emplace_back(top - static_cast<long>(pick(rng)));
    return Weight::from_unsorted(std::move(entries));
}

std::vector<PropertyResult> run_property_suite(std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    PropertyResult r_comm{"R-commutation of LV", 0, 0, {}};
    PropertyResult r_comm_prime{"R-commutation of LV' on single clumps", 0, 0, {}};
    PropertyResult phi_round{"phi^-1 . phi = id", 0, 0, {}};
    PropertyResult e_round{"E . E^-1 = id on phi images", 0, 0, {}};
    PropertyResult gaps{"phi columns drop by >= 2", 0, 0, {}};
    PropertyResult sums{"LV preserves the entry sum", 0, 0, {}};

    auto record = [](PropertyResult& res, bool ok, const Weight& w) {
        ++res.samples;
        if (!ok && res.failures++ == 0)
            res.first_failure = format_weight(w);
    };
    auto guarded = [&](PropertyResult& res, const Weight& w, const std::function<bool()>& check) {
        bool ok = false;
        try {
            ok = check();
        } catch (const std::exception&) {
            ok = false;
        }
        record(res, ok, w);
    };

    for (std::size_t s = 0; s < samples; ++s) {
        const Weight w = random_weight(rng, 8, -50, 50);
        guarded(r_comm, w, [&] { return lv(reverse_negate(w)) == reverse_negate(lv(w)); });
        for (ColumnBase base : {ColumnBase::one, ColumnBase::zero}) {
            guarded(phi_round, w, [&] { return phi_inverse(phi(w, base)) == w; });
            guarded(e_round, w, [&] {
                const auto x = phi(w, base);
                return apply_E(apply_E_inverse(x)) == x;
            });
            guarded(gaps, w, [&] {
                const auto x = phi(w, base);
                for (std::size_t j = 0; j < x.max_row_length(); ++j) {
                    const auto col = x.column(j);
                    for (std::size_t t = 0; t + 1 < col.size(); ++t)
                        if (col[t].second - col[t + 1].second < 2)
                            return false;
                }
                return true;
            });
            guarded(sums, w, [&] { return lv(w, base).entry_sum() == w.sum(); });
        }
    }
    const std::size_t clump_samples = std::max<std::size_t>(1, samples / 10);
    for (std::size_t s = 0; s < clump_samples; ++s) {
        const Weight c = random_clump(rng, 8, -50, 50);
        guarded(r_comm_prime, c, [&] {
            return lv(reverse_negate(c), ColumnBase::zero) == reverse_negate(lv(c, ColumnBase::zero));
        });
    }
    return {r_comm, r_comm_prime, phi_round, e_round, gaps, sums};
}

} // namespace lvdist
