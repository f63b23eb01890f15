#include "lvdist/counting.hpp"

#include <sstream>

namespace lvdist {

namespace {

void partitions_rec(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& parts,
                    std::vector<PartitionMult>& out)
{
    if (remaining == 0) {
        out.push_back(PartitionMult::from_parts(parts));
        return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
        parts.push_back(part);
        partitions_rec(remaining - part, part, parts, out);
        parts.pop_back();
    }
}

BigInt factorial(std::size_t n)
{
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace

std::vector<PartitionMult> partitions_mult(std::size_t n)
{
    std::vector<PartitionMult> out;
    std::vector<std::size_t> parts;
    partitions_rec(n, n, parts, out);
    return out;
}

const std::vector<PartitionMult>& CountTable::mixed_partitions(std::size_t n)
{
    auto it = partitions_.find(n);
    if (it != partitions_.end())
        return it->second;
    std::vector<PartitionMult> keep;
    for (auto& alpha : partitions_mult(n)) {
        const bool single_part = alpha.largest_part() == n;
        const bool all_ones = alpha.largest_part() == 1;
        if (!single_part && !all_ones)
            keep.push_back(std::move(alpha));
    }
    return partitions_.emplace(n, std::move(keep)).first->second;
}

BigInt CountTable::count(std::size_t n, std::size_t k)
{
    if (n <= 1)
        return 1;
    auto& row = rows_[n];
    if (row.empty())
        row.push_back(1); // only the zero weight needs no iterations

    // Extend row n one k at a time. Smaller n are reached by recursion; the
    // reference `row` stays valid because std::map nodes never move.
    while (row.size() <= k) {
        const std::size_t j = row.size();
        BigInt next = row[j - 1] + 1; // the (1^n) chain gains one more nesting
        for (const auto& alpha : mixed_partitions(n)) {
            BigInt prod = 1;
            for (std::size_t mult : alpha.mult())
                prod *= count(mult, j - 1);
            next += prod;
        }
        row.push_back(std::move(next));
    }
    return row[k];
}

BigInt count_distinguished(std::size_t n, std::size_t k)
{
    CountTable table;
    return table.count(n, k);
}

BigInt telephone(std::size_t i)
{
    BigInt prev = 1; // a_{i-2}
    BigInt cur = 1;  // a_{i-1}
    if (i <= 1)
        return 1;
    for (std::size_t j = 2; j <= i; ++j) {
        BigInt next = cur + BigInt(j - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational leading_coefficient_recursive(std::size_t n)
{
    std::vector<Rational> b{1, 1, 1, 2, 1};
    for (std::size_t i = b.size(); i <= n; ++i) {
        if (i % 2 == 0)
            b.push_back(Rational(2) * (b[i - 2] + b[i - 4]) / Rational(i));
        else
            b.push_back(Rational(2) * (b[i - 2] + b[i - 3] + b[i - 4]) / Rational(i - 1));
    }
    return b[n];
}

Rational leading_coefficient_closed(std::size_t n)
{
    return Rational(telephone((n + 1) / 2)) / Rational(factorial(n / 2));
}

Rational leading_coefficient(std::size_t n)
{
    Rational by_recursion = leading_coefficient_recursive(n);
    Rational by_telephone = leading_coefficient_closed(n);
    if (by_recursion != by_telephone) {
        std::ostringstream msg;
        msg << "leading coefficient mismatch at n=" << n << ": recursion gives " << by_recursion
            << ", telephone closed form gives " << by_telephone;
        throw InternalError(msg.str());
    }
    return by_recursion;
}

} // namespace lvdist
