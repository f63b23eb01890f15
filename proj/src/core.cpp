#include "lvdist/core.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lvdist {

std::vector<BigInt> dom(std::vector<BigInt> seq)
{
    std::sort(seq.begin(), seq.end(), std::greater<>{});
    return seq;
}

Weight::Weight(std::vector<BigInt> entries) : entries_(std::move(entries))
{
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
        if (entries_[i] < entries_[i + 1]) {
            std::ostringstream msg;
            msg << "weight is not weakly decreasing at position " << i + 1 << " ("
                << entries_[i] << " < " << entries_[i + 1] << ")";
            throw DomainError(msg.str());
        }
    }
}

Weight::Weight(std::initializer_list<long long> entries)
    : Weight(std::vector<BigInt>(entries.begin(), entries.end()))
{
}

Weight Weight::from_unsorted(std::vector<BigInt> entries)
{
    return Weight(dom(std::move(entries)));
}

bool Weight::all_zero() const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& x) { return x.is_zero(); });
}

BigInt Weight::sum() const
{
    BigInt s = 0;
    for (const auto& x : entries_)
        s += x;
    return s;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b)
{
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (a[i] < b[i])
            return std::strong_ordering::less;
        if (b[i] < a[i])
            return std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

Weight reverse_negate(const Weight& w)
{
    std::vector<BigInt> out;
    out.reserve(w.size());
    for (auto it = w.vec().rbegin(); it != w.vec().rend(); ++it)
        out.push_back(-*it);
    return Weight(std::move(out));
}

WeightedDiagram::WeightedDiagram(std::vector<Row> rows) : rows_(std::move(rows))
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty())
            throw DomainError("weighted diagram row " + std::to_string(i + 1) + " is empty");
    }
}

WeightedDiagram::WeightedDiagram(std::initializer_list<std::initializer_list<long long>> rows)
{
    std::vector<Row> tmp;
    tmp.reserve(rows.size());
    for (const auto& r : rows)
        tmp.emplace_back(r.begin(), r.end());
    *this = WeightedDiagram(std::move(tmp));
}

std::size_t WeightedDiagram::size() const noexcept
{
    std::size_t total = 0;
    for (const auto& r : rows_)
        total += r.size();
    return total;
}

std::size_t WeightedDiagram::max_row_length() const noexcept
{
    std::size_t m = 0;
    for (const auto& r : rows_)
        m = std::max(m, r.size());
    return m;
}

std::vector<std::pair<std::size_t, BigInt>> WeightedDiagram::column(std::size_t j) const
{
    std::vector<std::pair<std::size_t, BigInt>> col;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() > j)
            col.emplace_back(i, rows_[i][j]);
    }
    return col;
}

OmegaElement::OmegaElement(std::vector<Weight> mu) : mu_(std::move(mu))
{
    if (!mu_.empty() && mu_.back().empty())
        throw DomainError("omega element: last component mu_s must be nonempty");
}

OmegaElement::OmegaElement(std::vector<Weight> mu, std::size_t expected_n)
    : OmegaElement(std::move(mu))
{
    if (n() != expected_n) {
        throw DomainError("omega element has size " + std::to_string(n()) + ", expected " +
                          std::to_string(expected_n));
    }
}

std::size_t OmegaElement::n() const noexcept
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < mu_.size(); ++i)
        total += (i + 1) * mu_[i].size();
    return total;
}

BigInt OmegaElement::entry_sum() const
{
    BigInt s = 0;
    for (const auto& m : mu_)
        s += m.sum();
    return s;
}

OmegaElement reverse_negate(const OmegaElement& o)
{
    std::vector<Weight> mu;
    mu.reserve(o.length());
    for (const auto& m : o.parts())
        mu.push_back(reverse_negate(m));
    return OmegaElement(std::move(mu));
}

PartitionMult::PartitionMult(std::vector<std::size_t> mult) : mult_(std::move(mult))
{
    if (!mult_.empty() && mult_.back() == 0)
        throw DomainError("partition multiplicity vector must end with a nonzero count");
}

PartitionMult PartitionMult::from_parts(std::span<const std::size_t> parts)
{
    std::vector<std::size_t> mult;
    for (std::size_t part : parts) {
        if (part == 0)
            throw DomainError("partition parts must be positive");
        if (mult.size() < part)
            mult.resize(part, 0);
        ++mult[part - 1];
    }
    return PartitionMult(std::move(mult));
}

std::size_t PartitionMult::n() const noexcept
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < mult_.size(); ++i)
        total += (i + 1) * mult_[i];
    return total;
}

std::size_t PartitionMult::multiplicity(std::size_t i) const noexcept
{
    return (i >= 1 && i <= mult_.size()) ? mult_[i - 1] : 0;
}

std::vector<std::size_t> PartitionMult::parts() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = mult_.size(); i >= 1; --i)
        out.insert(out.end(), mult_[i - 1], i);
    return out;
}

OmegaElement omega_from_pair(const PartitionMult& alpha, std::span<const BigInt> nu)
{
    const auto parts = alpha.parts();
    if (parts.size() != nu.size()) {
        throw DomainError("nu has " + std::to_string(nu.size()) + " entries but alpha has " +
                          std::to_string(parts.size()) + " parts");
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (parts[i] == parts[i + 1] && nu[i] < nu[i + 1])
            throw DomainError("nu is not dominant with respect to alpha at position " +
                              std::to_string(i + 1));
    }
    std::vector<std::vector<BigInt>> groups(alpha.largest_part());
    for (std::size_t j = 0; j < parts.size(); ++j)
        groups[parts[j] - 1].push_back(nu[j]);

    std::vector<Weight> mu;
    mu.reserve(groups.size());
    for (auto& g : groups)
        mu.push_back(Weight::from_unsorted(std::move(g)));
    return OmegaElement(std::move(mu));
}

std::pair<PartitionMult, std::vector<BigInt>> omega_to_pair(const OmegaElement& o)
{
    std::vector<std::size_t> mult;
    std::vector<BigInt> nu;
    mult.reserve(o.length());
    for (const auto& m : o.parts())
        mult.push_back(m.size());
    for (std::size_t i = o.length(); i >= 1; --i) {
        const auto& m = o.mu(i).vec();
        nu.insert(nu.end(), m.begin(), m.end());
    }
    return {PartitionMult(std::move(mult)), std::move(nu)};
}

} // namespace lvdist
