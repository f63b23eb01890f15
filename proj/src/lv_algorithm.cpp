#include "lvdist/lv_algorithm.hpp"

#include <algorithm>
#include <sstream>

namespace lvdist {

namespace {

struct ValueCount {
    BigInt value;
    std::size_t count;
};

std::vector<ValueCount> run_length(const Weight& w)
{
    std::vector<ValueCount> out;
    for (const auto& x : w.vec()) {
        if (!out.empty() && out.back().value == x)
            ++out.back().count;
        else
            out.push_back({x, 1});
    }
    return out;
}

std::string dump_diagram(const std::vector<WeightedDiagram::Row>& rows)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << "  row " << i + 1 << ":";
        for (const auto& x : rows[i])
            os << ' ' << x;
        os << '\n';
    }
    return os.str();
}

} // namespace

std::vector<Clump> maximal_clumps(const Weight& w)
{
    std::vector<Clump> clumps;
    std::vector<BigInt> current;
    for (const auto& x : w.vec()) {
        if (!current.empty() && current.back() - x >= 2) {
            clumps.emplace_back(std::move(current));
            current.clear();
        }
        current.push_back(x);
    }
    if (!current.empty())
        clumps.emplace_back(std::move(current));
    return clumps;
}

WeightedDiagram phi(const Weight& w, ColumnBase base)
{
    std::vector<ValueCount> sigma = run_length(w);
    std::vector<WeightedDiagram::Row> rows;
    std::size_t built = 0; // columns placed so far
    std::vector<BigInt> z;
    std::vector<std::size_t> open;

    for (unsigned long r = static_cast<unsigned long>(base); !sigma.empty(); ++r, ++built) {
        const bool r_even = (r % 2 == 0);

        // Select Z_r clump by clump; `chosen` flags the selected distinct values.
        z.clear();
        std::vector<bool> chosen(sigma.size(), false);
        for (std::size_t start = 0; start < sigma.size();) {
            std::size_t end = start + 1;
            while (end < sigma.size() && sigma[end - 1].value - sigma[end].value == 1)
                ++end;
            const std::size_t len = end - start;
            const std::size_t offset = (r_even && len % 2 == 0) ? 1 : 0;
            for (std::size_t i = start + offset; i < end; i += 2) {
                chosen[i] = true;
                z.push_back(sigma[i].value);
            }
            start = end;
        }

        if (built == 0) {
            for (auto& v : z)
                rows.push_back({v});
        } else {
            // Rows that reached the previous column, top to bottom.
            open.clear();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() == built)
                    open.push_back(i);
            }
            std::vector<bool> taken(open.size(), false);
            for (const auto& v : z) {
                const BigInt alt = r_even ? BigInt(v + 1) : BigInt(v - 1);
                bool placed = false;
                for (std::size_t k = 0; k < open.size(); ++k) {
                    if (taken[k])
                        continue;
                    const BigInt& prev = rows[open[k]].back();
                    if (prev == v || prev == alt) {
                        rows[open[k]].push_back(v);
                        taken[k] = true;
                        placed = true;
                        break;
                    }
                }
                if (!placed) {
                    std::ostringstream msg;
                    msg << "phi: no eligible row for value " << v << " in column " << r
                        << " of weight";
                    for (const auto& x : w.vec())
                        msg << ' ' << x;
                    msg << "\npartial diagram:\n" << dump_diagram(rows);
                    throw InternalError(msg.str());
                }
            }
        }

        std::vector<ValueCount> next;
        next.reserve(sigma.size());
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            const std::size_t left = sigma[i].count - (chosen[i] ? 1 : 0);
            if (left > 0)
                next.push_back({std::move(sigma[i].value), left});
        }
        sigma = std::move(next);
    }
    return WeightedDiagram(std::move(rows));
}

Weight phi_inverse(const WeightedDiagram& x)
{
    std::vector<BigInt> all;
    all.reserve(x.size());
    for (const auto& r : x.rows())
        all.insert(all.end(), r.begin(), r.end());
    return Weight::from_unsorted(std::move(all));
}

WeightedDiagram apply_E(const WeightedDiagram& x)
{
    auto rows = x.rows();
    const std::size_t width = x.max_row_length();
    for (std::size_t j = 0; j < width; ++j) {
        auto col = x.column(j);
        const long c = static_cast<long>(col.size());
        // Ascending by (value, -row): ties put the lower row first.
        std::vector<std::size_t> order(col.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (col[a].second != col[b].second)
                return col[a].second < col[b].second;
            return col[a].first > col[b].first;
        });
        for (std::size_t m = 0; m < order.size(); ++m) {
            const auto& [row, value] = col[order[m]];
            rows[row][j] = value + 2 * static_cast<long>(m) - (c - 1);
        }
    }
    return WeightedDiagram(std::move(rows));
}

WeightedDiagram apply_E_inverse(const WeightedDiagram& x)
{
    auto rows = x.rows();
    const std::size_t width = x.max_row_length();
    for (std::size_t j = 0; j < width; ++j) {
        const auto col = x.column(j);
        for (std::size_t t = 0; t + 1 < col.size(); ++t) {
            if (col[t].second - col[t + 1].second < 2) {
                std::ostringstream msg;
                msg << "E^-1 precondition violated in column " << j + 1 << ": rows "
                    << col[t].first + 1 << " and " << col[t + 1].first + 1 << " hold "
                    << col[t].second << " and " << col[t + 1].second
                    << " (need a drop of at least 2)";
                throw DomainError(msg.str());
            }
        }
        const long c = static_cast<long>(col.size());
        for (std::size_t t = 0; t < col.size(); ++t)
            rows[col[t].first][j] += 2 * static_cast<long>(t) - (c - 1);
    }
    return WeightedDiagram(std::move(rows));
}

OmegaElement kappa(const WeightedDiagram& x)
{
    const std::size_t s = x.max_row_length();
    std::vector<std::vector<BigInt>> sums(s);
    for (const auto& r : x.rows()) {
        BigInt total = 0;
        for (const auto& v : r)
            total += v;
        sums[r.size() - 1].push_back(std::move(total));
    }
    std::vector<Weight> mu;
    mu.reserve(s);
    for (auto& g : sums)
        mu.push_back(Weight::from_unsorted(std::move(g)));
    return OmegaElement(std::move(mu));
}

OmegaElement lv(const Weight& w, ColumnBase base)
{
    return kappa(apply_E_inverse(phi(w, base)));
}

} // namespace lvdist
