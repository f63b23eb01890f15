// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "lvdist/counting.hpp"
#include "lvdist/enumeration.hpp"
#include "lvdist/formats.hpp"
#include "lvdist/lv_algorithm.hpp"
#include "lvdist/modular_iteration.hpp"
#include "lvdist/properties.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace lvdist;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Mean wall time of one call, in milliseconds, over `reps` calls.
double mean_ms(const std::function<void()>& f, int reps)
{
    f();
    const auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i)
        f();
    return ms_since(t0) / reps;
}

const Weight kGolden{46, 46, 45, 1, -1, -45, -46, -46};

Outcome golden_pipeline(double& ms)
{
    Outcome o;
    const WeightedDiagram phi_expected{{46, 45, 46}, {1}, {-1}, {-45, -46, -46}};
    const WeightedDiagram einv_expected{{43, 44, 45}, {0}, {0}, {-42, -45, -45}};
    const OmegaElement lv_expected({Weight{0, 0}, Weight{}, Weight{132, -132}});
    const auto x = phi(kGolden);
    o.require(x == phi_expected, "phi diagram differs");
    const auto y = apply_E_inverse(x);
    o.require(y == einv_expected, "E^-1 diagram differs");
    o.require(kappa(y) == lv_expected, "kappa output differs");
    o.require(lv(kGolden) == lv_expected, "lv output " + omega_to_json(lv(kGolden)));
    ms = mean_ms([] { (void)lv(kGolden); }, 200);
    o.require(ms < 1.0, "runtime over 1 ms");
    return o;
}

Outcome golden_iteration(double& ms)
{
    Outcome o;
    const ModularContext ctx(11);
    o.require(distinguished_depth(kGolden, ctx, 64) == 3, "depth is not 3");
    const auto t = iterate(kGolden, ctx, 64);
    o.require(t.status == TraceStatus::expanded && t.children.size() == 3, "root is not a 3-way expansion");
    if (o.ok) {
        const auto& a = t.children[0];
        const auto& b = t.children[1];
        const auto& c = t.children[2];
        o.require(a.seq == Weight{0, 0} && a.status == TraceStatus::zeros, "first part is not (0,0)");
        o.require(b.seq == Weight{} && b.status == TraceStatus::zeros, "second part is not ()");
        o.require(c.seq == Weight{12, -12} && c.children.size() == 1, "third part is not (12,-12)");
        if (o.ok) {
            const auto& c1 = c.children[0];
            o.require(c1.seq == Weight{1, -1} && c1.children.size() == 1, "second step is not (1,-1)");
            if (o.ok)
                o.require(c1.children[0].seq == Weight{0, 0} && c1.children[0].status == TraceStatus::zeros,
                          "third step is not (0,0)");
        }
    }
    ms = mean_ms([&] { (void)distinguished_depth(kGolden, ctx, 64); }, 200);
    o.require(ms < 1.0, "runtime over 1 ms");
    return o;
}

Outcome subcase_vectors()
{
    Outcome o;
    struct Case {
        Weight input;
        OmegaElement image;
        OmegaElement r_image;
    };
    const std::vector<Case> cases{
        {Weight{9, 9, 9, 8, 8, 7, 7, 6, 6, 5, 5, 5, 5, 4, 4, 4, 3, 3},
         OmegaElement({Weight{}, Weight{12}, Weight{}, Weight{24}, Weight{32}, Weight{}, Weight{39}}),
         OmegaElement({Weight{}, Weight{-12}, Weight{}, Weight{-24}, Weight{-32}, Weight{}, Weight{-39}})},
        {Weight{9, 8, 8, 8, 7, 7, 6, 6, 5, 4, 3, 3},
         OmegaElement({Weight{6}, Weight{}, Weight{18, 17}, Weight{}, Weight{33}}),
         OmegaElement({Weight{-6}, Weight{}, Weight{-17, -18}, Weight{}, Weight{-33}})},
        {Weight{9, 9, 8, 8, 7, 6, 6, 5, 5, 4, 4, 4},
         OmegaElement({Weight{}, Weight{}, Weight{19}, Weight{27}, Weight{29}}),
         OmegaElement({Weight{}, Weight{}, Weight{-19}, Weight{-27}, Weight{-29}})},
        {Weight{9, 9, 8, 8, 7, 7, 7, 6, 5, 5, 4, 4},
         OmegaElement({Weight{}, Weight{}, Weight{20}, Weight{25}, Weight{34}}),
         OmegaElement({Weight{}, Weight{}, Weight{-20}, Weight{-25}, Weight{-34}})},
    };
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        o.require(lv(c.input) == c.image, "LV of case " + std::to_string(i + 1));
        o.require(lv(reverse_negate(c.input)) == c.r_image, "LV of R(case " + std::to_string(i + 1) + ")");
    }
    return o;
}

BigInt polynomial_count(std::size_t n, const BigInt& k)
{
    switch (n) {
    case 1: return 1;
    case 2: return k + 1;
    case 3: return 2 * k + 1;
    case 4: return k * k + 3 * k + 1;
    case 5: return 2 * k * k + 4 * k + 1;
    default: return (4 * k * k * k + 27 * k * k + 29 * k + 6) / 6;
    }
}

Outcome counting_polynomials(double& ms)
{
    Outcome o;
    const auto t0 = Clock::now();
    CountTable table;
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t k = 0; k <= 25; ++k) {
            const BigInt got = table.count(n, k);
            o.require(got == polynomial_count(n, k),
                      "n=" + std::to_string(n) + " k=" + std::to_string(k) + " gave " + got.str());
        }
    o.require(table.count(4, 2) == 11 && table.count(6, 2) == 34 && table.count(5, 3) == 31, "spot values");
    ms = ms_since(t0);
    o.require(ms < 1000.0, "runtime over 1 s");
    return o;
}

Outcome enumeration_agreement(double& ms, std::vector<Weight>& all_found, std::size_t& grid_points,
                              std::size_t& escalations)
{
    Outcome o;
    escalations = 0;
    const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::tuple<std::size_t, std::size_t, int>> grid;
    for (int p : {5, 7, 11})
        for (std::size_t n = 1; n <= 4; ++n)
            for (std::size_t k = 0; k <= 4; ++k)
                grid.emplace_back(n, k, p);
    for (std::size_t n = 5; n <= 6; ++n)
        for (std::size_t k = 0; k <= 3; ++k)
            grid.emplace_back(n, k, 7);

    const auto t0 = Clock::now();
    for (const auto& [n, k, p] : grid) {
        const ModularContext ctx(p);
        const BigInt expected = count_distinguished(n, k);
        SearchBox box{n, k, default_bound(n, k, ctx.p()), ctx};
        auto found = enumerate_distinguished(box, jobs);
        if (BigInt(found.size()) != expected) {
            // One escalation of the heuristic bound before declaring a mismatch.
            box.bound *= ctx.p();
            found = enumerate_distinguished(box, jobs);
            ++escalations;
        }
        o.require(BigInt(found.size()) == expected, "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                                        " p=" + std::to_string(p) + ": " +
                                                        std::to_string(found.size()) + " vs " + expected.str());
        all_found.insert(all_found.end(), found.begin(), found.end());
    }
    ms = ms_since(t0);
    grid_points = grid.size();
    o.require(ms < 120000.0, "runtime over 2 min");
    return o;
}

// The enumerator only proposes anti-symmetric candidates, so the property is
// also checked on an unrestricted search over every dominant weight in the box.
Outcome anti_symmetry(const std::vector<Weight>& found, std::size_t& lattice_hits)
{
    Outcome o;
    for (const auto& w : found)
        o.require(reverse_negate(w) == w, "R(w) != w for " + format_weight(w));
    o.require(!found.empty(), "no weights to check");

    lattice_hits = 0;
    for (int p : {5, 7})
        for (std::size_t n = 2; n <= 4; ++n)
            for (std::size_t k = 0; k <= 2; ++k) {
                const ModularContext ctx(p);
                const long bound = default_bound(n, k, ctx.p()).convert_to<long>();
                std::vector<BigInt> entries(n);
                std::size_t hits = 0;
                std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long top) {
                    if (pos == n) {
                        const Weight w(entries);
                        if (distinguished_depth(w, ctx, k)) {
                            ++hits;
                            o.require(reverse_negate(w) == w, "R(w) != w for " + format_weight(w));
                        }
                        return;
                    }
                    for (long x = top; x >= -bound; --x) {
                        entries[pos] = x;
                        rec(pos + 1, x);
                    }
                };
                rec(0, bound);
                o.require(BigInt(hits) == count_distinguished(n, k), "lattice count differs at n=" +
                                                                         std::to_string(n) + " k=" +
                                                                         std::to_string(k));
                lattice_hits += hits;
            }
    return o;
}

Outcome r_commutation()
{
    Outcome o;
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 10000; ++i) {
        const Weight w = random_weight(rng, 8, -50, 50);
        o.require(lv(reverse_negate(w)) == reverse_negate(lv(w)), "LV fails on " + format_weight(w));
    }
    for (int i = 0; i < 1000; ++i) {
        const Weight c = random_clump(rng, 8, -50, 50);
        o.require(lv(reverse_negate(c), ColumnBase::zero) == reverse_negate(lv(c, ColumnBase::zero)),
                  "LV' fails on " + format_weight(c));
    }
    return o;
}

Outcome round_trips()
{
    Outcome o;
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 10000; ++i) {
        const Weight w = random_weight(rng, 8, -50, 50);
        const auto x = phi(w);
        o.require(phi_inverse(x) == w, "phi round trip on " + format_weight(w));
        o.require(apply_E(apply_E_inverse(x)) == x, "E round trip on " + format_weight(w));
        o.require(lv(w).entry_sum() == w.sum(), "sum not conserved on " + format_weight(w));
    }
    return o;
}

std::size_t band(const BigInt& x, const BigInt& p)
{
    std::size_t k = 0;
    BigInt next = p;
    while (next <= x) {
        next *= p;
        ++k;
    }
    return k;
}

Outcome family_scatter(const std::filesystem::path& csv_path, std::size_t& interior_boxes)
{
    Outcome o;
    const ModularContext p5(5);
    const std::size_t K = 20;
    const auto family = generate_family_set(4, p5, K);
    o.require(family.size() == 461, "family set has " + std::to_string(family.size()) + " weights");
    for (const auto& w : family) {
        const auto d = distinguished_depth(w, p5, K);
        o.require(d.has_value(), format_weight(w) + " is not distinguished within 20");
    }
    const auto records = scatter_records(family, p5, K);
    {
        std::ofstream f(csv_path);
        f << scatter_csv(records, 2);
    }
    std::ifstream in(csv_path);
    std::string line;
    std::size_t rows = 0;
    std::getline(in, line);
    o.require(line == "x1,x2,depth", "CSV header is '" + line + "'");
    while (std::getline(in, line))
        ++rows;
    o.require(rows == 461, "CSV has " + std::to_string(rows) + " rows");

    // p^k1 <= x < p^(k1+1), p^k2 <= y < p^(k2+1). Boxes with k1 >= K hold
    // weights that need more than K iterations.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> box_counts;
    for (const auto& r : records)
        if (r.coords[0] >= 1 && r.coords[1] >= 1)
            ++box_counts[{band(r.coords[0], p5.p()), band(r.coords[1], p5.p())}];
    interior_boxes = 0;
    for (std::size_t k1 = 3; k1 < K; ++k1)
        for (std::size_t k2 = 0; k1 > k2 + 2; ++k2) {
            const auto it = box_counts.find({k1, k2});
            const std::size_t c = it == box_counts.end() ? 0 : it->second;
            o.require(c == 1, "box (" + std::to_string(k1) + "," + std::to_string(k2) + ") has " +
                                  std::to_string(c) + " records");
            ++interior_boxes;
        }

    const ModularContext p7(7);
    const auto five = enumerate_distinguished({5, 4, default_bound(5, 4, p7.p()), p7},
                                              std::max(1u, std::thread::hardware_concurrency()));
    o.require(BigInt(five.size()) == count_distinguished(5, 4), "n=5 enumeration size");
    std::size_t in_box = 0;
    for (const auto& w : five)
        if (w[0] >= 1 && w[1] >= 1 && band(w[0], 7) == 3 && band(w[1], 7) == 0)
            ++in_box;
    o.require(in_box == 3, "n=5 box (3,0) has " + std::to_string(in_box) + " weights");
    return o;
}

Outcome asymptotics(double& ms, std::string& ratios)
{
    Outcome o;
    const auto t0 = Clock::now();
    for (std::size_t n = 0; n <= 60; ++n)
        o.require(leading_coefficient_recursive(n) == leading_coefficient_closed(n),
                  "b_" + std::to_string(n) + " formulas differ");
    const std::vector<int> tel{1, 1, 2, 4, 10, 26, 76};
    for (std::size_t i = 0; i < tel.size(); ++i)
        o.require(telephone(i) == tel[i], "telephone(" + std::to_string(i) + ")");

    CountTable table;
    std::ostringstream os;
    for (std::size_t n : {7, 8}) {
        const Rational b = leading_coefficient(n);
        auto ratio = [&](std::size_t k) {
            BigInt kp = 1;
            for (std::size_t i = 0; i < n / 2; ++i)
                kp *= k;
            return Rational(table.count(n, k)) / (b * kp);
        };
        const Rational r200 = ratio(200);
        const Rational r400 = ratio(400);
        o.require(r200 >= Rational(17, 20) && r200 <= Rational(23, 20), "n=" + std::to_string(n) + " ratio at 200");
        o.require(abs(r400 - 1) < abs(r200 - 1), "n=" + std::to_string(n) + " ratio does not improve");
        os << " n=" << n << ": " << static_cast<double>(r200) << " -> " << static_cast<double>(r400) << ';';
    }
    ratios = os.str();
    ms = ms_since(t0);
    o.require(ms < 5000.0, "runtime over 5 s");
    return o;
}

Outcome rho_depths(double& ms)
{
    Outcome o;
    const auto t0 = Clock::now();
    for (int p : {11, 13}) {
        const ModularContext ctx(p);
        for (std::size_t n = 2; n <= 8; ++n)
            for (std::size_t m = 0; m <= 6; ++m) {
                const std::string tag =
                    "n=" + std::to_string(n) + " m=" + std::to_string(m) + " p=" + std::to_string(p);
                const Weight w = rho_family(n, m, ctx);
                o.require(distinguished_depth(w, ctx, 64) == m, tag + ": depth");
                const IterationTrace* node = nullptr;
                const auto t = iterate(w, ctx, 64);
                node = &t;
                for (std::size_t step = 0; step < m && node; ++step)
                    node = node->children.size() == 1 ? &node->children[0] : nullptr;
                o.require(node && node->level == m && node->status == TraceStatus::zeros &&
                              node->seq == Weight(std::vector<BigInt>(n, BigInt(0))),
                          tag + ": trace after m steps is not a single zeros node");
            }
    }
    ms = ms_since(t0);
    o.require(ms < 10000.0, "runtime over 10 s");
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    const std::filesystem::path csv_path =
        argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::path("fig1a_n4_p5_k20.csv");

    int failures = 0;
    auto report = [&](int id, const std::string& name, const Outcome& o, const std::string& extra) {
        std::printf("%s %2d %s%s%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), extra.c_str(),
                    o.ok ? "" : " :: ", o.detail.c_str());
        std::fflush(stdout);
        if (!o.ok)
            ++failures;
    };
    auto ms_text = [](double ms) {
        std::ostringstream os;
        os.precision(3);
        os << " [" << ms << " ms]";
        return os.str();
    };

    double ms = 0;
    auto o1 = golden_pipeline(ms);
    report(1, "golden LV pipeline", o1, ms_text(ms));
    auto o2 = golden_iteration(ms);
    report(2, "golden LV_p iteration, depth 3 at p=11", o2, ms_text(ms));
    report(3, "single-clump subcase vectors and R-images", subcase_vectors(), "");
    auto o4 = counting_polynomials(ms);
    report(4, "counting polynomials n<=6, k<=25", o4, ms_text(ms));

    std::vector<Weight> found;
    std::size_t grid = 0;
    std::size_t escalations = 0;
    auto o5 = enumeration_agreement(ms, found, grid, escalations);
    report(5,
           "enumeration equals recursion on " + std::to_string(grid) + " grid points, " +
               std::to_string(escalations) + " bound escalations",
           o5, ms_text(ms));
    std::size_t lattice_hits = 0;
    auto o6 = anti_symmetry(found, lattice_hits);
    report(6, "anti-symmetry of " + std::to_string(found.size()) + " enumerated and " +
                  std::to_string(lattice_hits) + " unrestricted-search weights",
           o6, "");
    report(7, "R-commutation (10^4 weights, 10^3 clumps)", r_commutation(), "");
    report(8, "phi and E round trips, sum conservation", round_trips(), "");

    std::size_t boxes = 0;
    const auto t9 = Clock::now();
    auto o9 = family_scatter(csv_path, boxes);
    report(9, "n=4 p=5 K=20 family set, " + std::to_string(boxes) + " interior boxes; n=5 p=7 box (3,0)", o9,
           ms_text(ms_since(t9)));

    std::string ratios;
    auto o10 = asymptotics(ms, ratios);
    report(10, "leading coefficients and ratio convergence" + ratios, o10, ms_text(ms));
    auto o11 = rho_depths(ms);
    report(11, "rho family depths n<=8, m<=6, p in {11,13}", o11, ms_text(ms));

    std::printf("%d of 11 criteria passed\n", 11 - failures);
    return failures == 0 ? 0 : 1;
}
