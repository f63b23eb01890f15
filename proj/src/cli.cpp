#include "lvdist/cli.hpp"

#include "lvdist/counting.hpp"
#include "lvdist/enumeration.hpp"
#include "lvdist/formats.hpp"
#include "lvdist/lv_algorithm.hpp"
#include "lvdist/modular_iteration.hpp"
#include "lvdist/properties.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <thread>

namespace lvdist {

namespace {

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw DomainError("cannot open '" + path + "' for writing");
    f << contents;
    if (!f.flush())
        throw DomainError("failed writing '" + path + "'");
}

// Writes the CSV to `out` (or to `csv_path` when given) and optionally an SVG.
void emit_scatter(std::span<const ScatterRecord> records, std::size_t half, const BigInt& p,
                  const std::string& csv_path, const std::string& svg_path, std::ostream& out)
{
    const std::string csv = scatter_csv(records, half);
    if (csv_path.empty())
        out << csv;
    else
        write_file(csv_path, csv);
    if (!svg_path.empty())
        write_file(svg_path, scatter_svg(records, p));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lusztig-Vogan bijection for GL_n and distinguished weights", "lvdist"};
    app.require_subcommand(1);

    std::string weight_text;
    bool sort = false;
    unsigned base = 1;
    std::string prime_text;
    std::size_t cap = 64;
    std::size_t n = 0;
    std::size_t k = 0;
    std::string bound_text;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool csv = false;
    std::string svg_path;
    std::string out_path;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;

    auto add_weight = [&](CLI::App* sub) {
        sub->add_option("--weight", weight_text, "comma-separated weakly decreasing integers")->required();
        sub->add_flag("--sort", sort, "sort the weight instead of rejecting unsorted input");
    };

    auto* lv_cmd = app.add_subcommand("lv", "compute LV (or LV' with --base 0) as Omega JSON");
    add_weight(lv_cmd);
    lv_cmd->add_option("--base", base, "first column index of phi")->check(CLI::IsMember({0u, 1u}));

    auto* iterate_cmd = app.add_subcommand("iterate", "print the LV_p iteration trace as JSON");
    add_weight(iterate_cmd);
    iterate_cmd->add_option("--prime", prime_text, "prime p > n")->required();
    iterate_cmd->add_option("--cap", cap, "maximum number of iterations");

    auto* check_cmd = app.add_subcommand("check", "print the distinguished depth or not-distinguished");
    add_weight(check_cmd);
    check_cmd->add_option("--prime", prime_text, "prime p > n")->required();
    check_cmd->add_option("--cap", cap, "maximum number of iterations");

    auto* enum_cmd = app.add_subcommand("enumerate", "list the distinguished weights of depth <= k");
    enum_cmd->add_option("--n", n, "weight length")->required();
    enum_cmd->add_option("--prime", prime_text, "prime p > n")->required();
    enum_cmd->add_option("--k", k, "iteration budget")->required();
    enum_cmd->add_option("--bound", bound_text, "largest absolute entry searched (default (n-1)(p^k-1)/(p-1))");
    enum_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    enum_cmd->add_flag("--csv", csv, "print scatter CSV instead of weights");
    enum_cmd->add_option("--svg", svg_path, "also write a log-scaled scatter plot");

    auto* count_cmd = app.add_subcommand("count", "exact |Lambda^+_{n,k}|");
    count_cmd->add_option("--n", n, "weight length")->required();
    count_cmd->add_option("--k", k, "iteration budget")->required();

    auto* coeff_cmd = app.add_subcommand("coeff", "leading coefficient b_n as numerator/denominator");
    coeff_cmd->add_option("--n", n, "weight length")->required();

    auto* fam_cmd = app.add_subcommand("families", "closed-form distinguished weights for n = 2, 3, 4 as CSV");
    fam_cmd->add_option("--n", n, "weight length")->required()->check(CLI::IsMember({2u, 3u, 4u}));
    fam_cmd->add_option("--prime", prime_text, "prime p > n")->required();
    fam_cmd->add_option("--max-k", k, "iteration budget")->required();
    fam_cmd->add_option("--out", out_path, "write the CSV here instead of standard output");
    fam_cmd->add_option("--svg", svg_path, "also write a log-scaled scatter plot");

    auto* verify_cmd = app.add_subcommand("verify", "run the randomized property suite");
    verify_cmd->add_option("--samples", samples, "random weights to test");
    verify_cmd->add_option("--seed", seed, "random seed");

    std::vector<const char*> argv{"lvdist"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        auto read_weight = [&] { return parse_weight(weight_text, sort); };

        if (*lv_cmd) {
            out << omega_to_json(lv(read_weight(), base == 0 ? ColumnBase::zero : ColumnBase::one)) << '\n';
        } else if (*iterate_cmd) {
            const ModularContext ctx(parse_integer(prime_text));
            out << trace_to_json(iterate(read_weight(), ctx, cap)) << '\n';
        } else if (*check_cmd) {
            const ModularContext ctx(parse_integer(prime_text));
            const auto depth = distinguished_depth(read_weight(), ctx, cap);
            if (depth)
                out << *depth << '\n';
            else
                out << "not-distinguished\n";
        } else if (*enum_cmd) {
            SearchBox box{n, k, 0, ModularContext(parse_integer(prime_text))};
            box.ctx.require_length(n);
            box.bound = bound_text.empty() ? default_bound(n, k, box.ctx.p()) : parse_integer(bound_text);
            const auto weights = enumerate_distinguished(box, jobs);
            if (csv || !svg_path.empty()) {
                const auto records = scatter_records(weights, box.ctx, k);
                if (csv)
                    out << scatter_csv(records, n / 2);
                if (!svg_path.empty())
                    write_file(svg_path, scatter_svg(records, box.ctx.p()));
            }
            if (!csv) {
                for (const auto& w : weights)
                    out << format_weight(w) << '\n';
            }
        } else if (*count_cmd) {
            out << count_distinguished(n, k) << '\n';
        } else if (*coeff_cmd) {
            const Rational b = leading_coefficient(n);
            out << numerator(b) << '/' << denominator(b) << '\n';
        } else if (*fam_cmd) {
            const ModularContext ctx(parse_integer(prime_text));
            const auto weights = generate_family_set(n, ctx, k);
            const auto records = scatter_records(weights, ctx, k);
            emit_scatter(records, n / 2, ctx.p(), out_path, svg_path, out);
        } else if (*verify_cmd) {
            bool all_passed = true;
            for (const auto& r : run_property_suite(samples, seed)) {
                out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.samples << " samples, "
                    << r.failures << " failures)";
                if (!r.passed())
                    out << " first failure: " << r.first_failure;
                out << '\n';
                all_passed = all_passed && r.passed();
            }
            return all_passed ? 0 : 2;
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace lvdist
