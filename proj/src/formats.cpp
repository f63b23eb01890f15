#include "lvdist/formats.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

namespace lvdist {

namespace {

using nlohmann::json;

// Minimal JSON document whose integers keep full precision. nlohmann parses
// the text; oversized integers arrive through number_float with their
// original literal, which is re-read as a BigInt.
struct JsonValue {
    enum class Kind { null, boolean, integer, string, array, object };
    Kind kind = Kind::null;
    bool flag = false;
    BigInt integer;
    std::string text;
    std::vector<JsonValue> items;
    std::vector<std::pair<std::string, JsonValue>> members;

    const JsonValue* find(std::string_view key) const
    {
        for (const auto& [k, v] : members)
            if (k == key)
                return &v;
        return nullptr;
    }
};

class BigIntSax : public nlohmann::json_sax<json> {
public:
    JsonValue root;

    bool null() override { return put(JsonValue{}); }
    bool boolean(bool val) override
    {
        JsonValue v;
        v.kind = JsonValue::Kind::boolean;
        v.flag = val;
        return put(std::move(v));
    }
    bool number_integer(number_integer_t val) override { return put_int(BigInt(val)); }
    bool number_unsigned(number_unsigned_t val) override { return put_int(BigInt(val)); }
    bool number_float(number_float_t, const string_t& s) override
    {
        const bool integral = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                        [](char c) { return c >= '0' && c <= '9'; });
        if (!integral)
            throw DomainError("expected an integer, found '" + s + "'");
        return put_int(BigInt(s));
    }
    bool string(string_t& val) override
    {
        JsonValue v;
        v.kind = JsonValue::Kind::string;
        v.text = val;
        return put(std::move(v));
    }
    bool binary(binary_t&) override { throw DomainError("binary JSON values are not supported"); }
    bool start_object(std::size_t) override
    {
        JsonValue v;
        v.kind = JsonValue::Kind::object;
        return open(std::move(v));
    }
    bool key(string_t& val) override
    {
        pending_key_ = val;
        return true;
    }
    bool end_object() override { return close(); }
    bool start_array(std::size_t) override
    {
        JsonValue v;
        v.kind = JsonValue::Kind::array;
        return open(std::move(v));
    }
    bool end_array() override { return close(); }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override
    {
        throw DomainError(std::string("malformed JSON: ") + ex.what());
    }

private:
    std::vector<JsonValue*> stack_;
    std::string pending_key_;
    bool have_root_ = false;

    JsonValue* attach(JsonValue v)
    {
        if (stack_.empty()) {
            root = std::move(v);
            have_root_ = true;
            return &root;
        }
        JsonValue* parent = stack_.back();
        if (parent->kind == JsonValue::Kind::array) {
            parent->items.push_back(std::move(v));
            return &parent->items.back();
        }
        parent->members.emplace_back(pending_key_, std::move(v));
        return &parent->members.back().second;
    }
    bool put(JsonValue v)
    {
        attach(std::move(v));
        return true;
    }
    bool put_int(BigInt x)
    {
        JsonValue v;
        v.kind = JsonValue::Kind::integer;
        v.integer = std::move(x);
        return put(std::move(v));
    }
    bool open(JsonValue v)
    {
        stack_.push_back(attach(std::move(v)));
        return true;
    }
    bool close()
    {
        stack_.pop_back();
        return true;
    }
};

JsonValue parse_json(std::string_view text)
{
    BigIntSax sax;
    json::sax_parse(text.begin(), text.end(), &sax);
    return std::move(sax.root);
}

std::vector<BigInt> read_int_array(const JsonValue& v, std::string_view what)
{
    if (v.kind != JsonValue::Kind::array)
        throw DomainError(std::string(what) + " must be an array of integers");
    std::vector<BigInt> out;
    out.reserve(v.items.size());
    for (const auto& item : v.items) {
        if (item.kind != JsonValue::Kind::integer)
            throw DomainError(std::string(what) + " must contain only integers");
        out.push_back(item.integer);
    }
    return out;
}

void write_int_array(std::ostream& os, std::span<const BigInt> xs)
{
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            os << ',';
        os << xs[i];
    }
    os << ']';
}

void write_trace(std::ostream& os, const IterationTrace& t)
{
    os << "{\"seq\":";
    write_int_array(os, t.seq.entries());
    os << ",\"status\":\"" << to_string(t.status) << '"';
    if (t.status == TraceStatus::expanded) {
        os << ",\"children\":[";
        for (std::size_t i = 0; i < t.children.size(); ++i) {
            if (i)
                os << ',';
            write_trace(os, t.children[i]);
        }
        os << ']';
    }
    os << '}';
}

IterationTrace read_trace(const JsonValue& v, std::size_t level)
{
    if (v.kind != JsonValue::Kind::object)
        throw DomainError("trace node must be a JSON object");
    const JsonValue* seq = v.find("seq");
    const JsonValue* status = v.find("status");
    if (!seq || !status || status->kind != JsonValue::Kind::string)
        throw DomainError("trace node needs \"seq\" and \"status\"");
    IterationTrace t;
    t.seq = Weight(read_int_array(*seq, "seq"));
    t.status = trace_status_from_string(status->text);
    t.level = level;
    const JsonValue* children = v.find("children");
    if (t.status == TraceStatus::expanded) {
        if (!children || children->kind != JsonValue::Kind::array)
            throw DomainError("expanded trace node needs a \"children\" array");
        for (const auto& c : children->items)
            t.children.push_back(read_trace(c, level + 1));
    } else if (children) {
        throw DomainError("only expanded trace nodes carry children");
    }
    return t;
}

// Position on a log_p axis; zero maps to -1 (the origin band).
double log_position(const BigInt& x, double log_p)
{
    if (x <= 0)
        return -1.0;
    return std::log(x.convert_to<double>()) / log_p;
}

} // namespace

BigInt parse_integer(std::string_view text)
{
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        i = 1;
    if (i == text.size())
        throw DomainError("expected an integer, found '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9')
            throw DomainError("expected an integer, found '" + std::string(text) + "'");
    }
    BigInt value(std::string(text.substr(i)));
    return text[0] == '-' ? BigInt(-value) : value;
}

std::string format_weight(const Weight& w)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            os << ',';
        os << w[i];
    }
    return os.str();
}

Weight parse_weight(std::string_view text, bool sort)
{
    auto trim = [](std::string_view t) {
        const auto first = t.find_first_not_of(" \t");
        if (first == std::string_view::npos)
            return std::string_view{};
        return t.substr(first, t.find_last_not_of(" \t") - first + 1);
    };
    text = trim(text);
    std::vector<BigInt> entries;
    if (!text.empty()) {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = text.find(',', start);
            entries.push_back(parse_integer(trim(text.substr(start, comma - start))));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
    }
    return sort ? Weight::from_unsorted(std::move(entries)) : Weight(std::move(entries));
}

std::string omega_to_json(const OmegaElement& o)
{
    std::ostringstream os;
    os << "{\"mu\":[";
    for (std::size_t i = 0; i < o.length(); ++i) {
        if (i)
            os << ',';
        write_int_array(os, o.parts()[i].entries());
    }
    os << "]}";
    return os.str();
}

OmegaElement omega_from_json(std::string_view text)
{
    const JsonValue doc = parse_json(text);
    const JsonValue* mu = doc.kind == JsonValue::Kind::object ? doc.find("mu") : nullptr;
    if (!mu || mu->kind != JsonValue::Kind::array)
        throw DomainError("omega JSON needs an array member \"mu\"");
    std::vector<Weight> parts;
    for (const auto& item : mu->items)
        parts.emplace_back(read_int_array(item, "mu component"));
    return OmegaElement(std::move(parts));
}

std::string trace_to_json(const IterationTrace& t)
{
    std::ostringstream os;
    write_trace(os, t);
    return os.str();
}

IterationTrace trace_from_json(std::string_view text)
{
    return read_trace(parse_json(text), 0);
}

std::string scatter_csv(std::span<const ScatterRecord> records, std::size_t half_length)
{
    std::vector<const ScatterRecord*> sorted;
    for (const auto& r : records) {
        if (r.coords.size() != half_length)
            throw DomainError("scatter record has the wrong number of coordinates");
        sorted.push_back(&r);
    }
    std::sort(sorted.begin(), sorted.end(), [](const ScatterRecord* a, const ScatterRecord* b) {
        if (a->coords != b->coords)
            return std::lexicographical_compare(b->coords.begin(), b->coords.end(), a->coords.begin(),
                                                a->coords.end());
        return a->depth > b->depth;
    });

    std::ostringstream os;
    for (std::size_t i = 0; i < half_length; ++i)
        os << 'x' << i + 1 << ',';
    os << "depth\n";
    for (const auto* r : sorted) {
        for (const auto& x : r->coords)
            os << x << ',';
        os << r->depth << '\n';
    }
    return os.str();
}

std::string scatter_svg(std::span<const ScatterRecord> records, const BigInt& p)
{
    const double log_p = std::log(p.convert_to<double>());
    double max_pos = 1.0;
    for (const auto& r : records)
        for (const auto& x : r.coords)
            max_pos = std::max(max_pos, log_position(x, log_p));
    max_pos = std::ceil(max_pos);

    constexpr double size = 480.0;
    constexpr double margin = 40.0;
    const double span = max_pos + 1.0; // one extra unit holds the zero band
    auto to_px = [&](double pos) { return (pos + 1.0) / span * size; };

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<!-- log-scaled axes, base " << p
       << "; coordinate 0 is drawn in the band between the origin and p^0 -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * margin << "\" height=\""
       << size + 2 * margin << "\">\n";
    os << "<g transform=\"translate(" << margin << ',' << margin + size << ") scale(1,-1)\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int tick = 0; tick <= static_cast<int>(max_pos); ++tick) {
        const double t = to_px(tick);
        os << "<line x1=\"" << t << "\" y1=\"0\" x2=\"" << t << "\" y2=\"" << size
           << "\" stroke=\"#ddd\"/>\n";
        os << "<line x1=\"0\" y1=\"" << t << "\" x2=\"" << size << "\" y2=\"" << t
           << "\" stroke=\"#ddd\"/>\n";
    }
    for (const auto& r : records) {
        const double x = r.coords.empty() ? -1.0 : log_position(r.coords[0], log_p);
        const double y = r.coords.size() < 2 ? -1.0 : log_position(r.coords[1], log_p);
        os << "<circle cx=\"" << to_px(x) << "\" cy=\"" << to_px(y) << "\" r=\"2\" fill=\"navy\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace lvdist
