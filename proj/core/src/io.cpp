#include "qschub/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "qschub/errors.hpp"

namespace qschub {

namespace {

using ojson = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view tok, std::string_view whole) {
    tok = trim(tok);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("cannot parse '" + std::string(tok) + "' in '" + std::string(whole) +
                         "' as an integer");
    return v;
}

std::vector<int> parse_list(std::string_view text, bool allow_digits) {
    const std::string_view whole = text;
    text = trim(text);
    if (text.size() >= 2 && (text.front() == '(' || text.front() == '[') &&
        (text.back() == ')' || text.back() == ']')) {
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<int> out;
    if (text.empty()) return out;
    if (text.find(',') == std::string_view::npos && allow_digits && text.size() > 1) {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("cannot parse '" + std::string(whole) + "' as a digit string");
            out.push_back(c - '0');
        }
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_int(text.substr(start, comma - start), whole));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template <class T>
T wrap_domain(std::string_view text, T (*make)(std::vector<int>), std::vector<int> v) {
    try {
        return make(std::move(v));
    } catch (const DomainError& e) {
        throw ParseError("'" + std::string(text) + "': " + e.what());
    }
}

const ojson& field(const ojson& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("record is missing field '") + key + "'");
    return *it;
}

std::string str_field(const ojson& j, const char* key) {
    const ojson& v = field(j, key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError(std::string("field '") + key + "' must be a string");
}

int int_field(const ojson& j, const char* key) {
    const ojson& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

ojson gr_json(const GrIndex& x) {
    ojson j;
    j["kind"] = "gr";
    j["m"] = x.ctx().m();
    j["n"] = x.ctx().n();
    j["lambda"] = to_string(x.lambda());
    j["mu"] = to_string(x.mu());
    j["nu"] = to_string(x.nu());
    j["d"] = x.d();
    return j;
}

ojson fl_json(const FlIndex& x) {
    ojson j;
    j["kind"] = "fl";
    j["n"] = x.n();
    j["u"] = to_string(x.u());
    j["v"] = to_string(x.v());
    j["w"] = to_string(x.w());
    j["d"] = to_string(x.d());
    return j;
}

ojson aff_json(const AffIndex& x, const std::optional<RectContext>& ctx) {
    ojson j;
    j["kind"] = "aff";
    j["k"] = x.k();
    if (ctx) {
        j["m"] = ctx->m();
        j["n"] = ctx->n();
    }
    j["lambda"] = to_string(x.lambda());
    j["mu"] = to_string(x.mu());
    j["eta"] = to_string(x.eta());
    return j;
}

std::string paren(const Partition& p) { return p.empty() ? "()" : "(" + to_string(p) + ")"; }

}  // namespace

Partition parse_partition(std::string_view text) {
    return wrap_domain<Partition>(
        text, [](std::vector<int> v) { return Partition(std::move(v)); }, parse_list(text, false));
}

Permutation parse_permutation(std::string_view text) {
    return wrap_domain<Permutation>(
        text, [](std::vector<int> v) { return Permutation(std::move(v)); }, parse_list(text, true));
}

DegreeVector parse_degree(std::string_view text) { return DegreeVector(parse_list(text, true)); }

std::string to_json(const GrIndex& x) { return gr_json(x).dump(); }
std::string to_json(const FlIndex& x) { return fl_json(x).dump(); }
std::string to_json(const AffIndex& x, const std::optional<RectContext>& ctx) {
    return aff_json(x, ctx).dump();
}

std::string to_json(const IndexRecord& rec) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AffRecord>) return to_json(x.index, x.ctx);
            else return to_json(x);
        },
        rec);
}

IndexRecord parse_index_record(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON record: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("index record must be a JSON object");
    const std::string kind = str_field(j, "kind");
    if (kind == "gr") {
        const int m = int_field(j, "m");
        const int n = int_field(j, "n");
        return GrIndex(parse_partition(str_field(j, "lambda")), parse_partition(str_field(j, "mu")),
                       parse_partition(str_field(j, "nu")), int_field(j, "d"),
                       RectContext::from_mn(m, n));
    }
    if (kind == "fl") {
        FlIndex x(parse_permutation(str_field(j, "u")), parse_permutation(str_field(j, "v")),
                  parse_permutation(str_field(j, "w")), parse_degree(str_field(j, "d")));
        if (j.contains("n") && int_field(j, "n") != x.n())
            throw ParseError("field 'n' does not match the permutation size");
        return x;
    }
    if (kind == "aff") {
        AffRecord rec{AffIndex(parse_partition(str_field(j, "lambda")),
                               parse_partition(str_field(j, "mu")),
                               parse_partition(str_field(j, "eta")), int_field(j, "k")),
                      std::nullopt};
        if (j.contains("m") && j.contains("n"))
            rec.ctx = RectContext::from_mn(int_field(j, "m"), int_field(j, "n"));
        return rec;
    }
    throw ParseError("unknown record kind '" + kind + "'");
}

std::string to_json(const GrTable& table, const RectContext& ctx) {
    ojson j;
    j["ring"] = "QH_Gr";
    j["m"] = ctx.m();
    j["n"] = ctx.n();
    j["terms"] = ojson::array();
    for (const auto& [term, c] : table) {
        ojson t;
        t["nu"] = to_string(term.nu);
        t["d"] = term.d;
        t["c"] = c;
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

std::string to_json(const FlTable& table, int n) {
    ojson j;
    j["ring"] = "QH_Fl";
    j["n"] = n;
    j["terms"] = ojson::array();
    for (const auto& [term, c] : table) {
        ojson t;
        t["w"] = to_string(term.w);
        t["deg"] = to_string(term.d);
        t["c"] = c;
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

std::string to_pretty(const GrTable& table) {
    std::ostringstream out;
    if (table.empty()) out << "0\n";
    for (const auto& [term, c] : table) {
        out << c << " * ";
        if (term.d == 1) out << "q ";
        else if (term.d > 1) out << "q^" << term.d << ' ';
        out << "s" << paren(term.nu) << '\n';
    }
    return out.str();
}

std::string to_pretty(const FlTable& table) {
    std::ostringstream out;
    if (table.empty()) out << "0\n";
    for (const auto& [term, c] : table) {
        out << c << " * ";
        for (int i = 1; i <= term.d.k(); ++i) {
            const int e = term.d.entry(i);
            if (e == 1) out << "q" << i << ' ';
            else if (e > 1) out << "q" << i << '^' << e << ' ';
        }
        out << "s[" << to_string(term.w) << "]\n";
    }
    return out.str();
}

std::string to_pretty(const IndexRecord& rec) {
    std::ostringstream out;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, GrIndex>) {
                out << "Gr(" << x.ctx().m() << "," << x.ctx().n() << ")  lambda=" << paren(x.lambda())
                    << " mu=" << paren(x.mu()) << " nu=" << paren(x.nu()) << " d=" << x.d();
            } else if constexpr (std::is_same_v<T, FlIndex>) {
                out << "Fl(" << x.n() << ")  u=[" << to_string(x.u()) << "] v=[" << to_string(x.v())
                    << "] w=[" << to_string(x.w()) << "] d=(" << to_string(x.d()) << ")";
            } else {
                out << "k=" << x.index.k() << "  lambda=" << paren(x.index.lambda())
                    << " mu=" << paren(x.index.mu()) << " eta=" << paren(x.index.eta());
            }
        },
        rec);
    out << '\n';
    return out.str();
}

}  // namespace qschub
