#include "skewchar/io.hpp"

#include <cctype>
#include <charconv>

#include "json.hpp"
#include "skewchar/errors.hpp"

namespace skewchar {

namespace {

using nlohmann::json;

int parse_int(const std::string& s, std::size_t from, std::size_t to, std::size_t origin) {
    int v = 0;
    const char* first = s.data() + from;
    const char* last = s.data() + to;
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (first == last) throw ParseError("expected an integer", origin + from);
    if (ec != std::errc() || ptr != last)
        throw ParseError("bad integer '" + s.substr(from, to - from) + "'", origin + (ptr - s.data()));
    return v;
}

}  // namespace

Partition parse_partition(const std::string& s, std::size_t origin) {
    if (s.empty() || s == "0") return Partition();
    std::vector<int> parts;
    std::size_t at = 0;
    while (true) {
        const std::size_t comma = std::min(s.find(',', at), s.size());
        const int v = parse_int(s, at, comma, origin);
        if (v <= 0) throw ParseError("parts must be positive", origin + at);
        if (!parts.empty() && v > parts.back())
            throw ParseError("parts must be weakly decreasing", origin + at);
        parts.push_back(v);
        if (comma == s.size()) break;
        at = comma + 1;
    }
    return Partition(parts);
}

SkewShape parse_shape(const std::string& s) {
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return SkewShape(parse_partition(s), Partition());
    if (s.find('/', slash + 1) != std::string::npos)
        throw ParseError("more than one '/'", s.find('/', slash + 1));
    Partition outer = parse_partition(s.substr(0, slash));
    Partition inner = parse_partition(s.substr(slash + 1), slash + 1);
    return SkewShape(std::move(outer), std::move(inner));
}

std::pair<int, int> parse_range(const std::string& s) {
    const std::size_t dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(s, 0, s.size(), 0);
        return {v, v};
    }
    const int lo = parse_int(s, 0, dots, 0);
    const int hi = parse_int(s, dots + 2, s.size(), 0);
    if (lo > hi) throw ParseError("empty range", 0);
    return {lo, hi};
}

std::string record_to_json(const CharacterRecord& r) {
    // ordered_json keeps the documented key order in the output.
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : r.value.terms()) {
        nlohmann::ordered_json t;
        t["exp"] = e;
        t["coeff"] = c.get_str();
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json j;
    j["family"] = family_name(r.family);
    j["lambda"] = r.lambda.parts();
    j["mu"] = r.mu.parts();
    j["n"] = r.n;
    j["m"] = r.m;
    j["method"] = method_name(r.method);
    j["terms"] = terms;
    return j.dump();
}

CharacterRecord record_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    try {
        CharacterRecord r;
        r.family = parse_family(j.at("family").get<std::string>());
        r.lambda = Partition(j.at("lambda").get<std::vector<int>>());
        r.mu = Partition(j.at("mu").get<std::vector<int>>());
        r.n = j.at("n").get<int>();
        r.m = j.at("m").get<int>();
        r.method = parse_method(j.at("method").get<std::string>());
        r.value = LaurentPoly(r.n);
        for (const auto& t : j.at("terms")) {
            const auto e = t.at("exp").get<Monomial>();
            if (static_cast<int>(e.size()) != r.n) throw ParseError("exponent length differs from n", 0);
            mpz_class c;
            if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) throw ParseError("bad coefficient", 0);
            r.value.add_term(e, c);
        }
        return r;
    } catch (const json::exception& e) {
        throw ParseError(e.what(), 0);
    }
}

}  // namespace skewchar
