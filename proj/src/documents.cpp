#include "mikado/documents.hpp"

#include <set>

#include "mikado/error.hpp"

namespace mikado {

namespace {

using nlohmann::json;

struct Position {
    int line = 1;
    int column = 1;
};

Position position_at(std::string_view text, std::size_t offset) {
    Position pos;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
    }
    return pos;
}

/// Validation context: reports errors at the first occurrence of the
/// offending key in the source text.
class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {
        try {
            doc_ = json::parse(text_.begin(), text_.end());
        } catch (const json::parse_error& e) {
            const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
            fail_at(offset, "malformed JSON");
        }
        if (!doc_.is_object()) fail_at(0, "document must be a JSON object");
    }

    const json& doc() const { return doc_; }

    [[noreturn]] void fail(std::string_view key, const std::string& what) const {
        const std::size_t at = text_.find("\"" + std::string(key) + "\"");
        fail_at(at == std::string_view::npos ? 0 : at, what);
    }

    const json& require(std::string_view key) const {
        auto it = doc_.find(std::string(key));
        if (it == doc_.end()) fail_at(0, "missing field \"" + std::string(key) + "\"");
        return *it;
    }

    bool has(std::string_view key) const { return doc_.contains(std::string(key)); }

    int integer(std::string_view key, const json& value) const {
        if (!value.is_number_integer()) fail(key, "expected an integer in \"" + std::string(key) + "\"");
        return value.get<int>();
    }

    std::string name(std::string_view key, const json& value) const {
        if (value.is_string()) return value.get<std::string>();
        if (value.is_number_integer()) return std::to_string(value.get<long long>());
        fail(key, "point names must be strings or integers in \"" + std::string(key) + "\"");
    }

    const json& array(std::string_view key, const json& value) const {
        if (!value.is_array()) fail(key, "expected a list in \"" + std::string(key) + "\"");
        return value;
    }

private:
    [[noreturn]] void fail_at(std::size_t offset, const std::string& what) const {
        const Position p = position_at(text_, offset);
        throw Error(Errc::ParseError,
                    "line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": " + what);
    }

    std::string_view text_;
    json doc_;
};

std::vector<std::string> read_points(const Reader& r) {
    std::vector<std::string> points;
    std::set<std::string> seen;
    for (const json& v : r.array("points", r.require("points"))) {
        std::string n = r.name("points", v);
        if (!seen.insert(n).second) r.fail("points", "duplicate point \"" + n + "\"");
        points.push_back(std::move(n));
    }
    return points;
}

LinearSpace read_structure(const Reader& r) {
    std::vector<std::string> points = read_points(r);
    std::vector<NamedTriple> triples;
    std::set<std::set<std::string>> seen;
    if (r.has("triples")) {
        for (const json& t : r.array("triples", r.require("triples"))) {
            if (!t.is_array() || t.size() != 3) r.fail("triples", "each triple must list three points");
            NamedTriple triple{r.name("triples", t[0]), r.name("triples", t[1]), r.name("triples", t[2])};
            std::set<std::string> key(triple.begin(), triple.end());
            if (key.size() == 3 && !seen.insert(key).second) {
                r.fail("triples", "duplicate triple [" + triple[0] + ", " + triple[1] + ", " + triple[2] + "]");
            }
            triples.push_back(std::move(triple));
        }
    }
    return LinearSpace::create(std::move(points), triples);
}

PointSet read_base(const Reader& r, const LinearSpace& space) {
    PointSet base;
    if (!r.has("base")) return base;
    for (const json& v : r.array("base", r.require("base"))) {
        const std::string n = r.name("base", v);
        auto idx = space.index_of(n);
        if (!idx) r.fail("base", "unknown base point \"" + n + "\"");
        if (base.contains(*idx)) r.fail("base", "duplicate base point \"" + n + "\"");
        base.insert(*idx);
    }
    return base;
}

json names_json(const LinearSpace& space, PointSet subset) {
    json out = json::array();
    for (int p : subset) out.push_back(space.name(p));
    return out;
}

}  // namespace

LinearSpace parse_structure(std::string_view text) { return read_structure(Reader(text)); }

json structure_json(const LinearSpace& space) {
    json triples = json::array();
    for (const Triple& t : space.triples()) {
        triples.push_back({space.name(t[0]), space.name(t[1]), space.name(t[2])});
    }
    return json{{"points", space.names()}, {"triples", std::move(triples)}};
}

PairDocument parse_pair(std::string_view text) {
    const Reader r(text);
    LinearSpace space = read_structure(r);
    if (!r.has("base")) r.fail("base", "missing field \"base\"");
    const PointSet base = read_base(r, space);
    return {std::move(space), base};
}

json pair_json(const LinearSpace& space, PointSet base) {
    json doc = structure_json(space);
    doc["base"] = names_json(space, base);
    return doc;
}

MagmaDocument parse_magma(std::string_view text) {
    const Reader r(text);
    const int order = r.integer("order", r.require("order"));
    if (order < 1) r.fail("order", "order must be positive");
    const json& rows = r.array("table", r.require("table"));
    if (static_cast<int>(rows.size()) != order) r.fail("table", "table must have one row per element");
    std::vector<int> table;
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != order) r.fail("table", "table must be square");
        for (const json& v : row) {
            const int entry = r.integer("table", v);
            if (entry < 0 || entry >= order) r.fail("table", "table entry out of range");
            table.push_back(entry);
        }
    }
    MagmaDocument doc{FiniteMagma::create(order, std::move(table)), {}};
    if (r.has("elements")) {
        std::set<std::string> seen;
        for (const json& v : r.array("elements", r.require("elements"))) {
            std::string n = r.name("elements", v);
            if (!seen.insert(n).second) r.fail("elements", "duplicate element \"" + n + "\"");
            doc.elements.push_back(std::move(n));
        }
        if (static_cast<int>(doc.elements.size()) != order) r.fail("elements", "one name per element required");
    }
    return doc;
}

json magma_json(const FiniteMagma& magma, const std::vector<std::string>& elements) {
    json doc{{"order", magma.order()}, {"table", magma.rows()}};
    if (!elements.empty()) doc["elements"] = elements;
    return doc;
}

MuFunction parse_mu(std::string_view text) {
    const Reader r(text);
    const int q = r.integer("q", r.require("q"));
    MuRule rule = MuRule::FloorDelta;
    int constant = 0;
    if (r.has("default_rule")) {
        const json& v = r.require("default_rule");
        if (!v.is_string()) r.fail("default_rule", "default_rule must be a string");
        try {
            std::tie(rule, constant) = parse_mu_rule(v.get<std::string>());
        } catch (const Error& e) {
            r.fail("default_rule", e.what());
        }
    }
    std::map<std::string, int> overrides;
    if (r.has("overrides")) {
        for (const json& o : r.array("overrides", r.require("overrides"))) {
            if (!o.is_object() || !o.contains("code") || !o.contains("bound") || !o["code"].is_string()) {
                r.fail("overrides", "each override needs a string \"code\" and an integer \"bound\"");
            }
            const std::string code = o["code"].get<std::string>();
            if (!overrides.emplace(code, r.integer("bound", o["bound"])).second) {
                r.fail("overrides", "duplicate override for \"" + code + "\"");
            }
        }
    }
    std::set<MuClass> flags;
    if (r.has("flags")) {
        for (const json& f : r.array("flags", r.require("flags"))) {
            const std::string s = f.is_string() ? f.get<std::string>() : "";
            if (s == "U") flags.insert(MuClass::U);
            else if (s == "T") flags.insert(MuClass::T);
            else if (s == "C") flags.insert(MuClass::C);
            else r.fail("flags", "flags are \"U\", \"T\" or \"C\"");
        }
    }
    return MuFunction::create(q, rule, constant, std::move(overrides), std::move(flags));
}

json mu_json(const MuFunction& mu) {
    json overrides = json::array();
    for (const auto& [code, bound] : mu.overrides()) overrides.push_back({{"code", code}, {"bound", bound}});
    json flags = json::array();
    for (MuClass c : mu.flags()) flags.push_back(std::string(mu_class_name(c)));
    return json{{"q", mu.q()}, {"default_rule", mu.rule_name()}, {"overrides", overrides}, {"flags", flags}};
}

GaloisField parse_field(std::string_view text) {
    const Reader r(text);
    const int p = r.integer("p", r.require("p"));
    const int n = r.has("n") ? r.integer("n", r.require("n")) : 1;
    std::optional<Polynomial> modulus;
    if (r.has("modulus")) {
        Polynomial coeffs;
        for (const json& c : r.array("modulus", r.require("modulus"))) coeffs.push_back(r.integer("modulus", c));
        modulus = std::move(coeffs);
    }
    return GaloisField::create(p, n, modulus);
}

json field_json(const GaloisField& field) {
    return json{{"p", field.p()}, {"n", field.n()}, {"modulus", field.modulus()}};
}

TauPrimeDocument parse_tau_prime(std::string_view text) {
    const Reader r(text);
    LinearSpace space = read_structure(r);
    const PointSet base = read_base(r, space);
    std::vector<Triple> h;
    std::set<Triple> seen;
    for (const json& t : r.array("H", r.require("H"))) {
        if (!t.is_array() || t.size() != 3) r.fail("H", "each H entry must list three points");
        Triple triple{};
        for (int i = 0; i < 3; ++i) {
            const std::string n = r.name("H", t[i]);
            auto idx = space.index_of(n);
            if (!idx) r.fail("H", "unknown point \"" + n + "\" in H");
            triple[i] = *idx;
        }
        if (!seen.insert(triple).second) r.fail("H", "duplicate H entry");
        h.push_back(triple);
    }
    return {TauPrimeStructure::create(std::move(space), std::move(h)), base};
}

json tau_prime_json(const TauPrimeStructure& s, PointSet base) {
    json doc = structure_json(s.space());
    if (!base.empty()) doc["base"] = names_json(s.space(), base);
    json h = json::array();
    for (const Triple& t : s.h()) h.push_back({s.space().name(t[0]), s.space().name(t[1]), s.space().name(t[2])});
    doc["H"] = std::move(h);
    return doc;
}

std::string print_document(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace mikado
