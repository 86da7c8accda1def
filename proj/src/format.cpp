#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "quiverhom/error.hpp"
#include "quiverhom/shell.hpp"

namespace qh {

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    return out;
}

std::vector<std::string> words(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

[[noreturn]] void parse_fail(const std::string& source, std::size_t line, const std::string& what) {
    fail(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

std::size_t parse_count(const std::string& s, const std::string& source, std::size_t line, const std::string& key) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        parse_fail(source, line, key + " expects a non-negative integer, got '" + s + "'");
    return std::stoul(s);
}

Field parse_field(const std::string& value, const std::string& source, std::size_t line) {
    std::vector<std::string> w = words(value);
    if (w.size() == 1 && (w[0] == "Q" || w[0] == "QQ")) return Field::rationals();
    if (w.size() == 2 && (w[0] == "Fp" || w[0] == "GF")) {
        std::size_t p = parse_count(w[1], source, line, "field");
        try {
            return Field::prime(static_cast<std::uint32_t>(p));
        } catch (const Error& e) {
            parse_fail(source, line, e.what());
        }
    }
    parse_fail(source, line, "field must be 'Q' or 'Fp <prime>', got '" + value + "'");
}

std::string field_text(const Field& F) {
    return F.is_prime() ? "Fp " + std::to_string(F.characteristic()) : "Q";
}

// Signed terms of a relation: "a.b - 2*c.d + J^3".
struct ParsedRelation {
    Relation relation;
    std::optional<std::size_t> radical_power;
};

ParsedRelation parse_relation(const Quiver& q, const Field& F, std::string_view text) {
    ParsedRelation out;
    std::vector<std::pair<bool, std::string>> terms;
    std::string cur;
    bool negative = false;
    for (char c : text) {
        if (c != '+' && c != '-') {
            cur += c;
            continue;
        }
        if (!trim(cur).empty()) {
            terms.emplace_back(negative, trim(cur));
            negative = false;
        }
        cur.clear();
        if (c == '-') negative = !negative;
    }
    if (!trim(cur).empty()) terms.emplace_back(negative, trim(cur));
    require(!terms.empty(), ErrorCode::ParseError, "empty relation");
    for (auto& [neg, term] : terms) {
        if (term.rfind("J^", 0) == 0) {
            require(!neg, ErrorCode::ParseError, "J^k cannot carry a sign");
            std::string k = trim(std::string_view(term).substr(2));
            require(!k.empty() && std::all_of(k.begin(), k.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }),
                    ErrorCode::ParseError, "bad radical power '" + term + "'");
            out.radical_power = std::stoul(k);
            continue;
        }
        Scalar c = 1;
        std::string path = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            c = parse_scalar(trim(std::string_view(term).substr(0, star)));
            path = trim(std::string_view(term).substr(star + 1));
        }
        if (neg) c = -c;
        out.relation.push_back({F.reduce(c), parse_path(q, path)});
    }
    return out;
}

std::string relation_text(const Quiver& q, const Relation& r) {
    std::string out;
    for (const RelationTerm& t : r) {
        Scalar c = t.coefficient;
        bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (c != 1) out += format_scalar(c) + "*";
        out += t.path.traversal_string(q);
    }
    return out;
}

std::string path_text(const Quiver& q, const Path& p) {
    return p.is_trivial() ? "e_" + q.vertex_name(p.source()) : p.traversal_string(q);
}

}  // namespace

Field parse_field_name(std::string_view text) { return parse_field(trim(text), "field", 0); }

Scalar parse_scalar(std::string_view text) {
    std::string t = trim(text);
    try {
        return parse_rational(t);
    } catch (const Error&) {
        fail(ErrorCode::ParseError, "bad scalar '" + t + "'");
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad scalar '" + t + "'");
    }
}

Path parse_path(const Quiver& q, std::string_view text) {
    std::string t = trim(text);
    require(!t.empty(), ErrorCode::ParseError, "empty path");
    if (t.rfind("e_", 0) == 0) {
        auto v = q.find_vertex(t.substr(2));
        require(v.has_value(), ErrorCode::ParseError, "unknown vertex in '" + t + "'");
        return Path::trivial(*v);
    }
    std::vector<ArrowId> arrows;
    for (const std::string& name : split(t, '.')) {
        auto a = q.find_arrow(name);
        require(a.has_value(), ErrorCode::ParseError, "unknown arrow '" + name + "' in path '" + t + "'");
        arrows.push_back(*a);
    }
    try {
        return Path::from_arrows(q, arrows);
    } catch (const Error& e) {
        fail(ErrorCode::ParseError, "path '" + t + "' does not compose: " + e.what());
    }
}

AlgebraFile parse_algebra(std::string_view text, const std::string& source) {
    struct Line {
        std::size_t number;
        std::string value;
    };
    std::optional<Line> name, field, vertices, truncated, nilpotency;
    std::vector<Line> arrows, monomial, relations, catalog;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (std::size_t number = 1; std::getline(in, raw); ++number) {
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) parse_fail(source, number, "expected 'key: value'");
        std::string key = trim(std::string_view(line).substr(0, colon));
        Line entry{number, trim(std::string_view(line).substr(colon + 1))};
        auto once = [&](std::optional<Line>& slot) {
            if (slot) parse_fail(source, number, "duplicate key '" + key + "'");
            slot = entry;
        };
        if (key == "name") once(name);
        else if (key == "field") once(field);
        else if (key == "vertices") once(vertices);
        else if (key == "truncated") once(truncated);
        else if (key == "nilpotency") once(nilpotency);
        else if (key == "arrow") arrows.push_back(entry);
        else if (key == "monomial") monomial.push_back(entry);
        else if (key == "relations") relations.push_back(entry);
        else if (key == "catalog") catalog.push_back(entry);
        else parse_fail(source, number, "unknown key '" + key + "'");
    }
    if (!vertices) parse_fail(source, 0, "missing 'vertices'");
    std::vector<std::string> vnames = words(vertices->value);
    if (vnames.empty()) parse_fail(source, vertices->number, "no vertices listed");

    std::vector<Arrow> arrow_list;
    for (const Line& l : arrows) {
        std::vector<std::string> w = words(l.value);
        if (w.size() != 3) parse_fail(source, l.number, "arrow expects 'name source target'");
        auto find = [&](const std::string& v) {
            auto it = std::find(vnames.begin(), vnames.end(), v);
            if (it == vnames.end()) parse_fail(source, l.number, "unknown vertex '" + v + "'");
            return static_cast<VertexId>(it - vnames.begin());
        };
        arrow_list.push_back({w[0], find(w[1]), find(w[2])});
    }
    Quiver q;
    try {
        q = Quiver(vnames, arrow_list);
    } catch (const Error& e) {
        parse_fail(source, vertices->number, e.what());
    }

    Field F = field ? parse_field(field->value, source, field->number) : Field::rationals();
    int kinds = (truncated ? 1 : 0) + (monomial.empty() ? 0 : 1) + (relations.empty() ? 0 : 1);
    if (kinds != 1) parse_fail(source, 0, "exactly one of 'truncated', 'monomial', 'relations' is required");
    if (nilpotency && relations.empty()) parse_fail(source, nilpotency->number, "'nilpotency' only applies to relations");

    IdealSpec ideal;
    if (truncated) {
        ideal = IdealSpec::truncated(parse_count(truncated->value, source, truncated->number, "truncated"));
    } else if (!monomial.empty()) {
        std::vector<Path> gens;
        for (const Line& l : monomial)
            for (const std::string& p : split(l.value, ',')) {
                try {
                    gens.push_back(parse_path(q, p));
                } catch (const Error& e) {
                    parse_fail(source, l.number, e.what());
                }
            }
        ideal = IdealSpec::monomial(std::move(gens));
    } else {
        std::vector<Relation> rels;
        std::optional<std::size_t> radical;
        for (const Line& l : relations)
            for (const std::string& r : split(l.value, ';')) {
                if (r.empty()) continue;
                try {
                    ParsedRelation pr = parse_relation(q, F, r);
                    if (pr.radical_power) {
                        if (!pr.relation.empty()) parse_fail(source, l.number, "J^k must stand alone");
                        radical = radical ? std::min(*radical, *pr.radical_power) : *pr.radical_power;
                    } else {
                        rels.push_back(std::move(pr.relation));
                    }
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::ParseError) throw;
                    parse_fail(source, l.number, e.what());
                }
            }
        std::size_t N = 0;
        if (nilpotency) N = parse_count(nilpotency->value, source, nilpotency->number, "nilpotency");
        else if (radical) N = *radical;
        else parse_fail(source, relations.front().number, "relations need 'nilpotency: N' or a J^k term");
        ideal = IdealSpec::with_relations(std::move(rels), N, radical);
    }

    AlgebraFile out;
    out.name = name ? name->value : source;
    try {
        out.algebra = build_algebra(q, std::move(ideal), F);
    } catch (const Error& e) {
        fail(e.code(), source + ": ideal: " + e.what());
    }
    for (const Line& l : catalog) {
        CatalogLine c;
        std::string v = l.value;
        if (v.rfind("opaque ", 0) == 0) {
            c.opaque = true;
            v = trim(std::string_view(v).substr(7));
        }
        if (v.empty()) parse_fail(source, l.number, "empty catalog entry");
        c.expr = v;
        out.catalog.push_back(std::move(c));
    }
    return out;
}

AlgebraFile load_algebra(const std::string& location) {
    if (location.rfind("corpus:", 0) == 0) {
        const CorpusFile& f = corpus_file(location.substr(7));
        return parse_algebra(f.text, f.name);
    }
    std::ifstream in(location);
    require(static_cast<bool>(in), ErrorCode::ParseError, "cannot read algebra file '" + location + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str(), location);
}

std::string print_algebra(const AlgebraFile& file) {
    const BoundQuiverAlgebra& A = *file.algebra;
    const Quiver& q = A.quiver();
    const IdealSpec& I = A.ideal();
    std::ostringstream out;
    out << "name: " << file.name << "\n";
    out << "field: " << field_text(A.field()) << "\n";
    out << "vertices:";
    for (const std::string& v : q.vertex_names()) out << " " << v;
    out << "\n";
    for (const Arrow& a : q.arrows())
        out << "arrow: " << a.name << " " << q.vertex_name(a.source) << " " << q.vertex_name(a.target) << "\n";
    switch (I.kind) {
    case IdealKind::Truncated:
        out << "truncated: " << I.truncation << "\n";
        break;
    case IdealKind::Monomial:
        for (const Path& p : I.generators) out << "monomial: " << path_text(q, p) << "\n";
        break;
    case IdealKind::Relations:
        for (const Relation& r : I.relations) out << "relations: " << relation_text(q, r) << "\n";
        if (I.radical_power) out << "relations: J^" << *I.radical_power << "\n";
        out << "nilpotency: " << I.nilpotency << "\n";
        break;
    }
    for (const CatalogLine& c : file.catalog) out << "catalog: " << (c.opaque ? "opaque " : "") << c.expr << "\n";
    return out.str();
}

bool same_algebra(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b) {
    if (!(a.quiver() == b.quiver()) || !(a.field() == b.field()) || a.kind() != b.kind()) return false;
    const IdealSpec &x = a.ideal(), &y = b.ideal();
    switch (x.kind) {
    case IdealKind::Truncated:
        return x.truncation == y.truncation;
    case IdealKind::Monomial:
        return std::set<Path>(x.generators.begin(), x.generators.end()) ==
               std::set<Path>(y.generators.begin(), y.generators.end());
    case IdealKind::Relations: {
        if (x.nilpotency != y.nilpotency || x.radical_power != y.radical_power) return false;
        if (x.relations.size() != y.relations.size()) return false;
        for (std::size_t i = 0; i < x.relations.size(); ++i) {
            const Relation &r = x.relations[i], &s = y.relations[i];
            if (r.size() != s.size()) return false;
            for (std::size_t j = 0; j < r.size(); ++j)
                if (r[j].coefficient != s[j].coefficient || r[j].path != s[j].path) return false;
        }
        return a.basis() == b.basis();
    }
    }
    return false;
}

AlgebraPtr with_field(const BoundQuiverAlgebra& A, const Field& F) {
    return build_algebra(A.quiver(), A.ideal(), F);
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> parse_split(const Quiver& q, std::string_view text,
                                                                    const std::string& source) {
    std::optional<std::vector<VertexId>> gamma, gamma_bar;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (std::size_t number = 1; std::getline(in, raw); ++number) {
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) parse_fail(source, number, "expected 'key: vertices'");
        std::string key = trim(std::string_view(line).substr(0, colon));
        std::vector<VertexId> vs;
        for (const std::string& w : words(std::string_view(line).substr(colon + 1))) {
            auto v = q.find_vertex(w);
            if (!v) parse_fail(source, number, "unknown vertex '" + w + "'");
            vs.push_back(*v);
        }
        std::optional<std::vector<VertexId>>* slot = nullptr;
        if (key == "gamma") slot = &gamma;
        else if (key == "gamma_bar") slot = &gamma_bar;
        else parse_fail(source, number, "unknown key '" + key + "'");
        if (*slot) parse_fail(source, number, "duplicate key '" + key + "'");
        *slot = std::move(vs);
    }
    if (!gamma || !gamma_bar) parse_fail(source, 0, "split needs 'gamma' and 'gamma_bar'");
    return {*gamma, *gamma_bar};
}

}  // namespace qh
