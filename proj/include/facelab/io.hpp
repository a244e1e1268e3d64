#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "audit.hpp"
#include "complex.hpp"
#include "constructions.hpp"
#include "enumeration.hpp"
#include "poset.hpp"

namespace facelab {

using json = nlohmann::json;

namespace detail {

inline std::pair<int, int> line_col(const std::string& text, std::size_t byte)
{
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // byte is 1-based and points just past the offending character
        auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(l, c, e.what());
    }
}

inline bool looks_like_json(const std::string& text)
{
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '{' || ch == '[';
    }
    return false;
}

} // namespace detail

inline json to_json(const Label& l) { return l.is_int() ? json(l.as_int()) : json(l.as_string()); }

inline Label label_from_json(const json& j)
{
    if (j.is_number_integer()) return Label(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string()) return Label(j.get<std::string>());
    fail("ParseError", "vertex labels must be integers or strings, got " + j.dump());
}

inline json to_json(const LabelFace& f)
{
    json a = json::array();
    for (auto& l : f) a.push_back(to_json(l));
    return a;
}

inline LabelFace face_from_json(const json& j)
{
    if (!j.is_array()) fail("ParseError", "a face must be an array, got " + j.dump());
    LabelFace f;
    for (auto& x : j) f.push_back(label_from_json(x));
    return f;
}

inline json to_json(const std::vector<LabelFace>& fs)
{
    json a = json::array();
    for (auto& f : fs) a.push_back(to_json(f));
    return a;
}

inline json complex_to_json(const SimplicialComplex& K)
{
    json v = json::array();
    for (auto& l : K.vertices()) v.push_back(to_json(l));
    return {{"vertices", v}, {"facets", to_json(K.facet_labels())}};
}

inline SimplicialComplex complex_from_json(const json& j)
{
    const json* facets = &j;
    if (j.is_object()) {
        if (!j.contains("facets")) fail("ParseError", "complex object has no \"facets\" field");
        facets = &j.at("facets");
    }
    if (!facets->is_array()) fail("ParseError", "\"facets\" must be an array");
    std::vector<LabelFace> fs;
    for (auto& f : *facets) fs.push_back(face_from_json(f));
    if (j.is_object() && j.contains("vertices")) {
        std::set<Label> known;
        for (auto& x : j.at("vertices")) known.insert(label_from_json(x));
        for (auto& f : fs)
            for (auto& l : f)
                if (!known.count(l)) fail("ParseError", "facet vertex " + l.str() + " is not listed in \"vertices\"");
    }
    return SimplicialComplex::from_facets(fs);
}

/// One facet per line, whitespace separated; '#' starts a comment.
inline SimplicialComplex complex_from_text(const std::string& text)
{
    std::vector<LabelFace> fs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
        std::istringstream ls(line);
        std::string tok;
        LabelFace f;
        std::size_t col = 0;
        while (ls >> tok) {
            col = line.find(tok, col) + 1;
            bool digits = !tok.empty() && tok.find_first_not_of("-0123456789") == std::string::npos &&
                          tok.find('-', 1) == std::string::npos && tok != "-";
            if (digits) {
                try {
                    f.emplace_back(static_cast<long long>(std::stoll(tok)));
                } catch (const std::out_of_range&) {
                    throw ParseError(lineno, static_cast<int>(col), "integer label out of range: " + tok);
                }
            } else {
                f.emplace_back(tok);
            }
        }
        if (!f.empty()) fs.push_back(std::move(f));
    }
    if (fs.empty()) throw ParseError(lineno, 1, "no facets");
    return SimplicialComplex::from_facets(fs);
}

inline std::string complex_to_text(const SimplicialComplex& K)
{
    std::string out;
    for (auto& f : K.facet_labels()) {
        for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " " : "") + f[i].str();
        out += "\n";
    }
    return out;
}

inline SimplicialComplex parse_complex(const std::string& text)
{
    return detail::looks_like_json(text) ? complex_from_json(detail::parse_json(text)) : complex_from_text(text);
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("FileNotFound", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("FileNotWritable", path);
    out << text;
}

inline SimplicialComplex load_complex(const std::string& path) { return parse_complex(read_file(path)); }

/// Optional "coloring": {"type": [...], "colors": [[label, color], ...]} in a complex file.
inline std::optional<Coloring> coloring_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("coloring")) return std::nullopt;
    const auto& c = j.at("coloring");
    Coloring out;
    out.type = c.at("type").get<std::vector<int>>();
    for (auto& p : c.at("colors")) out.phi[label_from_json(p.at(0))] = p.at(1).get<int>();
    return out;
}

inline json coloring_to_json(const Coloring& c)
{
    json colors = json::array();
    for (auto& [l, k] : c.phi) colors.push_back({to_json(l), k});
    return {{"type", c.type}, {"colors", colors}};
}

// ---------------------------------------------------------------------------
// posets

inline json poset_to_json(const GradedPoset& P)
{
    json covers = json::array();
    for (auto& [a, b] : P.cover_pairs()) covers.push_back({a, b});
    return {{"elements", P.names()}, {"covers", covers}};
}

inline GradedPoset poset_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        fail("ParseError", "poset needs \"elements\" and \"covers\"");
    std::vector<std::string> names;
    for (auto& e : j.at("elements")) names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) fail("ParseError", "cover must be a pair, got " + c.dump());
        auto s = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
        covers.emplace_back(s(c[0]), s(c[1]));
    }
    return GradedPoset::from_covers(names, covers);
}

inline GradedPoset load_poset(const std::string& path) { return poset_from_json(detail::parse_json(read_file(path))); }

// ---------------------------------------------------------------------------
// move logs

inline json move_log_to_json(const MoveLog& log)
{
    json a = json::array();
    for (auto& r : log) {
        json e = {{"op", r.op}, {"f0", r.f0}, {"f1", r.f1}};
        if (r.op == "start") e["facets"] = to_json(r.facets);
        else if (r.op == "bistellar") {
            e["F"] = to_json(r.F);
            e["G"] = to_json(r.G);
        } else if (r.op == "retriangulate") {
            e["ball"] = to_json(r.facets);
            e["vertex"] = to_json(r.vertex);
        }
        a.push_back(e);
    }
    return a;
}

inline MoveLog move_log_from_json(const json& j)
{
    if (!j.is_array()) fail("ParseError", "move log must be an array");
    MoveLog log;
    for (auto& e : j) {
        MoveRecord r;
        r.op = e.at("op").get<std::string>();
        r.f0 = e.value("f0", Int{0});
        r.f1 = e.value("f1", Int{0});
        if (r.op == "start") {
            for (auto& f : e.at("facets")) r.facets.push_back(face_from_json(f));
        } else if (r.op == "bistellar") {
            r.F = face_from_json(e.at("F"));
            r.G = face_from_json(e.at("G"));
        } else if (r.op == "retriangulate") {
            for (auto& f : e.at("ball")) r.facets.push_back(face_from_json(f));
            r.vertex = label_from_json(e.at("vertex"));
        } else {
            fail("ParseError", "unknown move op " + r.op);
        }
        log.push_back(std::move(r));
    }
    return log;
}

/// Re-run a move log. Every step is re-validated and its (f0, f1) compared.
inline SimplicialComplex replay(const MoveLog& log, std::optional<SimplicialComplex> start = std::nullopt)
{
    std::optional<SimplicialComplex> K = std::move(start);
    std::size_t step = 0;
    for (auto& r : log) {
        if (r.op == "start") K = SimplicialComplex::from_facets(r.facets);
        else if (!K) fail("ReplayMismatch", "log does not begin with a start complex");
        else if (r.op == "bistellar") K = apply_bistellar(*K, {r.F, r.G});
        else if (r.op == "retriangulate") K = central_retriangulation(*K, r.facets, r.vertex);
        else fail("ReplayMismatch", "unknown op " + r.op);
        Int f0 = static_cast<Int>(K->num_vertices()), f1 = static_cast<Int>(num_edges(*K));
        if (f0 != r.f0 || f1 != r.f1)
            fail("ReplayMismatch", "step " + std::to_string(step) + " gives (" + std::to_string(f0) + "," +
                                       std::to_string(f1) + "), log says (" + std::to_string(r.f0) + "," +
                                       std::to_string(r.f1) + ")");
        ++step;
    }
    if (!K) fail("ReplayMismatch", "empty log");
    return *K;
}

// ---------------------------------------------------------------------------
// reports

inline json audit_to_json(const AuditReport& R)
{
    json checks = json::array();
    for (auto& e : R.entries) {
        json c = {{"name", e.name}, {"statement", e.statement}, {"proven", e.proven},
                  {"status", to_string(e.status)}, {"notes", e.notes}};
        c["lhs"] = e.lhs ? json(*e.lhs) : json(nullptr);
        c["rhs"] = e.rhs ? json(*e.rhs) : json(nullptr);
        checks.push_back(c);
    }
    return {{"field", R.field}, {"checks", checks}, {"proven_violation", R.has_proven_violation()}};
}

inline AuditReport audit_from_json(const json& j)
{
    AuditReport R;
    R.field = j.at("field").get<std::string>();
    for (auto& c : j.at("checks")) {
        AuditEntry e;
        e.name = c.at("name").get<std::string>();
        e.statement = c.at("statement").get<std::string>();
        e.proven = c.at("proven").get<bool>();
        std::string s = c.at("status").get<std::string>();
        e.status = s == "holds" ? AuditStatus::Holds
                   : s == "tight" ? AuditStatus::Tight
                   : s == "violated" ? AuditStatus::Violated
                                     : AuditStatus::Inapplicable;
        if (!c.at("lhs").is_null()) e.lhs = c.at("lhs").get<Int>();
        if (!c.at("rhs").is_null()) e.rhs = c.at("rhs").get<Int>();
        e.notes = c.at("notes").get<std::string>();
        R.entries.push_back(std::move(e));
    }
    return R;
}

inline json betti_to_json(const BettiVector& b)
{
    std::vector<Int> v;
    for (int i = 0; i <= b.top(); ++i) v.push_back(b[i]);
    return {{"field", b.field.name()}, {"reduced", v}};
}

} // namespace facelab
