#include "gentle/presentation.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace gentle {

std::string to_string(PresentationClass c) {
    switch (c) {
    case PresentationClass::QuadraticMonomial: return "quadratic-monomial";
    case PresentationClass::Gentle: return "gentle";
    case PresentationClass::FdGentle: return "fd-gentle";
    }
    return "?";
}

GentlePresentation::GentlePresentation(Quiver q, std::set<std::pair<ArrowId, ArrowId>> relations)
    : quiver_(std::move(q)), relations_(std::move(relations)) {
    int na = quiver_.num_arrows();
    for (auto [a, b] : relations_) {
        if (a < 0 || a >= na || b < 0 || b >= na)
            throw std::invalid_argument("relation refers to an unknown arrow");
        if (quiver_.target(a) != quiver_.source(b))
            throw std::invalid_argument("relation " + quiver_.arrow_name(b) + "*" +
                                        quiver_.arrow_name(a) + " is not a path");
    }
    succ_B_.resize(na);
    pred_B_.resize(na);
    succ_G_.resize(na);
    pred_G_.resize(na);
    for (ArrowId a = 0; a < na; ++a)
        for (ArrowId b = 0; b < na; ++b) {
            if (quiver_.target(a) != quiver_.source(b)) continue;
            if (in_relations(a, b)) {
                succ_G_[a].push_back(b);
                pred_G_[b].push_back(a);
            } else {
                succ_B_[a].push_back(b);
                pred_B_[b].push_back(a);
            }
        }
    validate();
}

namespace {

// A cyclically-closed path with all consecutive pairs in the successor table
// exists iff the digraph on arrows with edges a -> b for b in succ[a] has a
// directed cycle.
bool has_cyclic(const Quiver& q, const std::vector<std::vector<ArrowId>>& succ) {
    int n = q.num_arrows();
    std::vector<int> state(n, 0); // 0 new, 1 on stack, 2 done
    auto dfs = [&](auto&& self, ArrowId a) -> bool {
        state[a] = 1;
        for (ArrowId b : succ[a]) {
            if (state[b] == 1) return true;
            if (state[b] == 0 && self(self, b)) return true;
        }
        state[a] = 2;
        return false;
    };
    for (ArrowId a = 0; a < n; ++a)
        if (state[a] == 0 && dfs(dfs, a)) return true;
    return false;
}

} // namespace

bool GentlePresentation::has_cocomplete_cycle() const { return has_cyclic(quiver_, succ_B_); }
bool GentlePresentation::has_complete_cycle() const { return has_cyclic(quiver_, succ_G_); }

void GentlePresentation::validate() {
    ValidationReport r;
    r.relations_quadratic = true;
    r.degree_bound = true;
    for (VertexId v = 0; v < quiver_.num_vertices(); ++v) {
        int out = static_cast<int>(quiver_.arrows_out(v).size());
        int in = static_cast<int>(quiver_.arrows_in(v).size());
        if (out > 2 || in > 2) {
            r.degree_bound = false;
            r.failures.push_back("(a) vertex " + quiver_.vertex_name(v) + " has " +
                                 std::to_string(out) + " outgoing and " + std::to_string(in) +
                                 " incoming arrows");
        }
    }
    r.unique_b_continuation = true;
    r.unique_g_continuation = true;
    for (ArrowId a = 0; a < quiver_.num_arrows(); ++a) {
        if (succ_B_[a].size() > 1 || pred_B_[a].size() > 1) {
            r.unique_b_continuation = false;
            r.failures.push_back("(b) arrow " + quiver_.arrow_name(a) +
                                 " has more than one non-relation continuation");
        }
        if (succ_G_[a].size() > 1 || pred_G_[a].size() > 1) {
            r.unique_g_continuation = false;
            r.failures.push_back("(c) arrow " + quiver_.arrow_name(a) +
                                 " has more than one relation continuation");
        }
    }
    r.admissible = !has_cocomplete_cycle();
    if (!r.admissible)
        r.failures.push_back("(e) a cocomplete cycle exists, so the ideal is not admissible");
    if (r.gentle())
        r.cls = r.admissible ? PresentationClass::FdGentle : PresentationClass::Gentle;
    else
        r.cls = PresentationClass::QuadraticMonomial;
    report_ = r;
}

GentlePresentation GentlePresentation::dual() const {
    std::set<std::pair<ArrowId, ArrowId>> dualrel;
    for (ArrowId a = 0; a < quiver_.num_arrows(); ++a)
        for (ArrowId b = 0; b < quiver_.num_arrows(); ++b)
            if (quiver_.target(a) == quiver_.source(b) && !in_relations(a, b))
                dualrel.insert({a, b});
    return GentlePresentation(quiver_, std::move(dualrel));
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Token {
    std::string text;
    int line, col;
};

[[noreturn]] void fail(int line, int col, const std::string& msg) {
    throw ParseError{line, col, msg};
}

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> toks;
    int line = 1, col = 1;
    std::string cur;
    int curline = 0, curcol = 0;
    auto flush = [&] {
        if (!cur.empty()) {
            toks.push_back({cur, curline, curcol});
            cur.clear();
        }
    };
    for (size_t i = 0; i < src.size(); ++i) {
        char c = src[i];
        if (c == '#') { // comment to end of line
            flush();
            while (i < src.size() && src[i] != '\n') ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == '\n') {
            flush();
            ++line;
            col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
            flush();
            ++col;
            continue;
        }
        if (cur.empty()) {
            curline = line;
            curcol = col;
        }
        cur += c;
        ++col;
    }
    flush();
    return toks;
}

struct RawArrow {
    std::string name, src, tgt;
    int line, col;
};

GentlePresentation build(const std::vector<std::string>& vertices,
                         const std::vector<RawArrow>& arrows,
                         const std::vector<std::pair<Token, Token>>& relations) {
    if (vertices.empty()) fail(1, 1, "the empty quiver is not accepted");
    Quiver q;
    for (const auto& v : vertices) q.add_vertex(v);
    for (const auto& a : arrows) {
        VertexId s = q.vertex_id(a.src), t = q.vertex_id(a.tgt);
        if (s < 0) fail(a.line, a.col, "arrow '" + a.name + "' uses undeclared vertex '" + a.src + "'");
        if (t < 0) fail(a.line, a.col, "arrow '" + a.name + "' uses undeclared vertex '" + a.tgt + "'");
        q.add_arrow(a.name, s, t);
    }
    std::set<std::pair<ArrowId, ArrowId>> rel;
    for (const auto& [second, first] : relations) {
        ArrowId f = q.arrow_id(first.text), s = q.arrow_id(second.text);
        if (f < 0) fail(first.line, first.col, "relation uses undeclared arrow '" + first.text + "'");
        if (s < 0) fail(second.line, second.col, "relation uses undeclared arrow '" + second.text + "'");
        if (q.target(f) != q.source(s))
            fail(first.line, first.col, "relation " + second.text + "*" + first.text +
                                            " is not a length-2 path");
        rel.insert({f, s});
    }
    if (!q.connected())
        fail(1, 1, "the quiver is not connected");
    return GentlePresentation(std::move(q), std::move(rel));
}

GentlePresentation parse_text(const std::string& source) {
    auto toks = tokenize(source);
    std::vector<std::string> vertices;
    std::vector<RawArrow> arrows;
    std::vector<std::pair<Token, Token>> relations; // (second, first)

    enum class Section { None, Vertices, Arrows, Relations } sec = Section::None;
    size_t i = 0;
    auto is_section = [](const std::string& t) {
        return t == "vertices:" || t == "arrows:" || t == "relations:";
    };
    while (i < toks.size()) {
        const Token& t = toks[i];
        if (t.text == "vertices:") { sec = Section::Vertices; ++i; continue; }
        if (t.text == "arrows:") { sec = Section::Arrows; ++i; continue; }
        if (t.text == "relations:") { sec = Section::Relations; ++i; continue; }
        switch (sec) {
        case Section::None:
            fail(t.line, t.col, "expected a section header (vertices:, arrows:, relations:)");
        case Section::Vertices:
            vertices.push_back(t.text);
            ++i;
            break;
        case Section::Arrows: {
            // "name: src -> tgt"; the colon may be glued to the name
            std::string name = t.text;
            if (!name.empty() && name.back() == ':') name.pop_back();
            else {
                if (i + 1 >= toks.size() || toks[i + 1].text != ":")
                    fail(t.line, t.col, "expected 'name:' in arrow declaration");
                ++i;
            }
            if (name.empty()) fail(t.line, t.col, "empty arrow name");
            if (i + 3 >= toks.size()) fail(t.line, t.col, "incomplete arrow declaration");
            Token srctok = toks[i + 1], arrowtok = toks[i + 2], tgttok = toks[i + 3];
            if (arrowtok.text != "->")
                fail(arrowtok.line, arrowtok.col, "expected '->' in arrow declaration");
            if (is_section(srctok.text) || is_section(tgttok.text))
                fail(t.line, t.col, "incomplete arrow declaration");
            arrows.push_back({name, srctok.text, tgttok.text, t.line, t.col});
            i += 4;
            break;
        }
        case Section::Relations: {
            // "b*a" denotes the path: first a, then b
            auto star = t.text.find('*');
            if (star == std::string::npos || star == 0 || star + 1 == t.text.size())
                fail(t.line, t.col, "relation must have the form second*first");
            if (t.text.find('*', star + 1) != std::string::npos)
                fail(t.line, t.col, "relations must be paths of length exactly 2");
            Token second{t.text.substr(0, star), t.line, t.col};
            Token first{t.text.substr(star + 1), t.line, static_cast<int>(t.col + star + 1)};
            relations.push_back({second, first});
            ++i;
            break;
        }
        }
    }
    return build(vertices, arrows, relations);
}

GentlePresentation parse_json(const std::string& source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        fail(1, static_cast<int>(e.byte), std::string("JSON: ") + e.what());
    }
    std::vector<std::string> vertices;
    std::vector<RawArrow> arrows;
    std::vector<std::pair<Token, Token>> relations;
    if (!j.contains("vertices") || !j["vertices"].is_array())
        fail(1, 1, "JSON input needs a 'vertices' array");
    for (const auto& v : j["vertices"]) vertices.push_back(v.get<std::string>());
    if (j.contains("arrows"))
        for (const auto& a : j["arrows"]) {
            if (a.is_string()) {
                // same "name: src -> tgt" syntax inside the string
                std::istringstream is(a.get<std::string>());
                std::string name, src, arrow, tgt;
                is >> name >> src >> arrow >> tgt;
                if (!name.empty() && name.back() == ':') name.pop_back();
                if (arrow != "->" || name.empty() || src.empty() || tgt.empty())
                    fail(1, 1, "bad arrow string '" + a.get<std::string>() + "'");
                arrows.push_back({name, src, tgt, 1, 1});
            } else {
                arrows.push_back({a.at("name").get<std::string>(), a.at("source").get<std::string>(),
                                  a.at("target").get<std::string>(), 1, 1});
            }
        }
    if (j.contains("relations"))
        for (const auto& r : j["relations"]) {
            std::string s = r.get<std::string>();
            auto star = s.find('*');
            if (star == std::string::npos || star == 0 || star + 1 == s.size() ||
                s.find('*', star + 1) != std::string::npos)
                fail(1, 1, "relation must have the form second*first, got '" + s + "'");
            relations.push_back({{s.substr(0, star), 1, 1}, {s.substr(star + 1), 1, 1}});
        }
    return build(vertices, arrows, relations);
}

} // namespace

GentlePresentation parse_presentation(const std::string& source) {
    for (char c : source) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_json(source);
        break;
    }
    return parse_text(source);
}

} // namespace gentle
