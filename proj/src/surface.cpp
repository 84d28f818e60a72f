#include "gentle/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gentle {

std::string to_string(BoundaryComponent::Kind k) {
    switch (k) {
    case BoundaryComponent::Kind::MarkedBoundary: return "marked-boundary";
    case BoundaryComponent::Kind::GStarPuncture: return "G*-puncture";
    case BoundaryComponent::Kind::GPuncture: return "G-puncture";
    }
    return "?";
}

RibbonGraph build_ribbon_graph(const GentlePresentation& p) {
    if (!p.is_gentle())
        throw std::invalid_argument("the ribbon graph needs a gentle presentation");
    const Quiver& q = p.quiver();
    if (q.num_vertices() == 1 && q.num_arrows() == 0)
        throw std::invalid_argument("the one-vertex quiver with no arrows has no ribbon surface");
    RibbonGraph g;
    g.num_edges = q.num_vertices();

    MaximalPaths maximal = maximal_paths(p);
    for (const Path& m : maximal.B_maximal) {
        RibbonVertex v;
        v.kind = RibbonVertexKind::FinitePath;
        v.path = m;
        v.slots = m.visited(q);
        v.marked = true;
        g.vertices.push_back(std::move(v));
    }
    for (const Circuit& c : primitive_cocomplete_circuits(p)) {
        RibbonVertex v;
        v.kind = RibbonVertexKind::InfiniteCycle;
        v.path = c.representative;
        v.slots = c.representative.visited(q);
        v.slots.pop_back(); // the cyclic visit list, one entry per period step
        v.marked = false;
        g.vertices.push_back(std::move(v));
    }
    // a quiver vertex with exactly one passage gets a trivial-path vertex
    std::vector<int> passages(q.num_vertices(), 0);
    for (const RibbonVertex& v : g.vertices)
        for (VertexId e : v.slots) ++passages[e];
    for (VertexId e = 0; e < q.num_vertices(); ++e) {
        if (passages[e] == 1) {
            RibbonVertex v;
            v.kind = RibbonVertexKind::TrivialPath;
            v.path = Path::trivial(e);
            v.slots = {e};
            v.marked = true;
            g.vertices.push_back(std::move(v));
            ++passages[e];
        }
    }
    // collect the two ends of each edge
    std::vector<std::vector<std::pair<int, int>>> ends(q.num_vertices());
    for (size_t i = 0; i < g.vertices.size(); ++i)
        for (size_t j = 0; j < g.vertices[i].slots.size(); ++j)
            ends[g.vertices[i].slots[j]].push_back({static_cast<int>(i), static_cast<int>(j)});
    g.edge_ends.resize(q.num_vertices());
    for (VertexId e = 0; e < q.num_vertices(); ++e) {
        if (ends[e].size() != 2)
            throw std::logic_error("edge " + q.vertex_name(e) + " has " +
                                   std::to_string(ends[e].size()) +
                                   " incidences; expected exactly two");
        g.edge_ends[e] = {ends[e][0], ends[e][1]};
    }
    return g;
}

namespace {

// half-edge = (vertex, slot); ι swaps the two ends of an edge, σ advances
// one slot; faces are the orbits of σ∘ι
std::pair<int, int> involution(const RibbonGraph& g, std::pair<int, int> h) {
    VertexId e = g.vertices[h.first].slots[h.second];
    const auto& ee = g.edge_ends[e];
    return ee[0] == h ? ee[1] : ee[0];
}

std::pair<int, int> sigma(const RibbonGraph& g, std::pair<int, int> h) {
    int n = static_cast<int>(g.vertices[h.first].slots.size());
    return {h.first, (h.second + 1) % n};
}

} // namespace

SurfaceReport boundary_report(const GentlePresentation& p) {
    SurfaceReport out;
    out.graph = build_ribbon_graph(p);
    const RibbonGraph& g = out.graph;

    std::map<std::pair<int, int>, bool> used;
    for (size_t i = 0; i < g.vertices.size(); ++i)
        for (size_t j = 0; j < g.vertices[i].slots.size(); ++j)
            used[{static_cast<int>(i), static_cast<int>(j)}] = false;

    for (auto& [start, done] : used) {
        if (done) continue;
        BoundaryComponent b;
        b.kind = BoundaryComponent::Kind::MarkedBoundary;
        std::pair<int, int> h = start;
        do {
            used[h] = true;
            b.edges_crossed.push_back(g.vertices[h.first].slots[h.second]);
            std::pair<int, int> other = involution(g, h);
            // turning the corner at the far vertex, between slot j' and j'+1
            b.corners.push_back(other);
            const RibbonVertex& v = g.vertices[other.first];
            if (v.marked && other.second == static_cast<int>(v.slots.size()) - 1)
                ++b.marked_points;
            h = sigma(g, other);
        } while (h != start);
        b.winding = static_cast<int>(b.corners.size()) - 2 * b.marked_points;
        b.kind = b.marked_points > 0 ? BoundaryComponent::Kind::MarkedBoundary
                                     : BoundaryComponent::Kind::GStarPuncture;
        b.index = static_cast<int>(out.components.size());
        out.components.push_back(std::move(b));
    }
    out.num_faces = static_cast<int>(out.components.size());
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i].kind != RibbonVertexKind::InfiniteCycle) continue;
        BoundaryComponent b;
        b.kind = BoundaryComponent::Kind::GPuncture;
        b.index = static_cast<int>(out.components.size());
        b.edges_crossed = g.vertices[i].slots;
        b.winding = 0;
        out.components.push_back(std::move(b));
        ++out.num_g_punctures;
    }
    out.euler = static_cast<int>(g.vertices.size()) - g.num_edges + out.num_faces;
    if (out.euler % 2 != 0)
        throw std::logic_error("ribbon surface has odd Euler characteristic");
    out.genus = (2 - out.euler) / 2;
    return out;
}

namespace {

int face_of_marked_corner(const SurfaceReport& s, int vertex) {
    int slot = static_cast<int>(s.graph.vertices[vertex].slots.size()) - 1;
    for (const BoundaryComponent& b : s.components) {
        if (b.kind == BoundaryComponent::Kind::GPuncture) continue;
        for (const auto& c : b.corners)
            if (c.first == vertex && c.second == slot) return b.index;
    }
    return -1;
}

// does the face's crossed-edge cycle match the vertex-visit cycle of the
// primitive complete cycle D (up to rotation)?
bool face_matches_cycle(const Quiver& q, const BoundaryComponent& b, const Path& D) {
    std::vector<VertexId> visits = D.visited(q);
    visits.pop_back();
    if (visits.size() != b.edges_crossed.size()) return false;
    int n = static_cast<int>(visits.size());
    for (int shift = 0; shift < n; ++shift) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = visits[(i + shift) % n] == b.edges_crossed[i];
        if (ok) return true;
    }
    return false;
}

int find_finite_vertex(const RibbonGraph& g, const Path& path) {
    for (size_t i = 0; i < g.vertices.size(); ++i)
        if (g.vertices[i].kind == RibbonVertexKind::FinitePath && g.vertices[i].path == path)
            return static_cast<int>(i);
    return -1;
}

// unique maximal B-extension of a path (gentle presentations only)
Path maximal_extension(const GentlePresentation& p, const Path& a) {
    const Quiver& q = p.quiver();
    std::vector<ArrowId> arrows = a.arrows();
    int guard = 4 * q.num_arrows() + 4;
    while (!p.pred_B(arrows.front()).empty()) {
        arrows.insert(arrows.begin(), p.pred_B(arrows.front())[0]);
        if (--guard < 0) throw std::logic_error("maximal extension does not terminate");
    }
    while (!p.succ_B(arrows.back()).empty()) {
        arrows.push_back(p.succ_B(arrows.back())[0]);
        if (--guard < 0) throw std::logic_error("maximal extension does not terminate");
    }
    return Path::of_arrows(q, arrows);
}

} // namespace

DictionaryReport generator_dictionary(const Calculus& c, const SurfaceReport& s) {
    const GentlePresentation& p = c.presentation();
    const Quiver& q = p.quiver();
    DictionaryReport rep;
    GeneratorSet gens = generator_set(c);

    std::map<int, int> hits; // boundary index -> number of generators matched
    auto fail = [&](const std::string& msg) {
        throw std::logic_error("generator dictionary mismatch: " + msg);
    };

    for (const CohBasisElement& e : gens.generators) {
        if (e.tag == CohTag::Fundamental) continue; // F: open curves of winding 1
        DictionaryRow row;
        row.generator = e.payload_str(q);
        row.degree = e.degree;
        switch (e.tag) {
        case CohTag::BMaxPair: {
            int v = find_finite_vertex(s.graph, e.path1);
            if (v < 0) fail("no ribbon vertex for " + row.generator);
            row.boundary = face_of_marked_corner(s, v);
            break;
        }
        case CohTag::GammaMaxPair: {
            int v = -1;
            if (e.path2.is_trivial()) {
                for (size_t i = 0; i < s.graph.vertices.size(); ++i)
                    if (s.graph.vertices[i].kind == RibbonVertexKind::TrivialPath &&
                        s.graph.vertices[i].path == e.path2)
                        v = static_cast<int>(i);
            } else {
                v = find_finite_vertex(s.graph, maximal_extension(p, e.path2));
            }
            if (v < 0) fail("no marked point matches " + row.generator);
            row.boundary = face_of_marked_corner(s, v);
            break;
        }
        case CohTag::CycleB: {
            for (const BoundaryComponent& b : s.components)
                if (b.kind == BoundaryComponent::Kind::GPuncture &&
                    face_matches_cycle(q, b, e.path1))
                    row.boundary = b.index;
            break;
        }
        case CohTag::CycleGamma: {
            Path root = e.path1.subpath(q, 0, cycle_period(q, e.path1));
            for (const BoundaryComponent& b : s.components)
                if (b.kind == BoundaryComponent::Kind::GStarPuncture &&
                    face_matches_cycle(q, b, root))
                    row.boundary = b.index;
            row.odd_unmarked_exception =
                root.length() % 2 == 1 && c.field().characteristic() != 2;
            break;
        }
        default: fail("unexpected generator tag");
        }
        if (row.boundary < 0) fail("no boundary component matches " + row.generator);
        const BoundaryComponent& b = s.components[row.boundary];
        row.marked_points = b.marked_points;
        row.winding = b.winding;
        row.degree_identity = row.odd_unmarked_exception
                                  ? (row.degree == 2 * row.winding)
                                  : (row.degree == row.winding + row.marked_points);
        if (!row.degree_identity)
            fail("degree identity fails for " + row.generator);
        ++hits[row.boundary];
        rep.rows.push_back(std::move(row));
    }

    rep.generators = static_cast<int>(rep.rows.size());
    for (const BoundaryComponent& b : s.components) {
        bool eligible = b.kind == BoundaryComponent::Kind::GPuncture || b.marked_points <= 1;
        if (eligible) ++rep.eligible_boundaries;
        int n = hits.count(b.index) ? hits[b.index] : 0;
        if (eligible && n != 1)
            fail("boundary " + std::to_string(b.index) + " matched " + std::to_string(n) +
                 " generators");
        if (!eligible && n != 0)
            fail("boundary " + std::to_string(b.index) + " with " +
                 std::to_string(b.marked_points) + " marked points matched a generator");
    }
    rep.bijection = rep.generators == rep.eligible_boundaries;
    if (!rep.bijection) fail("generator and boundary counts differ");
    return rep;
}

std::vector<CurveTagRow> homology_curve_tags(const Calculus& c, const SurfaceReport& s,
                                             int maxdeg) {
    const GentlePresentation& p = c.presentation();
    const Quiver& q = p.quiver();
    if (c.field().characteristic() == 2)
        throw std::invalid_argument("homology curve tags require characteristic != 2");
    if (!p.is_fd())
        throw std::invalid_argument("homology curve tags require an fd-gentle presentation");
    std::vector<CurveTagRow> rows;
    auto puncture_of = [&](const Path& circuit) {
        Path root = circuit.subpath(q, 0, cycle_period(q, circuit));
        for (const BoundaryComponent& b : s.components)
            if (b.kind == BoundaryComponent::Kind::GStarPuncture && face_matches_cycle(q, b, root))
                return b.index;
        return -1;
    };
    for (int m = 0; m <= maxdeg; ++m) {
        for (const HomBasisElement& e : c.hh_homology(m).elements) {
            CurveTagRow row;
            row.basis_element = e.payload_str(q);
            row.degree = m;
            switch (e.tag) {
            case HomTag::VertexPair:
                row.curve = "edge " + q.vertex_name(e.circuit.source()) + " of G";
                row.winding = 0;
                break;
            case HomTag::HCycleComplete: {
                int n = e.length / e.period;
                row.curve = "C_" + std::to_string(n) + " around G*-puncture #" +
                            std::to_string(puncture_of(e.circuit));
                row.winding = n * e.period;
                break;
            }
            case HomTag::LFactPair: {
                int n = e.length / e.period;
                row.curve = "C'_" + std::to_string(n) + " around G*-puncture #" +
                            std::to_string(puncture_of(e.circuit));
                row.winding = n * e.period - 1;
                auto img = connes_B(p, c.field(), e);
                if (img.basis_elt)
                    row.connes = "B -> " + img.coefficient.str(c.field()) + "*" +
                                 img.basis_elt->payload_str(q) + "  (C'_" + std::to_string(n) +
                                 " -> C_" + std::to_string(n) + ")";
                break;
            }
            default:
                throw std::logic_error("unexpected homology tag for an fd presentation");
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string diagram_description(const GentlePresentation& p, const SurfaceReport& s) {
    const Quiver& q = p.quiver();
    std::ostringstream os;
    os << "ribbon graph\n";
    os << "edges:";
    for (VertexId v = 0; v < q.num_vertices(); ++v) os << " " << q.vertex_name(v);
    os << "\n";
    for (size_t i = 0; i < s.graph.vertices.size(); ++i) {
        const RibbonVertex& v = s.graph.vertices[i];
        os << "vertex " << i << " [";
        switch (v.kind) {
        case RibbonVertexKind::FinitePath: os << "maximal path " << v.path.str(q); break;
        case RibbonVertexKind::TrivialPath: os << "trivial path " << v.path.str(q); break;
        case RibbonVertexKind::InfiniteCycle: os << "infinite power of " << v.path.str(q); break;
        }
        os << "] cyclic order:";
        for (VertexId e : v.slots) os << " " << q.vertex_name(e);
        if (v.marked) os << "  marked corner: between last and first slot";
        os << "\n";
    }
    for (const BoundaryComponent& b : s.components) {
        os << "face " << b.index << " (" << to_string(b.kind) << ", marked points "
           << b.marked_points << ", winding " << b.winding << "):";
        for (VertexId e : b.edges_crossed) os << " " << q.vertex_name(e);
        os << "\n";
    }
    os << "euler " << s.euler << "  genus " << s.genus << "\n";
    return os.str();
}

} // namespace gentle
