#pragma once

#include "gentle/structure.hpp"

#include <array>
#include <string>
#include <vector>

namespace gentle {

enum class RibbonVertexKind { FinitePath, TrivialPath, InfiniteCycle };

// A vertex of the marked ribbon graph G. The slots list the incident edges
// of G (= vertices of Q) in cyclic order; finite-path vertices carry the
// marking between the last slot and slot 0, closing the cycle.
struct RibbonVertex {
    RibbonVertexKind kind;
    Path path; // the maximal path / trivial path / primitive cocomplete cycle
    std::vector<VertexId> slots;
    bool marked = false;
};

struct RibbonGraph {
    std::vector<RibbonVertex> vertices;
    int num_edges = 0; // edges of G are the vertices of Q
    // each edge is incident to exactly two (vertex, slot) ends
    std::vector<std::array<std::pair<int, int>, 2>> edge_ends;
};

RibbonGraph build_ribbon_graph(const GentlePresentation& p);

struct BoundaryComponent {
    enum class Kind { MarkedBoundary, GStarPuncture, GPuncture };
    Kind kind;
    int index = 0;
    std::vector<std::pair<int, int>> corners; // (ribbon vertex, slot) per face step
    std::vector<VertexId> edges_crossed;      // quiver vertices along the walk
    int marked_points = 0;                    // b
    int winding = 0;                          // w
};

std::string to_string(BoundaryComponent::Kind k);

struct SurfaceReport {
    RibbonGraph graph;
    std::vector<BoundaryComponent> components; // faces first, then G-punctures
    int euler = 0; // |V| − |E| + |F| of the ribbon structure
    int genus = 0;
    int num_faces = 0;
    int num_g_punctures = 0;
};

SurfaceReport boundary_report(const GentlePresentation& p);

struct DictionaryRow {
    std::string generator;  // payload string
    int degree = 0;
    int boundary = -1;      // index into SurfaceReport::components
    int marked_points = 0;  // b
    int winding = 0;        // w
    bool odd_unmarked_exception = false; // deg = 2w instead of w + b
    bool degree_identity = false;        // deg == w + b (or the exception)
};

struct DictionaryReport {
    std::vector<DictionaryRow> rows;
    bool bijection = false; // |G \ F| matches the ≤1-marked boundaries ∪ G-punctures exactly
    int generators = 0;
    int eligible_boundaries = 0;
};

// The generator ↔ boundary correspondence; inconsistencies are hard errors.
DictionaryReport generator_dictionary(const Calculus& c, const SurfaceReport& s);

struct CurveTagRow {
    std::string basis_element;
    int degree = 0;
    std::string curve;   // edge v / C_n / C'_n description
    int winding = 0;
    std::string connes;  // rendered Connes image, when nonzero
};

// Geometric tags of the homology basis (requires fd and characteristic != 2).
std::vector<CurveTagRow> homology_curve_tags(const Calculus& c, const SurfaceReport& s,
                                             int maxdeg);

// plain-text diagram description for external renderers
std::string diagram_description(const GentlePresentation& p, const SurfaceReport& s);

} // namespace gentle
