#include "gentle/report.hpp"

#include "gentle/cohomology.hpp"
#include "gentle/complexes.hpp"
#include "gentle/homology.hpp"
#include "gentle/random.hpp"
#include "gentle/structure.hpp"
#include "gentle/surface.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace gentle {

const char* const kSchemaVersion = "1";

using json = nlohmann::ordered_json;

namespace {

struct Ctx {
    const GentlePresentation& p;
    RunConfig cfg;
    FieldConfig field;
    std::ostringstream text;
    json doc;
    int exit_code = 0;

    Ctx(const GentlePresentation& pres, const RunConfig& c)
        : p(pres), cfg(c), field(c.characteristic) {
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = c.command;
        doc["characteristic"] = c.characteristic;
        doc["bound"] = c.bound;
    }

    RunResult finish() {
        RunResult r;
        r.exit_code = exit_code;
        r.output = cfg.structured ? doc.dump(2) + "\n" : text.str();
        return r;
    }
};

SpanningTree resolve_tree(const GentlePresentation& p, const RunConfig& cfg) {
    if (cfg.tree_override.empty()) return spanning_tree(p);
    std::vector<ArrowId> arrows;
    std::string tok;
    std::istringstream is(cfg.tree_override);
    while (std::getline(is, tok, ',')) {
        std::istringstream ws(tok);
        std::string name;
        while (ws >> name) {
            ArrowId a = p.quiver().arrow_id(name);
            if (a < 0) throw std::invalid_argument("--tree: unknown arrow '" + name + "'");
            arrows.push_back(a);
        }
    }
    auto t = tree_from_arrows(p, arrows);
    if (!t) throw std::invalid_argument("--tree: the given arrows are not a spanning tree");
    return *t;
}

std::string path_list(const Quiver& q, const std::vector<Path>& ps) {
    std::string s;
    for (const Path& p : ps) {
        if (!s.empty()) s += " ";
        s += p.str(q);
    }
    return s.empty() ? "-" : s;
}

void cmd_validate(Ctx& c) {
    const auto& r = c.p.validation();
    auto line = [&](const std::string& name, bool ok) {
        c.text << "  " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    };
    c.text << "class: " << to_string(r.cls) << "\n";
    line("(a) at most two arrows out of / into every vertex", r.degree_bound);
    line("(b) at most one non-relation continuation per arrow", r.unique_b_continuation);
    line("(c) at most one relation continuation per arrow", r.unique_g_continuation);
    line("(d) relations are quadratic monomials", r.relations_quadratic);
    line("(e) admissible (no cocomplete cycle)", r.admissible);
    for (const auto& fxi : r.failures) c.text << "    " << fxi << "\n";
    c.doc["class"] = to_string(r.cls);
    c.doc["conditions"] = {{"a", r.degree_bound},
                           {"b", r.unique_b_continuation},
                           {"c", r.unique_g_continuation},
                           {"d", r.relations_quadratic},
                           {"e", r.admissible}};
    c.doc["failures"] = r.failures;
}

void cmd_sets(Ctx& c) {
    const Quiver& q = c.p.quiver();
    PathSets sets = enumerate_sets(c.p, c.cfg.bound);
    json jb = json::array(), jg = json::array();
    for (int n = 0; n <= sets.bound; ++n) {
        c.text << "B_" << n << " (" << sets.B[n].size() << "): " << path_list(q, sets.B[n]) << "\n";
        json lvl = json::array();
        for (const Path& b : sets.B[n]) lvl.push_back(b.str(q));
        jb.push_back(lvl);
    }
    for (int n = 0; n <= sets.bound; ++n) {
        c.text << "Gamma_" << n << " (" << sets.Gamma[n].size()
               << "): " << path_list(q, sets.Gamma[n]) << "\n";
        json lvl = json::array();
        for (const Path& g : sets.Gamma[n]) lvl.push_back(g.str(q));
        jg.push_back(lvl);
    }
    if (!sets.B_complete)
        c.text << "WARN: B truncated at " << sets.bound << " (infinite-dimensional algebra)\n";
    if (!sets.Gamma_complete) c.text << "WARN: Gamma truncated at " << sets.bound << "\n";
    c.doc["B"] = jb;
    c.doc["Gamma"] = jg;
    c.doc["B_complete"] = sets.B_complete;
    c.doc["Gamma_complete"] = sets.Gamma_complete;
}

void cmd_circuits(Ctx& c) {
    const Quiver& q = c.p.quiver();
    auto all = circuits(c.p, c.cfg.bound, CircuitKind::All);
    json arr = json::array();
    c.text << "circuits up to length " << c.cfg.bound << ":\n";
    for (const Circuit& ci : all) {
        std::string kind = ci.completeness == Completeness::Complete     ? "complete"
                           : ci.completeness == Completeness::Cocomplete ? "cocomplete"
                                                                         : "neither";
        c.text << "  " << ci.representative.str(q) << "  length " << ci.length << "  period "
               << ci.period << "  root " << ci.primitive_root.str(q) << "  " << kind << "\n";
        arr.push_back({{"representative", ci.representative.str(q)},
                       {"length", ci.length},
                       {"period", ci.period},
                       {"primitive_root", ci.primitive_root.str(q)},
                       {"completeness", kind}});
    }
    auto pc = primitive_complete_circuits(c.p);
    auto pcc = primitive_cocomplete_circuits(c.p);
    c.text << "primitive complete: " << pc.size() << ", primitive cocomplete: " << pcc.size()
           << "\n";
    c.doc["circuits"] = arr;
    c.doc["primitive_complete"] = pc.size();
    c.doc["primitive_cocomplete"] = pcc.size();
}

void dump_matrices(Ctx& c, const Calculus& calc) {
    namespace fs = std::filesystem;
    fs::create_directories(c.cfg.matrix_dump_dir);
    const auto& f = calc.field();
    auto write = [&](const std::string& name, const std::vector<SparseVec>& cols) {
        std::ofstream os(fs::path(c.cfg.matrix_dump_dir) / name);
        os << "# row col value (value = numerator/denominator or residue)\n";
        for (size_t j = 0; j < cols.size(); ++j)
            for (const auto& [row, val] : cols[j])
                os << row << " " << j << " " << val.str(f) << "\n";
    };
    int top = std::min(c.cfg.max_degree + 1, calc.bound() - 1);
    for (int m = 0; m <= top; ++m) {
        write("cochain_d" + std::to_string(m) + ".txt",
              cochain_d_matrix(calc.presentation(), f, calc.cochain_basis(), m));
        if (m >= 1)
            write("chain_d" + std::to_string(m) + ".txt",
                  chain_d_matrix(calc.presentation(), f, calc.chain_basis(), m));
    }
    c.text << "matrices written to " << c.cfg.matrix_dump_dir << "\n";
}

void cmd_hh(Ctx& c) {
    const Quiver& q = c.p.quiver();
    SpanningTree tree = resolve_tree(c.p, c.cfg);
    Calculus calc(c.p, c.field, tree, c.cfg.bound);
    c.text << "spanning tree:";
    for (ArrowId a : tree.tree) c.text << " " << q.arrow_name(a);
    c.text << "  complement:";
    for (ArrowId a : tree.complement) c.text << " " << q.arrow_name(a);
    c.text << "\n";
    json degs = json::array();
    int top = std::min(c.cfg.max_degree, calc.bound() - 1);
    if (top < c.cfg.max_degree)
        c.text << "WARN: max degree clamped to " << top << " by the bound\n";
    for (int m = 0; m <= top; ++m) {
        const HHDegree& h = calc.hh(m);
        c.text << "HH^" << m << "  dim " << h.dimension();
        if (h.truncated) c.text << "  WARN: truncated at bound " << calc.bound();
        c.text << "\n";
        json rows = json::array();
        for (const CohBasisElement& e : h.elements) {
            c.text << "  " << to_string(e.tag) << "  " << e.payload_str(q) << "  weight "
                   << e.weight() << "\n";
            rows.push_back({{"tag", to_string(e.tag)},
                            {"payload", e.payload_str(q)},
                            {"weight", e.weight()}});
        }
        degs.push_back(
            {{"degree", m}, {"dim", h.dimension()}, {"truncated", h.truncated}, {"basis", rows}});
    }
    c.doc["hh"] = degs;
    FinitenessReport fin = finiteness_report(c.p);
    c.text << "algebra finite-dimensional: " << (fin.algebra_fd ? "yes" : "no")
           << "; HH^0 fd: " << (fin.hh0_fd ? "yes" : "no")
           << "; HH^1 fd: " << (fin.hh1_fd ? "yes" : "no")
           << "; gldim finite: " << (fin.gldim_finite ? "yes" : "no");
    if (fin.gldim_finite) c.text << " (HH vanishes from degree " << fin.vanishing_degree << ")";
    c.text << "\n";
    c.doc["finiteness"] = {{"algebra_fd", fin.algebra_fd},
                           {"hh0_fd", fin.hh0_fd},
                           {"hh1_fd", fin.hh1_fd},
                           {"gldim_finite", fin.gldim_finite},
                           {"vanishing_degree", fin.vanishing_degree}};
    if (c.p.is_fd() && c.p.is_gentle()) {
        GrowthReport g = growth_report(c.p, c.field);
        c.text << "growth: N = " << g.n_primitive_complete << " primitive complete circuits; "
               << "dim HH^m <= " << 2 * g.n_primitive_complete << " for m > " << g.q1 << ": "
               << (g.bound_holds ? "holds" : "VIOLATED") << "\n";
        json dims = json::array();
        for (auto [m, d] : g.dims) dims.push_back({{"m", m}, {"dim", d}});
        c.doc["growth"] = {{"N", g.n_primitive_complete},
                           {"bound_holds", g.bound_holds},
                           {"dims", dims}};
    }
    if (!c.cfg.matrix_dump_dir.empty()) dump_matrices(c, calc);
}

void cmd_homology(Ctx& c) {
    const Quiver& q = c.p.quiver();
    SpanningTree tree = resolve_tree(c.p, c.cfg);
    Calculus calc(c.p, c.field, tree, c.cfg.bound);
    json degs = json::array();
    int top = std::min(c.cfg.max_degree, calc.bound() - 1);
    for (int m = 0; m <= top; ++m) {
        const HHHomologyDegree& h = calc.hh_homology(m);
        c.text << "HH_" << m << "  dim " << h.dimension();
        if (h.truncated) c.text << "  WARN: truncated at bound " << calc.bound();
        c.text << "\n";
        json rows = json::array();
        for (const HomBasisElement& e : h.elements) {
            c.text << "  " << to_string(e.tag) << "  " << e.payload_str(q);
            auto img = connes_B(c.p, c.field, e);
            std::string bstr = "0";
            if (img.basis_elt)
                bstr = img.coefficient.str(c.field) + "*" + img.basis_elt->payload_str(q);
            c.text << "  B -> " << bstr << "\n";
            rows.push_back(
                {{"tag", to_string(e.tag)}, {"payload", e.payload_str(q)}, {"connes_B", bstr}});
        }
        degs.push_back(
            {{"degree", m}, {"dim", h.dimension()}, {"truncated", h.truncated}, {"basis", rows}});
    }
    c.doc["hh_homology"] = degs;
}

void cmd_cyclic(Ctx& c) {
    const Quiver& q = c.p.quiver();
    auto dr = de_rham(c.p, c.field, c.cfg.bound, c.cfg.max_degree);
    json jdr = json::array();
    for (const auto& d : dr) {
        c.text << "H_dR^" << d.degree << "  dim " << d.h_dr.size() << "; coker B_" << d.degree
               << "  dim " << d.coker.size();
        if (d.truncated) c.text << "  WARN: truncated";
        c.text << "\n";
        json row = {{"degree", d.degree},
                    {"h_dr", d.h_dr.size()},
                    {"coker", d.coker.size()},
                    {"truncated", d.truncated}};
        json names = json::array();
        for (const auto& e : d.h_dr) names.push_back(e.payload_str(q));
        row["h_dr_basis"] = names;
        jdr.push_back(row);
    }
    c.doc["de_rham"] = jdr;
    json jhc = json::array();
    for (int m = 0; m <= c.cfg.max_degree; ++m) {
        CyclicDegree hc = cyclic_homology(c.p, c.field, c.cfg.bound, m);
        c.text << "HC_" << m << "  dim " << hc.dimension << "  =";
        json summands = json::array();
        for (const auto& s : hc.summands) {
            c.text << " " << s.kind << "(" << s.dimension << ")";
            summands.push_back({{"kind", s.kind}, {"dim", s.dimension}});
        }
        if (hc.truncated) c.text << "  WARN: truncated";
        c.text << "\n";
        jhc.push_back({{"degree", m},
                       {"dim", hc.dimension},
                       {"summands", summands},
                       {"truncated", hc.truncated}});
    }
    c.doc["cyclic"] = jhc;
}

void cmd_cup(Ctx& c) {
    SpanningTree tree = resolve_tree(c.p, c.cfg);
    Calculus calc(c.p, c.field, tree, c.cfg.bound);
    GeneratorSet gens = generator_set(calc);
    const Quiver& q = c.p.quiver();
    json entries = json::array();
    c.text << "cup products of generators (nonzero entries):\n";
    for (const auto& u : gens.generators)
        for (const auto& v : gens.generators) {
            if (u.degree + v.degree > calc.bound() - 1) continue;
            auto r = cup_class(calc, u, v);
            if (r.zero()) continue;
            c.text << "  " << u.payload_str(q) << " ~ " << v.payload_str(q) << " = "
                   << calc.str(r) << "\n";
            entries.push_back({{"u", u.payload_str(q)},
                               {"v", v.payload_str(q)},
                               {"product", calc.str(r)}});
        }
    c.doc["cup"] = entries;
}

void cmd_cap(Ctx& c) {
    SpanningTree tree = resolve_tree(c.p, c.cfg);
    Calculus calc(c.p, c.field, tree, c.cfg.bound);
    GeneratorSet gens = generator_set(calc);
    const Quiver& q = c.p.quiver();
    json entries = json::array();
    c.text << "cap products (homology basis against generators, nonzero entries):\n";
    int top = std::min(c.cfg.max_degree, calc.bound() - 1);
    for (int m = 0; m <= top; ++m)
        for (const auto& z : calc.hh_homology(m).elements)
            for (const auto& v : gens.generators) {
                if (v.degree > m) continue;
                auto r = cap_class(calc, z, v);
                if (r.zero()) continue;
                c.text << "  " << z.payload_str(q) << " . " << v.payload_str(q) << " = "
                       << calc.str(r) << "\n";
                entries.push_back({{"z", z.payload_str(q)},
                                   {"u", v.payload_str(q)},
                                   {"product", calc.str(r)}});
            }
    c.doc["cap"] = entries;
}

void cmd_bracket(Ctx& c) {
    SpanningTree tree = resolve_tree(c.p, c.cfg);
    Calculus calc(c.p, c.field, tree, c.cfg.bound);
    GeneratorSet gens = generator_set(calc);
    const Quiver& q = c.p.quiver();
    json entries = json::array();
    c.text << "Gerstenhaber brackets of generators (nonzero entries):\n";
    for (size_t i = 0; i < gens.generators.size(); ++i)
        for (size_t j = 0; j < gens.generators.size(); ++j) {
            if (i == j) continue;
            const auto& u = gens.generators[i];
            const auto& v = gens.generators[j];
            auto r = bracket_class(calc, u, v);
            if (r.zero()) continue;
            c.text << "  [" << u.payload_str(q) << ", " << v.payload_str(q)
                   << "] = " << calc.str(r) << "\n";
            entries.push_back({{"u", u.payload_str(q)},
                               {"v", v.payload_str(q)},
                               {"bracket", calc.str(r)}});
        }
    c.doc["bracket"] = entries;
    LieDecomposition lie = lie_decomposition(calc);
    c.text << "dim [HH^1, HH^1] = " << lie.phi_11 + (c.field.characteristic() == 2 ? lie.phi_01 : 0)
           << "\n";
    if (lie.applicable) {
        c.text << "Lie decomposition into " << lie.blocks.size() << " blocks:\n";
        json blocks = json::array();
        for (const auto& b : lie.blocks) {
            c.text << "  cycle of " << q.arrow_name(b.complement_arrow) << ": family " << b.family
                   << ": " << b.description << "\n";
            blocks.push_back({{"complement_arrow", q.arrow_name(b.complement_arrow)},
                              {"family", b.family},
                              {"description", b.description}});
        }
        c.doc["lie_blocks"] = blocks;
    } else {
        c.text << "Lie decomposition not applicable: " << lie.reason << "\n";
        c.doc["lie_blocks"] = nullptr;
        c.doc["lie_reason"] = lie.reason;
    }
    c.doc["phi_11"] = lie.phi_11;
    c.doc["phi_01"] = lie.phi_01;
    c.doc["dim_hh1"] = lie.dim_hh1;
}

void cmd_presentation(Ctx& c) {
    SpanningTree tree = resolve_tree(c.p, c.cfg);
    Calculus calc(c.p, c.field, tree, c.cfg.bound);
    PresentationOfHH pres = hh_algebra_presentation(calc);
    const Quiver& q = c.p.quiver();
    c.text << "generators of HH*(A):\n";
    json jg = json::array();
    for (const auto& g : pres.generators.generators) {
        c.text << "  degree " << g.degree << "  " << g.payload_str(q) << "\n";
        jg.push_back({{"degree", g.degree}, {"payload", g.payload_str(q)}});
    }
    if (!pres.generators.minimal) c.text << "  (not minimal: one-loop exceptional case)\n";
    if (pres.exceptional_free) c.text << "exceptional case: " << pres.note << "\n";
    c.text << "relations:\n";
    json jr = json::array();
    for (const auto& r : pres.relations) {
        c.text << "  [" << r.kind << "] " << r.text << "\n";
        jr.push_back({{"kind", r.kind}, {"text", r.text}});
    }
    std::string star = !pres.star_satisfiable ? "unknown"
                       : *pres.star_satisfiable ? "yes" : "no";
    c.text << "some spanning tree satisfies (*): " << star << "\n";
    c.text << "presentation is quadratic monomial: " << (pres.quadratic_monomial ? "yes" : "no")
           << "\n";
    c.doc["generators"] = jg;
    c.doc["relations"] = jr;
    c.doc["minimal"] = pres.generators.minimal;
    c.doc["star_satisfiable"] = star;
    c.doc["quadratic_monomial"] = pres.quadratic_monomial;
}

void cmd_surface(Ctx& c) {
    SpanningTree tree = resolve_tree(c.p, c.cfg);
    Calculus calc(c.p, c.field, tree, c.cfg.bound);
    SurfaceReport s = boundary_report(c.p);
    const Quiver& q = c.p.quiver();
    c.text << diagram_description(c.p, s);
    json comps = json::array();
    for (const auto& b : s.components) {
        json edges = json::array();
        for (VertexId e : b.edges_crossed) edges.push_back(q.vertex_name(e));
        comps.push_back({{"index", b.index},
                         {"kind", to_string(b.kind)},
                         {"marked_points", b.marked_points},
                         {"winding", b.winding},
                         {"edges", edges}});
    }
    c.doc["components"] = comps;
    c.doc["euler"] = s.euler;
    c.doc["genus"] = s.genus;
    DictionaryReport dict = generator_dictionary(calc, s);
    c.text << "generator dictionary (" << dict.generators << " generators <-> "
           << dict.eligible_boundaries << " boundaries/punctures):\n";
    json rows = json::array();
    for (const auto& r : dict.rows) {
        c.text << "  " << r.generator << "  deg " << r.degree << "  boundary #" << r.boundary
               << "  b=" << r.marked_points << "  w=" << r.winding
               << (r.odd_unmarked_exception ? "  deg=2w" : "  deg=w+b") << "\n";
        rows.push_back({{"generator", r.generator},
                        {"degree", r.degree},
                        {"boundary", r.boundary},
                        {"marked_points", r.marked_points},
                        {"winding", r.winding},
                        {"exception", r.odd_unmarked_exception}});
    }
    c.doc["dictionary"] = rows;
    c.doc["bijection"] = dict.bijection;
    if (c.p.is_fd() && c.field.characteristic() != 2) {
        auto tags = homology_curve_tags(calc, s, std::min(c.cfg.max_degree, calc.bound() - 1));
        c.text << "homology curves:\n";
        json jt = json::array();
        for (const auto& t : tags) {
            c.text << "  " << t.basis_element << "  deg " << t.degree << "  " << t.curve
                   << "  winding " << t.winding;
            if (!t.connes.empty()) c.text << "  " << t.connes;
            c.text << "\n";
            jt.push_back({{"basis_element", t.basis_element},
                          {"degree", t.degree},
                          {"curve", t.curve},
                          {"winding", t.winding},
                          {"connes", t.connes}});
        }
        c.doc["homology_curves"] = jt;
    }
    if (!c.cfg.diagram_out.empty()) {
        std::ofstream os(c.cfg.diagram_out);
        os << diagram_description(c.p, s);
        c.text << "diagram written to " << c.cfg.diagram_out << "\n";
    }
}

void cmd_invariants(Ctx& c) {
    SpanningTree tree = resolve_tree(c.p, c.cfg);
    Calculus calc(c.p, c.field, tree, c.cfg.bound);
    DerivedInvariants inv = derived_invariants(calc, std::min(c.cfg.max_degree, calc.bound() - 1));
    c.text << "n (primitive cocomplete cycles, a derived invariant): "
           << inv.n_cocomplete_primitive << "\n";
    c.text << "HH*/rad is k[x_1..x_n]/(x_i x_j, i<j) with n = " << inv.n_cocomplete_primitive
           << "\n";
    c.text << "Hilbert-Poincare polynomial of T(A) = rad/rad^2:";
    std::string h;
    for (auto [deg, dim] : inv.hilbert_T) {
        if (!h.empty()) h += " + ";
        h += std::to_string(dim) + "*t^" + std::to_string(deg);
    }
    c.text << " " << (h.empty() ? "0" : h);
    if (inv.hilbert_truncated) c.text << "  WARN: truncated";
    c.text << "\n";
    c.text << "phi(1,1) = dim [HH^1, HH^1] = " << inv.phi_11 << "\n";
    c.text << "dim HH^m:";
    for (auto [m, d] : inv.hh_dims) c.text << " " << d;
    c.text << "\n";
    json jh = json::array();
    for (auto [deg, dim] : inv.hilbert_T) jh.push_back({{"degree", deg}, {"dim", dim}});
    json jd = json::array();
    for (auto [m, d] : inv.hh_dims) jd.push_back(d);
    c.doc["n_cocomplete_primitive"] = inv.n_cocomplete_primitive;
    c.doc["hilbert_T"] = jh;
    c.doc["hilbert_truncated"] = inv.hilbert_truncated;
    c.doc["phi_11"] = inv.phi_11;
    c.doc["hh_dims"] = jd;
    // surface echo: the number of G-punctures equals n
    try {
        SurfaceReport s = boundary_report(c.p);
        c.text << "surface: genus " << s.genus << ", " << s.num_faces << " boundary components, "
               << s.num_g_punctures << " G-punctures (equals n: "
               << (s.num_g_punctures == inv.n_cocomplete_primitive ? "yes" : "NO") << ")\n";
        c.doc["genus"] = s.genus;
        c.doc["boundary_components"] = s.num_faces;
        c.doc["g_punctures"] = s.num_g_punctures;
    } catch (const std::exception& e) {
        c.text << "surface: not available (" << e.what() << ")\n";
    }
}

// closed-form vs oracle dimensions; the central consistency gate
bool verify_presentation(Ctx& c, const GentlePresentation& p, const std::string& label) {
    const FieldConfig& f = c.field;
    bool fd = p.validation().admissible;
    int maxdeg = c.cfg.max_degree;
    int bound = std::max({c.cfg.bound, maxdeg + 2, fd ? p.quiver().num_arrows() + 2 : 0});
    SpanningTree tree = resolve_tree(p, c.cfg);
    Calculus calc(p, f, tree, bound);
    const PathSets& sets = calc.sets();
    bool ok = true;
    json degrees = json::array();
    for (int m = 0; m <= maxdeg; ++m) {
        int closed_coh, oracle_coh, closed_hom, oracle_hom;
        if (fd) {
            closed_coh = calc.hh(m).dimension();
            auto oc = cochain_homology_oracle(p, f, sets, calc.cochain_basis(), m);
            if (!oc.certified) throw std::logic_error("fd oracle not certified");
            oracle_coh = oc.dimension;
            closed_hom = calc.hh_homology(m).dimension();
            auto oh = chain_homology_oracle(p, f, sets, calc.chain_basis(), m);
            if (!oh.certified) throw std::logic_error("fd oracle not certified");
            oracle_hom = oh.dimension;
        } else {
            // weight-by-weight comparison inside the certified window
            closed_coh = oracle_coh = 0;
            for (int w = -m; w <= bound - m - 1; ++w) {
                auto ow = cochain_homology_oracle_weight(p, f, sets, calc.cochain_basis(), m, w);
                if (!ow.certified) continue;
                int cf = 0;
                for (const auto& e : calc.hh(m).elements)
                    if (e.weight() == w) ++cf;
                closed_coh += cf;
                oracle_coh += ow.dimension;
                if (cf != ow.dimension) ok = false;
            }
            // homology restricted to circuits inside the bound
            closed_hom = 0;
            for (const auto& e : calc.hh_homology(m).elements)
                if (e.tag == HomTag::VertexPair || e.length <= bound) ++closed_hom;
            // filtered oracle
            auto filter = [&](int deg) {
                std::vector<AntiparallelPair> out;
                if (deg > calc.chain_basis().max_degree()) return out;
                for (const auto& u : calc.chain_basis().level(deg)) {
                    CircuitKey k = circuit_key(p, u);
                    if (k.cycle.length() <= bound) out.push_back(u);
                }
                return out;
            };
            auto lvl_m = filter(m);
            auto lvl_up = filter(m + 1);
            std::map<AntiparallelPair, int> ix_m, ix_dn;
            for (size_t i = 0; i < lvl_m.size(); ++i) ix_m[lvl_m[i]] = static_cast<int>(i);
            auto dn = m >= 1 ? filter(m - 1) : std::vector<AntiparallelPair>{};
            for (size_t i = 0; i < dn.size(); ++i) ix_dn[dn[i]] = static_cast<int>(i);
            auto tovec = [&](const ChainCombo& u, std::map<AntiparallelPair, int>& ix) {
                SparseVec v;
                for (const auto& [pair, coef] : u.terms()) v[ix.at(pair)] = coef;
                return v;
            };
            std::vector<SparseVec> d_out, d_in;
            for (const auto& u : lvl_m)
                d_out.push_back(m >= 1 ? tovec(chain_d(p, f, u), ix_dn) : SparseVec{});
            for (const auto& u : lvl_up) d_in.push_back(tovec(chain_d(p, f, u), ix_m));
            Eliminator image(f);
            for (const auto& col : d_in) image.insert(col);
            oracle_hom = 0;
            for (const auto& k : kernel_basis(f, d_out))
                if (!image.insert(k)) ++oracle_hom;
        }
        bool okm = closed_coh == oracle_coh && closed_hom == oracle_hom;
        ok = ok && okm;
        c.text << label << " m=" << m << "  HH^m closed=" << closed_coh
               << " oracle=" << oracle_coh << "  HH_m closed=" << closed_hom
               << " oracle=" << oracle_hom << "  " << (okm ? "ok" : "MISMATCH") << "\n";
        degrees.push_back({{"m", m},
                           {"hh_closed", closed_coh},
                           {"hh_oracle", oracle_coh},
                           {"hom_closed", closed_hom},
                           {"hom_oracle", oracle_hom},
                           {"ok", okm}});
    }
    c.doc["verify"].push_back({{"presentation", label}, {"degrees", degrees}, {"ok", ok}});
    if (!c.cfg.matrix_dump_dir.empty()) dump_matrices(c, calc);
    return ok;
}

void cmd_verify(Ctx& c) {
    c.doc["verify"] = json::array();
    bool ok = verify_presentation(c, c.p, "input");
    c.text << (ok ? "PASS" : "FAIL") << "\n";
    c.doc["ok"] = ok;
    if (!ok) c.exit_code = 3;
}

} // namespace

RunResult run_random_verify(const RunConfig& cfg) {
    GentlePresentation dummy(
        [] {
            Quiver q;
            q.add_vertex("v");
            return q;
        }(),
        {});
    Ctx c(dummy, cfg);
    c.doc["verify"] = json::array();
    std::mt19937_64 rng(cfg.seed);
    bool ok = true;
    for (int i = 0; i < cfg.random_count; ++i) {
        GentlePresentation p =
            random_gentle(rng, cfg.random_vertices, cfg.random_arrows, true);
        ok = verify_presentation(c, p, "random#" + std::to_string(i)) && ok;
    }
    c.text << (ok ? "PASS" : "FAIL") << "\n";
    c.doc["ok"] = ok;
    if (!ok) c.exit_code = 3;
    return c.finish();
}

RunResult run_command(const GentlePresentation& p, const RunConfig& cfg) {
    Ctx c(p, cfg);
    if (cfg.bound < 2) throw std::invalid_argument("--bound must be at least 2");
    if (cfg.command == "validate") cmd_validate(c);
    else if (cfg.command == "sets") cmd_sets(c);
    else if (cfg.command == "circuits") cmd_circuits(c);
    else if (cfg.command == "hh") cmd_hh(c);
    else if (cfg.command == "homology") cmd_homology(c);
    else if (cfg.command == "cyclic") cmd_cyclic(c);
    else if (cfg.command == "cup") cmd_cup(c);
    else if (cfg.command == "cap") cmd_cap(c);
    else if (cfg.command == "bracket") cmd_bracket(c);
    else if (cfg.command == "presentation") cmd_presentation(c);
    else if (cfg.command == "surface") cmd_surface(c);
    else if (cfg.command == "invariants") cmd_invariants(c);
    else if (cfg.command == "verify") cmd_verify(c);
    else throw std::invalid_argument("unknown command '" + cfg.command + "'");
    return c.finish();
}

} // namespace gentle
