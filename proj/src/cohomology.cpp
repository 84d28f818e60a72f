#include "gentle/cohomology.hpp"

#include <algorithm>

namespace gentle {

std::string to_string(CohTag t) {
    switch (t) {
    case CohTag::One: return "One";
    case CohTag::BMaxPair: return "BMaxPair";
    case CohTag::CycleB: return "CycleB";
    case CohTag::Fundamental: return "Fundamental";
    case CohTag::BPlusPair: return "BPlusPair";
    case CohTag::GammaMaxPair: return "GammaMaxPair";
    case CohTag::CycleGamma: return "CycleGamma";
    case CohTag::GammaPlusPair: return "GammaPlusPair";
    }
    return "?";
}

int CohBasisElement::weight() const {
    if (rep.empty()) return 0;
    return rep.terms().begin()->first.weight();
}

std::string CohBasisElement::payload_str(const Quiver& q) const {
    switch (tag) {
    case CohTag::One: return "1";
    case CohTag::BMaxPair: return "(" + Path::trivial(path1.source()).str(q) + ", " + path1.str(q) + ")";
    case CohTag::CycleB: return "<" + path1.str(q) + ">";
    case CohTag::Fundamental: return "(" + path1.str(q) + ", " + path1.str(q) + ")";
    case CohTag::BPlusPair: return "(" + path1.str(q) + ", " + path1.str(q) + "*" + path2.str(q) + ")";
    case CohTag::GammaMaxPair: return "(" + path1.str(q) + ", " + path2.str(q) + ")";
    case CohTag::CycleGamma: return "<" + path1.str(q) + ">";
    case CohTag::GammaPlusPair:
        return "(" + path1.str(q) + "*" + path2.str(q) + ", " + path1.str(q) + ")";
    }
    return "?";
}

namespace {

CochainCombo cycle_B_rep(const Quiver& q, const FieldConfig& f, const Path& alpha) {
    CochainCombo rep;
    int r = cycle_period(q, alpha);
    Path cur = alpha;
    for (int i = 0; i < r; ++i) {
        rep.add_int(f, ParallelPair{Path::trivial(cur.source()), cur}, 1);
        cur = cur.rot(q);
    }
    return rep;
}

CochainCombo cycle_Gamma_rep(const Quiver& q, const FieldConfig& f, const Path& C) {
    CochainCombo rep;
    int r = cycle_period(q, C);
    int m = C.length();
    Path cur = C;
    for (int i = 0; i < r; ++i) {
        rep.add_int(f, ParallelPair{cur, Path::trivial(cur.source())}, (i * m) % 2 ? -1 : 1);
        cur = cur.rot(q);
    }
    return rep;
}

} // namespace

HHDegree hh_basis(const GentlePresentation& p, int m, const SpanningTree& tree,
                  const FieldConfig& f, const RepSystem& reps, const MaximalPaths& maximal,
                  const PathSets& sets) {
    if (!p.is_gentle())
        throw std::invalid_argument("hh_basis needs a gentle presentation");
    const Quiver& q = p.quiver();
    HHDegree out;
    out.degree = m;
    bool fd = p.validation().admissible;
    int bound = sets.bound;

    auto push = [&](CohBasisElement e) { out.elements.push_back(std::move(e)); };

    if (m == 0) {
        CohBasisElement one;
        one.tag = CohTag::One;
        one.degree = 0;
        for (VertexId v = 0; v < q.num_vertices(); ++v)
            one.rep.add_int(f, ParallelPair{Path::trivial(v), Path::trivial(v)}, 1);
        push(std::move(one));
        for (const Path& a : maximal.B_maximal) {
            if (!a.is_cycle(q)) continue;
            CohBasisElement e;
            e.tag = CohTag::BMaxPair;
            e.degree = 0;
            e.path1 = a;
            e.rep.add_int(f, ParallelPair{Path::trivial(a.source()), a}, 1);
            push(std::move(e));
        }
        for (const Path& a : reps.crep_B(bound)) {
            CohBasisElement e;
            e.tag = CohTag::CycleB;
            e.degree = 0;
            e.path1 = a;
            e.rep = cycle_B_rep(q, f, a);
            e.family = "<rho^k>, rho primitive cocomplete, k >= 1";
            push(std::move(e));
        }
        out.truncated = !fd; // the CycleB family is infinite
        return out;
    }

    if (m == 1) {
        for (ArrowId c : tree.complement) {
            CohBasisElement e;
            e.tag = CohTag::Fundamental;
            e.degree = 1;
            e.path1 = Path::of_arrow(q, c);
            e.rep.add_int(f, ParallelPair{e.path1, e.path1}, 1);
            push(std::move(e));
        }
        for (const Path& g : maximal.Gamma_maximal) {
            if (g.length() != 1) continue;
            ArrowId c = g.first_arrow();
            for (const auto& lvl : sets.B)
                for (const Path& a : lvl) {
                    if (!parallel(q, g, a)) continue;
                    if (!a.is_trivial() && (a.first_arrow() == c || a.last_arrow() == c)) continue;
                    CohBasisElement e;
                    e.tag = CohTag::GammaMaxPair;
                    e.degree = 1;
                    e.path1 = g;
                    e.path2 = a;
                    e.rep.add_int(f, ParallelPair{g, a}, 1);
                    push(std::move(e));
                }
        }
        for (const Path& d : reps.crep_B(bound - 1)) {
            ArrowId c = d.first_arrow();
            Path cpath = Path::of_arrow(q, c);
            Path cd = cpath.compose_after(q, d);
            CohBasisElement e;
            e.tag = CohTag::BPlusPair;
            e.degree = 1;
            e.path1 = cpath;
            e.path2 = d;
            e.rep.add_int(f, ParallelPair{cpath, cd}, 1);
            e.family = "(c, c*rho^k), k >= 1";
            push(std::move(e));
        }
        // length-1 members of Crep(Γ): loops b with b² ∈ R, characteristic 2
        for (const Path& C : reps.crep_Gamma(f, 1)) {
            CohBasisElement e;
            e.tag = CohTag::CycleGamma;
            e.degree = 1;
            e.path1 = C;
            e.rep = cycle_Gamma_rep(q, f, C);
            push(std::move(e));
        }
        out.truncated = !fd;
        return out;
    }

    for (const Path& C : reps.crep_Gamma(f, m)) {
        if (C.length() != m) continue;
        CohBasisElement e;
        e.tag = CohTag::CycleGamma;
        e.degree = m;
        e.path1 = C;
        e.rep = cycle_Gamma_rep(q, f, C);
        e.family = "<C^k> over Crep(Gamma)";
        push(std::move(e));
    }
    for (const Path& C : reps.crep_Gamma(f, m - 1)) {
        if (C.length() != m - 1) continue;
        ArrowId b = C.first_arrow();
        Path bp = Path::of_arrow(q, b);
        Path bC = bp.compose_after(q, C);
        CohBasisElement e;
        e.tag = CohTag::GammaPlusPair;
        e.degree = m;
        e.path1 = bp;
        e.path2 = C;
        e.rep.add_int(f, ParallelPair{bC, bp}, 1);
        e.family = "(b*C^k, b) over Crep(Gamma)";
        push(std::move(e));
    }
    for (const Path& g : maximal.Gamma_maximal) {
        if (g.length() != m) continue;
        for (const auto& lvl : sets.B)
            for (const Path& a : lvl) {
                if (!parallel(q, g, a)) continue;
                if (!a.is_trivial() &&
                    (a.first_arrow() == g.first_arrow() || a.last_arrow() == g.last_arrow()))
                    continue;
                CohBasisElement e;
                e.tag = CohTag::GammaMaxPair;
                e.degree = m;
                e.path1 = g;
                e.path2 = a;
                e.rep.add_int(f, ParallelPair{g, a}, 1);
                push(std::move(e));
            }
    }
    out.truncated = !sets.B_complete &&
                    std::any_of(maximal.Gamma_maximal.begin(), maximal.Gamma_maximal.end(),
                                [&](const Path& g) { return g.length() == m; });
    std::sort(out.elements.begin(), out.elements.end(),
              [](const CohBasisElement& a, const CohBasisElement& b) {
                  if (a.tag != b.tag) return a.tag < b.tag;
                  if (a.path1 != b.path1) return a.path1 < b.path1;
                  return a.path2 < b.path2;
              });
    return out;
}

FinitenessReport finiteness_report(const GentlePresentation& p) {
    FinitenessReport r;
    r.algebra_fd = !p.has_cocomplete_cycle();
    r.hh0_fd = r.algebra_fd;
    r.hh1_fd = r.algebra_fd;
    r.gldim_finite = !p.has_complete_cycle();
    if (r.gldim_finite) {
        PathSets sets = enumerate_sets(p, p.quiver().num_arrows() + 2);
        for (int n = 0; n < static_cast<int>(sets.Gamma.size()); ++n)
            if (sets.Gamma[n].empty()) {
                r.vanishing_degree = n;
                break;
            }
    }
    return r;
}

GrowthReport growth_report(const GentlePresentation& p, const FieldConfig& f) {
    if (!p.is_fd() || !p.is_gentle())
        throw std::invalid_argument("growth_report needs an fd-gentle presentation");
    GrowthReport g;
    auto prims = primitive_complete_circuits(p);
    g.n_primitive_complete = static_cast<int>(prims.size());
    g.q1 = p.quiver().num_arrows();
    bool char2 = f.characteristic() == 2;
    auto count = [&](int m) { // |C_m(Γ)|
        if (m <= 0) return 0;
        if (!char2 && m % 2) return 0;
        int n = 0;
        for (const Circuit& c : prims)
            if (m % c.length == 0) ++n;
        return n;
    };
    g.bound_holds = true;
    for (int m = g.q1 + 1; m <= 2 * g.q1; ++m) {
        int dim = count(m) + count(m - 1);
        g.dims.push_back({m, dim});
        if (dim > 2 * g.n_primitive_complete) g.bound_holds = false;
    }
    return g;
}

} // namespace gentle
