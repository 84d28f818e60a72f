#include "gentle/homology.hpp"

#include <algorithm>

namespace gentle {

std::string to_string(HomTag t) {
    switch (t) {
    case HomTag::VertexPair: return "VertexPair";
    case HomTag::HCycleComplete: return "HCycleComplete";
    case HomTag::LFactPair: return "LFactPair";
    case HomTag::HCycleCocomplete: return "HCycleCocomplete";
    case HomTag::CocompletePoint: return "CocompletePoint";
    }
    return "?";
}

std::string HomBasisElement::payload_str(const Quiver& q) const {
    switch (tag) {
    case HomTag::VertexPair: return "(" + circuit.str(q) + ", " + circuit.str(q) + ")";
    case HomTag::HCycleComplete:
    case HomTag::HCycleCocomplete: return "<<" + circuit.str(q) + ">>";
    case HomTag::LFactPair: {
        Path l1 = Path::of_arrow(q, circuit.lfact1());
        return "(" + l1.str(q) + ", " + circuit.lfact2(q).str(q) + ")";
    }
    case HomTag::CocompletePoint:
        return "(" + circuit.str(q) + ", " + Path::trivial(circuit.source()).str(q) + ")";
    }
    return "?";
}

namespace {

// (−1)^k = 1 in the field?
bool sign_is_one(const FieldConfig& f, long k) { return f.characteristic() == 2 || k % 2 == 0; }

HomBasisElement make_vertex(const FieldConfig& f, VertexId v) {
    HomBasisElement e;
    e.tag = HomTag::VertexPair;
    e.degree = 0;
    e.circuit = Path::trivial(v);
    e.rep.add_int(f, AntiparallelPair{Path::trivial(v), Path::trivial(v)}, 1);
    return e;
}

HomBasisElement make_hcycle_complete(const Quiver& q, const FieldConfig& f, const Circuit& c) {
    HomBasisElement e;
    e.tag = HomTag::HCycleComplete;
    e.degree = c.length;
    e.circuit = c.representative;
    e.length = c.length;
    e.period = c.period;
    Path cur = c.representative;
    for (int i = 0; i < c.period; ++i) {
        long s = ((c.length + 1) * i) % 2 ? -1 : 1;
        e.rep.add_int(f, AntiparallelPair{Path::trivial(cur.source()), cur}, s);
        cur = cur.rot(q);
    }
    return e;
}

HomBasisElement make_lfact(const Quiver& q, const FieldConfig& f, const Circuit& c) {
    HomBasisElement e;
    e.tag = HomTag::LFactPair;
    e.degree = c.length - 1;
    e.circuit = c.representative;
    e.length = c.length;
    e.period = c.period;
    Path l1 = Path::of_arrow(q, c.representative.lfact1());
    e.rep.add_int(f, AntiparallelPair{l1, c.representative.lfact2(q)}, 1);
    return e;
}

HomBasisElement make_hcycle_cocomplete(const Quiver& q, const FieldConfig& f, const Circuit& c) {
    HomBasisElement e;
    e.tag = HomTag::HCycleCocomplete;
    e.degree = 1;
    e.circuit = c.representative;
    e.length = c.length;
    e.period = c.period;
    Path cur = c.representative;
    for (int i = 0; i < c.period; ++i) {
        Path r2 = Path::of_arrow(q, cur.rfact2());
        e.rep.add_int(f, AntiparallelPair{cur.rfact1(q), r2}, 1);
        cur = cur.rot(q);
    }
    return e;
}

HomBasisElement make_cocomplete_point(const FieldConfig& f, const Circuit& c) {
    HomBasisElement e;
    e.tag = HomTag::CocompletePoint;
    e.degree = 0;
    e.circuit = c.representative;
    e.length = c.length;
    e.period = c.period;
    e.rep.add_int(f, AntiparallelPair{c.representative, Path::trivial(c.representative.source())},
                  1);
    return e;
}

} // namespace

HHHomologyDegree hh_homology_basis(const GentlePresentation& p, int m, const FieldConfig& f,
                                   int bound) {
    const Quiver& q = p.quiver();
    HHHomologyDegree out;
    out.degree = m;
    bool fd = p.validation().admissible;

    if (m == 0) {
        for (VertexId v = 0; v < q.num_vertices(); ++v) out.elements.push_back(make_vertex(f, v));
        for (const Circuit& c : circuits(p, bound, CircuitKind::Cocomplete)) {
            auto e = make_cocomplete_point(f, c);
            e.family = "(C,s(C)) over cocomplete circuits";
            out.elements.push_back(std::move(e));
        }
        // complete circuits of length 1 are the loops a with a² ∈ I
        for (const Circuit& c : circuits(p, 1, CircuitKind::Complete))
            out.elements.push_back(make_lfact(q, f, c));
        out.truncated = !fd;
        return out;
    }
    if (m == 1) {
        for (const Circuit& c : circuits(p, bound, CircuitKind::Cocomplete)) {
            auto e = make_hcycle_cocomplete(q, f, c);
            e.family = "<<C>> over cocomplete circuits";
            out.elements.push_back(std::move(e));
        }
        out.truncated = !fd;
    }
    for (const Circuit& c : circuits(p, m, CircuitKind::Complete))
        if (c.length == m && sign_is_one(f, (m + 1) * c.period))
            out.elements.push_back(make_hcycle_complete(q, f, c));
    for (const Circuit& c : circuits(p, m + 1, CircuitKind::Complete))
        if (c.length == m + 1 && sign_is_one(f, m * c.period))
            out.elements.push_back(make_lfact(q, f, c));
    return out;
}

ConnesImage connes_B(const GentlePresentation& p, const FieldConfig& f, const HomBasisElement& u) {
    const Quiver& q = p.quiver();
    ConnesImage img;
    img.coefficient = Scalar::from_int(f, 0);
    if (u.tag == HomTag::VertexPair || u.tag == HomTag::HCycleComplete ||
        u.tag == HomTag::HCycleCocomplete)
        return img; // B vanishes
    Circuit c = make_circuit(p, u.circuit);
    long k = u.length / u.period; // m/r, an integer since the period divides the length
    Scalar coeff = Scalar::from_int(f, k);
    HomBasisElement target = u.tag == HomTag::LFactPair ? make_hcycle_complete(q, f, c)
                                                        : make_hcycle_cocomplete(q, f, c);
    img.chain.add_scaled(f, target.rep, coeff);
    if (!coeff.is_zero(f)) {
        img.coefficient = coeff;
        img.basis_elt = std::move(target);
    }
    return img;
}

std::vector<DeRhamDegree> de_rham(const GentlePresentation& p, const FieldConfig& f, int bound,
                                  int maxdeg) {
    const Quiver& q = p.quiver();
    std::vector<DeRhamDegree> out(maxdeg + 1);
    for (int d = 0; d <= maxdeg; ++d) out[d].degree = d;
    bool fd = p.validation().admissible;

    auto coeff_vanishes = [&](const Circuit& c) {
        long k = c.length / c.period;
        return Scalar::from_int(f, k).is_zero(f);
    };

    for (VertexId v = 0; v < q.num_vertices(); ++v) {
        out[0].h_dr.push_back(make_vertex(f, v));
        out[0].coker.push_back(make_vertex(f, v));
    }
    for (const Circuit& c : circuits(p, maxdeg + 1, CircuitKind::Complete)) {
        if (!sign_is_one(f, (c.length + 1) * c.period)) continue;
        bool zero = coeff_vanishes(c);
        if (c.length - 1 <= maxdeg) {
            if (zero) out[c.length - 1].h_dr.push_back(make_lfact(q, f, c));
            out[c.length - 1].coker.push_back(make_lfact(q, f, c));
        }
        if (c.length <= maxdeg && zero) {
            out[c.length].h_dr.push_back(make_hcycle_complete(q, f, c));
            out[c.length].coker.push_back(make_hcycle_complete(q, f, c));
        }
    }
    for (const Circuit& c : circuits(p, bound, CircuitKind::Cocomplete)) {
        bool zero = coeff_vanishes(c);
        if (zero) out[0].h_dr.push_back(make_cocomplete_point(f, c));
        out[0].coker.push_back(make_cocomplete_point(f, c));
        if (maxdeg >= 1) {
            if (zero) {
                out[1].h_dr.push_back(make_hcycle_cocomplete(q, f, c));
                out[1].coker.push_back(make_hcycle_cocomplete(q, f, c));
            }
        }
    }
    if (!fd) {
        out[0].truncated = true;
        if (maxdeg >= 1) out[1].truncated = true;
    }
    return out;
}

CyclicDegree cyclic_homology(const GentlePresentation& p, const FieldConfig& f, int bound, int m) {
    auto dr = de_rham(p, f, bound, m);
    CyclicDegree out;
    out.degree = m;
    out.truncated = dr[m].truncated;
    int coker_dim = static_cast<int>(dr[m].coker.size());
    out.summands.push_back({"coker B", coker_dim});
    out.dimension = coker_dim;
    for (int j = m - 2; j >= 0; j -= 2) {
        int d = static_cast<int>(dr[j].h_dr.size());
        out.summands.push_back({"H_dR^" + std::to_string(j), d});
        out.dimension += d;
        out.truncated = out.truncated || dr[j].truncated;
    }
    return out;
}

} // namespace gentle
