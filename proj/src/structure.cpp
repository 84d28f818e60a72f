#include "gentle/structure.hpp"

#include <algorithm>
#include <sstream>

namespace gentle {

Calculus::Calculus(const GentlePresentation& p, const FieldConfig& f, const SpanningTree& tree,
                   int bound)
    : p_(&p), f_(f), tree_(tree), sets_(enumerate_sets(p, bound)),
      reps_(representative_system(p)), maximal_(maximal_paths(p)), cbasis_(p, sets_),
      hbasis_(p, sets_) {}

const HHDegree& Calculus::hh(int m) const {
    auto it = hh_.find(m);
    if (it == hh_.end())
        it = hh_.emplace(m, hh_basis(*p_, m, tree_, f_, reps_, maximal_, sets_)).first;
    return it->second;
}

const HHHomologyDegree& Calculus::hh_homology(int m) const {
    auto it = hom_.find(m);
    if (it == hom_.end()) it = hom_.emplace(m, hh_homology_basis(*p_, m, f_, sets_.bound)).first;
    return it->second;
}

void Calculus::ensure_coh_reducer(int degree) const {
    if (coh_red_.count(degree)) return;
    Eliminator e(f_);
    int ncols = 0;
    if (degree >= 1 && degree - 1 <= cbasis_.max_degree() && degree <= cbasis_.max_degree()) {
        for (const auto& col : cochain_d_matrix(*p_, f_, cbasis_, degree - 1)) {
            e.insert(col);
            ++ncols;
        }
    }
    coh_red_offset_[degree] = ncols;
    for (const CohBasisElement& b : hh(degree).elements) {
        auto dep = e.insert(cbasis_.to_vec(f_, b.rep, degree));
        if (dep)
            throw std::logic_error("closed-form cohomology basis element is not independent "
                                   "modulo coboundaries (degree " +
                                   std::to_string(degree) + ")");
    }
    coh_red_.emplace(degree, std::move(e));
}

void Calculus::ensure_hom_reducer(int degree) const {
    if (hom_red_.count(degree)) return;
    Eliminator e(f_);
    int ncols = 0;
    if (degree + 1 <= hbasis_.max_degree()) {
        for (const auto& col : chain_d_matrix(*p_, f_, hbasis_, degree + 1)) {
            e.insert(col);
            ++ncols;
        }
    }
    hom_red_offset_[degree] = ncols;
    for (const HomBasisElement& b : hh_homology(degree).elements) {
        auto dep = e.insert(hbasis_.to_vec(f_, b.rep, degree));
        if (dep)
            throw std::logic_error("closed-form homology basis element is not independent "
                                   "modulo boundaries (degree " +
                                   std::to_string(degree) + ")");
    }
    hom_red_.emplace(degree, std::move(e));
}

Calculus::CohClass Calculus::reduce_cocycle(const CochainCombo& u, int degree) const {
    CohClass out;
    if (u.empty()) return out;
    ensure_coh_reducer(degree);
    SparseVec v = cbasis_.to_vec(f_, u, degree);
    auto expr = coh_red_.at(degree).solve(v);
    if (!expr)
        throw std::logic_error("cocycle class not expressible in the closed-form basis; "
                               "either the input is not a cocycle or the bound is too small");
    int offset = coh_red_offset_.at(degree);
    const auto& elems = hh(degree).elements;
    for (const auto& [idx, c] : *expr)
        if (idx >= offset) out.terms.push_back({c, &elems[idx - offset]});
    return out;
}

Calculus::HomClass Calculus::reduce_cycle(const ChainCombo& u, int degree) const {
    HomClass out;
    if (u.empty()) return out;
    ensure_hom_reducer(degree);
    SparseVec v = hbasis_.to_vec(f_, u, degree);
    auto expr = hom_red_.at(degree).solve(v);
    if (!expr)
        throw std::logic_error("cycle class not expressible in the closed-form basis; "
                               "either the input is not a cycle or the bound is too small");
    int offset = hom_red_offset_.at(degree);
    const auto& elems = hh_homology(degree).elements;
    for (const auto& [idx, c] : *expr)
        if (idx >= offset) out.terms.push_back({c, &elems[idx - offset]});
    return out;
}

std::string Calculus::str(const CohClass& c) const {
    if (c.terms.empty()) return "0";
    std::string s;
    for (const auto& [coef, el] : c.terms) {
        if (!s.empty()) s += " + ";
        s += coef.str(f_) + "*" + el->payload_str(p_->quiver());
    }
    return s;
}

std::string Calculus::str(const HomClass& c) const {
    if (c.terms.empty()) return "0";
    std::string s;
    for (const auto& [coef, el] : c.terms) {
        if (!s.empty()) s += " + ";
        s += coef.str(f_) + "*" + el->payload_str(p_->quiver());
    }
    return s;
}

// ---------------------------------------------------------------------------
// cup

CochainCombo cup(const GentlePresentation& p, const FieldConfig& f, const ParallelPair& u,
                 const ParallelPair& v) {
    const Quiver& q = p.quiver();
    CochainCombo out;
    if (u.gamma.source() != v.gamma.target(q)) return out;
    Path gg = u.gamma.compose_after(q, v.gamma);
    if (!p.in_Gamma(gg)) return out;
    Path aa = u.alpha.compose_after(q, v.alpha);
    if (!p.in_B(aa)) return out;
    out.add_int(f, ParallelPair{gg, aa}, 1);
    return out;
}

CochainCombo cup(const GentlePresentation& p, const FieldConfig& f, const CochainCombo& u,
                 const CochainCombo& v) {
    CochainCombo out;
    for (const auto& [up, uc] : u.terms())
        for (const auto& [vp, vc] : v.terms()) out.add_scaled(f, cup(p, f, up, vp), mul(f, uc, vc));
    return out;
}

Calculus::CohClass cup_class(const Calculus& c, const CohBasisElement& u,
                             const CohBasisElement& v) {
    CochainCombo w = cup(c.presentation(), c.field(), u.rep, v.rep);
    return c.reduce_cocycle(w, u.degree + v.degree);
}

// ---------------------------------------------------------------------------
// cap

ChainCombo cap(const GentlePresentation& p, const FieldConfig& f, const AntiparallelPair& u,
               const ParallelPair& v) {
    const Quiver& q = p.quiver();
    ChainCombo out;
    int pd = u.degree(), qd = v.degree();
    if (qd > pd) return out;
    // x = y z with y the left (last applied) factor of x
    Path z = u.gamma.subpath(q, 0, pd - qd);
    Path y = u.gamma.subpath(q, pd - qd, qd);
    if (y != v.gamma) return out;
    Path ab = u.alpha.compose_after(q, v.alpha);
    if (!p.in_B(ab)) return out;
    long sign = ((pd + qd) * qd) % 2 ? -1 : 1;
    out.add_int(f, AntiparallelPair{ab, z}, sign);
    return out;
}

ChainCombo cap(const GentlePresentation& p, const FieldConfig& f, const ChainCombo& u,
               const CochainCombo& v) {
    ChainCombo out;
    for (const auto& [up, uc] : u.terms())
        for (const auto& [vp, vc] : v.terms()) out.add_scaled(f, cap(p, f, up, vp), mul(f, uc, vc));
    return out;
}

Calculus::HomClass cap_class(const Calculus& c, const HomBasisElement& u,
                             const CohBasisElement& v) {
    Calculus::HomClass zero;
    if (u.degree < v.degree) return zero;
    ChainCombo w = cap(c.presentation(), c.field(), u.rep, v.rep);
    return c.reduce_cycle(w, u.degree - v.degree);
}

// ---------------------------------------------------------------------------
// φ homotopy and the induced circle composition

namespace {

// product of two B-paths in A: the concatenation if it stays in B, else zero
std::optional<Path> mul_B(const GentlePresentation& p, const Path& left, const Path& right) {
    if (right.target(p.quiver()) != left.source()) return std::nullopt;
    Path r = left.compose_after(p.quiver(), right);
    if (!p.in_B(r)) return std::nullopt;
    return r;
}

} // namespace

RCombo phi_homotopy(const GentlePresentation& p, const FieldConfig& f, const RRTensor& t) {
    const Quiver& q = p.quiver();
    RCombo out;
    int m = t.a.length(), n = t.c.length(), r = t.b.length();
    if (m == 0 && n == 0) {
        // Σ_i u·b_{>i} ⊗ b_i ⊗ b_{<i}·v
        for (int i = 1; i <= r; ++i) {
            Path suffix = t.b.subpath(q, i, r - i);   // b_r ... b_{i+1}
            Path prefix = t.b.subpath(q, 0, i - 1);   // b_{i-1} ... b_1
            auto left = mul_B(p, t.u, suffix);
            if (!left) continue;
            auto right = mul_B(p, prefix, t.v);
            if (!right) continue;
            Path mid = t.b.subpath(q, i - 1, 1); // b_i
            out.add_int(f, RTensor{*left, mid, *right}, 1);
        }
        return out;
    }
    if (m > 0 && n == 0 && r >= 1 && p.in_relations(t.b.last_arrow(), t.a.first_arrow())) {
        // (−1)^m u ⊗ a b_r ⊗ b_{<r} v
        Path abr = t.a.compose_after(q, t.b.subpath(q, r - 1, 1));
        auto right = mul_B(p, t.b.subpath(q, 0, r - 1), t.v);
        if (right) out.add_int(f, RTensor{t.u, abr, *right}, m % 2 ? -1 : 1);
        return out;
    }
    if (m == 0 && n > 0 && r >= 1 && p.in_relations(t.c.last_arrow(), t.b.first_arrow())) {
        // u b_r ... b_2 ⊗ b_1 c ⊗ v
        auto left = mul_B(p, t.u, t.b.subpath(q, 1, r - 1));
        if (left) {
            Path b1c = t.b.subpath(q, 0, 1).compose_after(q, t.c);
            out.add_int(f, RTensor{*left, b1c, t.v}, 1);
        }
        return out;
    }
    if (m > 0 && n > 0 && r == 1 && p.in_relations(t.b.first_arrow(), t.a.first_arrow()) &&
        p.in_relations(t.c.last_arrow(), t.b.first_arrow())) {
        // (−1)^m u ⊗ abc ⊗ v
        Path abc = t.a.compose_after(q, t.b).compose_after(q, t.c);
        out.add_int(f, RTensor{t.u, abc, t.v}, m % 2 ? -1 : 1);
        return out;
    }
    return out;
}

RCombo d_R(const GentlePresentation& p, const FieldConfig& f, const RTensor& t) {
    const Quiver& q = p.quiver();
    RCombo out;
    int m = t.g.length();
    if (m == 0) return out;
    // (u·g_m) ⊗ g_{m-1..1} ⊗ v  +  (−1)^m u ⊗ g_{m..2} ⊗ (g_1·v)
    if (auto left = mul_B(p, t.u, t.g.subpath(q, m - 1, 1)))
        out.add_int(f, RTensor{*left, t.g.lfact2(q), t.v}, 1);
    if (auto right = mul_B(p, t.g.subpath(q, 0, 1), t.v))
        out.add_int(f, RTensor{t.u, t.g.rfact1(q), *right}, m % 2 ? -1 : 1);
    return out;
}

RRCombo d_RR(const GentlePresentation& p, const FieldConfig& f, const RRTensor& t) {
    const Quiver& q = p.quiver();
    RRCombo out;
    int m = t.a.length(), n = t.c.length();
    if (m >= 1) { // d(x) ⊗ y
        if (auto left = mul_B(p, t.u, t.a.subpath(q, m - 1, 1)))
            out.add_int(f, RRTensor{*left, t.a.lfact2(q), t.b, t.c, t.v}, 1);
        if (auto mid = mul_B(p, t.a.subpath(q, 0, 1), t.b))
            out.add_int(f, RRTensor{t.u, t.a.rfact1(q), *mid, t.c, t.v}, m % 2 ? -1 : 1);
    }
    if (n >= 1) { // (−1)^m x ⊗ d(y); the c_n term crosses the ⊗_A
        long sm = m % 2 ? -1 : 1;
        if (auto mid = mul_B(p, t.b, t.c.subpath(q, n - 1, 1)))
            out.add_int(f, RRTensor{t.u, t.a, *mid, t.c.lfact2(q), t.v}, sm);
        if (auto right = mul_B(p, t.c.subpath(q, 0, 1), t.v))
            out.add_int(f, RRTensor{t.u, t.a, t.b, t.c.rfact1(q), *right},
                        sm * (n % 2 ? -1 : 1));
    }
    return out;
}

RCombo F_map(const GentlePresentation& p, const FieldConfig& f, const RRTensor& t) {
    RCombo out;
    if (t.a.length() == 0) {
        if (auto w = mul_B(p, t.u, t.b)) out.add_int(f, RTensor{*w, t.c, t.v}, 1);
    }
    if (t.c.length() == 0) {
        if (auto w = mul_B(p, t.b, t.v)) out.add_int(f, RTensor{t.u, t.a, *w}, -1);
    }
    return out;
}

CochainCombo circ_phi(const GentlePresentation& p, const FieldConfig& f, const CochainCombo& fc,
                      int fdeg, const CochainCombo& gc, int gdeg, const PathSets& sets) {
    const Quiver& q = p.quiver();
    CochainCombo out;
    int target = fdeg + gdeg - 1;
    if (target < 0 || target >= static_cast<int>(sets.Gamma.size())) return out;
    for (const Path& eta : sets.Gamma[target]) {
        // evaluate (f ∘_φ g)(1 ⊗ η ⊗ 1)
        std::map<Path, Scalar> value; // element of A in the B basis
        for (const auto& [gpair, gcoef] : gc.terms()) {
            const Path& delta = gpair.gamma;
            int n = delta.length();
            for (int pre = 0; pre + n <= eta.length(); ++pre) {
                if (eta.subpath(q, pre, n) != delta) continue;
                Path eta3 = eta.subpath(q, 0, pre); // applied first
                Path eta1 = eta.subpath(q, pre + n, eta.length() - pre - n);
                long sign = (n * eta1.length()) % 2 ? -1 : 1;
                RRTensor t{Path::trivial(eta1.target(q)), eta1, gpair.alpha, eta3,
                           Path::trivial(eta3.source())};
                RCombo mid = phi_homotopy(p, f, t);
                for (const auto& [rt, rc] : mid.terms()) {
                    for (const auto& [fpair, fcoef] : fc.terms()) {
                        if (rt.g != fpair.gamma) continue;
                        auto val = mul_B(p, rt.u, fpair.alpha);
                        if (!val) continue;
                        val = mul_B(p, *val, rt.v);
                        if (!val) continue;
                        Scalar coef = mul(f, mul(f, gcoef, fcoef), rc);
                        coef = mul(f, coef, Scalar::from_int(f, sign));
                        value[*val] = value.count(*val) ? add(f, value[*val], coef) : coef;
                    }
                }
            }
        }
        for (const auto& [path, coef] : value)
            out.add(f, ParallelPair{eta, path}, coef);
    }
    return out;
}

CochainCombo bracket_phi(const GentlePresentation& p, const FieldConfig& f, const CochainCombo& fc,
                         int fdeg, const CochainCombo& gc, int gdeg, const PathSets& sets) {
    CochainCombo out = circ_phi(p, f, fc, fdeg, gc, gdeg, sets);
    CochainCombo other = circ_phi(p, f, gc, gdeg, fc, fdeg, sets);
    long s = ((fdeg - 1) * (gdeg - 1)) % 2 ? 1 : -1;
    out.add_scaled(f, other, Scalar::from_int(f, s));
    return out;
}

// ---------------------------------------------------------------------------
// brackets

CochainCombo bracket_with_fundamental(const GentlePresentation&, const FieldConfig& f, ArrowId c,
                                      const CochainCombo& v) {
    CochainCombo out;
    for (const auto& [pair, coef] : v.terms()) {
        long deg = pair.alpha.count_arrow(c) - pair.gamma.count_arrow(c);
        out.add(f, pair, mul(f, coef, Scalar::from_int(f, deg)));
    }
    return out;
}

Derivation derivation_of(const FieldConfig& f, const CochainCombo& u) {
    Derivation d;
    for (const auto& [pair, coef] : u.terms()) {
        if (pair.degree() != 1)
            throw std::invalid_argument("derivation_of needs a degree-1 cochain");
        auto& combo = d[pair.gamma.first_arrow()];
        auto it = combo.find(pair.alpha);
        if (it == combo.end()) combo.emplace(pair.alpha, coef);
        else {
            it->second = add(f, it->second, coef);
            if (it->second.is_zero(f)) combo.erase(it);
        }
    }
    return d;
}

PathCombo apply_derivation(const GentlePresentation& p, const FieldConfig& f, const Derivation& D,
                           const Path& path) {
    const Quiver& q = p.quiver();
    PathCombo out;
    for (int j = 0; j < path.length(); ++j) {
        auto it = D.find(path.arrows()[j]);
        if (it == D.end()) continue;
        Path prefix = path.subpath(q, 0, j);
        Path suffix = path.subpath(q, j + 1, path.length() - j - 1);
        for (const auto& [repl, coef] : it->second) {
            auto mid = mul_B(p, repl, prefix);
            if (!mid) continue;
            auto whole = mul_B(p, suffix, *mid);
            if (!whole) continue;
            auto jt = out.find(*whole);
            if (jt == out.end()) out.emplace(*whole, coef);
            else {
                jt->second = add(f, jt->second, coef);
                if (jt->second.is_zero(f)) out.erase(jt);
            }
        }
    }
    return out;
}

namespace {

// commutator of two derivations, as a 1-cochain
CochainCombo derivation_commutator(const GentlePresentation& p, const FieldConfig& f,
                                   const Derivation& du, const Derivation& dv) {
    const Quiver& q = p.quiver();
    CochainCombo out;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        Path ap = Path::of_arrow(q, a);
        auto term = [&](const Derivation& first, const Derivation& second, long sign) {
            auto it = second.find(a);
            if (it == second.end()) return;
            for (const auto& [mid, c1] : it->second) {
                PathCombo res = apply_derivation(p, f, first, mid);
                for (const auto& [path, c2] : res)
                    out.add(f, ParallelPair{ap, path},
                            mul(f, mul(f, c1, c2), Scalar::from_int(f, sign)));
            }
        };
        term(du, dv, 1);  // D_u(D_v(a))
        term(dv, du, -1); // −D_v(D_u(a))
    }
    return out;
}

// degree-1 element acting on a degree-0 class: D_u applied to the central
// element, re-expressed as degree-0 pairs
CochainCombo derivation_on_center(const GentlePresentation& p, const FieldConfig& f,
                                  const Derivation& du, const CochainCombo& v) {
    CochainCombo out;
    for (const auto& [pair, coef] : v.terms()) {
        PathCombo res = apply_derivation(p, f, du, pair.alpha);
        for (const auto& [path, c2] : res)
            out.add(f, ParallelPair{Path::trivial(path.source()), path}, mul(f, coef, c2));
    }
    return out;
}

// [u, v] for u of degree 1 given by the pair (c, α), applied to a term
// (δ, β) of degree != 1: (δ, β^{c,α}) with β^{c,α} the derivation action
CochainCombo msa_bracket(const GentlePresentation& p, const FieldConfig& f, const Derivation& du,
                         const CochainCombo& v) {
    CochainCombo out;
    for (const auto& [pair, coef] : v.terms()) {
        PathCombo res = apply_derivation(p, f, du, pair.alpha);
        for (const auto& [path, c2] : res)
            out.add(f, ParallelPair{pair.gamma, path}, mul(f, coef, c2));
    }
    return out;
}

} // namespace

Calculus::CohClass bracket_class(const Calculus& c, const CohBasisElement& u,
                                 const CohBasisElement& v) {
    const GentlePresentation& p = c.presentation();
    const FieldConfig& f = c.field();
    Calculus::CohClass zero;

    auto negate = [&](Calculus::CohClass r, long extra_sign) {
        for (auto& [coef, el] : r.terms)
            coef = mul(f, coef, Scalar::from_int(f, extra_sign));
        return r;
    };
    // antisymmetry: [u,v] = −(−1)^{(|u|−1)(|v|−1)} [v,u]
    long antisign = ((u.degree - 1) * (v.degree - 1)) % 2 ? 1 : -1;

    if (u.tag == CohTag::Fundamental) {
        ArrowId arrow = u.path1.first_arrow();
        CochainCombo w = bracket_with_fundamental(p, f, arrow, v.rep);
        return c.reduce_cocycle(w, v.degree);
    }
    if (v.tag == CohTag::Fundamental) return negate(bracket_class(c, v, u), antisign);

    if (u.degree == 1 && v.degree == 1) {
        Derivation du = derivation_of(f, u.rep), dv = derivation_of(f, v.rep);
        CochainCombo w = derivation_commutator(p, f, du, dv);
        return c.reduce_cocycle(w, 1);
    }
    if (u.degree == 1 && v.degree == 0) {
        Derivation du = derivation_of(f, u.rep);
        return c.reduce_cocycle(derivation_on_center(p, f, du, v.rep), 0);
    }
    if (v.degree == 1 && u.degree == 0) return negate(bracket_class(c, v, u), antisign);

    if (u.degree == 1) { // v of degree >= 2
        if (u.tag != CohTag::GammaMaxPair && u.tag != CohTag::CycleGamma)
            throw std::invalid_argument(
                "bracket_class: unsupported degree-1 element against higher degrees");
        Derivation du = derivation_of(f, u.rep);
        return c.reduce_cocycle(msa_bracket(p, f, du, v.rep), v.degree);
    }
    if (v.degree == 1) return negate(bracket_class(c, v, u), antisign);

    // both degrees different from 1: brackets of generators vanish
    return zero;
}

// ---------------------------------------------------------------------------
// generating set, algebra presentation

GeneratorSet generator_set(const Calculus& c) {
    const GentlePresentation& p = c.presentation();
    const Quiver& q = p.quiver();
    const FieldConfig& f = c.field();
    GeneratorSet g;
    g.truncated = false;

    const HHDegree& h0 = c.hh(0);
    for (const CohBasisElement& e : h0.elements)
        if (e.tag == CohTag::BMaxPair) g.generators.push_back(e);
    // primitive cocomplete cycles only
    for (const CohBasisElement& e : h0.elements)
        if (e.tag == CohTag::CycleB &&
            cycle_period(q, e.path1) == e.path1.length())
            g.generators.push_back(e);
    for (const CohBasisElement& e : c.hh(1).elements)
        if (e.tag == CohTag::Fundamental) {
            g.generators.push_back(e);
            g.f_subset.push_back(e);
        }
    // Γ-maximal pairs, all degrees
    for (const Path& gm : c.maximal().Gamma_maximal) {
        const HHDegree& lvl = c.hh(gm.length());
        for (const CohBasisElement& e : lvl.elements)
            if (e.tag == CohTag::GammaMaxPair && e.path1 == gm) g.generators.push_back(e);
        g.truncated = g.truncated || lvl.truncated;
    }
    // ⟨C⟩ over Crepprim(Γ)
    for (const Path& C : c.reps().crepprim_Gamma(f)) {
        if (C.length() > c.bound()) { g.truncated = true; continue; }
        for (const CohBasisElement& e : c.hh(C.length()).elements)
            if (e.tag == CohTag::CycleGamma && e.path1 == C) g.generators.push_back(e);
    }

    // minimal except for the one-loop exceptions
    bool one_loop = q.num_vertices() == 1 && q.num_arrows() == 1;
    if (one_loop) {
        bool has_rel = !p.relations().empty();
        if (!has_rel || f.characteristic() == 2) g.minimal = false;
    }
    return g;
}

namespace {

bool passes_through(const Path& cycle, ArrowId a) { return cycle.count_arrow(a) > 0; }

} // namespace

PresentationOfHH hh_algebra_presentation(const Calculus& c) {
    const GentlePresentation& p = c.presentation();
    const Quiver& q = p.quiver();
    const FieldConfig& f = c.field();
    PresentationOfHH out;
    out.generators = generator_set(c);
    out.star_satisfiable = c.tree().star_satisfiable;
    out.quadratic_monomial = out.star_satisfiable.value_or(false);

    bool one_loop = q.num_vertices() == 1 && q.num_arrows() == 1;
    if (one_loop && !p.relations().empty() && f.characteristic() == 2) {
        out.exceptional_free = true;
        out.note = "free graded-commutative on (s(a), a) and (a, s(a)) "
                   "subject only to (s(a), a)^2 = 0";
        out.relations.push_back({"monomial", "(s(a), a) ~ (s(a), a) = 0"});
        return out;
    }

    const auto& gens = out.generators.generators;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j) {
            const CohBasisElement& u = gens[i];
            const CohBasisElement& v = gens[j];
            bool survival = false;
            if (i == j && (u.tag == CohTag::CycleGamma || u.tag == CohTag::CycleB)) survival = true;
            auto cycle_fundamental = [&](const CohBasisElement& x, const CohBasisElement& y) {
                return (x.tag == CohTag::CycleGamma || x.tag == CohTag::CycleB) &&
                       y.tag == CohTag::Fundamental &&
                       passes_through(x.path1, y.path1.first_arrow());
            };
            if (cycle_fundamental(u, v) || cycle_fundamental(v, u)) survival = true;
            if (survival) continue;
            if (i == j && u.degree % 2 == 1 && f.characteristic() != 2)
                continue; // odd squares already vanish in the free algebra
            out.relations.push_back(
                {"monomial", u.payload_str(q) + " ~ " + v.payload_str(q) + " = 0"});
        }

    auto equalizers = [&](const std::vector<Path>& prims) {
        for (const Path& C : prims) {
            std::vector<ArrowId> on;
            for (ArrowId a : c.tree().complement)
                if (passes_through(C, a)) on.push_back(a);
            for (size_t i = 0; i < on.size(); ++i)
                for (size_t j = i + 1; j < on.size(); ++j) {
                    std::string ci = q.arrow_name(on[i]), cj = q.arrow_name(on[j]);
                    out.relations.push_back({"equalizer", "(" + ci + ", " + ci + ") ~ <" +
                                                              C.str(q) + "> - (" + cj + ", " + cj +
                                                              ") ~ <" + C.str(q) + "> = 0"});
                }
        }
    };
    equalizers(c.reps().crepprim_Gamma(f));
    equalizers(c.reps().crepprim_B);
    return out;
}

// ---------------------------------------------------------------------------
// Lie decomposition

LieDecomposition lie_decomposition(const Calculus& c) {
    const GentlePresentation& p = c.presentation();
    const Quiver& q = p.quiver();
    const FieldConfig& f = c.field();
    LieDecomposition out;

    // φ(1,1) = dim [HH^1, HH^1] from the full bracket table of the degree-1 basis
    const HHDegree& h1 = c.hh(1);
    out.dim_hh1 = h1.dimension();
    {
        Eliminator span(f);
        int rank = 0;
        for (size_t i = 0; i < h1.elements.size(); ++i)
            for (size_t j = i + 1; j < h1.elements.size(); ++j) {
                auto br = bracket_class(c, h1.elements[i], h1.elements[j]);
                SparseVec v;
                for (const auto& [coef, el] : br.terms)
                    v[static_cast<int>(el - h1.elements.data())] = coef;
                if (!v.empty() && !span.insert(v)) ++rank;
            }
        out.phi_11 = rank;
    }
    for (const CohBasisElement& e : h1.elements)
        if (e.tag == CohTag::CycleGamma) ++out.phi_01; // (b, s(b)) classes, char 2
    if (f.characteristic() == 2) out.phi_11 -= out.phi_01;
    if (p.is_fd()) {
        int expected = 1 - q.num_vertices() + q.num_arrows() + out.phi_11 +
                       (f.characteristic() == 2 ? out.phi_01 : 0);
        out.dim_identity = (out.dim_hh1 == expected);
    }

    bool one_loop = q.num_vertices() == 1 && q.num_arrows() == 1;
    bool kronecker = q.num_vertices() == 2 && q.num_arrows() == 2 &&
                     q.source(0) == q.source(1) && q.target(0) == q.target(1) &&
                     q.source(0) != q.target(0);
    if (one_loop || kronecker) {
        out.applicable = false;
        out.reason = one_loop ? "the quiver is a single loop" : "the quiver is the Kronecker quiver";
        return out;
    }
    if (!c.tree().star_holds_for_tree) {
        out.applicable = false;
        out.reason = "the chosen spanning tree does not satisfy the (*) condition";
        return out;
    }
    out.applicable = true;

    auto complete = c.reps().crepprim_Gamma_circ;
    auto cocomplete = c.reps().crepprim_B;
    GeneratorSet gens = generator_set(c);
    for (ArrowId a : c.tree().complement) {
        LieBlock blk;
        blk.complement_arrow = a;
        std::string an = q.arrow_name(a);
        auto on_prim = [&](const std::vector<Path>& prims) -> const Path* {
            for (const Path& C : prims)
                if (passes_through(C, a)) return &C;
            return nullptr;
        };
        if (const Path* C = on_prim(complete)) {
            blk.family = 2;
            blk.description = "<(" + an + "," + an + ")> |x <(a C^k, a)> |x <<C^k>>, C = " +
                              C->str(q);
        } else if (const Path* al = on_prim(cocomplete)) {
            blk.family = 3;
            blk.description = "<(" + an + "," + an + ")> |x <(a, a alpha^k)> |x <<alpha^k>>, "
                              "alpha = " + al->str(q);
        } else {
            // look for a Γ-maximal or B-maximal generator whose closed walk
            // uses this arrow
            const CohBasisElement* carrier = nullptr;
            for (const CohBasisElement& e : gens.generators) {
                if (e.tag == CohTag::GammaMaxPair &&
                    (passes_through(e.path1, a) || passes_through(e.path2, a))) {
                    carrier = &e;
                    break;
                }
                if (e.tag == CohTag::BMaxPair && passes_through(e.path1, a)) {
                    carrier = &e;
                    break;
                }
            }
            if (carrier) {
                blk.family = 1;
                blk.description = "<(" + an + "," + an + ")> |x <" +
                                  carrier->payload_str(q) + ">";
            } else {
                blk.family = 4;
                blk.description = "abelian <(" + an + "," + an + ")>";
            }
        }
        out.blocks.push_back(std::move(blk));
    }
    return out;
}

// ---------------------------------------------------------------------------
// derived invariants

DerivedInvariants derived_invariants(const Calculus& c, int maxdeg) {
    const GentlePresentation& p = c.presentation();
    const FieldConfig& f = c.field();
    DerivedInvariants out;
    out.n_cocomplete_primitive = static_cast<int>(c.reps().crepprim_B.size());

    // T(A) = rad/rad²: B-maximal cycle pairs (degree 0), tree-complement
    // (c,c) (degree 1), Γ-maximal pairs, ⟨C⟩ over Crepprim(Γ); plus the
    // (c, c δ^k) family when the algebra is infinite-dimensional
    bool fd = p.is_fd();
    std::map<int, int> dims;
    const HHDegree& h0 = c.hh(0);
    for (const CohBasisElement& e : h0.elements)
        if (e.tag == CohTag::BMaxPair) ++dims[0];
    dims[1] += static_cast<int>(c.tree().complement.size());
    int tmax = maxdeg;
    for (const Path& gm : c.maximal().Gamma_maximal) tmax = std::max(tmax, gm.length());
    for (const Path& C : c.reps().crepprim_Gamma(f)) tmax = std::max(tmax, C.length());
    for (int m = 1; m <= tmax; ++m) {
        for (const CohBasisElement& e : c.hh(m).elements) {
            if (e.tag == CohTag::GammaMaxPair) ++dims[m];
            if (e.tag == CohTag::CycleGamma && e.path1.length() == m) {
                // primitive members of Crep(Γ) only
                const auto& prims = c.reps().crepprim_Gamma(f);
                if (std::find(prims.begin(), prims.end(), e.path1) != prims.end()) ++dims[m];
            }
            if (!fd && e.tag == CohTag::BPlusPair) {
                ++dims[1];
                out.hilbert_truncated = true;
            }
        }
        out.hilbert_truncated = out.hilbert_truncated || c.hh(m).truncated;
    }
    for (const auto& [deg, dim] : dims)
        if (dim > 0) out.hilbert_T.push_back({deg, dim});
    for (int m = 0; m <= maxdeg; ++m) out.hh_dims.push_back({m, c.hh(m).dimension()});
    out.phi_11 = lie_decomposition(c).phi_11;
    return out;
}

} // namespace gentle
