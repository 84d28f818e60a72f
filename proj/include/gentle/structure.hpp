#pragma once

#include "gentle/cohomology.hpp"
#include "gentle/homology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gentle {

// Bundles everything the products need: enumerated sets, materialized
// complex bases, the closed-form bases per degree, and eliminators that
// express cocycles/cycles in those bases modulo (co)boundaries.
class Calculus {
public:
    Calculus(const GentlePresentation& p, const FieldConfig& f, const SpanningTree& tree,
             int bound);

    const GentlePresentation& presentation() const { return *p_; }
    const FieldConfig& field() const { return f_; }
    const SpanningTree& tree() const { return tree_; }
    const PathSets& sets() const { return sets_; }
    const RepSystem& reps() const { return reps_; }
    const MaximalPaths& maximal() const { return maximal_; }
    const CochainBasis& cochain_basis() const { return cbasis_; }
    const ChainBasis& chain_basis() const { return hbasis_; }
    int bound() const { return sets_.bound; }

    const HHDegree& hh(int m) const;                 // closed-form HH^m
    const HHHomologyDegree& hh_homology(int m) const; // closed-form HH_m

    // a class in the closed-form basis: list of (coefficient, element)
    template <class Elem>
    struct ClassExpr {
        std::vector<std::pair<Scalar, const Elem*>> terms;
        bool zero() const { return terms.empty(); }
    };
    using CohClass = ClassExpr<CohBasisElement>;
    using HomClass = ClassExpr<HomBasisElement>;

    // express a cocycle / cycle in the closed-form basis modulo boundaries;
    // throws if the class falls outside the materialized window
    CohClass reduce_cocycle(const CochainCombo& u, int degree) const;
    HomClass reduce_cycle(const ChainCombo& u, int degree) const;

    std::string str(const CohClass& c) const;
    std::string str(const HomClass& c) const;

private:
    const GentlePresentation* p_;
    FieldConfig f_;
    SpanningTree tree_;
    PathSets sets_;
    RepSystem reps_;
    MaximalPaths maximal_;
    CochainBasis cbasis_;
    ChainBasis hbasis_;
    mutable std::map<int, HHDegree> hh_;
    mutable std::map<int, HHHomologyDegree> hom_;
    mutable std::map<int, Eliminator> coh_red_;  // degree -> [im d | basis reps]
    mutable std::map<int, int> coh_red_offset_;  // index of the first basis column
    mutable std::map<int, Eliminator> hom_red_;
    mutable std::map<int, int> hom_red_offset_;
    void ensure_coh_reducer(int degree) const;
    void ensure_hom_reducer(int degree) const;
};

// chain-level cup product:
// (γ,α)·(γ',α') = (γγ', αα') when γγ' ∈ Γ and αα' ∈ B, else 0
CochainCombo cup(const GentlePresentation& p, const FieldConfig& f, const ParallelPair& u,
                 const ParallelPair& v);
CochainCombo cup(const GentlePresentation& p, const FieldConfig& f, const CochainCombo& u,
                 const CochainCombo& v);

// class-level cup product of two basis elements (0 or ± one basis element)
Calculus::CohClass cup_class(const Calculus& c, const CohBasisElement& u,
                             const CohBasisElement& v);

// chain-level cap product:
// (a,x) ⌢ (y,b) = (−1)^{(p+q)q} (ab, z) when x = yz and ab ∈ B, else 0
ChainCombo cap(const GentlePresentation& p, const FieldConfig& f, const AntiparallelPair& u,
               const ParallelPair& v);
ChainCombo cap(const GentlePresentation& p, const FieldConfig& f, const ChainCombo& u,
               const CochainCombo& v);

// class-level cap product of a homology and a cohomology basis element
Calculus::HomClass cap_class(const Calculus& c, const HomBasisElement& u,
                             const CohBasisElement& v);

// ---------------------------------------------------------------------------
// Bardzell resolution tensors and the degree +1 homotopy φ

// u ⊗ g ⊗ v with u, v ∈ B and g ∈ Γ
struct RTensor {
    Path u, g, v;
    friend auto operator<=>(const RTensor&, const RTensor&) = default;
};
// (u ⊗ a ⊗ b) ⊗_A (1 ⊗ c ⊗ v) with u, b, v ∈ B and a, c ∈ Γ
struct RRTensor {
    Path u, a, b, c, v;
    friend auto operator<=>(const RRTensor&, const RRTensor&) = default;
};

using RCombo = Combo<RTensor>;
using RRCombo = Combo<RRTensor>;

// the homotopy with F = φ∘d + d∘φ for F = μ⊗id − id⊗μ
RCombo phi_homotopy(const GentlePresentation& p, const FieldConfig& f, const RRTensor& t);
// Bardzell differential on R and the induced differential on R ⊗_A R
RCombo d_R(const GentlePresentation& p, const FieldConfig& f, const RTensor& t);
RRCombo d_RR(const GentlePresentation& p, const FieldConfig& f, const RRTensor& t);
RCombo F_map(const GentlePresentation& p, const FieldConfig& f, const RRTensor& t);

// f ∘_φ g on cochain-complex elements (used to verify vanishing brackets in
// degrees ≠ 1); result is a cochain of degree |f|+|g|−1
CochainCombo circ_phi(const GentlePresentation& p, const FieldConfig& f, const CochainCombo& fc,
                      int fdeg, const CochainCombo& gc, int gdeg, const PathSets& sets);
CochainCombo bracket_phi(const GentlePresentation& p, const FieldConfig& f, const CochainCombo& fc,
                         int fdeg, const CochainCombo& gc, int gdeg, const PathSets& sets);

// ---------------------------------------------------------------------------
// Gerstenhaber bracket

// deg_c(γ,α) = deg_c(α) − deg_c(γ), applied termwise
CochainCombo bracket_with_fundamental(const GentlePresentation& p, const FieldConfig& f, ArrowId c,
                                      const CochainCombo& v);

// class-level bracket of two elements of the degree <= 1 basis or of the
// generating set; follows the degree-1 derivation action and the vanishing
// theorems, with the loop and Kronecker special cases emerging from the
// derivation computation itself
Calculus::CohClass bracket_class(const Calculus& c, const CohBasisElement& u,
                                 const CohBasisElement& v);

// derivation attached to a degree <= 1 cocycle, as its commutator bracket
// data: arrow -> formal combination of parallel B-paths
using PathCombo = std::map<Path, Scalar>;
using Derivation = std::map<ArrowId, PathCombo>;
Derivation derivation_of(const FieldConfig& f, const CochainCombo& u);
PathCombo apply_derivation(const GentlePresentation& p, const FieldConfig& f, const Derivation& D,
                           const Path& path);

// ---------------------------------------------------------------------------
// algebra presentation, Lie decomposition, derived invariants

struct GeneratorSet {
    std::vector<CohBasisElement> generators; // G of the generating-set proposition
    std::vector<CohBasisElement> f_subset;   // the (c,c) part F
    bool minimal = true;                     // false exactly in the one-loop exceptions
    bool truncated = false;
};

GeneratorSet generator_set(const Calculus& c);

struct HHRelation {
    std::string kind; // "monomial" (u⌣v = 0) or "equalizer"
    std::string text;
};

struct PresentationOfHH {
    GeneratorSet generators;
    std::vector<HHRelation> relations;
    bool quadratic_monomial = false; // some spanning tree satisfies (⋆)
    std::optional<bool> star_satisfiable;
    bool exceptional_free = false; // the one-loop char-2 free description applies
    std::string note;
};

PresentationOfHH hh_algebra_presentation(const Calculus& c);

struct LieBlock {
    int family = 0; // 1..4 per the decomposition theorem
    ArrowId complement_arrow = -1;
    std::string description;
};

struct LieDecomposition {
    bool applicable = false; // preconditions: not loop/Kronecker, tree satisfies (⋆)
    std::string reason;      // when not applicable
    std::vector<LieBlock> blocks;
    int phi_11 = 0;          // dim [HH^1, HH^1]
    int phi_01 = 0;          // char-2 loop classes (b, s(b))
    int dim_hh1 = 0;
    bool dim_identity = false; // dim HH^1 = 1 − |Q0| + |Q1| + φ(1,1) (+ φ(0,1) in char 2)
};

LieDecomposition lie_decomposition(const Calculus& c);

struct DerivedInvariants {
    int n_cocomplete_primitive = 0;
    std::vector<std::pair<int, int>> hilbert_T; // (degree, dim) of T(A) = rad/rad²
    bool hilbert_truncated = false;
    std::vector<std::pair<int, int>> hh_dims;   // materialized dim HH^m, m <= maxdeg
    int phi_11 = 0;
};

DerivedInvariants derived_invariants(const Calculus& c, int maxdeg);

} // namespace gentle
