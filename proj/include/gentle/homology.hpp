#pragma once

#include "gentle/combinatorics.hpp"
#include "gentle/complexes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gentle {

enum class HomTag {
    VertexPair,       // (e, e)
    HCycleComplete,   // ⟨⟨C̄⟩⟩ = Σ (−1)^{(m+1)i} (s(rot^i C̄), rot^i C̄), C̄ complete
    LFactPair,        // (l1 C̄, l2 C̄), C̄ complete of length deg+1
    HCycleCocomplete, // ⟨⟨C̄⟩⟩ = Σ (r1 rot^i C̄, r2 rot^i C̄), C̄ cocomplete
    CocompletePoint   // (C̄, s(C̄)), C̄ cocomplete
};

std::string to_string(HomTag t);

struct HomBasisElement {
    HomTag tag;
    int degree = 0;
    Path circuit;   // canonical representative C̄; trivial path for VertexPair
    int length = 0; // of the circuit
    int period = 0;
    ChainCombo rep;
    std::string family;

    std::string payload_str(const Quiver& q) const;
};

struct HHHomologyDegree {
    int degree = 0;
    std::vector<HomBasisElement> elements;
    bool truncated = false;
    int dimension() const { return static_cast<int>(elements.size()); }
};

// Closed-form basis of HH_m(A) for a quadratic monomial presentation
// (gentleness is not required here).
HHHomologyDegree hh_homology_basis(const GentlePresentation& p, int m, const FieldConfig& f,
                                   int bound);

// Connes differential on a basis element: zero, or a single multiple of a
// degree+1 basis element.
struct ConnesImage {
    ChainCombo chain;                         // chain-level image
    std::optional<HomBasisElement> basis_elt; // the target ⟨⟨C̄⟩⟩ when nonzero
    Scalar coefficient;                       // m/r reduced into the field
};

ConnesImage connes_B(const GentlePresentation& p, const FieldConfig& f, const HomBasisElement& u);

struct DeRhamDegree {
    int degree = 0;
    std::vector<HomBasisElement> h_dr;    // basis of H_dR^degree
    std::vector<HomBasisElement> coker;   // basis of coker(B)_degree
    bool truncated = false;
};

// homology of (HH_•, B) and the cokernels of B, through degree maxdeg
std::vector<DeRhamDegree> de_rham(const GentlePresentation& p, const FieldConfig& f, int bound,
                                  int maxdeg);

struct CyclicSummand {
    std::string kind; // "coker B" or "H_dR^j"
    int dimension = 0;
};

struct CyclicDegree {
    int degree = 0;
    int dimension = 0;
    std::vector<CyclicSummand> summands;
    bool truncated = false;
};

// HC_m = coker(B: HH_{m−1} → HH_m) ⊕ ⊕_{i≥1} H_dR^{m−2i}, the reading of the
// degenerate second page consistent with HC_0(k) = k.
CyclicDegree cyclic_homology(const GentlePresentation& p, const FieldConfig& f, int bound, int m);

} // namespace gentle
