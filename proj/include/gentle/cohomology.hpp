#pragma once

#include "gentle/combinatorics.hpp"
#include "gentle/complexes.hpp"

#include <string>
#include <vector>

namespace gentle {

enum class CohTag {
    One,          // Σ (e_i, e_i)
    BMaxPair,     // (s(α), α), α a B-maximal cycle
    CycleB,       // ⟨α⟩ = Σ (s(rot^i α), rot^i α), α ∈ Crep(B)
    Fundamental,  // (c, c), c outside the spanning tree
    BPlusPair,    // (c, cδ), δ ∈ Crep(B), c its first arrow
    GammaMaxPair, // (γ, α), γ Γ-maximal, no shared first/last arrow
    CycleGamma,   // ⟨C⟩ = Σ (−1)^{im}(rot^i C, s(rot^i C)), C ∈ Crep(Γ)
    GammaPlusPair // (bC, b), C ∈ Crep(Γ), b its first arrow
};

std::string to_string(CohTag t);

struct CohBasisElement {
    CohTag tag;
    int degree = 0;
    Path path1, path2; // payload; meaning depends on the tag
    CochainCombo rep;
    std::string family; // set when the element belongs to an infinite family

    int weight() const; // |α| − |γ| of the underlying pairs
    std::string payload_str(const Quiver& q) const;
};

struct HHDegree {
    int degree = 0;
    std::vector<CohBasisElement> elements;
    bool truncated = false; // an infinite family was cut at the bound
    int dimension() const { return static_cast<int>(elements.size()); }
};

// Closed-form basis of HH^m(A), per the degree-0/1/≥2 case split.
HHDegree hh_basis(const GentlePresentation& p, int m, const SpanningTree& tree,
                  const FieldConfig& f, const RepSystem& reps, const MaximalPaths& maximal,
                  const PathSets& sets);

struct FinitenessReport {
    bool algebra_fd = false;       // ⇔ HH^0 fd ⇔ HH^1 fd ⇔ no cocomplete cycle
    bool hh0_fd = false;
    bool hh1_fd = false;
    bool gldim_finite = false;     // ⇔ HH eventually vanishes ⇔ no complete cycle
    int vanishing_degree = -1;     // least m0 with Γ_{m0} = ∅ when gldim is finite
};

FinitenessReport finiteness_report(const GentlePresentation& p);

struct GrowthReport {
    int n_primitive_complete = 0; // N
    int q1 = 0;
    // dim HH^m = |C_m(Γ)| + |C_{m−1}(Γ)| for |Q1| < m <= 2|Q1|
    std::vector<std::pair<int, int>> dims; // (m, dim)
    bool bound_holds = false;              // dim <= 2N on the reported window
};

GrowthReport growth_report(const GentlePresentation& p, const FieldConfig& f);

} // namespace gentle
