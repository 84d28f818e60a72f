#pragma once

#include "gentle/field.hpp"
#include "gentle/presentation.hpp"

#include <optional>
#include <vector>

namespace gentle {

// B_n and Γ_n for n <= bound, each level sorted. The levels are always
// exhaustive; *_complete records whether some level within the bound is
// empty, which certifies emptiness of all higher levels.
struct PathSets {
    int bound = 0;
    std::vector<std::vector<Path>> B;     // index = length
    std::vector<std::vector<Path>> Gamma; // index = length
    bool B_complete = false;
    bool Gamma_complete = false;

    const std::vector<Path>& B_level(int n) const { return B.at(n); }
    const std::vector<Path>& Gamma_level(int n) const { return Gamma.at(n); }
    int max_nonempty_B() const;
    int max_nonempty_Gamma() const;
};

PathSets enumerate_sets(const GentlePresentation& p, int bound);

enum class Completeness { Complete, Cocomplete, Neither };
enum class CircuitKind { Complete, Cocomplete, Neither, All };

// A rotation class of cycles. The representative is the lexicographically
// least rotation of the primitive root, raised to the appropriate power, so
// representative systems are closed under concatenation of powers.
struct Circuit {
    Path representative;
    int length = 0;
    int period = 0;
    Path primitive_root;
    Completeness completeness = Completeness::Neither;
};

// canonical representative of the rotation class of an arbitrary cycle
Path canonical_cycle(const Quiver& q, const Path& cycle);
int cycle_period(const Quiver& q, const Path& cycle);
Circuit make_circuit(const GentlePresentation& p, const Path& cycle);

// all circuits of length <= bound, ordered by (length, representative)
std::vector<Circuit> circuits(const GentlePresentation& p, int bound, CircuitKind kind);

// primitive complete / cocomplete circuits (complete lists; their lengths
// are bounded by |Q1|)
std::vector<Circuit> primitive_complete_circuits(const GentlePresentation& p);
std::vector<Circuit> primitive_cocomplete_circuits(const GentlePresentation& p);

struct MaximalPaths {
    std::vector<Path> B_maximal;     // finite maximal paths of B
    std::vector<Path> Gamma_maximal; // finite maximal paths of Γ
    std::vector<Path> both;          // simultaneously B- and Γ-maximal
};

// Maximal finite paths. For a gentle presentation these are complete lists
// (arrows on cocomplete/complete cycles extend forever and yield none).
MaximalPaths maximal_paths(const GentlePresentation& p);

// Representative systems for the circuit families. Primitive representatives
// are canonical cycles; powers inherit them.
struct RepSystem {
    std::vector<Path> crepprim_B;          // primitive cocomplete representatives
    std::vector<Path> crepprim_Gamma_circ; // primitive complete representatives (no char filter)

    // Crepprim(Γ): primitive elements of Crep(Γ). In characteristic 2 these
    // are the primitive complete representatives; otherwise the even-length
    // primitives together with the squares of the odd-length ones.
    std::vector<Path> crepprim_Gamma(const FieldConfig& f) const;

    // Crep(B) members of length <= bound (powers of crepprim_B)
    std::vector<Path> crep_B(int bound) const;
    // Crep°(Γ): all powers of primitive complete reps, length <= bound
    std::vector<Path> crep_Gamma_circ(int bound) const;
    // Crep(Γ): the members of Crep°(Γ) of even length, or all of them in
    // characteristic 2
    std::vector<Path> crep_Gamma(const FieldConfig& f, int bound) const;

    const Quiver* quiver = nullptr;
};

RepSystem representative_system(const GentlePresentation& p);

struct SpanningTree {
    std::vector<ArrowId> tree;          // arrows of the tree, sorted
    std::vector<ArrowId> complement;    // Q1 \ T, sorted
    // does SOME spanning tree satisfy (⋆)? nullopt = unknown (search capped)
    std::optional<bool> star_satisfiable;
    bool star_holds_for_tree = false;   // (⋆) for this particular tree
};

// Deterministic spanning tree: breadth-first from the least vertex id,
// arrows by least id. star_cap bounds the exhaustive (⋆)-search.
SpanningTree spanning_tree(const GentlePresentation& p, int star_cap = 26);

// (⋆) for a given tree: every element of Crepprim(Γ)∪Crepprim(B) passes
// through exactly one complement arrow. (The Γ side uses the primitive
// complete representatives; the condition is characteristic-free.)
bool star_condition(const GentlePresentation& p, const RepSystem& reps,
                    const std::vector<ArrowId>& tree);

// parse a user-supplied tree override ("a,b,c" or space separated)
std::optional<SpanningTree> tree_from_arrows(const GentlePresentation& p,
                                             const std::vector<ArrowId>& arrows, int star_cap = 26);

} // namespace gentle
