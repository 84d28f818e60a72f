#pragma once

#include "gentle/quiver.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gentle {

enum class PresentationClass { QuadraticMonomial, Gentle, FdGentle };

std::string to_string(PresentationClass c);

// One entry per gentleness condition; failures are report entries, not errors.
struct ValidationReport {
    bool degree_bound = false;         // (a) at most two arrows out of / into each vertex
    bool unique_b_continuation = false; // (b) at most one non-relation successor/predecessor
    bool unique_g_continuation = false; // (c) at most one relation successor/predecessor
    bool relations_quadratic = true;    // (d) structural (relations are stored as length-2 paths)
    bool admissible = false;            // (e) <=> no cocomplete cycle
    PresentationClass cls = PresentationClass::QuadraticMonomial;
    std::vector<std::string> failures; // human-readable details for failed conditions
    bool gentle() const { return degree_bound && unique_b_continuation && unique_g_continuation && relations_quadratic; }
};

// A quadratic monomial presentation (Q, I) with I generated by the set R of
// length-2 paths; the algebra is A = kQ/I. A relation is stored as the pair
// (first, second): the length-2 path "traverse `first`, then `second`".
class GentlePresentation {
public:
    GentlePresentation(Quiver q, std::set<std::pair<ArrowId, ArrowId>> relations);

    const Quiver& quiver() const { return quiver_; }
    const std::set<std::pair<ArrowId, ArrowId>>& relations() const { return relations_; }
    PresentationClass cls() const { return report_.cls; }
    const ValidationReport& validation() const { return report_; }

    bool is_gentle() const { return report_.gentle(); }
    bool is_fd() const { return report_.cls == PresentationClass::FdGentle || (report_.admissible); }

    bool in_relations(ArrowId first, ArrowId second) const {
        return relations_.count({first, second}) != 0;
    }

    // a path lies in B iff no consecutive arrow pair is a relation
    bool in_B(const Path& p) const {
        const auto& as = p.arrows();
        for (size_t i = 0; i + 1 < as.size(); ++i)
            if (in_relations(as[i], as[i + 1])) return false;
        return true;
    }
    // a path lies in Γ iff every consecutive arrow pair is a relation
    bool in_Gamma(const Path& p) const {
        const auto& as = p.arrows();
        for (size_t i = 0; i + 1 < as.size(); ++i)
            if (!in_relations(as[i], as[i + 1])) return false;
        return true;
    }

    // successor/predecessor arrows within B (non-relation continuation) and
    // within Γ (relation continuation); lists, since quadratic monomial
    // presentations may branch
    const std::vector<ArrowId>& succ_B(ArrowId a) const { return succ_B_[a]; }
    const std::vector<ArrowId>& pred_B(ArrowId a) const { return pred_B_[a]; }
    const std::vector<ArrowId>& succ_Gamma(ArrowId a) const { return succ_G_[a]; }
    const std::vector<ArrowId>& pred_Gamma(ArrowId a) const { return pred_G_[a]; }

    // the dual presentation (Q, I!), with I! generated by the length-2 paths
    // that are NOT in I
    GentlePresentation dual() const;

    // true iff some cocomplete cycle exists (decided on primitive cycles of
    // length <= |Q1|)
    bool has_cocomplete_cycle() const;
    // true iff some complete cycle exists
    bool has_complete_cycle() const;

private:
    void validate();

    Quiver quiver_;
    std::set<std::pair<ArrowId, ArrowId>> relations_;
    std::vector<std::vector<ArrowId>> succ_B_, pred_B_, succ_G_, pred_G_;
    ValidationReport report_;
};

struct ParseError {
    int line = 0, column = 0;
    std::string message;
};

// Parses the text grammar (see README) or the structured JSON equivalent.
// Throws ParseError on malformed input, undeclared references,
// non-quadratic relations, and disconnected or empty quivers.
GentlePresentation parse_presentation(const std::string& source);

} // namespace gentle
