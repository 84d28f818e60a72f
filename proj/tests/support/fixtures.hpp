#pragma once

#include "gentle/presentation.hpp"

#include <string>

namespace fixtures {

// one vertex, one loop a, relation a*a
inline gentle::GentlePresentation one_loop_rel() {
    return gentle::parse_presentation("vertices: v\narrows: a: v -> v\nrelations: a*a\n");
}

// one vertex, one loop, no relations (the polynomial algebra)
inline gentle::GentlePresentation one_loop_norel() {
    return gentle::parse_presentation("vertices: v\narrows: a: v -> v\n");
}

// the A2 quiver: one arrow 1 -> 2
inline gentle::GentlePresentation a2() {
    return gentle::parse_presentation("vertices: 1 2\narrows: a: 1 -> 2\n");
}

// Kronecker quiver: a, b : 1 -> 2
inline gentle::GentlePresentation kronecker() {
    return gentle::parse_presentation("vertices: 1 2\narrows: a: 1 -> 2  b: 1 -> 2\n");
}

// two loops a, b at one vertex with relations a², b²
inline gentle::GentlePresentation two_loops() {
    return gentle::parse_presentation(
        "vertices: v\narrows: a: v -> v  b: v -> v\nrelations: a*a b*b\n");
}

// the six-arrow presentation on a triangle where no spanning tree
// satisfies the (*) condition; I = (ba, cb, ac, ed, fe, df)
inline gentle::GentlePresentation fig_no_star() {
    return gentle::parse_presentation("vertices: 1 2 3\n"
                                      "arrows: a: 1 -> 2  b: 2 -> 3  c: 3 -> 1\n"
                                      "        d: 1 -> 2  e: 2 -> 3  f: 3 -> 1\n"
                                      "relations: b*a c*b a*c e*d f*e d*f\n");
}

// oriented n-cycle with every length-2 path in I except one
inline gentle::GentlePresentation oriented_cycle(int n) {
    std::string src = "vertices:";
    for (int i = 1; i <= n; ++i) src += " " + std::to_string(i);
    src += "\narrows:";
    for (int i = 1; i <= n; ++i)
        src += " a" + std::to_string(i) + ": " + std::to_string(i) + " -> " +
               std::to_string(i % n + 1);
    src += "\nrelations:";
    // drop the relation a2*a1; keep the other n−1
    for (int i = 2; i <= n; ++i)
        src += " a" + std::to_string(i % n + 1) + "*a" + std::to_string(i);
    src += "\n";
    return gentle::parse_presentation(src);
}

// the point algebra k: one vertex, no arrows
inline gentle::GentlePresentation point() {
    return gentle::parse_presentation("vertices: v\n");
}

} // namespace fixtures
