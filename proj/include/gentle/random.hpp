#pragma once

#include "gentle/presentation.hpp"

#include <random>
#include <string>

namespace gentle {

// Random connected gentle presentations: a random spanning tree plus extra
// arrows under the in/out degree caps, then a uniformly chosen admissible
// relation labelling at every vertex. Labelling the length-2 paths through a
// vertex row- and column-properly is exactly gentleness conditions (b), (c).
inline GentlePresentation random_gentle(std::mt19937_64& rng, int max_vertices, int max_arrows,
                                        bool want_fd, int retries = 200) {
    for (int attempt = 0; attempt < retries; ++attempt) {
        int nv = std::uniform_int_distribution<int>(1, max_vertices)(rng);
        Quiver q;
        for (int v = 0; v < nv; ++v) q.add_vertex("v" + std::to_string(v + 1));
        std::vector<int> out_deg(nv, 0), in_deg(nv, 0);
        int na = 0;
        auto add = [&](int s, int t) {
            q.add_arrow("a" + std::to_string(na + 1), s, t);
            ++out_deg[s];
            ++in_deg[t];
            ++na;
        };
        // spanning tree, randomly oriented
        for (int v = 1; v < nv; ++v) {
            int other = std::uniform_int_distribution<int>(0, v - 1)(rng);
            bool fwd = std::uniform_int_distribution<int>(0, 1)(rng);
            int s = fwd ? v : other, t = fwd ? other : v;
            if (out_deg[s] >= 2 || in_deg[t] >= 2) {
                std::swap(s, t);
                if (out_deg[s] >= 2 || in_deg[t] >= 2) { na = -1; break; }
            }
            add(s, t);
        }
        if (na < 0) continue;
        int target = std::uniform_int_distribution<int>(nv - 1, max_arrows)(rng);
        for (int tries = 0; na < target && tries < 4 * max_arrows; ++tries) {
            int s = std::uniform_int_distribution<int>(0, nv - 1)(rng);
            int t = std::uniform_int_distribution<int>(0, nv - 1)(rng);
            if (out_deg[s] < 2 && in_deg[t] < 2) add(s, t);
        }
        // relation labelling per vertex
        std::set<std::pair<ArrowId, ArrowId>> rel;
        bool fd_bias = want_fd;
        for (int v = 0; v < nv; ++v) {
            auto ins = q.arrows_in(v), outs = q.arrows_out(v);
            if (ins.empty() || outs.empty()) continue;
            auto coin = [&](double p_rel) {
                return std::uniform_real_distribution<double>(0, 1)(rng) < p_rel;
            };
            if (ins.size() == 1 && outs.size() == 1) {
                if (coin(fd_bias ? 0.7 : 0.5)) rel.insert({ins[0], outs[0]});
            } else if (ins.size() == 1) { // one in, two outs: one pair R, one B
                int r = std::uniform_int_distribution<int>(0, 1)(rng);
                rel.insert({ins[0], outs[r]});
            } else if (outs.size() == 1) {
                int r = std::uniform_int_distribution<int>(0, 1)(rng);
                rel.insert({ins[r], outs[0]});
            } else { // 2×2: diagonal or antidiagonal labelling
                int r = std::uniform_int_distribution<int>(0, 1)(rng);
                rel.insert({ins[0], outs[r]});
                rel.insert({ins[1], outs[1 - r]});
            }
        }
        GentlePresentation p(std::move(q), std::move(rel));
        if (!p.is_gentle()) continue;
        if (want_fd && !p.validation().admissible) continue;
        return p;
    }
    throw std::runtime_error("random_gentle: could not generate a presentation");
}

} // namespace gentle
