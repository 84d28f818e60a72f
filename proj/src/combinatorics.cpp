#include "gentle/combinatorics.hpp"

#include <algorithm>
#include <set>

namespace gentle {

int PathSets::max_nonempty_B() const {
    for (int n = static_cast<int>(B.size()) - 1; n >= 0; --n)
        if (!B[n].empty()) return n;
    return -1;
}
int PathSets::max_nonempty_Gamma() const {
    for (int n = static_cast<int>(Gamma.size()) - 1; n >= 0; --n)
        if (!Gamma[n].empty()) return n;
    return -1;
}

namespace {

std::vector<std::vector<Path>> enumerate_levels(const GentlePresentation& p, int bound,
                                                bool gamma) {
    const Quiver& q = p.quiver();
    std::vector<std::vector<Path>> levels(bound + 1);
    for (VertexId v = 0; v < q.num_vertices(); ++v) levels[0].push_back(Path::trivial(v));
    for (ArrowId a = 0; a < q.num_arrows(); ++a) levels[1].push_back(Path::of_arrow(q, a));
    for (int n = 2; n <= bound; ++n) {
        for (const Path& s : levels[n - 1]) {
            const auto& succ = gamma ? p.succ_Gamma(s.last_arrow()) : p.succ_B(s.last_arrow());
            for (ArrowId b : succ) {
                Path e = Path::of_arrow(q, b).compose_after(q, s);
                levels[n].push_back(e);
            }
        }
        std::sort(levels[n].begin(), levels[n].end());
        if (levels[n].empty()) break; // all higher levels are empty too
    }
    std::sort(levels[0].begin(), levels[0].end());
    std::sort(levels[1].begin(), levels[1].end());
    return levels;
}

} // namespace

PathSets enumerate_sets(const GentlePresentation& p, int bound) {
    if (bound < 2) throw std::invalid_argument("enumerate_sets: bound must be >= 2");
    PathSets s;
    s.bound = bound;
    s.B = enumerate_levels(p, bound, false);
    s.Gamma = enumerate_levels(p, bound, true);
    auto empty_level = [](const std::vector<std::vector<Path>>& lv) {
        for (const auto& l : lv)
            if (l.empty()) return true;
        return false;
    };
    s.B_complete = empty_level(s.B);
    s.Gamma_complete = empty_level(s.Gamma);
    return s;
}

int cycle_period(const Quiver& q, const Path& cycle) {
    int m = cycle.length();
    for (int l = 1; l <= m; ++l) {
        if (m % l != 0) continue;
        bool ok = true;
        for (int i = 0; i + l < m && ok; ++i)
            ok = cycle.arrows()[i] == cycle.arrows()[i + l];
        if (ok && q.target(cycle.arrows()[m - 1]) == q.source(cycle.arrows()[0]) &&
            cycle.arrows()[m - l] == cycle.arrows()[0])
            return l;
    }
    return m;
}

Path canonical_cycle(const Quiver& q, const Path& cycle) {
    if (!cycle.is_cycle(q)) throw std::invalid_argument("canonical_cycle: not a cycle");
    int r = cycle_period(q, cycle);
    Path root = cycle.subpath(q, 0, r);
    Path best = root;
    Path cur = root;
    for (int i = 1; i < r; ++i) {
        cur = cur.rot(q);
        if (cur.arrows() < best.arrows()) best = cur;
    }
    int k = cycle.length() / r;
    return k == 1 ? best : best.power(q, k);
}

namespace {

Completeness cycle_completeness(const GentlePresentation& p, const Path& c) {
    const auto& as = c.arrows();
    int m = c.length();
    bool complete = true, cocomplete = true;
    for (int i = 0; i < m; ++i) {
        bool rel = p.in_relations(as[i], as[(i + 1) % m]);
        complete = complete && rel;
        cocomplete = cocomplete && !rel;
    }
    if (complete) return Completeness::Complete;
    if (cocomplete) return Completeness::Cocomplete;
    return Completeness::Neither;
}

} // namespace

Circuit make_circuit(const GentlePresentation& p, const Path& cycle) {
    const Quiver& q = p.quiver();
    Circuit c;
    c.representative = canonical_cycle(q, cycle);
    c.length = cycle.length();
    c.period = cycle_period(q, cycle);
    c.primitive_root = c.representative.subpath(q, 0, c.period);
    c.completeness = cycle_completeness(p, c.representative);
    return c;
}

std::vector<Circuit> circuits(const GentlePresentation& p, int bound, CircuitKind kind) {
    const Quiver& q = p.quiver();
    std::set<Path> seen;
    std::vector<Circuit> out;
    // depth-first over all paths of length <= bound, collecting cycles
    std::vector<ArrowId> stack;
    auto visit = [&](auto&& self, ArrowId start) -> void {
        ArrowId cur = stack.back();
        if (q.target(cur) == q.source(start)) {
            Path cand = canonical_cycle(q, Path::of_arrows(q, stack));
            if (seen.insert(cand).second) {
                Circuit c = make_circuit(p, cand);
                bool keep = kind == CircuitKind::All ||
                            (kind == CircuitKind::Complete && c.completeness == Completeness::Complete) ||
                            (kind == CircuitKind::Cocomplete && c.completeness == Completeness::Cocomplete) ||
                            (kind == CircuitKind::Neither && c.completeness == Completeness::Neither);
                if (keep) out.push_back(std::move(c));
            }
        }
        if (static_cast<int>(stack.size()) == bound) return;
        for (ArrowId nxt = 0; nxt < q.num_arrows(); ++nxt) {
            if (q.source(nxt) != q.target(cur)) continue;
            stack.push_back(nxt);
            self(self, start);
            stack.pop_back();
        }
    };
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        stack = {a};
        visit(visit, a);
    }
    std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.representative < b.representative;
    });
    return out;
}

namespace {

// primitive cycles whose consecutive pairs, including the wrap-around, all
// lie in the given continuation table
std::vector<Circuit> primitive_cyclic(const GentlePresentation& p, bool gamma) {
    const Quiver& q = p.quiver();
    std::set<Path> seen;
    std::vector<Circuit> out;
    std::vector<ArrowId> stack;
    auto visit = [&](auto&& self, ArrowId start) -> void {
        ArrowId cur = stack.back();
        bool closes = q.target(cur) == q.source(start) &&
                      (gamma ? p.in_relations(cur, start) : !p.in_relations(cur, start));
        if (closes) {
            Path cyc = Path::of_arrows(q, stack);
            if (cycle_period(q, cyc) == cyc.length()) {
                Path cand = canonical_cycle(q, cyc);
                if (seen.insert(cand).second) out.push_back(make_circuit(p, cand));
            }
        }
        if (static_cast<int>(stack.size()) == q.num_arrows()) return;
        const auto& succ = gamma ? p.succ_Gamma(cur) : p.succ_B(cur);
        for (ArrowId nxt : succ) {
            stack.push_back(nxt);
            self(self, start);
            stack.pop_back();
        }
    };
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        stack = {a};
        visit(visit, a);
    }
    std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.representative < b.representative;
    });
    return out;
}

} // namespace

std::vector<Circuit> primitive_complete_circuits(const GentlePresentation& p) {
    return primitive_cyclic(p, true);
}
std::vector<Circuit> primitive_cocomplete_circuits(const GentlePresentation& p) {
    return primitive_cyclic(p, false);
}

MaximalPaths maximal_paths(const GentlePresentation& p) {
    const Quiver& q = p.quiver();
    MaximalPaths m;
    auto collect = [&](bool gamma) {
        std::vector<Path> out;
        for (ArrowId a = 0; a < q.num_arrows(); ++a) {
            const auto& pred = gamma ? p.pred_Gamma(a) : p.pred_B(a);
            if (!pred.empty()) continue; // not the start of a maximal path
            std::vector<ArrowId> arrows = {a};
            for (;;) {
                const auto& succ = gamma ? p.succ_Gamma(arrows.back()) : p.succ_B(arrows.back());
                if (succ.empty()) break;
                if (succ.size() > 1)
                    throw std::logic_error("maximal_paths requires a gentle presentation");
                if (static_cast<int>(arrows.size()) > 2 * q.num_arrows())
                    throw std::logic_error("maximal path extension does not terminate");
                arrows.push_back(succ[0]);
            }
            out.push_back(Path::of_arrows(q, arrows));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    m.B_maximal = collect(false);
    m.Gamma_maximal = collect(true);
    for (const Path& b : m.B_maximal) {
        if (b.length() != 1) continue;
        if (std::binary_search(m.Gamma_maximal.begin(), m.Gamma_maximal.end(), b))
            m.both.push_back(b); // a length-1 path from a source to a sink
    }
    return m;
}

std::vector<Path> RepSystem::crepprim_Gamma(const FieldConfig& f) const {
    if (f.characteristic() == 2) return crepprim_Gamma_circ;
    std::vector<Path> out;
    for (const Path& c : crepprim_Gamma_circ)
        out.push_back(c.length() % 2 == 0 ? c : c.power(*quiver, 2));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<Path> powers_up_to(const Quiver& q, const std::vector<Path>& prims, int bound) {
    std::vector<Path> out;
    for (const Path& c : prims)
        for (int k = 1; k * c.length() <= bound; ++k) out.push_back(c.power(q, k));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Path> RepSystem::crep_B(int bound) const {
    return powers_up_to(*quiver, crepprim_B, bound);
}
std::vector<Path> RepSystem::crep_Gamma_circ(int bound) const {
    return powers_up_to(*quiver, crepprim_Gamma_circ, bound);
}
std::vector<Path> RepSystem::crep_Gamma(const FieldConfig& f, int bound) const {
    std::vector<Path> all = crep_Gamma_circ(bound);
    if (f.characteristic() == 2) return all;
    std::vector<Path> out;
    for (Path& c : all)
        if (c.length() % 2 == 0) out.push_back(std::move(c));
    return out;
}

RepSystem representative_system(const GentlePresentation& p) {
    RepSystem r;
    r.quiver = &p.quiver();
    for (const Circuit& c : primitive_cocomplete_circuits(p)) r.crepprim_B.push_back(c.representative);
    for (const Circuit& c : primitive_complete_circuits(p))
        r.crepprim_Gamma_circ.push_back(c.representative);
    return r;
}

bool star_condition(const GentlePresentation& p, const RepSystem& reps,
                    const std::vector<ArrowId>& tree) {
    std::vector<bool> in_tree(p.quiver().num_arrows(), false);
    for (ArrowId a : tree) in_tree[a] = true;
    auto check = [&](const std::vector<Path>& prims) {
        for (const Path& c : prims) {
            int hits = 0;
            for (ArrowId a : c.arrows())
                if (!in_tree[a]) ++hits;
            if (hits != 1) return false;
        }
        return true;
    };
    return check(reps.crepprim_B) && check(reps.crepprim_Gamma_circ);
}

namespace {

bool is_spanning_tree(const Quiver& q, const std::vector<ArrowId>& arrows) {
    int n = q.num_vertices();
    if (static_cast<int>(arrows.size()) != n - 1) return false;
    std::vector<int> root(n);
    for (int i = 0; i < n; ++i) root[i] = i;
    auto find = [&](int x) { while (root[x] != x) x = root[x] = root[root[x]]; return x; };
    for (ArrowId a : arrows) {
        int u = find(q.source(a)), v = find(q.target(a));
        if (u == v) return false;
        root[u] = v;
    }
    return true;
}

std::optional<bool> search_star(const GentlePresentation& p, const RepSystem& reps, int cap) {
    const Quiver& q = p.quiver();
    if (q.num_arrows() > cap) return std::nullopt;
    int need = q.num_vertices() - 1;
    std::vector<ArrowId> chosen;
    bool found = false;
    auto rec = [&](auto&& self, int next) -> void {
        if (found) return;
        if (static_cast<int>(chosen.size()) == need) {
            if (is_spanning_tree(q, chosen) && star_condition(p, reps, chosen)) found = true;
            return;
        }
        if (next >= q.num_arrows()) return;
        if (q.num_arrows() - next < need - static_cast<int>(chosen.size())) return;
        chosen.push_back(next);
        self(self, next + 1);
        chosen.pop_back();
        self(self, next + 1);
    };
    rec(rec, 0);
    return found;
}

} // namespace

SpanningTree spanning_tree(const GentlePresentation& p, int star_cap) {
    const Quiver& q = p.quiver();
    // breadth-first from vertex 0; ties resolved by least arrow id
    std::vector<bool> seen(q.num_vertices(), false);
    std::vector<ArrowId> tree;
    std::vector<VertexId> frontier = {0};
    seen[0] = true;
    while (!frontier.empty()) {
        std::vector<VertexId> next;
        for (VertexId v : frontier) {
            for (ArrowId a = 0; a < q.num_arrows(); ++a) {
                VertexId other = -1;
                if (q.source(a) == v && !seen[q.target(a)]) other = q.target(a);
                else if (q.target(a) == v && !seen[q.source(a)]) other = q.source(a);
                if (other >= 0) {
                    seen[other] = true;
                    tree.push_back(a);
                    next.push_back(other);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(tree.begin(), tree.end());
    SpanningTree t;
    t.tree = tree;
    std::vector<bool> in_tree(q.num_arrows(), false);
    for (ArrowId a : tree) in_tree[a] = true;
    for (ArrowId a = 0; a < q.num_arrows(); ++a)
        if (!in_tree[a]) t.complement.push_back(a);
    RepSystem reps = representative_system(p);
    t.star_holds_for_tree = star_condition(p, reps, t.tree);
    t.star_satisfiable = t.star_holds_for_tree ? std::optional<bool>(true)
                                               : search_star(p, reps, star_cap);
    return t;
}

std::optional<SpanningTree> tree_from_arrows(const GentlePresentation& p,
                                             const std::vector<ArrowId>& arrows, int star_cap) {
    const Quiver& q = p.quiver();
    std::vector<ArrowId> sorted = arrows;
    std::sort(sorted.begin(), sorted.end());
    if (!is_spanning_tree(q, sorted)) return std::nullopt;
    SpanningTree t;
    t.tree = sorted;
    std::vector<bool> in_tree(q.num_arrows(), false);
    for (ArrowId a : sorted) in_tree[a] = true;
    for (ArrowId a = 0; a < q.num_arrows(); ++a)
        if (!in_tree[a]) t.complement.push_back(a);
    RepSystem reps = representative_system(p);
    t.star_holds_for_tree = star_condition(p, reps, t.tree);
    t.star_satisfiable = t.star_holds_for_tree ? std::optional<bool>(true)
                                               : search_star(p, reps, star_cap);
    return t;
}

} // namespace gentle
