#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gentle {

using VertexId = int;
using ArrowId = int;

// Finite quiver. Vertices and arrows are user-named strings mapped to
// dense integer ids in declaration order; all reports use the names.
class Quiver {
public:
    VertexId add_vertex(const std::string& name) {
        if (vertex_ids_.count(name))
            throw std::invalid_argument("duplicate vertex '" + name + "'");
        VertexId id = static_cast<VertexId>(vertex_names_.size());
        vertex_ids_[name] = id;
        vertex_names_.push_back(name);
        return id;
    }

    ArrowId add_arrow(const std::string& name, VertexId s, VertexId t) {
        if (arrow_ids_.count(name))
            throw std::invalid_argument("duplicate arrow '" + name + "'");
        ArrowId id = static_cast<ArrowId>(arrow_names_.size());
        arrow_ids_[name] = id;
        arrow_names_.push_back(name);
        src_.push_back(s);
        tgt_.push_back(t);
        return id;
    }

    int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
    int num_arrows() const { return static_cast<int>(arrow_names_.size()); }

    VertexId source(ArrowId a) const { return src_[a]; }
    VertexId target(ArrowId a) const { return tgt_[a]; }

    const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
    const std::string& arrow_name(ArrowId a) const { return arrow_names_[a]; }

    VertexId vertex_id(const std::string& name) const {
        auto it = vertex_ids_.find(name);
        return it == vertex_ids_.end() ? -1 : it->second;
    }
    ArrowId arrow_id(const std::string& name) const {
        auto it = arrow_ids_.find(name);
        return it == arrow_ids_.end() ? -1 : it->second;
    }

    std::vector<ArrowId> arrows_out(VertexId v) const {
        std::vector<ArrowId> r;
        for (ArrowId a = 0; a < num_arrows(); ++a)
            if (src_[a] == v) r.push_back(a);
        return r;
    }
    std::vector<ArrowId> arrows_in(VertexId v) const {
        std::vector<ArrowId> r;
        for (ArrowId a = 0; a < num_arrows(); ++a)
            if (tgt_[a] == v) r.push_back(a);
        return r;
    }

    // Connectedness of the underlying undirected graph.
    bool connected() const {
        int n = num_vertices();
        if (n == 0) return false;
        std::vector<int> root(n);
        for (int i = 0; i < n; ++i) root[i] = i;
        auto find = [&](int x) { while (root[x] != x) x = root[x] = root[root[x]]; return x; };
        for (ArrowId a = 0; a < num_arrows(); ++a) root[find(src_[a])] = find(tgt_[a]);
        for (int i = 1; i < n; ++i)
            if (find(i) != find(0)) return false;
        return true;
    }

private:
    std::vector<std::string> vertex_names_, arrow_names_;
    std::map<std::string, VertexId> vertex_ids_;
    std::map<std::string, ArrowId> arrow_ids_;
    std::vector<VertexId> src_, tgt_;
};

// A path in the quiver. Composition is written right to left, as for
// functions: the path  a_m ... a_1  traverses a_1 first. Internally the
// arrows are stored in traversal order, so arrows()[0] is the first
// ("rightmost") arrow and arrows().back() the last. A trivial path
// carries only its base vertex.
class Path {
public:
    Path() : base_(-1) {}

    static Path trivial(VertexId v) {
        Path p;
        p.base_ = v;
        return p;
    }

    static Path of_arrow(const Quiver& q, ArrowId a) {
        Path p;
        p.base_ = q.source(a);
        p.arrows_ = {a};
        return p;
    }

    // arrows in traversal order; must be consecutively composable
    static Path of_arrows(const Quiver& q, std::vector<ArrowId> arrows) {
        if (arrows.empty()) throw std::invalid_argument("of_arrows: empty");
        Path p;
        p.base_ = q.source(arrows[0]);
        for (size_t i = 0; i + 1 < arrows.size(); ++i)
            if (q.target(arrows[i]) != q.source(arrows[i + 1]))
                throw std::invalid_argument("of_arrows: arrows not composable");
        p.arrows_ = std::move(arrows);
        return p;
    }

    int length() const { return static_cast<int>(arrows_.size()); }
    bool is_trivial() const { return arrows_.empty(); }

    VertexId source() const { return base_; }
    VertexId target(const Quiver& q) const {
        return arrows_.empty() ? base_ : q.target(arrows_.back());
    }

    const std::vector<ArrowId>& arrows() const { return arrows_; }
    ArrowId first_arrow() const { return arrows_.front(); } // rightmost symbol
    ArrowId last_arrow() const { return arrows_.back(); }   // leftmost symbol

    bool is_cycle(const Quiver& q) const { return length() > 0 && source() == target(q); }

    // p.compose_after(q, other): the path  p ∘ other  (other traversed first);
    // defined when s(p) = t(other).
    Path compose_after(const Quiver& q, const Path& other) const {
        if (other.target(q) != source())
            throw std::invalid_argument("compose: endpoints do not match");
        Path r;
        r.base_ = other.base_;
        r.arrows_ = other.arrows_;
        r.arrows_.insert(r.arrows_.end(), arrows_.begin(), arrows_.end());
        return r;
    }

    // sub-path of traversal positions [from, from+len)
    Path subpath(const Quiver& q, int from, int len) const {
        if (from < 0 || len < 0 || from + len > length())
            throw std::out_of_range("subpath");
        if (len == 0) {
            VertexId v = from == 0 ? base_ : q.target(arrows_[from - 1]);
            return trivial(v);
        }
        Path r;
        r.arrows_.assign(arrows_.begin() + from, arrows_.begin() + from + len);
        r.base_ = q.source(r.arrows_[0]);
        return r;
    }

    // last-arrow factorization  p = lfact1 * lfact2  and first-arrow
    // factorization  p = rfact1 * rfact2  (paper's l/r factor pairs)
    ArrowId lfact1() const { return last_arrow(); }
    Path lfact2(const Quiver& q) const { return subpath(q, 0, length() - 1); }
    Path rfact1(const Quiver& q) const { return subpath(q, 1, length() - 1); }
    ArrowId rfact2() const { return first_arrow(); }

    // rot(c_m ... c_1) = c_{m-1} ... c_1 c_m : the last arrow moves to the
    // front of the traversal order
    Path rot(const Quiver& q) const {
        if (!is_cycle(q)) throw std::invalid_argument("rot: not a cycle");
        Path r;
        r.arrows_.reserve(arrows_.size());
        r.arrows_.push_back(arrows_.back());
        r.arrows_.insert(r.arrows_.end(), arrows_.begin(), arrows_.end() - 1);
        r.base_ = q.source(r.arrows_[0]);
        return r;
    }

    Path rot_inverse(const Quiver& q) const {
        if (!is_cycle(q)) throw std::invalid_argument("rot: not a cycle");
        Path r;
        r.arrows_.assign(arrows_.begin() + 1, arrows_.end());
        r.arrows_.push_back(arrows_.front());
        r.base_ = q.source(r.arrows_[0]);
        return r;
    }

    Path power(const Quiver& q, int k) const {
        if (!is_cycle(q)) throw std::invalid_argument("power: not a cycle");
        if (k < 1) throw std::invalid_argument("power: exponent must be >= 1");
        Path r;
        r.base_ = base_;
        for (int i = 0; i < k; ++i)
            r.arrows_.insert(r.arrows_.end(), arrows_.begin(), arrows_.end());
        return r;
    }

    // vertices visited, in order; length()+1 entries
    std::vector<VertexId> visited(const Quiver& q) const {
        std::vector<VertexId> vs;
        vs.push_back(base_);
        for (ArrowId a : arrows_) vs.push_back(q.target(a));
        return vs;
    }

    int count_arrow(ArrowId a) const {
        int n = 0;
        for (ArrowId b : arrows_)
            if (b == a) ++n;
        return n;
    }

    // printed right to left: "c*b*a"; trivial paths as "e(v)"
    std::string str(const Quiver& q) const {
        if (arrows_.empty()) return "e(" + q.vertex_name(base_) + ")";
        std::string s;
        for (auto it = arrows_.rbegin(); it != arrows_.rend(); ++it) {
            if (!s.empty()) s += "*";
            s += q.arrow_name(*it);
        }
        return s;
    }

    friend auto operator<=>(const Path& a, const Path& b) {
        if (auto c = a.arrows_.size() <=> b.arrows_.size(); c != 0) return c;
        if (auto c = a.arrows_ <=> b.arrows_; c != 0) return c;
        return a.base_ <=> b.base_;
    }
    friend bool operator==(const Path& a, const Path& b) = default;

private:
    std::vector<ArrowId> arrows_;
    VertexId base_; // source vertex; the only data of a trivial path
};

} // namespace gentle
