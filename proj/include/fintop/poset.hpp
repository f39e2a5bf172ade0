#pragma once

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <memory>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fintop/common.hpp"

namespace fintop {

/// A finite poset stored as a Hasse diagram. Immutable after construction;
/// copies share the underlying data. Elements carry opaque string labels and
/// are identified internally by their index in the listed order, which makes
/// every algorithm downstream deterministic.
class Poset {
public:
    Poset() : d_(std::make_shared<Data>()) {}

    /// Builds a poset from labels and relation pairs (lower, upper). The
    /// pairs may be any subset of the order relation; they are closed
    /// transitively and then reduced, so callers may pass full relations.
    static Poset from_covers(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& pairs) {
        std::unordered_map<std::string, int> index;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!index.emplace(labels[i], static_cast<int>(i)).second)
                throw InvalidArgument("duplicate label '" + labels[i] + "'");
        }
        std::vector<std::pair<int, int>> ipairs;
        ipairs.reserve(pairs.size());
        for (const auto& [lo, hi] : pairs) {
            auto a = index.find(lo), b = index.find(hi);
            if (a == index.end()) throw UnknownLabel("unknown label '" + lo + "'");
            if (b == index.end()) throw UnknownLabel("unknown label '" + hi + "'");
            ipairs.emplace_back(a->second, b->second);
        }
        return from_cover_indices(std::move(labels), ipairs);
    }

    static Poset from_cover_indices(std::vector<std::string> labels,
                                    const std::vector<std::pair<int, int>>& pairs) {
        auto d = std::make_shared<Data>();
        const std::size_t n = labels.size();
        d->labels = std::move(labels);
        for (std::size_t i = 0; i < n; ++i) d->index[d->labels[i]] = static_cast<int>(i);

        std::vector<std::vector<int>> adj(n);
        for (const auto& [a, b] : pairs) {
            if (a == b) throw CycleError("reflexive pair on '" + d->labels[a] + "'");
            adj[a].push_back(b);
        }

        // reachability closure; DFS in reverse topological order
        std::vector<int> order, state(n, 0);
        order.reserve(n);
        std::vector<std::pair<int, std::size_t>> stack;
        for (std::size_t s = 0; s < n; ++s) {
            if (state[s]) continue;
            stack.push_back({static_cast<int>(s), 0});
            state[s] = 1;
            while (!stack.empty()) {
                auto& [v, ei] = stack.back();
                if (ei < adj[v].size()) {
                    int w = adj[v][ei++];
                    if (state[w] == 1)
                        throw CycleError("relation cycle through '" + d->labels[w] + "'");
                    if (state[w] == 0) {
                        state[w] = 1;
                        stack.push_back({w, 0});
                    }
                } else {
                    state[v] = 2;
                    order.push_back(v);
                    stack.pop_back();
                }
            }
        }

        // leq[v] = bitset of everything >= v; postorder guarantees the
        // successors are complete when v is reached
        d->leq.assign(n, boost::dynamic_bitset<>(n));
        for (int v : order) {
            d->leq[v].set(v);
            for (int w : adj[v]) d->leq[v] |= d->leq[w];
        }
        std::vector<boost::dynamic_bitset<>> geq(n, boost::dynamic_bitset<>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = d->leq[a].find_first(); b != boost::dynamic_bitset<>::npos;
                 b = d->leq[a].find_next(b))
                geq[b].set(a);

        // transitive reduction: (a,b) is a cover iff the interval [a,b] is {a,b}
        d->down_covers.assign(n, {});
        d->up_covers.assign(n, {});
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = d->leq[a].find_first(); b != boost::dynamic_bitset<>::npos;
                 b = d->leq[a].find_next(b)) {
                if (a == b) continue;
                auto interval = d->leq[a] & geq[b];
                if (interval.count() == 2)
                    d->covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
        std::sort(d->covers.begin(), d->covers.end());
        for (std::size_t e = 0; e < d->covers.size(); ++e) {
            d->down_covers[d->covers[e].second].push_back(d->covers[e].first);
            d->up_covers[d->covers[e].first].push_back(d->covers[e].second);
            d->edge_index[key(d->covers[e].first, d->covers[e].second)] = static_cast<int>(e);
        }

        d->height.assign(n, 0);
        bool changed = true;  // longest chain below; n rounds max
        while (changed) {
            changed = false;
            for (const auto& [a, b] : d->covers)
                if (d->height[b] < d->height[a] + 1) {
                    d->height[b] = d->height[a] + 1;
                    changed = true;
                }
        }
        Poset p;
        p.d_ = std::move(d);
        return p;
    }

    std::size_t size() const { return d_->labels.size(); }
    const std::vector<std::string>& labels() const { return d_->labels; }
    const std::string& label(int x) const { return d_->labels.at(x); }

    int index_of(const std::string& label) const {
        auto it = d_->index.find(label);
        if (it == d_->index.end()) throw UnknownLabel("unknown label '" + label + "'");
        return it->second;
    }
    bool has_label(const std::string& label) const { return d_->index.count(label) != 0; }

    const std::vector<std::pair<int, int>>& covers() const { return d_->covers; }

    /// Index of the Hasse edge (a,b) with a covered by b; -1 when absent.
    int edge_index(int a, int b) const {
        auto it = d_->edge_index.find(key(a, b));
        return it == d_->edge_index.end() ? -1 : it->second;
    }

    bool leq(int a, int b) const { return d_->leq[a][b]; }
    bool lt(int a, int b) const { return a != b && d_->leq[a][b]; }

    const std::vector<int>& up_covers(int x) const { return d_->up_covers[x]; }
    const std::vector<int>& down_covers(int x) const { return d_->down_covers[x]; }

    std::vector<int> down_set(int x) const {
        check(x);
        std::vector<int> r;
        for (std::size_t y = 0; y < size(); ++y)
            if (d_->leq[y][x]) r.push_back(static_cast<int>(y));
        return r;
    }
    std::vector<int> up_set(int x) const {
        check(x);
        std::vector<int> r;
        for (std::size_t y = 0; y < size(); ++y)
            if (d_->leq[x][y]) r.push_back(static_cast<int>(y));
        return r;
    }
    std::vector<int> punctured_down_set(int x) const {
        auto r = down_set(x);
        r.erase(std::remove(r.begin(), r.end(), x), r.end());
        return r;
    }
    std::vector<int> punctured_up_set(int x) const {
        auto r = up_set(x);
        r.erase(std::remove(r.begin(), r.end(), x), r.end());
        return r;
    }

    int height_of(int x) const { return d_->height[x]; }
    int height() const {
        int h = 0;
        for (std::size_t x = 0; x < size(); ++x) h = std::max(h, d_->height[x]);
        return h;
    }

    std::vector<int> minimal_elements() const {
        std::vector<int> r;
        for (std::size_t x = 0; x < size(); ++x)
            if (d_->down_covers[x].empty()) r.push_back(static_cast<int>(x));
        return r;
    }
    std::vector<int> maximal_elements() const {
        std::vector<int> r;
        for (std::size_t x = 0; x < size(); ++x)
            if (d_->up_covers[x].empty()) r.push_back(static_cast<int>(x));
        return r;
    }

    /// Connected components of the underlying undirected Hasse graph.
    std::vector<int> components() const {
        std::vector<int> comp(size(), -1);
        int c = 0;
        for (std::size_t s = 0; s < size(); ++s) {
            if (comp[s] != -1) continue;
            std::queue<int> q;
            q.push(static_cast<int>(s));
            comp[s] = c;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : d_->up_covers[v])
                    if (comp[w] == -1) comp[w] = c, q.push(w);
                for (int w : d_->down_covers[v])
                    if (comp[w] == -1) comp[w] = c, q.push(w);
            }
            ++c;
        }
        return comp;
    }
    int component_count() const {
        auto c = components();
        return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
    }
    bool connected() const { return component_count() <= 1; }

    /// Subposet induced on `keep` (kept in this poset's element order).
    Poset induced(std::vector<int> keep) const {
        std::sort(keep.begin(), keep.end());
        std::vector<std::string> labels;
        labels.reserve(keep.size());
        for (int x : keep) labels.push_back(d_->labels[x]);
        std::vector<std::pair<int, int>> rel;
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j)
                if (i != j && d_->leq[keep[i]][keep[j]])
                    rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
        return from_cover_indices(std::move(labels), rel);
    }

    bool same_data(const Poset& o) const { return d_ == o.d_; }
    bool operator==(const Poset& o) const {
        return d_ == o.d_ || (d_->labels == o.d_->labels && d_->covers == o.d_->covers);
    }

private:
    struct Data {
        std::vector<std::string> labels;
        std::unordered_map<std::string, int> index;
        std::vector<std::pair<int, int>> covers;  // (lower, upper), sorted
        std::unordered_map<long long, int> edge_index;
        std::vector<boost::dynamic_bitset<>> leq;  // leq[a][b] : a <= b
        std::vector<std::vector<int>> up_covers, down_covers;
        std::vector<int> height;
    };

    static long long key(int a, int b) { return (static_cast<long long>(a) << 32) | static_cast<unsigned>(b); }
    void check(int x) const {
        if (x < 0 || static_cast<std::size_t>(x) >= size())
            throw UnknownLabel("element index out of range");
    }

    std::shared_ptr<const Data> d_;
    friend class PosetBuilderAccess;
};

/// A subgraph of the Hasse diagram. It is itself the Hasse diagram of a
/// (usually different) poset, available via space().
struct Subdiagram {
    Poset parent;
    std::vector<int> vertices;  // sorted parent element indices
    std::vector<int> edges;     // sorted indices into parent.covers()

    static Subdiagram full(const Poset& p) {
        Subdiagram s;
        s.parent = p;
        s.vertices.resize(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) s.vertices[i] = static_cast<int>(i);
        s.edges.resize(p.covers().size());
        for (std::size_t e = 0; e < p.covers().size(); ++e) s.edges[e] = static_cast<int>(e);
        return s;
    }

    static Subdiagram make(const Poset& p, std::vector<int> vertices, std::vector<int> edges) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        Subdiagram s;
        s.parent = p;
        s.vertices = std::move(vertices);
        s.edges = std::move(edges);
        for (int e : s.edges) {
            if (e < 0 || static_cast<std::size_t>(e) >= p.covers().size())
                throw InvalidArgument("subdiagram edge index out of range");
            const auto& [a, b] = p.covers()[e];
            if (!s.has_vertex(a) || !s.has_vertex(b))
                throw InvalidArgument("subdiagram edge endpoint not among its vertices");
        }
        return s;
    }

    bool has_vertex(int v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    bool has_edge(int e) const { return std::binary_search(edges.begin(), edges.end(), e); }

    /// The poset whose Hasse diagram is this subdiagram.
    Poset space() const {
        std::vector<std::string> labels;
        labels.reserve(vertices.size());
        std::unordered_map<int, int> to_local;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            labels.push_back(parent.label(vertices[i]));
            to_local[vertices[i]] = static_cast<int>(i);
        }
        std::vector<std::pair<int, int>> pairs;
        for (int e : edges) {
            const auto& [a, b] = parent.covers()[e];
            pairs.emplace_back(to_local[a], to_local[b]);
        }
        return Poset::from_cover_indices(std::move(labels), pairs);
    }

    bool connected() const {
        if (vertices.empty()) return true;
        std::unordered_map<int, int> to_local;
        for (std::size_t i = 0; i < vertices.size(); ++i) to_local[vertices[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> adj(vertices.size());
        for (int e : edges) {
            const auto& [a, b] = parent.covers()[e];
            adj[to_local[a]].push_back(to_local[b]);
            adj[to_local[b]].push_back(to_local[a]);
        }
        std::vector<char> seen(vertices.size(), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        std::size_t cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!seen[w]) seen[w] = 1, ++cnt, q.push(w);
        }
        return cnt == vertices.size();
    }
};

/// Order-preserving map between posets; continuity for the down-set topology.
struct MonotoneMap {
    Poset source, target;
    std::vector<int> assignment;  // source index -> target index

    MonotoneMap() = default;
    MonotoneMap(Poset src, Poset tgt, std::vector<int> a)
        : source(std::move(src)), target(std::move(tgt)), assignment(std::move(a)) {
        if (assignment.size() != source.size())
            throw InvalidArgument("map must assign every element");
        for (const auto& [x, y] : source.covers())
            if (!target.leq(assignment[x], assignment[y]))
                throw InvalidArgument("assignment is not order-preserving at edge (" +
                                      source.label(x) + "," + source.label(y) + ")");
    }

    int operator()(int x) const { return assignment.at(x); }

    bool surjective() const {
        std::vector<char> hit(target.size(), 0);
        for (int y : assignment) hit[y] = 1;
        for (char h : hit)
            if (!h) return false;
        return true;
    }
};

inline std::vector<int> beat_points(const Poset& p) {
    std::vector<int> r;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.up_covers(static_cast<int>(x)).size() == 1 ||
            p.down_covers(static_cast<int>(x)).size() == 1)
            r.push_back(static_cast<int>(x));
    return r;
}

/// Iteratively removes the first-listed beat point until none remain.
inline Poset core(const Poset& p) {
    Poset cur = p;
    for (;;) {
        auto bp = beat_points(cur);
        if (bp.empty()) return cur;
        std::vector<int> keep;
        for (std::size_t x = 0; x < cur.size(); ++x)
            if (static_cast<int>(x) != bp.front()) keep.push_back(static_cast<int>(x));
        cur = cur.induced(keep);
    }
}

inline Poset opposite(const Poset& p) {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(p.covers().size());
    for (const auto& [a, b] : p.covers()) rev.emplace_back(b, a);
    return Poset::from_cover_indices(p.labels(), rev);
}

inline Poset product(const Poset& x, const Poset& y) {
    std::vector<std::string> labels;
    labels.reserve(x.size() * y.size());
    auto id = [&](int a, int b) { return a * static_cast<int>(y.size()) + b; };
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < y.size(); ++b)
            labels.push_back("(" + x.label(static_cast<int>(a)) + "," + y.label(static_cast<int>(b)) + ")");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [a, a2] : x.covers())
        for (std::size_t b = 0; b < y.size(); ++b)
            pairs.emplace_back(id(a, static_cast<int>(b)), id(a2, static_cast<int>(b)));
    for (const auto& [b, b2] : y.covers())
        for (std::size_t a = 0; a < x.size(); ++a)
            pairs.emplace_back(id(static_cast<int>(a), b), id(static_cast<int>(a), b2));
    return Poset::from_cover_indices(std::move(labels), pairs);
}

struct MappingCylinder {
    Poset cylinder;
    MonotoneMap retraction;        // cylinder -> target
    std::vector<int> source_to_cylinder;
    std::vector<int> target_to_cylinder;
};

/// Non-Hausdorff mapping cylinder of f: disjoint union of source and target
/// with y < x exactly when y <= f(x). Deformation retracts onto the target.
inline MappingCylinder mapping_cylinder(const MonotoneMap& f) {
    const Poset& X = f.source;
    const Poset& Y = f.target;
    std::vector<std::string> labels;
    std::vector<int> tgt_to(Y.size()), src_to(X.size());
    for (std::size_t y = 0; y < Y.size(); ++y) {
        tgt_to[y] = static_cast<int>(labels.size());
        labels.push_back("t:" + Y.label(static_cast<int>(y)));
    }
    for (std::size_t x = 0; x < X.size(); ++x) {
        src_to[x] = static_cast<int>(labels.size());
        labels.push_back("s:" + X.label(static_cast<int>(x)));
    }
    std::vector<std::pair<int, int>> rel;
    for (const auto& [a, b] : Y.covers()) rel.emplace_back(tgt_to[a], tgt_to[b]);
    for (const auto& [a, b] : X.covers()) rel.emplace_back(src_to[a], src_to[b]);
    for (std::size_t x = 0; x < X.size(); ++x)
        for (std::size_t y = 0; y < Y.size(); ++y)
            if (Y.leq(static_cast<int>(y), f(static_cast<int>(x))))
                rel.emplace_back(tgt_to[y], src_to[x]);
    MappingCylinder mc;
    mc.cylinder = Poset::from_cover_indices(std::move(labels), rel);
    std::vector<int> r(mc.cylinder.size());
    for (std::size_t y = 0; y < Y.size(); ++y) r[tgt_to[y]] = static_cast<int>(y);
    for (std::size_t x = 0; x < X.size(); ++x) r[src_to[x]] = f(static_cast<int>(x));
    mc.retraction = MonotoneMap(mc.cylinder, Y, std::move(r));
    mc.source_to_cylinder = std::move(src_to);
    mc.target_to_cylinder = std::move(tgt_to);
    return mc;
}

/// Wedge: Hasse diagrams glued at the first minimal element of each part.
inline Poset wedge(const Poset& x, const Poset& y) {
    auto xmin = x.minimal_elements();
    auto ymin = y.minimal_elements();
    if (xmin.empty() || ymin.empty()) throw InvalidArgument("wedge of an empty poset");
    const int mx = xmin.front(), my = ymin.front();
    std::vector<std::string> labels;
    std::vector<int> xi(x.size()), yi(y.size());
    labels.push_back("w");
    xi[mx] = 0;
    yi[my] = 0;
    for (std::size_t a = 0; a < x.size(); ++a)
        if (static_cast<int>(a) != mx) {
            xi[a] = static_cast<int>(labels.size());
            labels.push_back("l:" + x.label(static_cast<int>(a)));
        }
    for (std::size_t b = 0; b < y.size(); ++b)
        if (static_cast<int>(b) != my) {
            yi[b] = static_cast<int>(labels.size());
            labels.push_back("r:" + y.label(static_cast<int>(b)));
        }
    std::vector<std::pair<int, int>> rel;
    for (const auto& [a, b] : x.covers()) rel.emplace_back(xi[a], xi[b]);
    for (const auto& [a, b] : y.covers()) rel.emplace_back(yi[a], yi[b]);
    return Poset::from_cover_indices(std::move(labels), rel);
}

}  // namespace fintop
