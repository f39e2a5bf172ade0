#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "fintop/group.hpp"
#include "fintop/poset.hpp"

namespace fintop {

/// Walk in the Hasse diagram; each step traverses one Hasse edge up or down.
struct EdgePath {
    Poset poset;
    std::vector<std::pair<int, int>> steps;  // (from, to)

    EdgePath() = default;
    EdgePath(Poset p, std::vector<std::pair<int, int>> s, int start_hint = -1)
        : poset(std::move(p)), steps(std::move(s)), start_(start_hint) {
        for (std::size_t i = 0; i < steps.size(); ++i) {
            auto [a, b] = steps[i];
            if (poset.edge_index(a, b) < 0 && poset.edge_index(b, a) < 0)
                throw InvalidArgument("edge-path step (" + poset.label(a) + "," + poset.label(b) +
                                      ") is not a Hasse edge");
            if (i > 0 && steps[i - 1].second != a)
                throw InvalidArgument("edge-path steps do not chain");
        }
        if (!steps.empty()) start_ = steps.front().first;
        if (start_ < 0) throw InvalidArgument("empty edge-path needs a base point");
    }

    static EdgePath empty_at(Poset p, int x) { return EdgePath(std::move(p), {}, x); }

    bool empty() const { return steps.empty(); }
    int start() const { return steps.empty() ? start_ : steps.front().first; }
    int end() const { return steps.empty() ? start_ : steps.back().second; }
    bool closed() const { return start() == end(); }

    EdgePath reversed() const {
        std::vector<std::pair<int, int>> r;
        r.reserve(steps.size());
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) r.push_back({it->second, it->first});
        return EdgePath(poset, std::move(r), end());
    }

    EdgePath operator*(const EdgePath& o) const {
        if (end() != o.start()) throw InvalidArgument("edge-paths do not compose");
        auto s = steps;
        s.insert(s.end(), o.steps.begin(), o.steps.end());
        return EdgePath(poset, std::move(s), start());
    }

private:
    int start_ = -1;
};

/// Two distinct saturated chains between the same pair x < y; simple when
/// the chain interiors are disjoint.
struct Digon {
    int bottom = -1, top = -1;
    std::vector<int> chain1, chain2;  // element sequences bottom..top

    std::string describe(const Poset& p) const {
        auto show = [&](const std::vector<int>& c) {
            std::string s;
            for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "<" : "") + p.label(c[i]);
            return s;
        };
        return show(chain1) + " vs " + show(chain2);
    }
};

/// Spanning tree of the underlying undirected Hasse graph, BFS from the
/// first-listed element.
inline Subdiagram spanning_tree_subdiagram(const Poset& x) {
    if (x.size() == 0) throw NotConnected("empty poset");
    std::vector<char> seen(x.size(), 0);
    std::vector<int> tree_edges;
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : x.up_covers(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                tree_edges.push_back(x.edge_index(v, w));
                q.push(w);
            }
        for (int w : x.down_covers(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                tree_edges.push_back(x.edge_index(w, v));
                q.push(w);
            }
    }
    if (reached != x.size()) throw NotConnected("poset is not connected");
    std::vector<int> verts(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) verts[i] = static_cast<int>(i);
    return Subdiagram::make(x, verts, tree_edges);
}

namespace detail {

inline void saturated_chains(const Poset& p, int from, int to, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
    if (from == to) {
        out.push_back(cur);
        return;
    }
    for (int w : p.up_covers(from))
        if (p.leq(w, to)) {
            cur.push_back(w);
            saturated_chains(p, w, to, cur, out);
            cur.pop_back();
        }
}

}  // namespace detail

/// All saturated chains from x to y, each as bottom..top element sequence.
inline std::vector<std::vector<int>> saturated_chains(const Poset& p, int x, int y) {
    std::vector<std::vector<int>> out;
    if (!p.leq(x, y)) return out;
    std::vector<int> cur{x};
    detail::saturated_chains(p, x, y, cur, out);
    return out;
}

/// Every simple digon of X, each unordered chain pair reported once, in
/// deterministic (bottom, top, chains) order.
inline std::vector<Digon> simple_digons(const Poset& x) {
    std::vector<Digon> out;
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < x.size(); ++b) {
            if (a == b || !x.leq(static_cast<int>(a), static_cast<int>(b))) continue;
            auto chains = saturated_chains(x, static_cast<int>(a), static_cast<int>(b));
            for (std::size_t i = 0; i < chains.size(); ++i)
                for (std::size_t j = i + 1; j < chains.size(); ++j) {
                    bool disjoint = true;
                    for (std::size_t u = 1; u + 1 < chains[i].size() && disjoint; ++u)
                        for (std::size_t v = 1; v + 1 < chains[j].size() && disjoint; ++v)
                            if (chains[i][u] == chains[j][v]) disjoint = false;
                    if (!disjoint) continue;
                    Digon d;
                    d.bottom = static_cast<int>(a);
                    d.top = static_cast<int>(b);
                    d.chain1 = chains[i];
                    d.chain2 = chains[j];
                    out.push_back(std::move(d));
                }
        }
    return out;
}

/// Presentation of the fundamental group from a simply-connected subdiagram:
/// one generator per Hasse edge outside D, one relator per simple digon,
/// chains read bottom-to-top, relator emitted as left * right^-1.
struct Pi1Presentation {
    Poset poset;
    int base = 0;
    Subdiagram diagram;                // D
    GroupPresentation presentation;
    Group group;                       // Group::presented(presentation)
    std::vector<int> generator_edge;   // generator -> cover index
    std::vector<int> edge_generator;   // cover index -> generator or -1
    std::vector<EdgePath> base_paths;  // gamma_x from base to x, inside D
};

/// Word of non-tree edges traversed by a closed edge-path, upward steps
/// positive. Not freely reduced.
inline Word cycle_word(const EdgePath& xi, const Pi1Presentation& p) {
    if (!xi.closed() || xi.start() != p.base)
        throw InvalidArgument("edge-path must be closed at the presentation base point");
    Word w;
    for (auto [a, b] : xi.steps) {
        int up = xi.poset.edge_index(a, b);
        if (up >= 0) {
            int g = p.edge_generator[up];
            if (g >= 0) w.append(g, 1);
        } else {
            int down = xi.poset.edge_index(b, a);
            int g = p.edge_generator[down];
            if (g >= 0) w.append(g, -1);
        }
    }
    return w;
}

namespace detail {

/// BFS paths from `base` through the edges of `sub`; disengaged for
/// vertices the subdiagram does not reach.
inline std::vector<std::optional<EdgePath>> tree_paths_partial(const Poset& x,
                                                               const Subdiagram& sub, int base) {
    std::vector<int> parent(x.size(), -1);
    std::vector<char> seen(x.size(), 0);
    std::vector<std::vector<int>> adj(x.size());
    for (int e : sub.edges) {
        adj[x.covers()[e].first].push_back(e);
        adj[x.covers()[e].second].push_back(e);
    }
    std::queue<int> q;
    q.push(base);
    seen[base] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : adj[v]) {
            auto [lo, hi] = x.covers()[e];
            int w = lo == v ? hi : lo;
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                q.push(w);
            }
        }
    }
    std::vector<std::optional<EdgePath>> paths(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
        if (!seen[v]) continue;
        std::vector<std::pair<int, int>> steps;
        int cur = static_cast<int>(v);
        while (cur != base) {
            steps.push_back({parent[cur], cur});
            cur = parent[cur];
        }
        std::reverse(steps.begin(), steps.end());
        paths[v] = EdgePath(x, std::move(steps), base);
    }
    return paths;
}

/// Paths from `base` to every vertex through the edges of `sub`, which must
/// reach all of them.
inline std::vector<EdgePath> tree_paths(const Poset& x, const Subdiagram& sub, int base) {
    auto partial = tree_paths_partial(x, sub, base);
    std::vector<EdgePath> paths;
    paths.reserve(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
        if (!partial[v])
            throw NotConnected("subdiagram does not reach '" + x.label(static_cast<int>(v)) + "'");
        paths.push_back(std::move(*partial[v]));
    }
    return paths;
}

}  // namespace detail

Tri is_simply_connected(const Poset& x, long budget);

inline Pi1Presentation pi1_presentation(const Poset& x, int base,
                                        std::optional<Subdiagram> d_opt = std::nullopt,
                                        long budget = 20000) {
    if (!x.connected()) throw NotConnected("poset is not connected");
    Subdiagram d = d_opt ? *d_opt : spanning_tree_subdiagram(x);
    if (d_opt) {
        if (!d.connected()) throw PossiblyNotSimplyConnected("subdiagram is not connected");
        if (is_simply_connected(d.space(), budget) != Tri::Yes)
            throw PossiblyNotSimplyConnected(
                "could not certify the subdiagram simply-connected");
        // extend by pendant tree edges until every vertex is reached; the
        // extension deformation retracts onto the original subdiagram
        std::vector<char> inside(x.size(), 0);
        for (int v : d.vertices) inside[v] = 1;
        auto verts = d.vertices;
        auto edges = d.edges;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t e = 0; e < x.covers().size(); ++e) {
                auto [a, b] = x.covers()[e];
                if (inside[a] == inside[b]) continue;
                int fresh = inside[a] ? b : a;
                inside[fresh] = 1;
                verts.push_back(fresh);
                edges.push_back(static_cast<int>(e));
                grew = true;
            }
        }
        for (std::size_t v = 0; v < x.size(); ++v)
            if (!inside[v]) throw NotConnected("poset is not connected");
        d = Subdiagram::make(x, verts, edges);
    }

    Pi1Presentation p;
    p.poset = x;
    p.base = base;
    p.diagram = d;
    p.edge_generator.assign(x.covers().size(), -1);
    std::vector<std::string> names;
    for (std::size_t e = 0; e < x.covers().size(); ++e) {
        if (d.has_edge(static_cast<int>(e))) continue;
        p.edge_generator[e] = static_cast<int>(names.size());
        p.generator_edge.push_back(static_cast<int>(e));
        names.push_back("e" + std::to_string(e));
    }

    auto chain_word = [&](const std::vector<int>& chain) {
        Word w;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            int e = x.edge_index(chain[i], chain[i + 1]);
            if (p.edge_generator[e] >= 0) w.append(p.edge_generator[e], 1);
        }
        return w;
    };
    std::vector<Word> relators;
    for (const auto& digon : simple_digons(x)) {
        Word r = free_reduce(chain_word(digon.chain1) * chain_word(digon.chain2).inverse());
        if (!r.empty()) relators.push_back(std::move(r));
    }
    p.presentation = GroupPresentation(names, relators);
    p.group = Group::presented(p.presentation, budget);
    p.base_paths = detail::tree_paths(x, d, base);
    return p;
}

/// Yes when the presentation simplifies to the trivial group, No when the
/// abelianization is nontrivial, Unknown otherwise.
inline Tri is_simply_connected(const Poset& x, long budget = 20000) {
    if (!x.connected()) throw NotConnected("poset is not connected");
    Pi1Presentation p = pi1_presentation(x, 0, std::nullopt, budget);
    const auto& s = p.group.simplified();
    if (s.known && s.known->kind == KnownGroup::Kind::Trivial) return Tri::Yes;
    const auto& ab = p.group.abelianization().group();
    if (ab.rank() != 0 || !ab.divisors().empty()) return Tri::No;
    return Tri::Unknown;
}

struct VanKampenResult {
    GroupPresentation presentation;
    enum class Verdict { Exact, EpimorphismOnly } verdict;
    std::vector<int> generator_edge;  // generator -> cover index of X
};

/// Pushout presentation of pi1 from a two-part decomposition of the Hasse
/// diagram. Exact when every simple digon of X lies in one of the parts,
/// otherwise only an epimorphism onto pi1(X) is guaranteed.
inline VanKampenResult van_kampen(const Poset& x, const Subdiagram& a, const Subdiagram& b,
                                  int base) {
    if (!a.parent.same_data(x) || !b.parent.same_data(x))
        throw HypothesisViolation("parts must be subdiagrams of the given poset");
    if (!a.connected()) throw HypothesisViolation("part A is not connected");
    if (!b.connected()) throw HypothesisViolation("part B is not connected");
    for (std::size_t e = 0; e < x.covers().size(); ++e)
        if (!a.has_edge(static_cast<int>(e)) && !b.has_edge(static_cast<int>(e)))
            throw HypothesisViolation("edge " + std::to_string(e) + " lies in neither part");

    std::vector<int> cv, ce;
    for (int v : a.vertices)
        if (b.has_vertex(v)) cv.push_back(v);
    for (int e : a.edges)
        if (b.has_edge(e)) ce.push_back(e);
    Subdiagram c = Subdiagram::make(x, cv, ce);
    if (c.vertices.empty() || !c.connected())
        throw HypothesisViolation("intersection is empty or not connected");
    if (!c.has_vertex(base)) throw HypothesisViolation("base point not in the intersection");

    // spanning tree of C, extended to trees of A and of B
    auto grow_tree = [&](const Subdiagram& part, std::vector<char>& seen,
                         std::vector<int>& tree_edges) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int e : part.edges) {
                auto [lo, hi] = x.covers()[e];
                if (seen[lo] == seen[hi]) continue;
                seen[lo] = seen[hi] = 1;
                tree_edges.push_back(e);
                grew = true;
            }
        }
    };
    std::vector<char> seen(x.size(), 0);
    std::vector<int> dc_edges;
    seen[c.vertices.front()] = 1;
    grow_tree(c, seen, dc_edges);
    for (int v : c.vertices)
        if (!seen[v]) throw HypothesisViolation("intersection is not connected");
    std::vector<char> seen_a = seen, seen_b = seen;
    std::vector<int> da_edges = dc_edges, db_edges = dc_edges;
    grow_tree(a, seen_a, da_edges);
    grow_tree(b, seen_b, db_edges);
    for (int v : a.vertices)
        if (!seen_a[v]) throw HypothesisViolation("part A is not connected");
    for (int v : b.vertices)
        if (!seen_b[v]) throw HypothesisViolation("part B is not connected");

    std::vector<char> in_tree(x.covers().size(), 0);
    for (int e : da_edges) in_tree[e] = 1;
    for (int e : db_edges) in_tree[e] = 1;

    // generators: non-tree edges of C, then of A-only, then of B-only
    std::vector<int> gen_edges;
    std::vector<int> edge_gen(x.covers().size(), -1);
    auto add_gens = [&](const std::vector<int>& edges, auto&& filter) {
        for (int e : edges)
            if (!in_tree[e] && edge_gen[e] < 0 && filter(e)) {
                edge_gen[e] = static_cast<int>(gen_edges.size());
                gen_edges.push_back(e);
            }
    };
    add_gens(c.edges, [](int) { return true; });
    add_gens(a.edges, [&](int e) { return !c.has_edge(e); });
    add_gens(b.edges, [&](int e) { return !c.has_edge(e); });

    std::vector<std::string> names;
    for (int e : gen_edges) names.push_back("e" + std::to_string(e));

    auto chain_word = [&](const Poset& sub, const std::vector<int>& chain) {
        // chain lives in a subdiagram space; translate labels back to X
        Word w;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            int lo = x.index_of(sub.label(chain[i]));
            int hi = x.index_of(sub.label(chain[i + 1]));
            int e = x.edge_index(lo, hi);
            if (edge_gen[e] >= 0) w.append(edge_gen[e], 1);
        }
        return w;
    };
    auto digon_in = [&](const Subdiagram& part, const Poset& sub, const Digon& d) {
        for (const auto* chain : {&d.chain1, &d.chain2})
            for (std::size_t i = 0; i + 1 < chain->size(); ++i) {
                int lo = x.index_of(sub.label((*chain)[i]));
                int hi = x.index_of(sub.label((*chain)[i + 1]));
                if (!part.has_edge(x.edge_index(lo, hi))) return false;
            }
        return true;
    };

    std::vector<Word> relators;
    auto add_relators = [&](const Subdiagram& part, auto&& keep) {
        Poset sub = part.space();
        for (const auto& d : simple_digons(sub)) {
            if (!keep(sub, d)) continue;
            Word r = free_reduce(chain_word(sub, d.chain1) * chain_word(sub, d.chain2).inverse());
            if (!r.empty()) relators.push_back(std::move(r));
        }
    };
    add_relators(c, [](const Poset&, const Digon&) { return true; });
    add_relators(a, [&](const Poset& sub, const Digon& d) { return !digon_in(c, sub, d); });
    add_relators(b, [&](const Poset& sub, const Digon& d) { return !digon_in(c, sub, d); });

    VanKampenResult res;
    res.presentation = GroupPresentation(names, relators);
    res.generator_edge = gen_edges;
    res.verdict = VanKampenResult::Verdict::Exact;
    auto digon_in_x = [&](const Subdiagram& part, const Digon& d) {
        for (const auto* chain : {&d.chain1, &d.chain2})
            for (std::size_t i = 0; i + 1 < chain->size(); ++i)
                if (!part.has_edge(x.edge_index((*chain)[i], (*chain)[i + 1]))) return false;
        return true;
    };
    for (const auto& d : simple_digons(x))
        if (!digon_in_x(a, d) && !digon_in_x(b, d)) {
            res.verdict = VanKampenResult::Verdict::EpimorphismOnly;
            break;
        }
    return res;
}

}  // namespace fintop
