#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fintop/group.hpp"
#include "fintop/pi1.hpp"
#include "fintop/poset.hpp"

namespace fintop {

/// G-coloring of a Hasse diagram: one group element per cover, stored on
/// the upward orientation only; downward colors are derived as inverses.
class Coloring {
public:
    Coloring() = default;
    Coloring(Poset p, Group g, std::vector<GroupElement> colors)
        : poset_(std::move(p)), group_(std::move(g)), colors_(std::move(colors)) {
        if (colors_.size() != poset_.covers().size())
            throw InvalidArgument("coloring must assign every Hasse edge");
    }

    static Coloring trivial(const Poset& p, const Group& g) {
        return Coloring(p, g, std::vector<GroupElement>(p.covers().size(), g.identity()));
    }

    const Poset& poset() const { return poset_; }
    const Group& group() const { return group_; }
    const std::vector<GroupElement>& colors() const { return colors_; }

    const GroupElement& color(int edge) const { return colors_.at(edge); }

    /// Color of the directed traversal a -> b (inverted when downward).
    GroupElement directed_color(int a, int b) const {
        int up = poset_.edge_index(a, b);
        if (up >= 0) return colors_[up];
        int down = poset_.edge_index(b, a);
        if (down >= 0) return group_.inv(colors_[down]);
        throw InvalidArgument("(" + poset_.label(a) + "," + poset_.label(b) +
                              ") is not a Hasse edge");
    }

private:
    Poset poset_;
    Group group_;
    std::vector<GroupElement> colors_;
};

inline GroupElement weight(const Coloring& c, const EdgePath& xi) {
    GroupElement w = c.group().identity();
    for (auto [a, b] : xi.steps) w = c.group().mul(w, c.directed_color(a, b));
    return w;
}

struct AdmissibilityReport {
    Tri verdict = Tri::Unknown;
    std::optional<Digon> counterexample;  // two chains with distinct weights
};

/// Per-interval unique-weight propagation: for every bottom x, walk the
/// up-set of x in height order and demand that all saturated chains into
/// each element agree. Conflicts are localized to a digon.
inline AdmissibilityReport is_admissible(const Coloring& c) {
    const Poset& p = c.poset();
    const Group& g = c.group();
    AdmissibilityReport report;
    report.verdict = Tri::Yes;
    for (std::size_t x = 0; x < p.size(); ++x) {
        auto up = p.up_set(static_cast<int>(x));
        std::sort(up.begin(), up.end(), [&](int a, int b) {
            if (p.height_of(a) != p.height_of(b)) return p.height_of(a) < p.height_of(b);
            return a < b;
        });
        std::vector<std::optional<GroupElement>> w(p.size());
        std::vector<int> parent(p.size(), -1);
        w[x] = g.identity();
        for (int y : up) {
            if (y == static_cast<int>(x)) continue;
            for (int v : p.down_covers(y)) {
                if (!w[v]) continue;  // v outside the interval
                GroupElement cand = g.mul(*w[v], c.color(p.edge_index(v, y)));
                if (!w[y]) {
                    w[y] = std::move(cand);
                    parent[y] = v;
                    continue;
                }
                Tri eq = g.equal(*w[y], cand);
                if (eq == Tri::Yes) continue;
                auto backtrack = [&](int top, int first_parent) {
                    std::vector<int> chain{top};
                    int cur = first_parent;
                    while (cur != -1) {
                        chain.push_back(cur);
                        cur = cur == static_cast<int>(x) ? -1 : parent[cur];
                    }
                    std::reverse(chain.begin(), chain.end());
                    return chain;
                };
                Digon d;
                d.bottom = static_cast<int>(x);
                d.top = y;
                d.chain1 = backtrack(y, parent[y]);
                d.chain2 = backtrack(y, v);
                if (eq == Tri::No) {
                    report.verdict = Tri::No;
                    report.counterexample = std::move(d);
                    return report;
                }
                report.verdict = Tri::Unknown;
                if (!report.counterexample) report.counterexample = std::move(d);
            }
        }
    }
    return report;
}

namespace detail {

/// Fundamental cycle weights of the non-tree edges, with the tree paths
/// rooted at `base`.
struct FundamentalCycles {
    Subdiagram tree;
    std::vector<EdgePath> paths;     // base -> x within the tree
    std::vector<int> edges;          // non-tree cover indices
    std::vector<EdgePath> cycles;    // gamma_u (u,v) gamma_v^-1
};

inline FundamentalCycles fundamental_cycles(const Poset& p, int base) {
    FundamentalCycles fc;
    fc.tree = spanning_tree_subdiagram(p);
    fc.paths = tree_paths(p, fc.tree, base);
    for (std::size_t e = 0; e < p.covers().size(); ++e) {
        if (fc.tree.has_edge(static_cast<int>(e))) continue;
        auto [u, v] = p.covers()[e];
        EdgePath step(p, {{u, v}});
        fc.edges.push_back(static_cast<int>(e));
        fc.cycles.push_back(fc.paths[u] * step * fc.paths[v].reversed());
    }
    return fc;
}

}  // namespace detail

/// Do the closed-path weights generate the whole group? Decidable for table
/// and f.g. abelian groups; for presented groups only a No via the
/// abelianization is certified, everything else is Unknown.
inline Tri is_connected_coloring(const Coloring& c, int base) {
    if (!c.poset().connected()) throw NotConnected("poset is not connected");
    auto fc = detail::fundamental_cycles(c.poset(), base);
    std::vector<GroupElement> weights;
    for (const auto& cy : fc.cycles) weights.push_back(weight(c, cy));
    const Group& g = c.group();
    switch (g.kind()) {
        case Group::Kind::Finite: {
            std::vector<int> s;
            for (const auto& w : weights) s.push_back(std::get<int>(w));
            return subgroup_closure(g.finite_group(), s).size() == g.finite_group().order()
                       ? Tri::Yes
                       : Tri::No;
        }
        case Group::Kind::Abelian: {
            std::vector<AbVec> vs;
            for (const auto& w : weights) vs.push_back(std::get<AbVec>(w));
            return g.abelian_group().generates(vs) ? Tri::Yes : Tri::No;
        }
        default: {
            const auto& ab = g.abelianization();
            std::vector<AbVec> vs;
            for (const auto& w : weights) vs.push_back(ab.eval(std::get<Word>(w)));
            if (!ab.group().generates(vs)) return Tri::No;
            return Tri::Unknown;
        }
    }
}

/// Witness of coloring equivalence: c2(x,y) = phi(g_x c1(x,y) g_y^-1).
/// Verified on construction.
struct ColoringEquivalence {
    std::vector<int> automorphism;       // permutation of table-group elements
    std::vector<GroupElement> g;         // per poset element

    ColoringEquivalence(const Coloring& c1, const Coloring& c2, std::vector<int> phi,
                        std::vector<GroupElement> gx)
        : automorphism(std::move(phi)), g(std::move(gx)) {
        const FiniteGroup& fg = c1.group().finite_group();
        const Poset& p = c1.poset();
        for (std::size_t e = 0; e < p.covers().size(); ++e) {
            auto [a, b] = p.covers()[e];
            int lhs = std::get<int>(c2.color(static_cast<int>(e)));
            int inner = fg.mul(fg.mul(std::get<int>(g[a]), std::get<int>(c1.color(static_cast<int>(e)))),
                               fg.inv(std::get<int>(g[b])));
            if (lhs != automorphism[inner])
                throw InvalidArgument("equivalence witness fails at edge " + std::to_string(e));
        }
    }
};

struct EquivalenceReport {
    Tri verdict = Tri::Unknown;
    std::optional<ColoringEquivalence> witness;
    std::string detail;
};

/// Equivalence of admissible connected colorings over a common finite group:
/// complete search over Aut(G) on fundamental-cycle weights. Other kinds
/// yield No when abelianized invariants differ, otherwise Unknown.
inline EquivalenceReport are_equivalent(const Coloring& c1, const Coloring& c2, int base = 0,
                                        std::size_t aut_bound = 16) {
    if (!(c1.poset() == c2.poset()))
        throw InvalidArgument("colorings live on different posets");
    if (!c1.group().same_data(c2.group()) && c1.group().describe() != c2.group().describe())
        throw InvalidArgument("colorings use different groups");
    EquivalenceReport rep;
    const Group& g = c1.group();
    auto fc = detail::fundamental_cycles(c1.poset(), base);
    std::vector<GroupElement> w1, w2;
    for (const auto& cy : fc.cycles) {
        w1.push_back(weight(c1, cy));
        w2.push_back(weight(c2, cy));
    }

    if (g.kind() == Group::Kind::Finite) {
        const FiniteGroup& fg = g.finite_group();
        std::vector<std::vector<int>> auts;
        try {
            auts = automorphisms(fg, aut_bound);
        } catch (const GroupTooLarge&) {
            rep.verdict = Tri::Unknown;
            rep.detail = "automorphism enumeration over the bound";
            return rep;
        }
        for (const auto& psi : auts) {
            bool match = true;
            for (std::size_t i = 0; i < w1.size() && match; ++i)
                match = psi[std::get<int>(w1[i])] == std::get<int>(w2[i]);
            if (!match) continue;
            // reconstruct the per-element family from tree-path weights
            std::vector<int> psi_inv(fg.order());
            for (std::size_t a = 0; a < fg.order(); ++a) psi_inv[psi[a]] = static_cast<int>(a);
            std::vector<GroupElement> gx;
            for (std::size_t v = 0; v < c1.poset().size(); ++v) {
                int t1 = std::get<int>(weight(c1, fc.paths[v]));
                int t2 = std::get<int>(weight(c2, fc.paths[v]));
                gx.push_back(fg.mul(fg.inv(psi_inv[t2]), t1));
            }
            rep.verdict = Tri::Yes;
            rep.witness.emplace(c1, c2, psi, std::move(gx));
            return rep;
        }
        rep.verdict = Tri::No;
        return rep;
    }

    // sound refutation: the subgroups generated by the abelianized weights
    // must be abstractly isomorphic for equivalent colorings
    auto invariants = [&](const std::vector<GroupElement>& ws) {
        std::vector<AbVec> vs;
        if (g.kind() == Group::Kind::Abelian) {
            for (const auto& w : ws) vs.push_back(std::get<AbVec>(w));
            return g.abelian_group().subgroup_invariants(vs);
        }
        const auto& ab = g.abelianization();
        for (const auto& w : ws) vs.push_back(ab.eval(std::get<Word>(w)));
        return ab.group().subgroup_invariants(vs);
    };
    if (invariants(w1) != invariants(w2)) {
        rep.verdict = Tri::No;
        rep.detail = "abelianized weight subgroups are not isomorphic";
        return rep;
    }
    rep.verdict = Tri::Unknown;
    return rep;
}

/// Standard coloring attached to a pi1 presentation: identity on the
/// subdiagram D, its own generator on every other edge. Admissible and
/// connected by construction.
inline Coloring standard_coloring(const Pi1Presentation& p) {
    std::vector<GroupElement> colors;
    for (std::size_t e = 0; e < p.poset.covers().size(); ++e) {
        int g = p.edge_generator[e];
        colors.push_back(g < 0 ? GroupElement(Word{}) : GroupElement(Word::gen(g)));
    }
    return Coloring(p.poset, p.group, std::move(colors));
}

inline Coloring invert_coloring(const Coloring& c) {
    std::vector<GroupElement> colors;
    colors.reserve(c.colors().size());
    for (const auto& e : c.colors()) colors.push_back(c.group().inv(e));
    return Coloring(c.poset(), c.group(), std::move(colors));
}

/// Pushes a word coloring through a homomorphism into a finite group, given
/// by generator images. The relator images are checked to be trivial.
inline Coloring push_to_finite(const Coloring& c, const FiniteGroup& target,
                               const std::vector<int>& gen_images) {
    const GroupPresentation& pres = c.group().presentation();
    if (gen_images.size() != pres.generators.size())
        throw InvalidArgument("need one image per generator");
    auto eval = [&](const Word& w) {
        int x = target.identity();
        for (const auto& [g, s] : w.letters)
            x = target.mul(x, s > 0 ? gen_images[g] : target.inv(gen_images[g]));
        return x;
    };
    for (const auto& r : pres.relators)
        if (eval(r) != target.identity())
            throw InvalidArgument("generator images do not satisfy the relators");
    std::vector<GroupElement> colors;
    for (const auto& e : c.colors()) colors.push_back(eval(std::get<Word>(e)));
    return Coloring(c.poset(), Group::finite(target), std::move(colors));
}

/// Equivalent coloring that is identity on every edge of every part.
/// Requires a certificate that each part includes trivially into pi1; the
/// certificate is checked and TrivialityNotCertified raised otherwise.
inline Coloring trivialize_on_subdiagrams(const Coloring& c,
                                          const std::vector<Subdiagram>& parts,
                                          const Pi1Presentation& p) {
    const Poset& x = c.poset();
    if (!p.poset.same_data(x) && !(p.poset == x))
        throw InvalidArgument("presentation belongs to a different poset");
    std::vector<char> used(x.size(), 0);
    for (const auto& part : parts) {
        if (part.vertices.empty()) throw InvalidArgument("empty part");
        if (!part.connected()) throw InvalidArgument("parts must be connected");
        for (int v : part.vertices) {
            if (used[v]) throw InvalidArgument("parts must be pairwise disjoint");
            used[v] = 1;
        }
    }

    std::vector<GroupElement> gx(x.size(), c.group().identity());
    std::vector<char> in_part_edge(x.covers().size(), 0);
    for (const auto& part : parts) {
        int root = part.vertices.front();
        auto paths = detail::tree_paths_partial(x, part, root);  // within the part
        // certificate: every fundamental cycle of the part maps to a word
        // certified trivial in pi1(X)
        std::vector<char> in_tree(x.covers().size(), 0);
        for (int v : part.vertices)
            for (auto [s, t] : paths[v]->steps) {
                int e = x.edge_index(s, t);
                if (e < 0) e = x.edge_index(t, s);
                in_tree[e] = 1;
            }
        for (int e : part.edges) {
            in_part_edge[e] = 1;
            if (in_tree[e]) continue;
            auto [u, v] = x.covers()[e];
            EdgePath lambda = *paths[u] * EdgePath(x, {{u, v}}) * paths[v]->reversed();
            EdgePath mu = p.base_paths[root] * lambda * p.base_paths[root].reversed();
            Word w = cycle_word(mu, p);
            if (p.group.is_identity(GroupElement(w)) != Tri::Yes)
                throw TrivialityNotCertified("part cycle through edge " + std::to_string(e) +
                                             " not certified trivial");
        }
        for (int v : part.vertices) {
            EdgePath gamma = p.base_paths[root] * *paths[v];
            gx[v] = weight(c, gamma);
        }
    }

    std::vector<GroupElement> colors;
    for (std::size_t e = 0; e < x.covers().size(); ++e) {
        if (in_part_edge[e]) {
            colors.push_back(c.group().identity());
            continue;
        }
        auto [a, b] = x.covers()[e];
        colors.push_back(
            c.group().mul(c.group().mul(gx[a], c.color(static_cast<int>(e))), c.group().inv(gx[b])));
    }
    return Coloring(x, c.group(), std::move(colors));
}

}  // namespace fintop
