#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "fintop/coloring.hpp"
#include "fintop/simplicial.hpp"

namespace fintop {

struct CoveringMap {
    Poset total, base;
    MonotoneMap projection;
};

struct CoveringVerdict {
    bool ok = true;
    int witness = -1;  // offending element of the total space
    std::string reason;
};

/// Covering check for posets: surjective, and every restriction to a
/// minimal open set or a closure is a bijection onto its image set.
inline CoveringVerdict verify_covering(const MonotoneMap& p) {
    CoveringVerdict v;
    if (!p.surjective()) {
        v.ok = false;
        v.reason = "not surjective";
        return v;
    }
    const Poset& e = p.source;
    const Poset& b = p.target;
    for (std::size_t x = 0; x < e.size(); ++x) {
        auto check = [&](const std::vector<int>& around, const std::vector<int>& target_set) {
            std::vector<int> images;
            for (int u : around) images.push_back(p(u));
            std::sort(images.begin(), images.end());
            if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
            auto sorted_target = target_set;
            std::sort(sorted_target.begin(), sorted_target.end());
            return images == sorted_target;
        };
        if (!check(e.down_set(static_cast<int>(x)), b.down_set(p(static_cast<int>(x))))) {
            v.ok = false;
            v.witness = static_cast<int>(x);
            v.reason = "minimal open set of '" + e.label(static_cast<int>(x)) +
                       "' does not map bijectively";
            return v;
        }
        if (!check(e.up_set(static_cast<int>(x)), b.up_set(p(static_cast<int>(x))))) {
            v.ok = false;
            v.witness = static_cast<int>(x);
            v.reason = "closure of '" + e.label(static_cast<int>(x)) + "' does not map bijectively";
            return v;
        }
    }
    return v;
}

/// Secondary chain-based test: the preimage of every maximal chain must be
/// a disjoint union of chains mapped isomorphically. Agrees with
/// verify_covering; kept as an independent route for the test suite.
inline bool verify_covering_chains(const MonotoneMap& p) {
    if (!p.surjective()) return false;
    const Poset& e = p.source;
    const Poset& b = p.target;
    std::vector<std::vector<int>> maximal;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int v) -> void {
        cur.push_back(v);
        if (b.up_covers(v).empty())
            maximal.push_back(cur);
        else
            for (int w : b.up_covers(v)) self(self, w);
        cur.pop_back();
    };
    for (int m : b.minimal_elements()) dfs(dfs, m);

    for (const auto& chain : maximal) {
        std::vector<int> pre;
        std::vector<char> in_chain(b.size(), 0);
        for (int c : chain) in_chain[c] = 1;
        for (std::size_t x = 0; x < e.size(); ++x)
            if (in_chain[p(static_cast<int>(x))]) pre.push_back(static_cast<int>(x));
        // split the preimage into comparability components
        std::vector<int> comp(pre.size(), -1);
        int nc = 0;
        for (std::size_t i = 0; i < pre.size(); ++i) {
            if (comp[i] != -1) continue;
            std::queue<std::size_t> q;
            q.push(i);
            comp[i] = nc;
            while (!q.empty()) {
                std::size_t u = q.front();
                q.pop();
                for (std::size_t j = 0; j < pre.size(); ++j)
                    if (comp[j] == -1 && (e.leq(pre[u], pre[j]) || e.leq(pre[j], pre[u]))) {
                        comp[j] = nc;
                        q.push(j);
                    }
            }
            ++nc;
        }
        for (int c = 0; c < nc; ++c) {
            std::vector<int> piece;
            for (std::size_t i = 0; i < pre.size(); ++i)
                if (comp[i] == c) piece.push_back(pre[i]);
            if (piece.size() != chain.size()) return false;
            for (int u : piece)
                for (int w : piece)
                    if (!e.leq(u, w) && !e.leq(w, u)) return false;
            std::vector<int> images;
            for (int u : piece) images.push_back(p(u));
            std::sort(images.begin(), images.end());
            auto sorted_chain = chain;
            std::sort(sorted_chain.begin(), sorted_chain.end());
            if (images != sorted_chain) return false;
        }
    }
    return true;
}

/// E(c): total space B x G with (x,g) covered by (y, g*c(x,y)). Requires an
/// admissible coloring over a table group; the result is verified before
/// being returned.
inline CoveringMap build_cover(const Coloring& c) {
    if (c.group().kind() != Group::Kind::Finite)
        throw InfiniteGroup("covering construction needs a finite table group");
    auto adm = is_admissible(c);
    if (adm.verdict != Tri::Yes) {
        std::string detail = adm.counterexample ? adm.counterexample->describe(c.poset()) : "";
        throw NotAdmissible("coloring is not admissible: " + detail);
    }
    const Poset& b = c.poset();
    const FiniteGroup& g = c.group().finite_group();
    const std::size_t n = g.order();
    auto enc = [&](int x, int h) { return static_cast<int>(x * static_cast<int>(n) + h); };
    std::vector<std::string> labels;
    labels.reserve(b.size() * n);
    for (std::size_t x = 0; x < b.size(); ++x)
        for (std::size_t h = 0; h < n; ++h)
            labels.push_back(b.label(static_cast<int>(x)) + "@" + g.element_name(static_cast<int>(h)));
    std::vector<std::pair<int, int>> covers;
    for (std::size_t e = 0; e < b.covers().size(); ++e) {
        auto [x, y] = b.covers()[e];
        int col = std::get<int>(c.color(static_cast<int>(e)));
        for (std::size_t h = 0; h < n; ++h)
            covers.emplace_back(enc(x, static_cast<int>(h)),
                                enc(y, g.mul(static_cast<int>(h), col)));
    }
    CoveringMap cm;
    cm.total = Poset::from_cover_indices(std::move(labels), covers);
    cm.base = b;
    std::vector<int> proj(cm.total.size());
    for (std::size_t x = 0; x < b.size(); ++x)
        for (std::size_t h = 0; h < n; ++h) proj[enc(static_cast<int>(x), static_cast<int>(h))] = static_cast<int>(x);
    cm.projection = MonotoneMap(cm.total, cm.base, std::move(proj));
    auto verdict = verify_covering(cm.projection);
    if (!verdict.ok) throw InvalidArgument("internal: E(c) failed verification: " + verdict.reason);
    return cm;
}

/// The unique lift of an edge-path starting at e0 over its start point.
inline EdgePath lift_path(const CoveringMap& cm, const EdgePath& xi, int e0) {
    if (cm.projection(e0) != xi.start())
        throw InvalidArgument("lift start point does not project to the path start");
    std::vector<std::pair<int, int>> steps;
    int cur = e0;
    for (auto [a, b] : xi.steps) {
        const bool upward = cm.base.edge_index(a, b) >= 0;
        const auto& nbrs = upward ? cm.total.up_covers(cur) : cm.total.down_covers(cur);
        int next = -1;
        for (int w : nbrs)
            if (cm.projection(w) == b) {
                if (next != -1) throw InvalidArgument("internal: lift is not unique");
                next = w;
            }
        if (next == -1) throw InvalidArgument("internal: step has no lift");
        steps.push_back({cur, next});
        cur = next;
    }
    return EdgePath(cm.total, std::move(steps), e0);
}

/// All poset automorphisms h of the total space with p o h = p, found by
/// propagating the image of one point per component through lifts.
inline std::vector<std::vector<int>> deck_transformations(const CoveringMap& cm) {
    const Poset& e = cm.total;
    auto comp = e.components();
    int nc = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<int> roots(nc, -1);
    for (std::size_t x = 0; x < e.size(); ++x)
        if (roots[comp[x]] == -1) roots[comp[x]] = static_cast<int>(x);

    auto propagate = [&](int root, int target, std::vector<int>& h) -> bool {
        if (cm.projection(root) != cm.projection(target)) return false;
        std::queue<int> q;
        h[root] = target;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            auto step = [&](const std::vector<int>& nbrs, bool up) -> bool {
                for (int w : nbrs) {
                    const auto& imgs = up ? e.up_covers(h[v]) : e.down_covers(h[v]);
                    int img = -1;
                    for (int z : imgs)
                        if (cm.projection(z) == cm.projection(w)) {
                            img = z;
                            break;
                        }
                    if (img == -1) return false;
                    if (h[w] == -1) {
                        h[w] = img;
                        q.push(w);
                    } else if (h[w] != img) {
                        return false;
                    }
                }
                return true;
            };
            if (!step(e.up_covers(v), true)) return false;
            if (!step(e.down_covers(v), false)) return false;
        }
        return true;
    };

    std::vector<std::vector<int>> result;
    std::vector<int> h(e.size(), -1);
    auto rec = [&](auto&& self, int ci) -> void {
        if (ci == nc) {
            // bijectivity and cover preservation both ways
            std::vector<char> hit(e.size(), 0);
            for (int v : h) {
                if (hit[v]) return;
                hit[v] = 1;
            }
            for (const auto& [a, b] : e.covers())
                if (e.edge_index(h[a], h[b]) < 0) return;
            result.push_back(h);
            return;
        }
        int root = roots[ci];
        for (std::size_t t = 0; t < e.size(); ++t) {
            if (cm.projection(static_cast<int>(t)) != cm.projection(root)) continue;
            std::vector<int> saved = h;
            if (propagate(root, static_cast<int>(t), h)) self(self, ci + 1);
            h = std::move(saved);
        }
    };
    rec(rec, 0);
    return result;
}

struct UniversalCover {
    CoveringMap cover;
    Coloring coloring;     // the finite-group coloring used to build it
    FiniteGroup group;     // realization of pi1
    Pi1Presentation pi1;
};

/// Universal cover through the standard coloring, available when the
/// fundamental group simplifies to a finite realization.
inline UniversalCover universal_cover(const Poset& x, int base, long budget = 20000) {
    UniversalCover uc;
    uc.pi1 = pi1_presentation(x, base, std::nullopt, budget);
    auto realization = uc.pi1.group.simplified().finite_realization();
    if (!realization)
        throw NotFiniteOrUnknownPi1("pi1 did not simplify to a finite realization: verdict " +
                                    uc.pi1.group.simplified().verdict);
    const auto& [table, simplified_images] = *realization;
    // original generator -> simplified word -> table element
    std::vector<int> gen_images;
    for (std::size_t g = 0; g < uc.pi1.presentation.generators.size(); ++g) {
        Word w = uc.pi1.group.simplified().map_word(Word::gen(static_cast<int>(g)));
        int val = table.identity();
        for (const auto& [sg, s] : w.letters)
            val = table.mul(val, s > 0 ? simplified_images[sg] : table.inv(simplified_images[sg]));
        gen_images.push_back(val);
    }
    uc.group = table;
    uc.coloring = push_to_finite(standard_coloring(uc.pi1), table, gen_images);
    uc.cover = build_cover(uc.coloring);
    return uc;
}

struct MilnorConstruction {
    Poset total;                            // height-2 poset with free G-action
    std::vector<std::vector<int>> action;   // permutation per group element
    Poset quotient;
    CoveringMap projection;
};

/// Height-2 poset with free G-action whose quotient has fundamental group G.
/// Minimal elements G x Z3, middle G x G x Z3, maximal G x G x G, with
/// (g,h,i+1) covering (g,i) and (h,i+2), and (g,h,k) covering (g,h,1),
/// (k,g,2), (h,k,0).
inline MilnorConstruction milnor_poset(const FiniteGroup& g) {
    const int n = static_cast<int>(g.order());
    MilnorConstruction mc;
    std::vector<std::string> labels;
    auto min_id = [&](int a, int i) { return a * 3 + i; };
    auto mid_id = [&](int a, int b, int i) { return 3 * n + (a * n + b) * 3 + i; };
    auto top_id = [&](int a, int b, int k) { return 3 * n + 3 * n * n + (a * n + b) * n + k; };
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < 3; ++i)
            labels.push_back("m:" + g.element_name(a) + ":" + std::to_string(i));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int i = 0; i < 3; ++i)
                labels.push_back("e:" + g.element_name(a) + ":" + g.element_name(b) + ":" +
                                 std::to_string(i));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k)
                labels.push_back("t:" + g.element_name(a) + ":" + g.element_name(b) + ":" +
                                 g.element_name(k));
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int j = 0; j < 3; ++j) {
                covers.emplace_back(min_id(a, (j + 2) % 3), mid_id(a, b, j));
                covers.emplace_back(min_id(b, (j + 1) % 3), mid_id(a, b, j));
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k) {
                covers.emplace_back(mid_id(a, b, 1), top_id(a, b, k));
                covers.emplace_back(mid_id(k, a, 2), top_id(a, b, k));
                covers.emplace_back(mid_id(b, k, 0), top_id(a, b, k));
            }
    mc.total = Poset::from_cover_indices(std::move(labels), covers);

    for (int act = 0; act < n; ++act) {
        std::vector<int> perm(mc.total.size());
        for (int a = 0; a < n; ++a)
            for (int i = 0; i < 3; ++i) perm[min_id(a, i)] = min_id(g.mul(act, a), i);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int i = 0; i < 3; ++i)
                    perm[mid_id(a, b, i)] = mid_id(g.mul(act, a), g.mul(act, b), i);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int k = 0; k < n; ++k)
                    perm[top_id(a, b, k)] = top_id(g.mul(act, a), g.mul(act, b), g.mul(act, k));
        mc.action.push_back(std::move(perm));
    }
    for (const auto& perm : mc.action)
        for (const auto& [lo, hi] : mc.total.covers())
            if (mc.total.edge_index(perm[lo], perm[hi]) < 0)
                throw InvalidArgument("internal: group action does not preserve covers");

    // orbits -> quotient
    std::vector<int> orbit_rep(mc.total.size(), -1);
    for (std::size_t x = 0; x < mc.total.size(); ++x) {
        if (orbit_rep[x] != -1) continue;
        int rep = static_cast<int>(x);
        for (const auto& perm : mc.action) rep = std::min(rep, perm[x]);
        for (const auto& perm : mc.action) orbit_rep[perm[x]] = rep;
    }
    std::vector<int> rep_index(mc.total.size(), -1);
    std::vector<std::string> qlabels;
    for (std::size_t x = 0; x < mc.total.size(); ++x)
        if (orbit_rep[x] == static_cast<int>(x)) {
            rep_index[x] = static_cast<int>(qlabels.size());
            qlabels.push_back("[" + mc.total.label(static_cast<int>(x)) + "]");
        }
    std::vector<std::pair<int, int>> qcovers;
    for (const auto& [lo, hi] : mc.total.covers())
        qcovers.emplace_back(rep_index[orbit_rep[lo]], rep_index[orbit_rep[hi]]);
    std::sort(qcovers.begin(), qcovers.end());
    qcovers.erase(std::unique(qcovers.begin(), qcovers.end()), qcovers.end());
    mc.quotient = Poset::from_cover_indices(std::move(qlabels), qcovers);

    std::vector<int> proj(mc.total.size());
    for (std::size_t x = 0; x < mc.total.size(); ++x) proj[x] = rep_index[orbit_rep[x]];
    mc.projection.total = mc.total;
    mc.projection.base = mc.quotient;
    mc.projection.projection = MonotoneMap(mc.total, mc.quotient, std::move(proj));
    auto verdict = verify_covering(mc.projection.projection);
    if (!verdict.ok)
        throw InvalidArgument("internal: quotient projection failed verification: " + verdict.reason);
    return mc;
}

/// Order-complex functor check: K(p) must be a simplicial covering, i.e.
/// the preimage of every simplex is a disjoint union of isomorphic copies.
inline bool simplicial_covering_check(const CoveringMap& cm) {
    SimplicialComplex ke = order_complex(cm.total);
    SimplicialComplex kb = order_complex(cm.base);
    SimplicialMap phi(ke, kb, cm.projection.assignment);
    for (int d = 0; d <= kb.dim(); ++d)
        for (const auto& sigma : kb.by_dim[d]) {
            // preimage subcomplex: simplices of ke whose image lies in sigma
            std::vector<std::vector<int>> member;
            for (int dd = 0; dd <= ke.dim(); ++dd)
                for (const auto& tau : ke.by_dim[dd]) {
                    auto img = phi.image_simplex(tau);
                    if (std::includes(sigma.begin(), sigma.end(), img.begin(), img.end()))
                        member.push_back(tau);
                }
            // maximal members must be disjoint isomorphic copies of sigma
            std::vector<std::vector<int>> maximal;
            for (const auto& t : member) {
                bool is_max = true;
                for (const auto& u : member)
                    if (t != u && std::includes(u.begin(), u.end(), t.begin(), t.end())) {
                        is_max = false;
                        break;
                    }
                if (is_max) maximal.push_back(t);
            }
            std::vector<char> used(ke.vertex_labels.size(), 0);
            for (const auto& m : maximal) {
                if (m.size() != sigma.size()) return false;
                if (phi.image_simplex(m) != sigma) return false;
                for (int v : m) {
                    if (used[v]) return false;
                    used[v] = 1;
                }
            }
            for (const auto& t : member) {
                int homes = 0;
                for (const auto& m : maximal)
                    if (std::includes(m.begin(), m.end(), t.begin(), t.end())) ++homes;
                if (homes != 1) return false;
            }
        }
    return true;
}

/// Face-poset functor check: X(phi) of a simplicial covering must verify as
/// a poset covering.
inline bool face_poset_covering_check(const SimplicialMap& phi) {
    Poset xl = face_poset(phi.source);
    Poset xk = face_poset(phi.target);
    return verify_covering(face_poset_map(phi, xl, xk)).ok;
}

}  // namespace fintop
