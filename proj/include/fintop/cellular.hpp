#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fintop/covering.hpp"
#include "fintop/homology.hpp"

namespace fintop {

/// Graded poset in which every punctured down-set has the reduced homology
/// of a sphere of dimension deg-1, together with a chosen generator cycle
/// per element. The generator choice is the Smith-derived one, so incidence
/// numbers are reproducible.
struct CellularStructure {
    Poset poset;
    std::vector<int> degree;
    std::vector<std::vector<int>> by_degree;      // element ids per degree
    std::vector<int> position;                    // element -> index within its degree
    std::vector<std::vector<int>> down;           // punctured down-set, sorted parent ids
    std::vector<SimplicialComplex> link;          // K(punctured down-set)
    std::vector<std::vector<Int>> generator;      // cycle on link.by_dim[deg-1]
    std::vector<Int> incidence;                   // per cover index: eps(x,w)

    int top_degree() const {
        return static_cast<int>(by_degree.size()) - 1;
    }
};

namespace detail {

inline std::vector<Int> link_boundary_of_part(const SimplicialComplex& kx, int dim,
                                              const std::vector<Int>& part) {
    // simplicial boundary of a (dim)-chain, as a vector on (dim-1)-simplices
    std::vector<Int> out(kx.count(dim - 1));
    for (std::size_t j = 0; j < part.size(); ++j) {
        if (part[j] == 0) continue;
        const auto& s = kx.by_dim[dim][j];
        int sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> face;
            for (std::size_t q = 0; q < s.size(); ++q)
                if (q != i) face.push_back(s[q]);
            out[kx.index_of(face)] += sign * part[j];
            sign = -sign;
        }
    }
    return out;
}

}  // namespace detail

/// Validates gradedness and the sphere condition, choosing a generator
/// cycle per element.
inline CellularStructure cellular_structure(const Poset& x) {
    CellularStructure s;
    s.poset = x;
    s.degree.resize(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) s.degree[v] = x.height_of(static_cast<int>(v));
    for (const auto& [w, y] : x.covers())
        if (s.degree[y] != s.degree[w] + 1)
            throw NotGraded("cover (" + x.label(w) + "," + x.label(y) +
                            ") does not raise the degree by one");
    s.by_degree.resize(x.size() == 0 ? 0 : x.height() + 1);
    s.position.resize(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
        s.position[v] = static_cast<int>(s.by_degree[s.degree[v]].size());
        s.by_degree[s.degree[v]].push_back(static_cast<int>(v));
    }
    s.down.resize(x.size());
    s.link.resize(x.size());
    s.generator.resize(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
        const int p = s.degree[v];
        s.down[v] = x.punctured_down_set(static_cast<int>(v));
        if (p == 0) continue;  // empty down-set, sphere of dimension -1
        Poset sub = x.induced(s.down[v]);
        s.link[v] = order_complex(sub);
        Homology h = simplicial_homology(s.link[v]);
        bool ok = true;
        for (int d = 0; d < static_cast<int>(h.size()); ++d) {
            const HomologyGroup want =
                d == p - 1 ? HomologyGroup{1, {}} : HomologyGroup{0, {}};
            if (!(h[d] == want)) ok = false;
        }
        if (static_cast<int>(h.size()) <= p - 1) ok = false;
        if (!ok)
            throw NotSpherical("punctured down-set of '" + x.label(static_cast<int>(v)) +
                               "' has homology " + homology_to_string(h) + ", expected a " +
                               std::to_string(p - 1) + "-sphere");
        s.generator[v] = reduced_homology_generator(s.link[v], p - 1);
    }

    // incidence numbers: split the generator of x along the cover w and
    // express the boundary of the w-side in the generator of w
    s.incidence.resize(x.covers().size());
    for (std::size_t e = 0; e < x.covers().size(); ++e) {
        auto [w, y] = x.covers()[e];
        const int p = s.degree[y];
        if (p == 1) {
            // 0-sphere: the incidence is the coefficient of the vertex w
            const auto& kx = s.link[y];
            std::vector<int> vtx{static_cast<int>(
                std::lower_bound(s.down[y].begin(), s.down[y].end(), w) - s.down[y].begin())};
            s.incidence[e] = s.generator[y][kx.index_of(vtx)];
            continue;
        }
        const auto& kx = s.link[y];
        int w_local = static_cast<int>(
            std::lower_bound(s.down[y].begin(), s.down[y].end(), w) - s.down[y].begin());
        // part of the generator supported on simplices through w
        std::vector<Int> part(kx.count(p - 1));
        for (std::size_t j = 0; j < part.size(); ++j) {
            const auto& simplex = kx.by_dim[p - 1][j];
            if (std::binary_search(simplex.begin(), simplex.end(), w_local))
                part[j] = s.generator[y][j];
        }
        auto bnd = detail::link_boundary_of_part(kx, p - 1, part);
        // translate into the link of w
        const auto& kw = s.link[w];
        std::vector<Int> z(kw.count(p - 2));
        for (std::size_t j = 0; j < bnd.size(); ++j) {
            if (bnd[j] == 0) continue;
            std::vector<int> parent_ids;
            for (int loc : kx.by_dim[p - 2][j]) parent_ids.push_back(s.down[y][loc]);
            std::vector<int> w_local_ids;
            for (int pid : parent_ids) {
                auto it = std::lower_bound(s.down[w].begin(), s.down[w].end(), pid);
                if (it == s.down[w].end() || *it != pid)
                    throw InvalidArgument("internal: boundary part leaves the lower link");
                w_local_ids.push_back(static_cast<int>(it - s.down[w].begin()));
            }
            std::sort(w_local_ids.begin(), w_local_ids.end());
            z[kw.index_of(w_local_ids)] = bnd[j];
        }
        s.incidence[e] = express_multiple(kw, p - 2, z, s.generator[w]);
    }
    return s;
}

/// Integer cellular chain complex: one basis element per poset element,
/// d(x) = sum over covers w of eps(x,w) * w.
inline ChainComplex cellular_chain_complex(const CellularStructure& s) {
    ChainComplex c;
    const int top = s.top_degree();
    if (top < 0) return c;
    c.ranks.resize(top + 1);
    c.boundary.resize(top + 1);
    for (int p = 0; p <= top; ++p) c.ranks[p] = s.by_degree[p].size();
    c.boundary[0] = IntMat(0, c.ranks[0]);
    for (int p = 1; p <= top; ++p) {
        IntMat m(c.ranks[p - 1], c.ranks[p]);
        for (std::size_t e = 0; e < s.poset.covers().size(); ++e) {
            auto [w, y] = s.poset.covers()[e];
            if (s.degree[y] != p) continue;
            m(s.position[w], s.position[y]) = s.incidence[e];
        }
        c.boundary[p] = std::move(m);
    }
    if (!c.d_squared_zero()) throw InvalidArgument("internal: cellular d*d != 0");
    return c;
}

inline Homology cellular_homology(const CellularStructure& s) {
    return homology(cellular_chain_complex(s), /*reduced=*/true);
}

/// Chain complex of the covering E(c) written over the group ring and
/// expanded to integer matrices through the regular representation:
/// d(x) = sum eps(x,w) c(w,x)^-1 w. Basis order: (element, group element).
struct TwistedComplex {
    FiniteGroup group;
    ChainComplex expanded;
    std::vector<std::vector<int>> by_degree;
};

inline TwistedComplex twisted_complex(const CellularStructure& s, const Coloring& c) {
    if (c.group().kind() != Group::Kind::Finite)
        throw InfiniteGroup("twisted complex needs a finite table group");
    if (!(c.poset() == s.poset)) throw InvalidArgument("coloring lives on a different poset");
    auto adm = is_admissible(c);
    if (adm.verdict != Tri::Yes)
        throw NotAdmissible("coloring is not admissible");
    const FiniteGroup& g = c.group().finite_group();
    const int n = static_cast<int>(g.order());
    TwistedComplex tc;
    tc.group = g;
    tc.by_degree = s.by_degree;
    const int top = s.top_degree();
    tc.expanded.ranks.resize(top + 1);
    tc.expanded.boundary.resize(top + 1);
    for (int p = 0; p <= top; ++p) tc.expanded.ranks[p] = s.by_degree[p].size() * n;
    tc.expanded.boundary[0] = IntMat(0, tc.expanded.ranks[0]);
    for (int p = 1; p <= top; ++p) {
        IntMat m(tc.expanded.ranks[p - 1], tc.expanded.ranks[p]);
        for (std::size_t e = 0; e < s.poset.covers().size(); ++e) {
            auto [w, y] = s.poset.covers()[e];
            if (s.degree[y] != p) continue;
            int col = std::get<int>(c.color(static_cast<int>(e)));
            for (int h = 0; h < n; ++h) {
                // (y,h) hits (w, h * c(w,y)^-1)
                int target = g.mul(h, g.inv(col));
                m(s.position[w] * n + target, s.position[y] * n + h) += s.incidence[e];
            }
        }
        tc.expanded.boundary[p] = std::move(m);
    }
    if (!tc.expanded.d_squared_zero()) throw InvalidArgument("internal: twisted d*d != 0");
    return tc;
}

inline Homology twisted_homology(const TwistedComplex& tc) {
    return homology(tc.expanded, /*reduced=*/true);
}

struct HurewiczReport {
    Tri verdict = Tri::Unknown;
    Subdiagram diagram;          // edges between heights 1..3 with vertices
    int components = 0;
    std::string detail;
};

/// Gate for the free-module description of pi2: every fundamental cycle of
/// the height-1..3 edge diagram must map to a word certified trivial.
inline HurewiczReport hurewicz_condition(const Poset& x, int base, long budget = 20000) {
    HurewiczReport rep;
    std::vector<int> edges, verts;
    for (std::size_t e = 0; e < x.covers().size(); ++e) {
        auto [w, y] = x.covers()[e];
        if (x.height_of(w) >= 1 && x.height_of(y) <= 3) {
            edges.push_back(static_cast<int>(e));
            verts.push_back(w);
            verts.push_back(y);
        }
    }
    rep.diagram = Subdiagram::make(x, verts, edges);
    if (rep.diagram.vertices.empty()) {
        rep.verdict = Tri::Yes;
        return rep;
    }
    Pi1Presentation p = pi1_presentation(x, base, std::nullopt, budget);

    // component split of the diagram
    std::map<int, int> comp;
    for (int v : rep.diagram.vertices) comp[v] = -1;
    int nc = 0;
    for (int v : rep.diagram.vertices) {
        if (comp[v] != -1) continue;
        std::vector<int> stack{v};
        comp[v] = nc;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e : rep.diagram.edges) {
                auto [a, b] = x.covers()[e];
                int other = a == u ? b : (b == u ? a : -1);
                if (other != -1 && comp[other] == -1) {
                    comp[other] = nc;
                    stack.push_back(other);
                }
            }
        }
        ++nc;
    }
    rep.components = nc;

    for (int ci = 0; ci < nc; ++ci) {
        std::vector<int> cverts, cedges;
        for (int v : rep.diagram.vertices)
            if (comp[v] == ci) cverts.push_back(v);
        for (int e : rep.diagram.edges) {
            auto [a, b] = x.covers()[e];
            if (comp[a] == ci) cedges.push_back(e);
        }
        Subdiagram part = Subdiagram::make(x, cverts, cedges);
        int root = part.vertices.front();
        auto paths = detail::tree_paths_partial(x, part, root);
        std::vector<char> in_tree(x.covers().size(), 0);
        for (int v : part.vertices)
            for (auto [a, b] : paths[v]->steps) {
                int e = x.edge_index(a, b);
                if (e < 0) e = x.edge_index(b, a);
                in_tree[e] = 1;
            }
        for (int e : part.edges) {
            if (in_tree[e]) continue;
            auto [u, v] = x.covers()[e];
            EdgePath lambda = *paths[u] * EdgePath(x, {{u, v}}) * paths[v]->reversed();
            EdgePath mu = p.base_paths[root] * lambda * p.base_paths[root].reversed();
            Word w = cycle_word(mu, p);
            if (p.group.is_identity(GroupElement(w)) != Tri::Yes) {
                rep.verdict = Tri::Unknown;
                rep.detail = "component " + std::to_string(ci) +
                             " has a cycle not certified trivial (edge " + std::to_string(e) + ")";
                return rep;
            }
        }
    }
    rep.verdict = Tri::Yes;
    return rep;
}

struct Pi2Result {
    enum class Kind { FreeModule, Abelian, Unknown } kind = Kind::Unknown;
    long free_rank = 0;        // rank over Z[pi1(X)]
    HomologyGroup abelian;     // H2 of the universal cover
    std::string reason;

    std::string to_string() const {
        switch (kind) {
            case Kind::FreeModule:
                return "free Z[pi1]-module of rank " + std::to_string(free_rank);
            case Kind::Abelian: return abelian.to_string();
            default: return "unknown (" + reason + ")";
        }
    }
};

/// pi2 of a connected cellular poset: H2 of the universal cover's twisted
/// complex when pi1 is finite, the free-module description when the
/// height-1..3 diagram includes trivially, Unknown otherwise.
inline Pi2Result pi2(const Poset& x, int base, long budget = 20000) {
    if (!x.connected()) throw NotConnected("poset is not connected");
    CellularStructure s = cellular_structure(x);
    Pi2Result res;
    try {
        UniversalCover uc = universal_cover(x, base, budget);
        TwistedComplex tc = twisted_complex(s, uc.coloring);
        Homology h = twisted_homology(tc);
        res.kind = Pi2Result::Kind::Abelian;
        res.abelian = h.size() > 2 ? h[2] : HomologyGroup{};
        return res;
    } catch (const NotFiniteOrUnknownPi1&) {
        // fall through to the free-module description
    }
    HurewiczReport rep = hurewicz_condition(x, base, budget);
    if (rep.verdict == Tri::Yes) {
        Homology h = cellular_homology(s);
        HomologyGroup h2 = h.size() > 2 ? h[2] : HomologyGroup{};
        if (h2.torsion.empty()) {
            res.kind = Pi2Result::Kind::FreeModule;
            res.free_rank = h2.rank;
            return res;
        }
        res.reason = "H2 has torsion, so Z[pi1] (x) H2 is not free";
        return res;
    }
    res.reason = "pi1 not certified finite and the height-1..3 gate failed: " + rep.detail;
    return res;
}

/// Candidate element of pi2 for a height-2 poset: a finite formal sum of
/// (2-cell, group element) pairs with integer coefficients.
struct GroupRingChain {
    std::vector<std::tuple<int, GroupElement, Int>> terms;  // (element, g, coefficient)
};

/// Membership in ker(d2) of the twisted complex, evaluated symbolically on
/// the finite support, one equation per (degree-1 element, group element).
inline bool pi2_membership(const CellularStructure& s, const Coloring& c,
                           const GroupRingChain& alpha) {
    if (s.poset.height() != 2) throw NotHeight2("pi2 equations need a height-2 poset");
    if (!(c.poset() == s.poset)) throw InvalidArgument("coloring lives on a different poset");
    const Group& g = c.group();
    auto key_of = [&](const GroupElement& e) {
        auto k = g.canonical_key(e);
        if (!k)
            throw InvalidArgument("group arithmetic undecidable: cannot canonicalize elements");
        return *k;
    };
    // accumulate coefficients for identical (cell, group element) pairs
    std::map<std::pair<int, std::string>, std::pair<GroupElement, Int>> chain;
    for (const auto& [cell, ge, coeff] : alpha.terms) {
        if (s.degree[cell] != 2) throw InvalidArgument("chain supported outside degree 2");
        auto key = std::make_pair(cell, key_of(ge));
        auto it = chain.find(key);
        if (it == chain.end())
            chain.emplace(key, std::make_pair(ge, coeff));
        else
            it->second.second += coeff;
    }
    // equations: for each cover (w,x) and chain term (x, gx): the pair
    // contributes eps(x,w)*n to equation (w, h = gx * c(w,x)^-1)
    std::map<std::pair<int, std::string>, Int> equations;
    for (std::size_t e = 0; e < s.poset.covers().size(); ++e) {
        auto [w, y] = s.poset.covers()[e];
        if (s.degree[y] != 2) continue;
        for (const auto& [key, val] : chain) {
            if (key.first != y) continue;
            const auto& [ge, coeff] = val;
            GroupElement h = g.mul(ge, g.inv(c.color(static_cast<int>(e))));
            equations[{w, key_of(h)}] += s.incidence[e] * coeff;
        }
    }
    for (const auto& [k, sum] : equations)
        if (sum != 0) return false;
    return true;
}

/// pi2 of a wedge with a simply-connected second factor:
/// pi2(X v Y) = pi2(X) + Z[pi1(X)] (x) pi2(Y).
inline Pi2Result wedge_pi2(const Pi2Result& pi2x, const GroupPresentation& pi1x,
                           const HomologyGroup& pi2y, long budget = 20000) {
    Pi2Result res;
    SimplifyResult s = simplify(pi1x, budget);
    auto realization = s.finite_realization();
    if (realization) {
        const long n = static_cast<long>(realization->first.order());
        if (pi2x.kind == Pi2Result::Kind::Unknown) {
            res.reason = "pi2 of the first factor unknown";
            return res;
        }
        res.kind = Pi2Result::Kind::Abelian;
        long xrank = pi2x.kind == Pi2Result::Kind::Abelian ? pi2x.abelian.rank
                                                           : pi2x.free_rank * n;
        res.abelian.rank = xrank + n * pi2y.rank;
        if (pi2x.kind == Pi2Result::Kind::Abelian) res.abelian.torsion = pi2x.abelian.torsion;
        for (long i = 0; i < n; ++i)
            for (const auto& t : pi2y.torsion) res.abelian.torsion.push_back(t);
        std::sort(res.abelian.torsion.begin(), res.abelian.torsion.end());
        return res;
    }
    if (pi2x.kind == Pi2Result::Kind::FreeModule && pi2y.torsion.empty()) {
        res.kind = Pi2Result::Kind::FreeModule;
        res.free_rank = pi2x.free_rank + pi2y.rank;
        return res;
    }
    res.reason = "pi1 of the first factor not certified finite";
    return res;
}

}  // namespace fintop
