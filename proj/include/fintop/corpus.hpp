#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "fintop/asphericity.hpp"
#include "fintop/board.hpp"
#include "fintop/cellular.hpp"
#include "fintop/covering.hpp"
#include "fintop/models.hpp"

namespace fintop::corpus {

struct CriterionResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

struct Registry {
    std::uint64_t seed = 0;
    long budget = 20000;
    std::vector<Poset> posets;  // everything exercised; feeds the property suite
    struct BuiltCover {
        std::string name;
        CoveringMap cover;
        std::optional<Coloring> coloring;  // when built from one
    };
    std::vector<BuiltCover> covers;
    std::vector<ChainComplex> complexes;
};

struct Check {
    bool ok = true;
    std::ostringstream log;

    template <typename T, typename U>
    void equals(const T& got, const U& want, const std::string& what) {
        if (!(got == want)) {
            ok = false;
            std::ostringstream gs, ws;
            gs << got;
            ws << want;
            log << what << ": got " << gs.str() << ", want " << ws.str() << "; ";
        }
    }
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << what << "; ";
        }
    }
};

inline HomologyGroup hgroup(const Homology& h, std::size_t dim) {
    return dim < h.size() ? h[dim] : HomologyGroup{};
}

// ---- independent brute-force machinery for boards ----

/// All valid colorings as edge bitmasks, by direct enumeration when the
/// board is small and by extending an independently row-reduced kernel
/// basis of the square-parity system otherwise.
inline std::vector<std::uint64_t> enumerate_valid(const Board& b) {
    const std::size_t e = b.edge_count();
    auto valid_mask = [&](std::uint64_t mask) {
        for (const auto& sq : b.squares) {
            int reds = 0;
            for (int edge : sq) reds += (mask >> edge) & 1u;
            if (reds % 2) return false;
        }
        return true;
    };
    std::vector<std::uint64_t> out;
    if (e <= 14) {
        for (std::uint64_t mask = 0; mask < (1ull << e); ++mask)
            if (valid_mask(mask)) out.push_back(mask);
        return out;
    }
    // kernel basis of the parity system, hand-rolled on 64-bit rows
    std::vector<std::uint64_t> rows;
    for (const auto& sq : b.squares) {
        std::uint64_t r = 0;
        for (int edge : sq) r ^= 1ull << edge;
        rows.push_back(r);
    }
    std::vector<int> pivot_of_col(e, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < e && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !((rows[p] >> c) & 1u)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && ((rows[i] >> c) & 1u)) rows[i] ^= rows[rank];
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<std::uint64_t> basis;
    for (std::size_t c = 0; c < e; ++c) {
        if (pivot_of_col[c] != -1) continue;
        std::uint64_t v = 1ull << c;
        for (std::size_t cc = 0; cc < e; ++cc)
            if (pivot_of_col[cc] != -1 && ((rows[pivot_of_col[cc]] >> c) & 1u)) v ^= 1ull << cc;
        basis.push_back(v);
    }
    for (std::uint64_t sel = 0; sel < (1ull << basis.size()); ++sel) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((sel >> i) & 1u) mask ^= basis[i];
        out.push_back(mask);
    }
    for (auto mask : out)
        if (!valid_mask(mask)) throw InvalidArgument("internal: oracle produced invalid coloring");
    return out;
}

/// Orbit count of the move action over the valid colorings, by plain BFS.
inline std::size_t brute_force_classes(const Board& b, const std::vector<std::uint64_t>& valid) {
    std::vector<std::uint64_t> move_masks;
    for (const auto& edges : b.vertex_edges) {
        std::uint64_t m = 0;
        for (int e : edges) m ^= 1ull << e;
        move_masks.push_back(m);
    }
    std::unordered_set<std::uint64_t> unseen(valid.begin(), valid.end());
    std::size_t classes = 0;
    while (!unseen.empty()) {
        ++classes;
        std::vector<std::uint64_t> stack{*unseen.begin()};
        unseen.erase(unseen.begin());
        while (!stack.empty()) {
            std::uint64_t cur = stack.back();
            stack.pop_back();
            for (std::uint64_t mv : move_masks) {
                std::uint64_t nxt = cur ^ mv;
                auto it = unseen.find(nxt);
                if (it != unseen.end()) {
                    unseen.erase(it);
                    stack.push_back(nxt);
                }
            }
        }
    }
    return classes;
}

inline BoardColoring from_mask(const Board& b, std::uint64_t mask) {
    BoardColoring c = BoardColoring::all_blue(b);
    for (std::size_t e = 0; e < b.edge_count(); ++e)
        if ((mask >> e) & 1u) c.red[e] = true;
    return c;
}

/// Seeded closed edge-path at base: a random walk through the Hasse graph
/// closed up by the tree path back to base.
inline EdgePath random_loop(const Poset& p, int base, const std::vector<EdgePath>& paths,
                            std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len_dist(0, 8);
    int len = len_dist(rng);
    std::vector<std::pair<int, int>> steps;
    int cur = base;
    for (int i = 0; i < len; ++i) {
        std::vector<int> nbrs;
        for (int w : p.up_covers(cur)) nbrs.push_back(w);
        for (int w : p.down_covers(cur)) nbrs.push_back(w);
        if (nbrs.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, nbrs.size() - 1);
        int nxt = nbrs[pick(rng)];
        steps.push_back({cur, nxt});
        cur = nxt;
    }
    EdgePath walk(p, std::move(steps), base);
    return walk * paths[cur].reversed();
}

using CriterionFn = std::function<void(Registry&, Check&)>;

// ---- criterion 1: the two-fold quotient pipeline ----

inline void c1_quotient_pipeline(Registry& reg, Check& ck) {
    auto mc = milnor_poset(FiniteGroup::cyclic(2));
    reg.posets.push_back(mc.total);
    reg.posets.push_back(mc.quotient);
    reg.covers.push_back({"two-fold quotient projection", mc.projection, std::nullopt});
    ck.equals(mc.quotient.size(), std::size_t{13}, "quotient size");

    Pi1Presentation p = pi1_presentation(mc.quotient, 0, std::nullopt, reg.budget);
    ck.equals(p.group.simplified().verdict, std::string("IsomorphicTo(Z_2)"), "pi1 verdict");
    ck.require(p.group.abelianization().group() == FgAbelianGroup(0, {2}),
               "pi1 abelianization is Z_2");

    CellularStructure s = cellular_structure(mc.quotient);
    ChainComplex cc = cellular_chain_complex(s);
    reg.complexes.push_back(cc);
    Homology h = homology(cc, true);
    ck.require(hgroup(h, 1) == HomologyGroup{0, {2}}, "H1 = Z_2");
    ck.require(hgroup(h, 2) == HomologyGroup{0, {}}, "H2 = 0");

    UniversalCover uc = universal_cover(mc.quotient, 0, reg.budget);
    reg.posets.push_back(uc.cover.total);
    reg.covers.push_back({"universal cover of the 13-point plane model", uc.cover, uc.coloring});
    ck.equals(uc.cover.total.size(), std::size_t{26}, "universal cover size");
    ck.require(verify_covering(uc.cover.projection).ok, "universal cover verifies");
    ck.equals(deck_transformations(uc.cover).size(), std::size_t{2}, "deck group order");

    TwistedComplex tc = twisted_complex(s, uc.coloring);
    reg.complexes.push_back(tc.expanded);
    Pi2Result pr = pi2(mc.quotient, 0, reg.budget);
    ck.require(pr.kind == Pi2Result::Kind::Abelian && pr.abelian == HomologyGroup{1, {}},
               "pi2 = Z, got " + pr.to_string());
}

// ---- criterion 2: boards ----

inline void c2_boards(Registry& reg, Check& ck) {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            Board b = Board::make(BoardKind::Rectangle, n, m);
            reg.posets.push_back(b.poset);
            ck.equals(count_classes(b), Int(1),
                      "classes of the " + std::to_string(n) + "x" + std::to_string(m) + " board");
        }
    for (int m = 1; m <= 2; ++m) {
        Board b = Board::make(BoardKind::Cylinder, 4, m);
        reg.posets.push_back(b.poset);
        ck.equals(count_classes(b), Int(2), "classes of the C4 x I" + std::to_string(m) + " cylinder");
    }
    {
        Board b = Board::make(BoardKind::Torus, 4, 4);
        reg.posets.push_back(b.poset);
        auto valid = enumerate_valid(b);
        std::size_t brute = brute_force_classes(b, valid);
        ck.equals(count_classes(b), Int(static_cast<long>(brute)),
                  "torus classes vs brute force (" + std::to_string(brute) + " orbits of " +
                      std::to_string(valid.size()) + " valid colorings)");
    }
    // complete agreement with brute-force BFS on every small board
    std::vector<Board> small;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            Board b = Board::make(BoardKind::Rectangle, n, m);
            if (b.edge_count() <= 12) small.push_back(std::move(b));
        }
    small.push_back(Board::make(BoardKind::Cylinder, 4, 1));
    for (const auto& b : small) {
        auto valid = enumerate_valid(b);
        // orbit id per coloring by BFS
        std::unordered_map<std::uint64_t, int> orbit;
        std::vector<std::uint64_t> move_masks;
        for (const auto& edges : b.vertex_edges) {
            std::uint64_t m = 0;
            for (int e : edges) m ^= 1ull << e;
            move_masks.push_back(m);
        }
        int next_orbit = 0;
        for (auto start : valid) {
            if (orbit.count(start)) continue;
            std::vector<std::uint64_t> stack{start};
            orbit[start] = next_orbit;
            while (!stack.empty()) {
                auto cur = stack.back();
                stack.pop_back();
                for (auto mv : move_masks) {
                    auto nxt = cur ^ mv;
                    if (!orbit.count(nxt)) {
                        orbit[nxt] = next_orbit;
                        stack.push_back(nxt);
                    }
                }
            }
            ++next_orbit;
        }
        bool agree = true;
        for (auto m1 : valid)
            for (auto m2 : valid) {
                BoardColoring col1 = from_mask(b, m1), col2 = from_mask(b, m2);
                MoveReport mr = moves_equivalent(b, col1, col2);
                if (mr.equivalent != (orbit[m1] == orbit[m2])) agree = false;
                if (mr.equivalent) {
                    BoardColoring moved = col1;
                    for (int v : mr.vertices) moved = apply_move(b, moved, v);
                    if (moved.red != col2.red) agree = false;
                }
            }
        ck.require(agree, "moves_equivalent agrees with BFS on a board with " +
                              std::to_string(b.edge_count()) + " edges");
    }
}

// ---- criterion 3: cellular homology = simplicial homology ----

inline SimplicialComplex random_two_complex(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nv(3, 5);
    const int k = nv(rng);
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
    std::uniform_int_distribution<int> coin(0, 3);
    std::vector<std::vector<int>> facets;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                if (coin(rng) == 0) facets.push_back({a, b, c});
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (coin(rng) == 0) facets.push_back({a, b});
    for (int a = 0; a < k; ++a) facets.push_back({a});  // keep every vertex
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

inline void c3_cellular_vs_simplicial(Registry& reg, Check& ck) {
    std::mt19937_64 rng(reg.seed ^ 0xc3);
    auto check_poset = [&](const Poset& x, const std::string& what) {
        reg.posets.push_back(x);
        CellularStructure s = cellular_structure(x);
        ChainComplex cc = cellular_chain_complex(s);
        reg.complexes.push_back(cc);
        Homology cell = homology(cc, true);
        Homology simp = simplicial_homology(order_complex(x));
        ck.require(homology_equal(cell, simp),
                   what + ": cellular " + homology_to_string(cell) + " vs simplicial " +
                       homology_to_string(simp));
    };
    check_poset(models::sphere_poset(), "sphere model");
    check_poset(face_poset(models::torus_triangulation()), "torus face poset");
    check_poset(face_poset(models::tetrahedron_boundary()), "tetrahedron boundary face poset");
    check_poset(models::projective_plane_poset(), "13-point plane model");
    int built = 0;
    while (built < 50) {
        SimplicialComplex k = random_two_complex(rng);
        Poset x = face_poset(k);
        if (x.size() > 20 || x.size() == 0) continue;
        check_poset(x, "random face poset #" + std::to_string(built));
        ++built;
    }
}

// ---- criterion 5: pi2 equations on the circle-with-two-spheres model ----

inline void c5_pi2_equations(Registry& reg, Check& ck) {
    std::mt19937_64 rng(reg.seed ^ 0xc5);
    auto cts = models::circle_two_spheres();
    reg.posets.push_back(cts.poset);
    CellularStructure s = cellular_structure(cts.poset);
    auto adm = is_admissible(cts.universal_coloring);
    ck.require(adm.verdict == Tri::Yes, "model coloring admissible");

    auto el = [&](const char* l) { return cts.poset.index_of(l); };
    Word a = Word::gen(0);
    GroupRingChain gen1, gen2;
    gen1.terms = {{el("x"), GroupElement(a), 1}, {el("y"), GroupElement(Word{}), -1}};
    gen2.terms = {{el("z"), GroupElement(Word{}), 1}, {el("w"), GroupElement(Word{}), -1}};
    ck.require(pi2_membership(s, cts.universal_coloring, gen1), "a*x - y accepted");
    ck.require(pi2_membership(s, cts.universal_coloring, gen2), "z - w accepted");

    // closed form of the kernel: n^y_g = -n^x_{g a}, n^w_g = -n^z_g
    auto is_member = [&](const GroupRingChain& ch) {
        std::map<std::pair<int, long>, long> coeff;  // (cell, exponent of a) -> n
        for (const auto& [cell, ge, n] : ch.terms) {
            const Word& w = std::get<Word>(ge);
            long e = 0;
            for (const auto& [g, sgn] : w.letters) e += sgn;
            coeff[{cell, e}] += static_cast<long>(n);
        }
        auto at = [&](const char* l, long e) {
            auto it = coeff.find({el(l), e});
            return it == coeff.end() ? 0L : it->second;
        };
        for (long e = -8; e <= 8; ++e) {
            if (at("y", e) != -at("x", e + 1)) return false;
            if (at("w", e) != -at("z", e)) return false;
        }
        return true;
    };
    int rejected = 0, guard = 0;
    std::uniform_int_distribution<int> cell_pick(0, 3), exp_pick(-2, 2), coeff_pick(-2, 2),
        nterms(1, 3);
    const char* cells[4] = {"x", "y", "z", "w"};
    while (rejected < 20 && guard < 10000) {
        ++guard;
        GroupRingChain ch;
        int terms = nterms(rng);
        for (int t = 0; t < terms; ++t) {
            int coeff = coeff_pick(rng);
            if (coeff == 0) coeff = 1;
            long e = exp_pick(rng);
            Word w;
            for (long i = 0; i < std::labs(e); ++i) w.append(0, e > 0 ? 1 : -1);
            ch.terms.push_back({el(cells[cell_pick(rng)]), GroupElement(w), coeff});
        }
        if (is_member(ch)) continue;  // perturbations must be genuine non-members
        if (pi2_membership(s, cts.universal_coloring, ch)) {
            ck.require(false, "a non-member chain was accepted");
            return;
        }
        ++rejected;
    }
    ck.equals(rejected, 20, "rejected perturbations");

    Pi2Result pr = pi2(cts.poset, cts.base, reg.budget);
    ck.require(pr.kind == Pi2Result::Kind::FreeModule && pr.free_rank == 2,
               "pi2 free of rank 2, got " + pr.to_string());

    Coloring pushed = push_to_finite(cts.universal_coloring, FiniteGroup::cyclic(4), {1});
    TwistedComplex tc = twisted_complex(s, pushed);
    reg.complexes.push_back(tc.expanded);
    Homology th = homology(tc.expanded, true);
    ck.require(hgroup(th, 2) == HomologyGroup{8, {}},
               "twisted H2 rank 2*4, got " + hgroup(th, 2).to_string());
    reg.covers.push_back({"four-fold cyclic cover of the circle-with-spheres model",
                          build_cover(pushed), pushed});
}

// ---- criterion 6: Hurewicz degenerate case ----

inline void c6_hurewicz_degenerate(Registry& reg, Check& ck) {
    std::mt19937_64 rng(reg.seed ^ 0xc6);
    int built = 0;
    while (built < 20) {
        std::uniform_int_distribution<int> nv(3, 4), coin(0, 1);
        const int k = nv(rng);
        // random connected graph, then its suspension
        std::vector<std::vector<int>> facets;
        for (int a = 1; a < k; ++a) {
            std::uniform_int_distribution<int> pick(0, a - 1);
            facets.push_back({pick(rng), a});
        }
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (coin(rng)) facets.push_back({a, b});
        std::vector<std::string> labels;
        for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
        labels.push_back("n");
        labels.push_back("s");
        std::vector<std::vector<int>> susp = facets;
        for (const auto& f : facets)
            for (int apex : {k, k + 1}) {
                auto g = f;
                g.push_back(apex);
                susp.push_back(g);
            }
        SimplicialComplex sk = SimplicialComplex::from_facets(labels, susp);
        Poset x = face_poset(sk);
        reg.posets.push_back(x);
        CellularStructure s = cellular_structure(x);
        Homology h2 = cellular_homology(s);
        Pi2Result pr = pi2(x, 0, reg.budget);
        bool ok = pr.kind == Pi2Result::Kind::Abelian && pr.abelian == hgroup(h2, 2);
        ck.require(ok, "suspension #" + std::to_string(built) + ": pi2 " + pr.to_string() +
                           " vs H2 " + hgroup(h2, 2).to_string());
        ++built;
    }
}

// ---- criterion 7: asphericity ----

inline void c7_asphericity(Registry& reg, Check& ck) {
    auto rep = aspherical_presentation(models::presentation_with_infinite_cycle());
    ck.require(rep.verdict == Tri::Yes, "letter-digraph presentation certified aspherical");
    bool found = false;
    for (const auto& cert : rep.certificates) {
        const auto& v = cert.abelianized;
        if (v.size() == 5 && ((v[0] == 1 && v[1] == 3) || (v[0] == -1 && v[1] == -3)) &&
            v[2] == 0 && v[3] == 0 && v[4] == 0)
            found = true;
    }
    ck.require(found, "certificate abelianizing to a+3b present");

    ck.require(aspherical_presentation(models::torus_presentation()).verdict == Tri::Yes,
               "torus presentation aspherical");
    ck.require(aspherical_presentation(models::projective_plane_presentation()).verdict ==
                   Tri::Unknown,
               "<a | a^2> stays unknown");

    Poset torus = face_poset(models::torus_triangulation());
    reg.posets.push_back(torus);
    ck.require(aspherical_2complex(torus, true, 0, reg.budget).verdict == Tri::Yes,
               "torus triangulation aspherical");
    Poset tetra = face_poset(models::tetrahedron_boundary());
    reg.posets.push_back(tetra);
    ck.require(aspherical_2complex(tetra, true, 0, reg.budget).verdict == Tri::Unknown,
               "tetrahedron boundary stays unknown");
}

// ---- criterion 4: covering correspondence over everything built ----

inline void c4_covering_correspondence(Registry& reg, Check& ck) {
    {
        // seed the registry with two more small covers
        Poset fence = models::fence(3);
        reg.posets.push_back(fence);
        Coloring trivial = Coloring::trivial(fence, Group::finite(FiniteGroup::cyclic(2)));
        reg.covers.push_back({"trivial two-sheet cover of a fence", build_cover(trivial), trivial});

        Poset circle = models::cycle_poset(4);
        reg.posets.push_back(circle);
        Pi1Presentation p = pi1_presentation(circle, 0, std::nullopt, reg.budget);
        std::vector<GroupElement> cols(circle.covers().size(), GroupElement(0));
        cols[p.generator_edge.at(0)] = GroupElement(1);
        Coloring c(circle, Group::finite(FiniteGroup::cyclic(2)), cols);
        reg.covers.push_back({"two-sheet cover of the four-point circle", build_cover(c), c});
    }

    std::mt19937_64 rng(reg.seed ^ 0xc4);
    for (const auto& built : reg.covers) {
        const CoveringMap& cm = built.cover;
        ck.require(verify_covering(cm.projection).ok, built.name + ": projection verifies");
        ck.require(verify_covering_chains(cm.projection), built.name + ": chain criterion agrees");
        ck.require(simplicial_covering_check(cm), built.name + ": order-complex functor check");
        {
            SimplicialComplex ke = order_complex(cm.total), kb = order_complex(cm.base);
            SimplicialMap phi(ke, kb, cm.projection.assignment);
            ck.require(face_poset_covering_check(phi), built.name + ": face-poset functor check");
        }
        if (!cm.base.connected()) continue;
        const int b0 = 0;
        auto fc = fintop::detail::fundamental_cycles(cm.base, b0);
        std::vector<EdgePath> loops = fc.cycles;
        for (int i = 0; i < 100; ++i) loops.push_back(random_loop(cm.base, b0, fc.paths, rng));
        // fiber of the base point
        std::vector<int> fiber;
        for (std::size_t x = 0; x < cm.total.size(); ++x)
            if (cm.projection(static_cast<int>(x)) == b0) fiber.push_back(static_cast<int>(x));
        int id_point = -1;
        if (built.coloring) {
            const FiniteGroup& g = built.coloring->group().finite_group();
            std::string label = cm.base.label(b0) + "@" + g.element_name(g.identity());
            id_point = cm.total.index_of(label);
        }
        for (const auto& xi : loops) {
            for (int e0 : fiber) {
                EdgePath lift = lift_path(cm, xi, e0);
                ck.require(lift.steps.size() == xi.steps.size(), built.name + ": lift length");
                for (std::size_t i = 0; i < lift.steps.size(); ++i)
                    ck.require(cm.projection(lift.steps[i].second) == xi.steps[i].second,
                               built.name + ": lift projects back");
                EdgePath again = lift_path(cm, xi, e0);
                ck.require(again.steps == lift.steps, built.name + ": lift repeatable");
            }
            EdgePath round = xi * xi.reversed();
            ck.require(lift_path(cm, round, fiber.front()).closed(),
                       built.name + ": lift of xi xi^-1 closes");
            if (id_point >= 0) {
                bool closes = lift_path(cm, xi, id_point).end() == id_point;
                GroupElement w = weight(*built.coloring, xi);
                bool trivial_weight =
                    built.coloring->group().is_identity(w) == Tri::Yes;
                ck.require(closes == trivial_weight, built.name + ": fixed-subgroup property");
            }
        }
    }
}

// ---- criterion 8: property suites ----

inline void c8_properties(Registry& reg, Check& ck) {
    std::mt19937_64 rng(reg.seed ^ 0xc8);

    for (std::size_t i = 0; i < reg.complexes.size(); ++i)
        ck.require(reg.complexes[i].d_squared_zero(),
                   "complex #" + std::to_string(i) + " has d*d = 0");

    // beat-point removal preserves the homology of the order complex
    std::uniform_int_distribution<int> nv(4, 12);
    std::uniform_int_distribution<int> percent(0, 99);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = nv(rng);
        std::vector<std::string> labels;
        for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
        std::vector<std::pair<int, int>> rel;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (percent(rng) < 30) rel.emplace_back(a, b);
        Poset x = Poset::from_cover_indices(labels, rel);
        auto bp = beat_points(x);
        if (bp.empty()) continue;
        Homology before = simplicial_homology(order_complex(x));
        std::vector<int> keep;
        for (int v = 0; v < k; ++v)
            if (v != bp.front()) keep.push_back(v);
        Homology after = simplicial_homology(order_complex(x.induced(keep)));
        ck.require(homology_equal(before, after),
                   "beat point removal changed homology on trial " + std::to_string(trial));
        Homology core_h = simplicial_homology(order_complex(core(x)));
        ck.require(homology_equal(before, core_h),
                   "core changed homology on trial " + std::to_string(trial));
    }

    // abelianized pi1 equals H1 across everything the corpus touched
    int compared = 0;
    for (const auto& x : reg.posets) {
        if (x.size() == 0 || !x.connected()) continue;
        Pi1Presentation p = pi1_presentation(x, 0, std::nullopt, reg.budget);
        const FgAbelianGroup& ab = p.group.abelianization().group();
        HomologyGroup h1 = hgroup(simplicial_homology(order_complex(x)), 1);
        bool same = ab.rank() == h1.rank &&
                    std::vector<Int>(ab.divisors()) == h1.torsion;
        ck.require(same, "pi1 abelianization vs H1 on poset with " + std::to_string(x.size()) +
                             " elements: " + ab.to_string() + " vs " + h1.to_string());
        ++compared;
    }
    ck.require(compared >= 60, "H1 cross-check covered the corpus");

    // inverse colorings of abelian board colorings
    Group z = Group::abelian(FgAbelianGroup::free(1));
    for (auto kind : {BoardKind::Rectangle, BoardKind::Cylinder, BoardKind::Torus}) {
        Board b = Board::make(kind, kind == BoardKind::Rectangle ? 2 : 4,
                              kind == BoardKind::Torus ? 4 : 2);
        std::uniform_int_distribution<long> val(-3, 3);
        for (int trial = 0; trial < 10; ++trial) {
            // coboundary part
            std::vector<AbVec> g(b.poset.size());
            for (auto& v : g) v = {Int(val(rng))};
            std::vector<GroupElement> cols;
            for (const auto& [lo, hi] : b.poset.covers())
                cols.push_back(AbVec{g[hi][0] - g[lo][0]});
            // plus a multiple of the seam cocycle on cyclic boards
            if (kind != BoardKind::Rectangle) {
                Int lambda = val(rng);
                for (int j = 0; j <= (kind == BoardKind::Torus ? b.m - 1 : b.m); ++j) {
                    int e = b.factor1_edge(b.n - 1, j);
                    cols[e] = AbVec{std::get<AbVec>(cols[e])[0] + lambda};
                }
            }
            Coloring c(b.poset, z, cols);
            Coloring inv = invert_coloring(c);
            ck.require(is_admissible(c).verdict == Tri::Yes, "constructed coloring admissible");
            ck.require(is_admissible(inv).verdict == Tri::Yes, "inverse stays admissible");
            ck.require(is_connected_coloring(c, 0) == is_connected_coloring(inv, 0),
                       "inverse preserves connectedness verdict");
        }
    }
}

}  // namespace detail

/// Runs the whole acceptance corpus; deterministic for a fixed seed and
/// budget. One result per criterion, ordered by id.
inline std::vector<CriterionResult> run(std::uint64_t seed = 20240, long budget = 20000) {
    detail::Registry reg;
    reg.seed = seed;
    reg.budget = budget;
    std::vector<std::pair<std::string, detail::CriterionFn>> plan = {
        {"C1 two-fold quotient pipeline", detail::c1_quotient_pipeline},
        {"C2 board theorems", detail::c2_boards},
        {"C3 cellular homology equals simplicial homology", detail::c3_cellular_vs_simplicial},
        {"C5 pi2 equations on the circle-with-two-spheres model", detail::c5_pi2_equations},
        {"C6 Hurewicz degenerate case", detail::c6_hurewicz_degenerate},
        {"C7 asphericity certificates", detail::c7_asphericity},
        {"C4 covering correspondence", detail::c4_covering_correspondence},
        {"C8 property suites", detail::c8_properties},
    };
    std::vector<CriterionResult> results;
    for (auto& [name, fn] : plan) {
        CriterionResult r;
        r.id = name.substr(0, 2);
        r.name = name.substr(3);
        detail::Check ck;
        try {
            fn(reg, ck);
            r.pass = ck.ok;
            r.detail = ck.log.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    std::sort(results.begin(), results.end(),
              [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
    return results;
}

inline std::string report(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name;
        if (!r.pass && !r.detail.empty()) os << " -- " << r.detail;
        os << "\n";
    }
    return os.str();
}

}  // namespace fintop::corpus
