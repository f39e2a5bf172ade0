#include "catch_amalgamated.hpp"

#include <random>

#include "fintop/covering.hpp"
#include "fintop/homology.hpp"
#include "fintop/models.hpp"

using namespace fintop;

namespace {

Coloring z2_circle_coloring(const Poset& circ) {
    auto p = pi1_presentation(circ, 0);
    std::vector<GroupElement> cols(circ.covers().size(), GroupElement(0));
    cols[p.generator_edge.at(0)] = GroupElement(1);
    return Coloring(circ, Group::finite(FiniteGroup::cyclic(2)), cols);
}

}  // namespace

TEST_CASE("trivial coloring gives disjoint copies") {
    auto fence = models::fence(3);
    auto cm = build_cover(Coloring::trivial(fence, Group::finite(FiniteGroup::cyclic(2))));
    CHECK(cm.total.size() == 2 * fence.size());
    CHECK(cm.total.component_count() == 2);
    CHECK(verify_covering(cm.projection).ok);
}

TEST_CASE("double cover of the circle is the bigger circle") {
    auto cm = build_cover(z2_circle_coloring(models::cycle_poset(4)));
    CHECK(cm.total.size() == 8);
    CHECK(cm.total.connected());
    CHECK(simplicial_homology(order_complex(cm.total))[1] == HomologyGroup{1, {}});
}

TEST_CASE("covering construction demands admissibility and table groups") {
    auto b = models::sphere_poset();
    auto z2 = Group::finite(FiniteGroup::cyclic(2));
    std::vector<GroupElement> cols(b.covers().size(), GroupElement(0));
    cols[0] = GroupElement(1);  // breaks a digon
    CHECK_THROWS_AS(build_cover(Coloring(b, z2, cols)), NotAdmissible);
    auto z = Group::abelian(FgAbelianGroup::free(1));
    CHECK_THROWS_AS(
        build_cover(Coloring(b, z, std::vector<GroupElement>(b.covers().size(),
                                                             GroupElement(AbVec{Int(0)})))),
        InfiniteGroup);
}

TEST_CASE("verify_covering catches non-coverings") {
    auto pt = Poset::from_covers({"*"}, {});
    auto anti = Poset::from_covers({"a", "b"}, {});
    auto v = verify_covering(MonotoneMap(anti, pt, {0, 0}));
    CHECK(v.ok);  // two disjoint points over a point is a covering
    CHECK(verify_covering_chains(MonotoneMap(anti, pt, {0, 0})));

    auto chain = Poset::from_covers({"x", "y"}, {{"x", "y"}});
    auto fold = MonotoneMap(chain, pt, {0, 0});
    auto v2 = verify_covering(fold);
    CHECK_FALSE(v2.ok);
    CHECK(v2.witness >= 0);
    CHECK_FALSE(verify_covering_chains(fold));

    // identity is always a covering
    auto x = models::sphere_poset();
    std::vector<int> id(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) id[i] = static_cast<int>(i);
    CHECK(verify_covering(MonotoneMap(x, x, id)).ok);
}

TEST_CASE("both covering checks agree on random monotone maps") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 20; ++t) {
        // fold a product of fences onto one factor; never a covering unless trivial
        std::uniform_int_distribution<int> nd(1, 3);
        auto f1 = models::fence(nd(rng));
        auto f2 = models::fence(nd(rng));
        auto prod = product(f1, f2);
        std::vector<int> proj(prod.size());
        for (std::size_t i = 0; i < prod.size(); ++i)
            proj[i] = static_cast<int>(i) / static_cast<int>(f2.size());
        MonotoneMap m(prod, f1, proj);
        CHECK(verify_covering(m).ok == verify_covering_chains(m));
    }
}

TEST_CASE("lifting paths") {
    auto circ = models::cycle_poset(4);
    auto c = z2_circle_coloring(circ);
    auto cm = build_cover(c);
    int e0 = cm.total.index_of(circ.label(0) + "@0");

    CHECK(lift_path(cm, EdgePath::empty_at(circ, 0), e0).empty());

    auto p = pi1_presentation(circ, 0);
    int edge = p.generator_edge.at(0);
    auto [u, v] = circ.covers()[edge];
    EdgePath cyc = p.base_paths[u] * EdgePath(circ, {{u, v}}) * p.base_paths[v].reversed();
    // weight is the nontrivial element, so the lift switches sheets
    auto lift = lift_path(cm, cyc, e0);
    CHECK(lift.end() == cm.total.index_of(circ.label(0) + "@1"));
    auto lift2 = lift_path(cm, cyc * cyc, e0);
    CHECK(lift2.end() == e0);
    CHECK(lift_path(cm, cyc * cyc.reversed(), e0).closed());
}

TEST_CASE("deck transformations of small covers") {
    auto chain = Poset::from_covers({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    std::vector<int> id{0, 1, 2};
    CoveringMap identity{chain, chain, MonotoneMap(chain, chain, id)};
    CHECK(deck_transformations(identity).size() == 1);

    // disconnected trivial double of a rigid chain: the two copy swaps
    auto cm = build_cover(Coloring::trivial(chain, Group::finite(FiniteGroup::cyclic(2))));
    auto decks = deck_transformations(cm);
    CHECK(decks.size() == 2);

    // connected double cover: deck group of order |G| acting by the second
    // coordinate
    auto circ = models::cycle_poset(4);
    auto c = z2_circle_coloring(circ);
    auto cc = build_cover(c);
    auto d2 = deck_transformations(cc);
    REQUIRE(d2.size() == 2);
    const FiniteGroup& g = FiniteGroup::cyclic(2);
    for (int a = 0; a < 2; ++a) {
        // left multiplication by a on the fiber coordinate
        std::vector<int> h(cc.total.size());
        for (std::size_t x = 0; x < circ.size(); ++x)
            for (int k = 0; k < 2; ++k) {
                int from = cc.total.index_of(circ.label(static_cast<int>(x)) + "@" +
                                             g.element_name(k));
                int to = cc.total.index_of(circ.label(static_cast<int>(x)) + "@" +
                                           g.element_name(g.mul(a, k)));
                h[from] = to;
            }
        CHECK(std::find(d2.begin(), d2.end(), h) != d2.end());
    }
    // closed under composition, order divides the fiber size
    for (const auto& f : d2)
        for (const auto& g2 : d2) {
            std::vector<int> fg(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) fg[i] = f[g2[i]];
            CHECK(std::find(d2.begin(), d2.end(), fg) != d2.end());
        }
}

TEST_CASE("universal covers") {
    // simply connected: one sheet
    auto uc = universal_cover(models::sphere_poset(), 0);
    CHECK(uc.cover.total.size() == models::sphere_poset().size());
    CHECK(uc.group.order() == 1);

    // plane model: the double cover is the sphere
    auto x = models::projective_plane_poset();
    auto u2 = universal_cover(x, 0);
    CHECK(u2.cover.total.size() == 26);
    CHECK(is_simply_connected(u2.cover.total) == Tri::Yes);
    auto h = simplicial_homology(order_complex(u2.cover.total));
    CHECK(h[1] == HomologyGroup{0, {}});
    CHECK(h[2] == HomologyGroup{1, {}});

    // infinite cyclic fundamental group: no finite realization
    CHECK_THROWS_AS(universal_cover(models::cycle_poset(4), 0), NotFiniteOrUnknownPi1);
}

TEST_CASE("milnor-style construction") {
    auto m1 = milnor_poset(FiniteGroup::trivial());
    CHECK(m1.total.size() == 7);
    CHECK(m1.quotient.size() == 7);
    CHECK(is_simply_connected(m1.quotient) == Tri::Yes);

    auto m2 = milnor_poset(FiniteGroup::cyclic(2));
    CHECK(m2.total.size() == 26);
    CHECK(m2.quotient.size() == 13);
    CHECK(verify_covering(m2.projection.projection).ok);
    // free action: no fixed points outside the identity
    for (std::size_t a = 1; a < m2.action.size(); ++a)
        for (std::size_t x = 0; x < m2.total.size(); ++x)
            CHECK(m2.action[a][x] != static_cast<int>(x));

    auto m3 = milnor_poset(FiniteGroup::cyclic(3));
    CHECK(m3.total.size() == 3 * 3 + 3 * 9 + 27);
    CHECK(m3.quotient.size() == m3.total.size() / 3);
    auto p3 = pi1_presentation(m3.quotient, 0);
    CHECK(p3.group.abelianization().group() == FgAbelianGroup(0, {3}));
}

TEST_CASE("functor checks on the suite's covers") {
    auto circ = models::cycle_poset(4);
    auto cm = build_cover(z2_circle_coloring(circ));
    CHECK(simplicial_covering_check(cm));
    SimplicialComplex ke = order_complex(cm.total), kb = order_complex(cm.base);
    SimplicialMap phi(ke, kb, cm.projection.assignment);
    CHECK(face_poset_covering_check(phi));

    auto x = models::projective_plane_poset();
    auto uc = universal_cover(x, 0);
    CHECK(simplicial_covering_check(uc.cover));
    SimplicialMap phi2(order_complex(uc.cover.total), order_complex(x),
                       uc.cover.projection.assignment);
    CHECK(face_poset_covering_check(phi2));

    // a non-covering fails the simplicial criterion
    auto pt = Poset::from_covers({"*"}, {});
    auto chain = Poset::from_covers({"x", "y"}, {{"x", "y"}});
    CoveringMap fake{chain, pt, MonotoneMap(chain, pt, {0, 0})};
    CHECK_FALSE(simplicial_covering_check(fake));
}

TEST_CASE("euler characteristics multiply across covers") {
    auto circ = models::cycle_poset(4);
    auto cm = build_cover(z2_circle_coloring(circ));
    CHECK(cm.total.size() == 2 * cm.base.size());
    CHECK(order_complex(cm.total).euler_characteristic() ==
          2 * order_complex(cm.base).euler_characteristic());

    auto x = models::projective_plane_poset();
    auto uc = universal_cover(x, 0);
    CHECK(order_complex(uc.cover.total).euler_characteristic() ==
          2 * order_complex(x).euler_characteristic());
}

TEST_CASE("equivalent colorings induce equivalent covers") {
    auto octo = models::cycle_poset(8);
    auto po = pi1_presentation(octo, 0);
    auto z2 = Group::finite(FiniteGroup::cyclic(2));
    std::vector<GroupElement> v1(octo.covers().size(), GroupElement(0));
    v1[po.generator_edge.at(0)] = GroupElement(1);
    Coloring c1(octo, z2, v1);
    // equivalent coloring via a vertex family
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<int> g(octo.size());
    for (auto& b : g) b = bit(rng);
    std::vector<GroupElement> v2;
    for (std::size_t e = 0; e < octo.covers().size(); ++e) {
        auto [a, b] = octo.covers()[e];
        v2.push_back(GroupElement((g[a] + std::get<int>(v1[e]) + g[b]) % 2));
    }
    Coloring c2(octo, z2, v2);
    auto rep = are_equivalent(c1, c2);
    REQUIRE(rep.verdict == Tri::Yes);
    REQUIRE(rep.witness.has_value());
    // h(b, k) = (b, phi(k * g_b^-1)) intertwines the two covers
    auto e1 = build_cover(c1), e2 = build_cover(c2);
    const FiniteGroup& fg = z2.finite_group();
    std::vector<int> h(e1.total.size());
    for (std::size_t b = 0; b < octo.size(); ++b)
        for (std::size_t k = 0; k < 2; ++k) {
            int gb = std::get<int>(rep.witness->g[b]);
            int img = rep.witness->automorphism[fg.mul(static_cast<int>(k), fg.inv(gb))];
            h[e1.total.index_of(octo.label(static_cast<int>(b)) + "@" + fg.element_name(static_cast<int>(k)))] =
                e2.total.index_of(octo.label(static_cast<int>(b)) + "@" + fg.element_name(img));
        }
    // h is a poset isomorphism commuting with the projections
    for (const auto& [a, b] : e1.total.covers()) CHECK(e2.total.edge_index(h[a], h[b]) >= 0);
    for (std::size_t xx = 0; xx < e1.total.size(); ++xx)
        CHECK(e2.projection(h[xx]) == e1.projection(static_cast<int>(xx)));
}
