#include "catch_amalgamated.hpp"

#include <random>

#include "fintop/cellular.hpp"
#include "fintop/models.hpp"

using namespace fintop;

TEST_CASE("simplicial homology of standard spaces") {
    auto pt = SimplicialComplex::from_facets({"a"}, {{0}});
    for (const auto& h : simplicial_homology(pt)) CHECK(h.trivial());

    auto tri = SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(simplicial_homology(tri)[1] == HomologyGroup{1, {}});

    auto torus = models::torus_triangulation();
    auto ht = simplicial_homology(torus);
    CHECK(ht[0].trivial());
    CHECK(ht[1] == HomologyGroup{2, {}});
    CHECK(ht[2] == HomologyGroup{1, {}});
    CHECK(torus.euler_characteristic() == 0);

    auto tetra = models::tetrahedron_boundary();
    CHECK(simplicial_homology(tetra)[2] == HomologyGroup{1, {}});

    auto rp2 = simplicial_homology(order_complex(models::projective_plane_poset()));
    CHECK(rp2[1] == HomologyGroup{0, {2}});
    CHECK(rp2[2] == HomologyGroup{0, {}});
}

TEST_CASE("cellular structures accept face posets and graded sphere models") {
    auto x = face_poset(models::torus_triangulation());
    auto s = cellular_structure(x);
    for (std::size_t v = 0; v < x.size(); ++v)
        CHECK(s.degree[v] == x.height_of(static_cast<int>(v)));
    // face posets of complexes have unit incidence numbers
    for (const auto& eps : s.incidence) CHECK((eps == 1 || eps == -1));

    auto sphere = cellular_structure(models::sphere_poset());
    CHECK(sphere.by_degree.size() == 3);
}

TEST_CASE("cellular structure rejections") {
    // not graded: the top is reached by chains of lengths 1 and 2
    auto bad = Poset::from_covers({"a", "c", "d", "e"},
                                  {{"a", "c"}, {"c", "d"}, {"e", "d"}});
    CHECK_THROWS_AS(cellular_structure(bad), NotGraded);

    // graded but not spherical: the top of a 2-chain has a contractible link
    auto chain = Poset::from_covers({"a", "b"}, {{"a", "b"}});
    CHECK_THROWS_AS(cellular_structure(chain), NotSpherical);

    // degree-2 element with a contractible punctured down-set
    auto cone = face_poset(SimplicialComplex::from_facets({"0", "1", "2"}, {{0, 1, 2}}));
    // the face poset of the full 2-simplex IS cellular; remove one edge cell
    std::vector<int> keep;
    for (std::size_t v = 0; v < cone.size(); ++v)
        if (cone.label(static_cast<int>(v)) != "{0,1}") keep.push_back(static_cast<int>(v));
    CHECK_THROWS_AS(cellular_structure(cone.induced(keep)), NotSpherical);
}

TEST_CASE("incidence numbers reproduce simplicial boundaries") {
    auto k = models::tetrahedron_boundary();
    auto x = face_poset(k);
    auto s = cellular_structure(x);
    ChainComplex cc = cellular_chain_complex(s);
    CHECK(cc.d_squared_zero());
    CHECK(homology_equal(homology(cc, true), simplicial_homology(k)));
    // every degree-1 element covers two minimal elements with opposite signs
    for (int e1 : s.by_degree[1]) {
        auto dc = x.down_covers(e1);
        REQUIRE(dc.size() == 2);
        Int a = s.incidence[x.edge_index(dc[0], e1)];
        Int b = s.incidence[x.edge_index(dc[1], e1)];
        CHECK(a * b == -1);
    }
}

TEST_CASE("cellular homology equals the order-complex homology") {
    for (const Poset& x : {models::sphere_poset(), models::projective_plane_poset(),
                           face_poset(models::torus_triangulation())}) {
        auto s = cellular_structure(x);
        CHECK(homology_equal(cellular_homology(s), simplicial_homology(order_complex(x))));
    }
    // a disjoint union of points: reduced homology counts components - 1
    auto pts = Poset::from_covers({"a", "b", "c"}, {});
    auto s = cellular_structure(pts);
    auto h = cellular_homology(s);
    CHECK(h[0] == HomologyGroup{2, {}});
}

TEST_CASE("twisted complex with the trivial group is the plain complex") {
    auto x = models::sphere_poset();
    auto s = cellular_structure(x);
    auto c1 = cellular_chain_complex(s);
    auto tc = twisted_complex(s, Coloring::trivial(x, Group::finite(FiniteGroup::trivial())));
    REQUIRE(tc.expanded.ranks == c1.ranks);
    for (std::size_t p = 0; p < c1.boundary.size(); ++p)
        CHECK(tc.expanded.boundary[p] == c1.boundary[p]);
}

TEST_CASE("twisted complex over a trivial coloring doubles the homology") {
    auto x = models::sphere_poset();
    auto s = cellular_structure(x);
    auto tc = twisted_complex(s, Coloring::trivial(x, Group::finite(FiniteGroup::cyclic(2))));
    auto h = twisted_homology(tc);
    // two disjoint spheres: reduced H0 = Z, H2 = Z^2
    CHECK(h[0] == HomologyGroup{1, {}});
    CHECK(h[2] == HomologyGroup{2, {}});
    // and it matches the homology of the disjoint double computed directly
    auto cover = build_cover(Coloring::trivial(x, Group::finite(FiniteGroup::cyclic(2))));
    CHECK(homology_equal(h, simplicial_homology(order_complex(cover.total))));
}

TEST_CASE("twisted complex matches the cover's own cellular complex") {
    auto x = models::projective_plane_poset();
    auto uc = universal_cover(x, 0);
    auto s = cellular_structure(x);
    auto tc = twisted_complex(s, uc.coloring);
    auto direct = cellular_homology(cellular_structure(uc.cover.total));
    CHECK(homology_equal(twisted_homology(tc), direct));
    // H1 of the universal cover vanishes
    CHECK(twisted_homology(tc)[1].trivial());
}

TEST_CASE("pi2 of the basic models") {
    auto pr = pi2(models::sphere_poset(), 0);
    CHECK(pr.kind == Pi2Result::Kind::Abelian);
    CHECK(pr.abelian == HomologyGroup{1, {}});

    auto prp = pi2(models::projective_plane_poset(), 0);
    CHECK(prp.kind == Pi2Result::Kind::Abelian);
    CHECK(prp.abelian == HomologyGroup{1, {}});

    auto cts = models::circle_two_spheres();
    auto pw = pi2(cts.poset, cts.base);
    CHECK(pw.kind == Pi2Result::Kind::FreeModule);
    CHECK(pw.free_rank == 2);
}

TEST_CASE("pi2 membership cross-checked against the expanded kernel") {
    auto cts = models::circle_two_spheres();
    auto s = cellular_structure(cts.poset);
    // push down to Z_6 so the expanded integer matrix is available
    auto pushed = push_to_finite(cts.universal_coloring, FiniteGroup::cyclic(6), {1});
    auto tc = twisted_complex(s, pushed);
    const FiniteGroup& g = pushed.group().finite_group();
    const int n = 6;
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> cellpick(0, 3), gpick(0, 5), cpick(-2, 2);
    const char* names[4] = {"x", "y", "z", "w"};
    for (int trial = 0; trial < 60; ++trial) {
        GroupRingChain alpha;
        std::vector<Int> expanded(tc.expanded.ranks[2]);
        for (int t = 0; t < 3; ++t) {
            int cell = cts.poset.index_of(names[cellpick(rng)]);
            int ge = gpick(rng);
            int coeff = cpick(rng);
            alpha.terms.push_back({cell, GroupElement(ge), coeff});
            expanded[s.position[cell] * n + ge] += coeff;
        }
        bool direct = true;
        auto img = tc.expanded.boundary[2].apply(expanded);
        for (const auto& v : img)
            if (v != 0) direct = false;
        CHECK(pi2_membership(s, pushed, alpha) == direct);
    }
}

TEST_CASE("hurewicz gate") {
    // a forest between heights 1 and 2: one 2-cell over two 1-cells
    auto saucer = Poset::from_covers({"a", "b", "u", "v", "x"},
                                     {{"a", "u"}, {"b", "u"}, {"a", "v"}, {"b", "v"},
                                      {"u", "x"}, {"v", "x"}});
    auto rep = hurewicz_condition(saucer, 0);
    CHECK(rep.verdict == Tri::Yes);

    CHECK(hurewicz_condition(models::sphere_poset(), 0).verdict == Tri::Yes);
    auto cts = models::circle_two_spheres();
    CHECK(hurewicz_condition(cts.poset, cts.base).verdict == Tri::Yes);
}

TEST_CASE("pi2 propagates cellularity failures") {
    // C5 has a cover jumping two degrees, so it is not even graded
    auto c5 = models::cycle_poset(5);
    CHECK_THROWS_AS(pi2(c5, 0), NotGraded);
    CHECK_THROWS_AS(pi2(Poset::from_covers({"a", "b"}, {}), 0), NotConnected);
}

TEST_CASE("wedge pi2 arithmetic") {
    Pi2Result point;
    point.kind = Pi2Result::Kind::Abelian;
    point.abelian = HomologyGroup{0, {}};
    auto sphere_h2 = HomologyGroup{1, {}};
    auto r = wedge_pi2(point, GroupPresentation({}, {}), sphere_h2);
    CHECK(r.kind == Pi2Result::Kind::Abelian);
    CHECK(r.abelian == HomologyGroup{1, {}});

    // plane model wedge a sphere: Z2 group ring on one sphere plus Z
    auto x = models::projective_plane_poset();
    auto px = pi1_presentation(x, 0);
    Pi2Result prp = pi2(x, 0);
    auto w = wedge_pi2(prp, px.presentation, sphere_h2);
    CHECK(w.kind == Pi2Result::Kind::Abelian);
    CHECK(w.abelian == HomologyGroup{3, {}});

    // verified by building the wedge poset and running pi2 on it
    auto glued = wedge(x, models::sphere_poset());
    auto direct = pi2(glued, 0);
    CHECK(direct.kind == Pi2Result::Kind::Abelian);
    CHECK(direct.abelian == HomologyGroup{3, {}});

    // wedging with a point changes nothing
    auto unchanged = wedge_pi2(prp, px.presentation, HomologyGroup{0, {}});
    CHECK(unchanged.abelian == prp.abelian);
}

TEST_CASE("homology of chain complex handles empty and edge cases") {
    ChainComplex empty;
    CHECK(homology(empty, true).empty());

    // single point
    ChainComplex one;
    one.ranks = {1};
    one.boundary = {IntMat(0, 1)};
    auto h = homology(one, true);
    CHECK(h[0].trivial());
}
