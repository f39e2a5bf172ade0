#include "catch_amalgamated.hpp"

#include "fintop/io.hpp"
#include "fintop/models.hpp"

using namespace fintop;

TEST_CASE("poset documents round trip") {
    for (const Poset& p : {models::sphere_poset(), models::cycle_poset(5),
                           models::projective_plane_poset()}) {
        auto j = poset_to_json(p);
        CHECK(poset_from_json(j) == p);
        // parse is insensitive to re-serialization
        CHECK(poset_to_json(poset_from_json(j)) == j);
    }
    CHECK_THROWS_AS(poset_from_json(Json::object()), FormatError);
    CHECK_THROWS_AS(poset_from_json(Json{{"elements", {"a"}}, {"covers", {{"a"}}}}), FormatError);
}

TEST_CASE("complex documents round trip") {
    auto k = models::torus_triangulation();
    auto j = complex_to_json(k);
    auto back = complex_from_json(j);
    CHECK(back.vertex_labels == k.vertex_labels);
    CHECK(back.simplex_count() == k.simplex_count());
    CHECK_THROWS_AS(complex_from_json(Json{{"vertices", {"a"}}, {"facets", {{"b"}}}}),
                    FormatError);
}

TEST_CASE("group literals") {
    CHECK(group_from_literal(Json("Z")).kind() == Group::Kind::Abelian);
    CHECK(group_from_literal(Json("ZxZ")).abelian_group().rank() == 2);
    CHECK(group_from_literal(Json("Z_4")).finite_group().order() == 4);
    CHECK(group_from_literal(Json("D_3")).finite_group().order() == 6);
    CHECK(group_from_literal(Json("S_3")).finite_group().order() == 6);
    CHECK(group_from_literal(Json("<a | a^2>")).kind() == Group::Kind::Presented);
    Json table;
    table["table"] = std::vector<std::vector<int>>{{0, 1}, {1, 0}};
    CHECK(group_from_literal(table).finite_group().order() == 2);
    CHECK_THROWS_AS(group_from_literal(Json("Q_8")), FormatError);
    CHECK_THROWS_AS(group_from_literal(Json("Z_x")), FormatError);
    CHECK_THROWS_AS(group_from_literal(Json(3)), FormatError);
}

TEST_CASE("element literals per group kind") {
    auto z4 = group_from_literal(Json("Z_4"));
    CHECK(std::get<int>(element_from_json(z4, Json(3))) == 3);
    CHECK_THROWS_AS(element_from_json(z4, Json(7)), FormatError);
    CHECK_THROWS_AS(element_from_json(z4, Json("x")), FormatError);

    auto zz = group_from_literal(Json("ZxZ"));
    auto v = std::get<AbVec>(element_from_json(zz, Json::array({3, -2})));
    CHECK(v == AbVec{Int(3), Int(-2)});
    CHECK_THROWS_AS(element_from_json(zz, Json::array({1})), FormatError);

    auto fp = group_from_literal(Json("<a, b | a b a^-1 b^-1>"));
    auto w = std::get<Word>(element_from_json(fp, Json("a b^-2")));
    CHECK(w.length() == 3);
    CHECK(element_to_json(fp, GroupElement(w)) == Json("a b^-2"));
}

TEST_CASE("coloring documents round trip") {
    auto circ = models::cycle_poset(4);
    auto p = pi1_presentation(circ, 0);

    // table group colors
    std::vector<GroupElement> cols(circ.covers().size(), GroupElement(0));
    cols[p.generator_edge.at(0)] = GroupElement(1);
    Coloring c(circ, Group::finite(FiniteGroup::cyclic(2)), cols);
    auto j = coloring_to_json(c);
    auto back = coloring_from_json(j);
    CHECK(back.poset() == c.poset());
    for (std::size_t e = 0; e < circ.covers().size(); ++e)
        CHECK(std::get<int>(back.color(static_cast<int>(e))) ==
              std::get<int>(c.color(static_cast<int>(e))));

    // abelian colors
    std::vector<GroupElement> az(circ.covers().size(), GroupElement(AbVec{Int(0)}));
    az[0] = AbVec{Int(-2)};
    auto ja = coloring_to_json(Coloring(circ, Group::abelian(FgAbelianGroup::free(1)), az));
    auto backa = coloring_from_json(ja);
    CHECK(std::get<AbVec>(backa.color(0)) == AbVec{Int(-2)});

    // word colors
    auto sc = standard_coloring(p);
    auto js = coloring_to_json(sc);
    auto backs = coloring_from_json(js);
    for (std::size_t e = 0; e < circ.covers().size(); ++e)
        CHECK(std::get<Word>(backs.color(static_cast<int>(e))) ==
              std::get<Word>(sc.color(static_cast<int>(e))));

    // bad edge reference
    auto broken = j;
    broken["colors"].push_back({"0", "2", 1});
    CHECK_THROWS_AS(coloring_from_json(broken), FormatError);
}

TEST_CASE("map documents round trip and validate") {
    auto x = models::sphere_poset();
    std::vector<int> id(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) id[i] = static_cast<int>(i);
    auto j = monotone_map_to_json(MonotoneMap(x, x, id));
    auto back = monotone_map_from_json(j);
    CHECK(back.source == x);
    CHECK(back.surjective());

    // a non-monotone assignment is a malformed document
    auto bad = j;
    bad["map"][0][1] = "f";  // send the minimal element over a maximal one
    CHECK_THROWS_AS(monotone_map_from_json(bad), FormatError);
}

TEST_CASE("homology serialization is stable") {
    auto h = simplicial_homology(order_complex(models::projective_plane_poset()));
    auto j = homology_to_json(h);
    CHECK(j[1]["torsion"][0] == "2");
    CHECK(j[2]["rank"] == 0);
}
