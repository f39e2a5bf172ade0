#pragma once

#include <string>
#include <vector>

#include "fintop/coloring.hpp"
#include "fintop/covering.hpp"
#include "fintop/poset.hpp"
#include "fintop/simplicial.hpp"

namespace fintop::models {

/// Fence 0 < 1 > 2 < 3 > ... with n edges (n+1 elements). Contractible.
inline Poset fence(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i) {
        if (i % 2 == 0)
            covers.emplace_back(i, i + 1);
        else
            covers.emplace_back(i + 1, i);
    }
    return Poset::from_cover_indices(std::move(labels), covers);
}

/// Fence with the two ends identified: n >= 4 elements arranged in a
/// circle. Even n has height 1, odd n height 2; either way the fundamental
/// group is infinite cyclic.
inline Poset cycle_poset(int n) {
    if (n < 4) throw DimensionTooSmall("cyclic fence needs n >= 4");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        if (i % 2 == 0)
            covers.emplace_back(i, j);  // even below odd
        else
            covers.emplace_back(j, i);
    }
    return Poset::from_cover_indices(std::move(labels), covers);
}

/// Minimal model of the 2-sphere: two points in each height 0, 1, 2.
inline Poset sphere_poset() {
    return Poset::from_covers({"a", "b", "c", "d", "e", "f"},
                              {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
                               {"c", "e"}, {"c", "f"}, {"d", "e"}, {"d", "f"}});
}

inline SimplicialComplex tetrahedron_boundary() {
    return SimplicialComplex::from_facets({"0", "1", "2", "3"},
                                          {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// The 7-vertex triangulation of the torus: triangles {i,i+1,i+3} and
/// {i,i+2,i+3} mod 7. Every edge lies in exactly two triangles.
inline SimplicialComplex torus_triangulation() {
    std::vector<std::string> v;
    for (int i = 0; i < 7; ++i) v.push_back(std::to_string(i));
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_facets(std::move(v), std::move(facets));
}

/// 13-point model of the projective plane, as the quotient of the two-fold
/// Milnor-style construction.
inline Poset projective_plane_poset() {
    return milnor_poset(FiniteGroup::cyclic(2)).quotient;
}

/// Height-2 cellular poset weak-equivalent to a circle wedged with two
/// spheres, together with the coloring of its universal cover over the
/// infinite cyclic group <a|>. One sphere (cells x, y) is attached around
/// the circle, so its kernel generators pick up the twist a*x - y; the
/// other (z, w) sits beside it with plain generators z - w. The 1-cell v
/// is a face of x and y that the generator cycles avoid.
struct CircleTwoSpheres {
    Poset poset;
    Coloring universal_coloring;  // over <a |>
    int base = 0;
};

inline CircleTwoSpheres circle_two_spheres() {
    Poset p = Poset::from_covers(
        {"m1", "m2", "m3", "u", "t", "v", "s", "r", "x", "y", "z", "w"},
        {{"m1", "u"}, {"m2", "u"}, {"m1", "t"}, {"m2", "t"}, {"m1", "v"}, {"m3", "v"},
         {"m2", "s"}, {"m3", "s"}, {"m2", "r"}, {"m3", "r"},
         {"u", "x"}, {"t", "x"}, {"v", "x"}, {"u", "y"}, {"t", "y"}, {"v", "y"},
         {"s", "z"}, {"r", "z"}, {"s", "w"}, {"r", "w"}});
    Group g = Group::presented(GroupPresentation({"a"}, {}));
    Word a = Word::gen(0);
    std::vector<GroupElement> colors(p.covers().size(), GroupElement(Word{}));
    auto set = [&](const std::string& lo, const std::string& hi, const Word& w) {
        colors[p.edge_index(p.index_of(lo), p.index_of(hi))] = w;
    };
    set("m1", "v", a);
    set("u", "x", a);
    set("t", "x", a);
    set("v", "y", a.inverse());
    CircleTwoSpheres res;
    res.poset = p;
    res.universal_coloring = Coloring(p, g, std::move(colors));
    res.base = p.index_of("m1");
    return res;
}

/// <a,b,c,d,e | b^2 c a^-1 b^-1 d b a, c^-1 d e b e>; its letter digraph
/// has one component and a cycle of infinite abelianized order a + 3b.
inline GroupPresentation presentation_with_infinite_cycle() {
    return parse_presentation("<a, b, c, d, e | b b c a^-1 b^-1 d b a, c^-1 d e b e>");
}

inline GroupPresentation torus_presentation() {
    return parse_presentation("<a, b | a b a^-1 b^-1>");
}

inline GroupPresentation projective_plane_presentation() {
    return parse_presentation("<a | a a>");
}

}  // namespace fintop::models
