#include "catch_amalgamated.hpp"

#include <random>
#include <set>

#include "fintop/homology.hpp"
#include "fintop/models.hpp"
#include "fintop/poset.hpp"
#include "fintop/simplicial.hpp"

using namespace fintop;

namespace {

// brute-force chain counter: every nonempty subset that is totally ordered
long count_chains_brute(const Poset& p) {
    REQUIRE(p.size() <= 16);
    long count = 0;
    for (std::size_t mask = 1; mask < (1u << p.size()); ++mask) {
        std::vector<int> sel;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (mask & (1u << i)) sel.push_back(static_cast<int>(i));
        bool chain = true;
        for (std::size_t i = 0; i < sel.size() && chain; ++i)
            for (std::size_t j = i + 1; j < sel.size() && chain; ++j)
                if (!p.leq(sel[i], sel[j]) && !p.leq(sel[j], sel[i])) chain = false;
        if (chain) ++count;
    }
    return count;
}

Poset random_poset(std::mt19937_64& rng, int max_n) {
    std::uniform_int_distribution<int> nv(3, max_n);
    std::uniform_int_distribution<int> percent(0, 99);
    const int k = nv(rng);
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (percent(rng) < 30) rel.emplace_back(a, b);
    return Poset::from_cover_indices(labels, rel);
}

}  // namespace

TEST_CASE("from_covers builds the fence and applies transitive reduction") {
    auto p = Poset::from_covers({"0", "1", "2", "3"}, {{"0", "1"}, {"2", "1"}, {"2", "3"}});
    CHECK(p.covers().size() == 3);
    CHECK(p.height() == 1);
    CHECK(p.leq(p.index_of("0"), p.index_of("1")));
    CHECK_FALSE(p.leq(p.index_of("0"), p.index_of("3")));

    // full order relation in, covers out
    auto q = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(q.covers().size() == 2);
    CHECK(q.edge_index(q.index_of("a"), q.index_of("c")) == -1);
}

TEST_CASE("from_covers error paths") {
    CHECK_THROWS_AS(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    CHECK_THROWS_AS(Poset::from_covers({"a"}, {{"a", "z"}}), UnknownLabel);
    CHECK_THROWS_AS(Poset::from_covers({"a", "a"}, {}), InvalidArgument);
    auto single = Poset::from_covers({"a"}, {});
    CHECK(single.size() == 1);
    CHECK(single.height() == 0);
}

TEST_CASE("transitive reduction is idempotent") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 25; ++t) {
        Poset p = random_poset(rng, 10);
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& [a, b] : p.covers()) pairs.emplace_back(p.label(a), p.label(b));
        Poset q = Poset::from_covers(p.labels(), pairs);
        CHECK(p == q);
    }
}

TEST_CASE("down-sets, up-sets and punctured variants") {
    auto p = models::fence(2);  // 0 < 1 > 2
    int one = p.index_of("1");
    CHECK(p.down_set(one) == std::vector<int>{0, 1, 2});
    CHECK(p.up_set(p.index_of("0")) == std::vector<int>{0, 1});
    CHECK(p.punctured_down_set(p.index_of("0")).empty());

    auto s = models::sphere_poset();
    auto hat = s.punctured_down_set(s.index_of("e"));
    Poset link = s.induced(hat);
    CHECK(link.size() == 4);
    CHECK(beat_points(link).empty());  // the four-point circle
    CHECK(simplicial_homology(order_complex(link))[1] == HomologyGroup{1, {}});
}

TEST_CASE("up and down sets swap under opposite") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        Poset p = random_poset(rng, 9);
        Poset op = opposite(p);
        for (std::size_t x = 0; x < p.size(); ++x) {
            CHECK(p.up_set(static_cast<int>(x)) == op.down_set(static_cast<int>(x)));
            CHECK(p.down_set(static_cast<int>(x)).size() >= 1);
        }
        CHECK(opposite(op) == p);
    }
}

TEST_CASE("beat points and cores") {
    for (int n = 1; n <= 6; ++n) CHECK(core(models::fence(n)).size() == 1);
    auto circle = models::cycle_poset(4);
    CHECK(beat_points(circle).empty());
    CHECK(core(circle) == circle);
    auto single = Poset::from_covers({"a"}, {});
    CHECK(beat_points(single).empty());
    CHECK(core(single) == single);
}

TEST_CASE("order complex of a chain is a full simplex") {
    auto chain = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    auto k = order_complex(chain);
    CHECK(k.dim() == 2);
    CHECK(k.simplex_count() == 7);  // all nonempty subsets
}

TEST_CASE("order complex of the circle poset is the 4-cycle graph") {
    auto k = order_complex(models::cycle_poset(4));
    CHECK(k.f_vector() == std::vector<long>{4, 4});
}

TEST_CASE("order complex simplex count equals brute-force chain count") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        Poset p = random_poset(rng, 9);
        CHECK(static_cast<long>(order_complex(p).simplex_count()) == count_chains_brute(p));
    }
}

TEST_CASE("face poset of a single edge") {
    auto k = SimplicialComplex::from_facets({"a", "b"}, {{0, 1}});
    auto x = face_poset(k);
    CHECK(x.size() == 3);
    CHECK(x.minimal_elements().size() == 2);
    CHECK(x.maximal_elements().size() == 1);
}

TEST_CASE("face poset of the triangle boundary is a six-point circle") {
    auto k = SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    auto x = face_poset(k);
    CHECK(x.size() == 6);
    CHECK(beat_points(x).empty());
    CHECK(simplicial_homology(order_complex(x))[1] == HomologyGroup{1, {}});
}

TEST_CASE("barycentric subdivision via the two functors") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 8; ++t) {
        Poset p = random_poset(rng, 8);
        auto k = order_complex(p);
        auto x = face_poset(k);  // barycentric subdivision poset
        auto k2 = order_complex(x);
        // vertex count of the subdivision equals the simplex count
        CHECK(k2.count(0) == k.simplex_count());
        CHECK(homology_equal(simplicial_homology(k), simplicial_homology(k2)));
    }
}

TEST_CASE("product of fences is the square of one board cell") {
    auto p = product(models::fence(1), models::fence(1));
    CHECK(p.size() == 4);
    CHECK(p.covers().size() == 4);
    CHECK(p.minimal_elements().size() == 1);  // (0,0)
    CHECK(p.maximal_elements().size() == 1);  // (1,1)
}

TEST_CASE("product with a singleton is the poset itself") {
    auto single = Poset::from_covers({"*"}, {});
    std::mt19937_64 rng(41);
    Poset p = random_poset(rng, 8);
    auto q = product(p, single);
    CHECK(q.size() == p.size());
    CHECK(q.covers().size() == p.covers().size());
}

TEST_CASE("mapping cylinder of the identity on a point is a 2-chain") {
    auto pt = Poset::from_covers({"a"}, {});
    auto mc = mapping_cylinder(MonotoneMap(pt, pt, {0}));
    CHECK(mc.cylinder.size() == 2);
    CHECK(mc.cylinder.covers().size() == 1);
}

TEST_CASE("mapping cylinder of a constant map from an antichain") {
    auto anti = Poset::from_covers({"a", "b"}, {});
    auto pt = Poset::from_covers({"*"}, {});
    auto mc = mapping_cylinder(MonotoneMap(anti, pt, {0, 0}));
    CHECK(mc.cylinder.size() == 3);
    CHECK(mc.cylinder.minimal_elements().size() == 1);
    CHECK(mc.cylinder.maximal_elements().size() == 2);
}

TEST_CASE("mapping cylinder retraction is monotone, surjective, fixes the target") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 10; ++t) {
        Poset src = random_poset(rng, 6);
        Poset tgt = random_poset(rng, 6);
        // any monotone map: send everything to a fixed minimal element
        int m = tgt.minimal_elements().front();
        std::vector<int> a(src.size(), m);
        auto mc = mapping_cylinder(MonotoneMap(src, tgt, a));
        CHECK(mc.retraction.surjective());
        for (std::size_t y = 0; y < tgt.size(); ++y)
            CHECK(mc.retraction(mc.target_to_cylinder[y]) == static_cast<int>(y));
    }
}

TEST_CASE("cylinder over contractible source and target has a point core") {
    auto f3 = models::fence(3);
    auto f1 = models::fence(1);
    std::vector<int> a(f3.size(), 0);  // constant to the minimal element "0"
    auto mc = mapping_cylinder(MonotoneMap(f3, f1, a));
    CHECK(core(mc.cylinder).size() == 1);
}

TEST_CASE("connectivity") {
    auto two = Poset::from_covers({"a", "b"}, {});
    CHECK_FALSE(two.connected());
    CHECK(two.component_count() == 2);
    CHECK(models::fence(4).connected());
}

TEST_CASE("subdiagram space and validation") {
    auto p = models::cycle_poset(4);
    auto full = Subdiagram::full(p);
    CHECK(full.space() == p);
    CHECK_THROWS_AS(Subdiagram::make(p, {0, 1}, {3}), InvalidArgument);
    auto sub = Subdiagram::make(p, {0, 1}, {p.edge_index(0, 1)});
    CHECK(sub.space().size() == 2);
    CHECK(sub.connected());
}

TEST_CASE("wedge glues at minimal points") {
    auto w = wedge(models::cycle_poset(4), models::cycle_poset(4));
    CHECK(w.size() == 7);
    CHECK(simplicial_homology(order_complex(w))[1] == HomologyGroup{2, {}});
}
