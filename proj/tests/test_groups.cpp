#include "catch_amalgamated.hpp"

#include <numeric>
#include <random>

#include "fintop/group.hpp"
#include "fintop/models.hpp"

using namespace fintop;

namespace {

// invariant factors via gcds of k x k minors; independent of the Smith
// normal form implementation
std::vector<Int> invariant_factors_by_minors(const IntMat& m) {
    const std::size_t r = m.rows(), c = m.cols();
    auto minor_gcd = [&](std::size_t k) {
        Int g = 0;
        std::vector<std::size_t> ri(k), ci(k);
        std::iota(ri.begin(), ri.end(), 0);
        auto det = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
            // Laplace expansion; k <= 4 in the tests
            auto rec = [&](auto&& self, std::vector<std::size_t> rs,
                           std::vector<std::size_t> cs) -> Int {
                if (rs.empty()) return 1;
                Int sum = 0;
                int sign = 1;
                for (std::size_t i = 0; i < cs.size(); ++i) {
                    auto rs2 = std::vector<std::size_t>(rs.begin() + 1, rs.end());
                    auto cs2 = cs;
                    cs2.erase(cs2.begin() + i);
                    sum += sign * m(rs[0], cs[i]) * self(self, rs2, cs2);
                    sign = -sign;
                }
                return sum;
            };
            return rec(rec, rows, cols);
        };
        std::vector<std::size_t> rsel(k), csel(k);
        auto loop_rows = [&](auto&& self, std::size_t at, std::size_t start) -> void {
            if (at == k) {
                std::vector<std::size_t> csel2(k);
                auto loop_cols = [&](auto&& self2, std::size_t cat, std::size_t cstart) -> void {
                    if (cat == k) {
                        g = boost::multiprecision::gcd(g, det(rsel, csel2));
                        return;
                    }
                    for (std::size_t x = cstart; x < c; ++x) {
                        csel2[cat] = x;
                        self2(self2, cat + 1, x + 1);
                    }
                };
                loop_cols(loop_cols, 0, 0);
                return;
            }
            for (std::size_t x = start; x < r; ++x) {
                rsel[at] = x;
                self(self, at + 1, x + 1);
            }
        };
        loop_rows(loop_rows, 0, 0);
        return g < 0 ? -g : g;
    };
    std::vector<Int> factors;
    Int prev = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        Int gk = minor_gcd(k);
        if (gk == 0) break;
        factors.push_back(gk / prev);
        prev = gk;
    }
    return factors;
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
    IntMat m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 4;
    auto s = smith_form(m);
    CHECK(s.divisors == std::vector<Int>{2, 4});

    IntMat m2(2, 2);
    m2(0, 0) = 2;
    m2(1, 1) = 3;
    auto s2 = smith_form(m2);
    CHECK(s2.divisors == std::vector<Int>{1, 6});
}

TEST_CASE("smith normal form satisfies D = L A R and matches the minors oracle") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 4), val(-5, 5);
    for (int t = 0; t < 40; ++t) {
        IntMat a(dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = val(rng);
        auto s = smith_form(a);
        CHECK(s.L * a * s.R == s.D);
        CHECK(s.Linv * s.D * s.Rinv == a);
        CHECK(s.divisors == invariant_factors_by_minors(a));
        for (std::size_t i = 1; i < s.divisors.size(); ++i)
            CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
    }
}

TEST_CASE("integer kernels and solves") {
    IntMat a(1, 2);
    a(0, 0) = 2;
    a(0, 1) = -2;
    auto s = smith_form(a);
    auto kb = kernel_basis(s);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0][0] == kb[0][1]);
    CHECK(solve(s, {4}).has_value());
    CHECK_FALSE(solve(s, {3}).has_value());
}

TEST_CASE("word primitives") {
    Word w = Word::gen(0) * Word::gen(1, -1) * Word::gen(1) * Word::gen(2);
    CHECK(free_reduce(w).length() == 2);
    CHECK(free_reduce(w * w.inverse()).empty());
    Word cyc = Word::gen(0, -1) * Word::gen(1) * Word::gen(0);
    CHECK(cyclic_reduce(cyc).length() == 1);
    CHECK(word_to_string(Word::gen(0) * Word::gen(0), {"a"}) == "a^2");
}

TEST_CASE("finite group construction and validation") {
    auto z4 = FiniteGroup::cyclic(4);
    CHECK(z4.order() == 4);
    CHECK(z4.mul(3, 2) == 1);
    CHECK(z4.inv(1) == 3);
    CHECK(z4.element_order(1) == 4);

    auto d3 = FiniteGroup::dihedral(3);
    CHECK(d3.order() == 6);
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);

    // a latin square that is not associative
    std::vector<std::vector<int>> bad = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(bad), InvalidArgument);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), InvalidArgument);
}

TEST_CASE("word evaluation in groups") {
    auto z2 = Group::finite(FiniteGroup::cyclic(2));
    // empty word is the identity
    CHECK(z2.is_identity(z2.identity()) == Tri::Yes);
    // a*a with a -> 1 lands back at 0
    int x = std::get<int>(z2.mul(1, 1));
    CHECK(x == 0);
}

TEST_CASE("subgroup closure") {
    auto d3 = FiniteGroup::dihedral(3);
    CHECK(subgroup_closure(d3, {}).size() == 1);
    // sr and s generate the whole group; encoding: 2i = r^i, 2i+1 = s r^i
    CHECK(subgroup_closure(d3, {3, 1}).size() == 6);

    auto z6 = FiniteGroup::cyclic(6);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> pick(0, 5);
    for (int t = 0; t < 20; ++t) {
        auto h = subgroup_closure(z6, {pick(rng), pick(rng)});
        CHECK(6 % h.size() == 0);
        // idempotent and contains the generators
        CHECK(subgroup_closure(z6, h) == h);
    }
}

TEST_CASE("automorphism counts against brute force") {
    auto brute = [](const FiniteGroup& g) {
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        long count = 0;
        do {
            bool hom = true;
            for (std::size_t a = 0; a < g.order() && hom; ++a)
                for (std::size_t b = 0; b < g.order() && hom; ++b)
                    if (perm[g.mul(static_cast<int>(a), static_cast<int>(b))] !=
                        g.mul(perm[a], perm[b]))
                        hom = false;
            if (hom) ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return count;
    };
    CHECK(automorphisms(FiniteGroup::cyclic(2)).size() == 1);
    CHECK(automorphisms(FiniteGroup::cyclic(3)).size() == 2);
    CHECK(automorphisms(FiniteGroup::cyclic(3)).size() == static_cast<std::size_t>(brute(FiniteGroup::cyclic(3))));
    CHECK(automorphisms(FiniteGroup::dihedral(3)).size() == 6);
    CHECK(automorphisms(FiniteGroup::cyclic(5)).size() == static_cast<std::size_t>(brute(FiniteGroup::cyclic(5))));
    CHECK_THROWS_AS(automorphisms(FiniteGroup::cyclic(17)), GroupTooLarge);

    // closure under composition, spot check on D3
    auto auts = automorphisms(FiniteGroup::dihedral(3));
    auto find = [&](const std::vector<int>& p) {
        return std::find(auts.begin(), auts.end(), p) != auts.end();
    };
    for (const auto& f : auts)
        for (const auto& g : auts) {
            std::vector<int> fg(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) fg[i] = f[g[i]];
            CHECK(find(fg));
        }
}

TEST_CASE("abelianization of basic presentations") {
    Abelianization free1(parse_presentation("<a |>"));
    CHECK(free1.group() == FgAbelianGroup::free(1));

    Abelianization klein(parse_presentation("<a, b | a b a^-1 b>"));
    CHECK(klein.group() == FgAbelianGroup(1, {2}));

    auto p = models::presentation_with_infinite_cycle();
    Abelianization ab(p);
    Word w = parse_word_text("c^-1 b a b^2 c", p);
    auto v = ab.eval(w);
    CHECK(ab.group().has_free_part(v));
    CHECK(ab.raw(w) == std::vector<Int>{1, 3, 0, 0, 0});
}

TEST_CASE("abelianization is stable under relator order and conjugated duplicates") {
    auto p = parse_presentation("<a, b | a b a^-1 b, a^4>");
    Abelianization ab1(p);
    GroupPresentation q = p;
    std::swap(q.relators[0], q.relators[1]);
    // conjugated duplicate of the first relator
    Word dup = Word::gen(1) * p.relators[0] * Word::gen(1, -1);
    q.relators.push_back(free_reduce(dup));
    Abelianization ab2(q);
    CHECK(ab1.group() == ab2.group());
}

TEST_CASE("simplify recognizes trivial, free and cyclic outcomes") {
    CHECK(simplify(parse_presentation("<a, b | a, b>")).verdict == "TrivialGroup");
    CHECK(simplify(parse_presentation("<a, b | b>")).verdict == "IsomorphicTo(Z)");
    CHECK(simplify(parse_presentation("<a | a^5>")).verdict == "IsomorphicTo(Z_5)");
    CHECK(simplify(parse_presentation("<a, b |>")).verdict == "IsomorphicTo(F_2)");
    CHECK(simplify(parse_presentation("<a, b | a b a^-1 b^-1, a^2, b^3>")).verdict ==
          "IsomorphicTo(Z_6)");
    CHECK(simplify(parse_presentation("<a, b | a b a b^-1>")).verdict == "Unknown");
}

TEST_CASE("simplify preserves the abelianization") {
    std::vector<std::string> texts = {
        "<a, b | a b a^-1 b^-1, a^2, b^3>", "<a, b, c | a b c, c a b>",
        "<a, b | a b a b>", "<a, b, c | a c a^-1 c^-1, b>"};
    for (const auto& t : texts) {
        auto p = parse_presentation(t);
        auto s = simplify(p);
        CHECK(Abelianization(p).group() == Abelianization(s.presentation).group());
        // the generator images must realize the same abelianized elements
        Abelianization before(p), after(s.presentation);
        for (std::size_t g = 0; g < p.generators.size(); ++g) {
            auto lhs = before.eval(Word::gen(static_cast<int>(g)));
            // compare through the invariant pair (rank, torsion) of the
            // subgroup each image generates
            auto rhs = after.eval(s.map_word(Word::gen(static_cast<int>(g))));
            CHECK(before.group().subgroup_invariants({lhs}) ==
                  after.group().subgroup_invariants({rhs}));
        }
    }
}

TEST_CASE("finite realization of simplified groups") {
    auto g = Group::presented(parse_presentation("<a | a^2>"));
    REQUIRE(g.finite_order().has_value());
    CHECK(*g.finite_order() == 2);
    auto r = g.simplified().finite_realization();
    REQUIRE(r.has_value());
    CHECK(r->first.order() == 2);

    auto z = Group::presented(parse_presentation("<a |>"));
    CHECK_FALSE(z.finite_order().has_value());
}

TEST_CASE("word equality through the simplified group") {
    auto g = Group::presented(parse_presentation("<a, b | b>"));
    // b is trivial, a generates Z
    CHECK(g.is_identity(GroupElement(Word::gen(1))) == Tri::Yes);
    CHECK(g.is_identity(GroupElement(Word::gen(0))) == Tri::No);
    CHECK(g.equal(GroupElement(Word::gen(0) * Word::gen(1)), GroupElement(Word::gen(0))) ==
          Tri::Yes);

    auto unknown = Group::presented(parse_presentation("<a, b | a b a b^-1>"));
    // abelianization refutes: b has infinite order there
    CHECK(unknown.is_identity(GroupElement(Word::gen(1))) == Tri::No);
    // a^2 dies in the abelianization, and the simplification stalls
    CHECK(unknown.is_identity(GroupElement(Word::gen(0) * Word::gen(0))) == Tri::Unknown);
}

TEST_CASE("infinite order certificates") {
    CHECK(has_infinite_order_abelian_certificate(Word::gen(0), parse_presentation("<a |>")) ==
          Tri::Yes);
    CHECK(has_infinite_order_abelian_certificate(Word::gen(0), parse_presentation("<a | a^2>")) ==
          Tri::Unknown);
    auto p = models::presentation_with_infinite_cycle();
    CHECK(has_infinite_order_abelian_certificate(parse_word_text("c^-1 b a b^2 c", p), p) ==
          Tri::Yes);
}

TEST_CASE("abelian group arithmetic") {
    FgAbelianGroup g(1, {2, 4});
    auto v = g.normalize({Int(3), Int(5), Int(-1)});
    CHECK(v == AbVec{Int(3), Int(1), Int(3)});
    CHECK(g.is_identity(g.add(v, g.neg(v))));
    CHECK(g.has_free_part(v));
    CHECK_FALSE(g.has_free_part({Int(0), Int(1), Int(2)}));
    CHECK_THROWS_AS(FgAbelianGroup(0, {3, 4}), InvalidArgument);  // 3 does not divide 4

    FgAbelianGroup z2z(2, {});
    CHECK(z2z.generates({{Int(1), Int(0)}, {Int(0), Int(1)}}));
    CHECK_FALSE(z2z.generates({{Int(2), Int(0)}, {Int(0), Int(1)}}));
    auto inv = z2z.subgroup_invariants({{Int(2), Int(0)}, {Int(0), Int(3)}});
    CHECK(inv.first == 2);
    CHECK(inv.second.empty());
}

TEST_CASE("presentation text round trip") {
    auto p = parse_presentation("<a, b | a b a^-1 b^-1, b^3>");
    auto q = parse_presentation(p.to_text());
    CHECK(p.generators == q.generators);
    REQUIRE(p.relators.size() == q.relators.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i) CHECK(p.relators[i] == q.relators[i]);
    CHECK_THROWS_AS(parse_presentation("no brackets"), FormatError);
    CHECK_THROWS_AS(parse_presentation("<a | z>"), UnknownGenerator);
}
