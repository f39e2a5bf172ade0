#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "fintop/common.hpp"
#include "fintop/word.hpp"

namespace fintop {

/// Exact finite group given by its multiplication table. The table is
/// verified at construction: identity, inverses, and associativity
/// (exhaustive for order <= 16, 10^4 seeded random triples above).
class FiniteGroup {
public:
    FiniteGroup() {
        auto d = std::make_shared<Data>();
        d->table = {{0}};
        d->inverse = {0};
        d->identity = 0;
        d_ = std::move(d);
    }

    static FiniteGroup from_table(std::vector<std::vector<int>> table) {
        auto d = std::make_shared<Data>();
        d->table = std::move(table);
        const std::size_t n = d->table.size();
        if (n == 0) throw InvalidArgument("empty multiplication table");
        for (const auto& row : d->table) {
            if (row.size() != n) throw InvalidArgument("multiplication table not square");
            for (int v : row)
                if (v < 0 || static_cast<std::size_t>(v) >= n)
                    throw InvalidArgument("table entry out of range");
        }
        d->identity = -1;
        for (std::size_t e = 0; e < n; ++e) {
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a)
                ok = d->table[e][a] == static_cast<int>(a) && d->table[a][e] == static_cast<int>(a);
            if (ok) {
                d->identity = static_cast<int>(e);
                break;
            }
        }
        if (d->identity < 0) throw InvalidArgument("table has no identity");
        d->inverse.assign(n, -1);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b)
                if (d->table[a][b] == d->identity && d->table[b][a] == d->identity) {
                    d->inverse[a] = static_cast<int>(b);
                    break;
                }
            if (d->inverse[a] < 0) throw InvalidArgument("table has a non-invertible element");
        }
        if (n <= 16) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c)
                        if (d->table[d->table[a][b]][c] != d->table[a][d->table[b][c]])
                            throw InvalidArgument("table is not associative");
        } else {
            std::mt19937_64 rng(0x5eedf00dULL);
            std::uniform_int_distribution<std::size_t> dist(0, n - 1);
            for (int t = 0; t < 10000; ++t) {
                std::size_t a = dist(rng), b = dist(rng), c = dist(rng);
                if (d->table[d->table[a][b]][c] != d->table[a][d->table[b][c]])
                    throw InvalidArgument("table is not associative");
            }
        }
        FiniteGroup g;
        g.d_ = std::move(d);
        return g;
    }

    static FiniteGroup trivial() { return from_table({{0}}); }

    static FiniteGroup cyclic(std::size_t n) {
        if (n == 0) throw InvalidArgument("cyclic group needs order >= 1");
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<int>((a + b) % n);
        return from_table(std::move(t));
    }

    /// Dihedral group of order 2n; element 2i is r^i, element 2i+1 is s r^i.
    static FiniteGroup dihedral(std::size_t n) {
        if (n == 0) throw InvalidArgument("dihedral group needs n >= 1");
        const std::size_t m = 2 * n;
        auto enc = [&](bool s, std::size_t i) { return static_cast<int>(2 * i + (s ? 1 : 0)); };
        std::vector<std::vector<int>> t(m, std::vector<int>(m));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (int si = 0; si < 2; ++si)
                    for (int sj = 0; sj < 2; ++sj) {
                        // (s^si r^i)(s^sj r^j) = s^(si+sj) r^(±i+j)
                        bool s = (si + sj) % 2;
                        std::size_t k = sj ? (n - i % n + j) % n : (i + j) % n;
                        t[enc(si, i)][enc(sj, j)] = enc(s, k);
                    }
        return from_table(std::move(t));
    }

    /// Symmetric group on n letters (n <= 6 keeps the table reasonable).
    static FiniteGroup symmetric(std::size_t n) {
        if (n == 0 || n > 6) throw GroupTooLarge("symmetric group supported for 1 <= n <= 6");
        std::vector<std::vector<int>> perms;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        const std::size_t m = perms.size();
        std::vector<std::vector<int>> t(m, std::vector<int>(m));
        auto find = [&](const std::vector<int>& q) {
            return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
        };
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                std::vector<int> q(n);
                for (std::size_t i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];
                t[a][b] = find(q);
            }
        return from_table(std::move(t));
    }

    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
        const std::size_t n = a.order(), m = b.order();
        std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
        auto enc = [&](std::size_t x, std::size_t y) { return static_cast<int>(x * m + y); };
        for (std::size_t x1 = 0; x1 < n; ++x1)
            for (std::size_t y1 = 0; y1 < m; ++y1)
                for (std::size_t x2 = 0; x2 < n; ++x2)
                    for (std::size_t y2 = 0; y2 < m; ++y2)
                        t[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(static_cast<int>(x1), static_cast<int>(x2)),
                                                          b.mul(static_cast<int>(y1), static_cast<int>(y2)));
        return from_table(std::move(t));
    }

    /// Direct product of cyclic groups Z_{d1} x ... x Z_{dk} (mixed radix).
    static FiniteGroup abelian(const std::vector<Int>& divisors) {
        FiniteGroup g = trivial();
        for (const auto& d : divisors) {
            if (d < 1) throw InvalidArgument("abelian divisor must be positive");
            g = direct_product(g, cyclic(static_cast<std::size_t>(d)));
        }
        return g;
    }

    std::size_t order() const { return d_->table.size(); }
    int identity() const { return d_->identity; }
    int mul(int a, int b) const { return d_->table[a][b]; }
    int inv(int a) const { return d_->inverse[a]; }

    int element_order(int a) const {
        int x = a, n = 1;
        while (x != identity()) {
            x = mul(x, a);
            ++n;
        }
        return n;
    }

    std::string element_name(int a) const { return std::to_string(a); }
    const std::vector<std::vector<int>>& table() const { return d_->table; }

    bool operator==(const FiniteGroup& o) const {
        return d_ == o.d_ || d_->table == o.d_->table;
    }

private:
    struct Data {
        std::vector<std::vector<int>> table;
        std::vector<int> inverse;
        int identity = 0;
    };
    std::shared_ptr<const Data> d_;
};

/// Smallest subgroup containing S, by BFS closure under multiplication.
inline std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& s) {
    std::vector<char> in(g.order(), 0);
    std::queue<int> q;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            q.push(x);
        }
    };
    push(g.identity());
    for (int x : s) push(x);
    std::vector<int> members;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        members.push_back(x);
        push(g.inv(x));
        for (std::size_t y = 0; y < g.order(); ++y)
            if (in[y]) {
                push(g.mul(x, static_cast<int>(y)));
                push(g.mul(static_cast<int>(y), x));
            }
    }
    std::sort(members.begin(), members.end());
    return members;
}

/// A small generating sequence plus, per element, a word in those
/// generators. Used by the automorphism search.
struct GeneratingSet {
    std::vector<int> generators;
    std::vector<Word> expression;  // element -> word over generator positions
};

inline GeneratingSet generating_set(const FiniteGroup& g) {
    GeneratingSet gs;
    gs.expression.assign(g.order(), Word{});
    std::vector<char> known(g.order(), 0);
    known[g.identity()] = 1;
    auto closure_step = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t a = 0; a < g.order(); ++a) {
                if (!known[a]) continue;
                for (std::size_t gi = 0; gi < gs.generators.size(); ++gi) {
                    int p = g.mul(static_cast<int>(a), gs.generators[gi]);
                    if (!known[p]) {
                        known[p] = 1;
                        gs.expression[p] = gs.expression[a] * Word::gen(static_cast<int>(gi));
                        grew = true;
                    }
                    int q = g.mul(static_cast<int>(a), g.inv(gs.generators[gi]));
                    if (!known[q]) {
                        known[q] = 1;
                        gs.expression[q] = gs.expression[a] * Word::gen(static_cast<int>(gi), -1);
                        grew = true;
                    }
                }
            }
        }
    };
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (known[x]) continue;
        gs.generators.push_back(static_cast<int>(x));
        gs.expression[x] = Word::gen(static_cast<int>(gs.generators.size()) - 1);
        closure_step();
    }
    return gs;
}

/// All automorphisms of g, as permutations of element indices. Backtracking
/// over images of a generating sequence, with an element-order filter.
inline std::vector<std::vector<int>> automorphisms(const FiniteGroup& g, std::size_t bound = 16) {
    if (g.order() > bound)
        throw GroupTooLarge("automorphism enumeration capped at order " + std::to_string(bound));
    GeneratingSet gs = generating_set(g);
    const std::size_t k = gs.generators.size();
    std::vector<std::vector<int>> result;
    std::vector<int> images(k, -1);

    auto evaluate = [&](const Word& w) {
        int x = g.identity();
        for (const auto& [gi, s] : w.letters)
            x = g.mul(x, s > 0 ? images[gi] : g.inv(images[gi]));
        return x;
    };
    auto try_complete = [&]() {
        std::vector<int> phi(g.order());
        std::vector<char> hit(g.order(), 0);
        for (std::size_t x = 0; x < g.order(); ++x) {
            phi[x] = evaluate(gs.expression[x]);
            if (hit[phi[x]]) return;
            hit[phi[x]] = 1;
        }
        for (std::size_t a = 0; a < g.order(); ++a)
            for (std::size_t b = 0; b < g.order(); ++b)
                if (phi[g.mul(static_cast<int>(a), static_cast<int>(b))] != g.mul(phi[a], phi[b]))
                    return;
        result.push_back(std::move(phi));
    };
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == k) {
            try_complete();
            return;
        }
        int want = g.element_order(gs.generators[level]);
        for (std::size_t c = 0; c < g.order(); ++c)
            if (g.element_order(static_cast<int>(c)) == want) {
                images[level] = static_cast<int>(c);
                self(self, level + 1);
            }
    };
    rec(rec, 0);
    return result;
}

}  // namespace fintop
