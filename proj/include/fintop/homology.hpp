#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "fintop/simplicial.hpp"
#include "fintop/smith.hpp"

namespace fintop {

struct HomologyGroup {
    long rank = 0;
    std::vector<Int> torsion;  // divisor chain, entries > 1

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
    std::string to_string() const {
        if (trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        if (rank > 0) {
            os << "Z";
            if (rank > 1) os << "^" << rank;
            first = false;
        }
        for (const auto& t : torsion) {
            if (!first) os << " + ";
            os << "Z_" << t;
            first = false;
        }
        return os.str();
    }
};

/// Graded homology; index = dimension. Reduced everywhere in this library.
using Homology = std::vector<HomologyGroup>;

inline bool homology_equal(const Homology& a, const Homology& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        HomologyGroup x = i < a.size() ? a[i] : HomologyGroup{};
        HomologyGroup y = i < b.size() ? b[i] : HomologyGroup{};
        if (!(x == y)) return false;
    }
    return true;
}

inline std::string homology_to_string(const Homology& h) {
    std::ostringstream os;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) os << ", ";
        os << "H" << i << "=" << h[i].to_string();
    }
    return os.str();
}

/// Chain complex of free abelian groups: boundary[p] maps C_p -> C_{p-1}
/// (boundary[0] is empty). Ranks are explicit so zero groups are kept.
struct ChainComplex {
    std::vector<std::size_t> ranks;
    std::vector<IntMat> boundary;

    int top_dim() const { return static_cast<int>(ranks.size()) - 1; }

    bool d_squared_zero() const {
        for (std::size_t p = 2; p < boundary.size(); ++p)
            if (!(boundary[p - 1] * boundary[p]).is_zero()) return false;
        return true;
    }
};

/// Homology of a chain complex. With `reduced` set, an augmentation row of
/// ones C_0 -> Z is appended, which is valid whenever every d_1 column sums
/// to zero (true for all complexes built in this library).
inline Homology homology(const ChainComplex& c, bool reduced) {
    Homology h(c.ranks.size());
    if (c.ranks.empty()) return h;
    std::vector<SmithForm> sf(c.ranks.size() + 1);
    for (std::size_t p = 0; p < c.ranks.size(); ++p) {
        if (p == 0) {
            IntMat aug(reduced ? 1 : 0, c.ranks[0]);
            if (reduced)
                for (std::size_t j = 0; j < c.ranks[0]; ++j) aug(0, j) = 1;
            sf[0] = smith_form(aug);
        } else {
            sf[p] = smith_form(c.boundary[p]);
        }
    }
    sf[c.ranks.size()] = smith_form(IntMat(c.ranks.back(), 0));
    for (std::size_t p = 0; p < c.ranks.size(); ++p) {
        h[p].rank = static_cast<long>(c.ranks[p]) - static_cast<long>(sf[p].rank) -
                    static_cast<long>(sf[p + 1].rank);
        for (const auto& d : sf[p + 1].divisors)
            if (d > 1) h[p].torsion.push_back(d);
    }
    return h;
}

namespace detail {

inline IntMat boundary_matrix(const SimplicialComplex& k, int p) {
    // d_p : C_p -> C_{p-1}; for p == 0 the augmentation to the empty simplex
    if (p == 0) {
        IntMat m(1, k.count(0));
        for (std::size_t j = 0; j < k.count(0); ++j) m(0, j) = 1;
        return m;
    }
    IntMat m(k.count(p - 1), k.count(p));
    for (std::size_t j = 0; j < k.count(p); ++j) {
        const auto& s = k.by_dim[p][j];
        int sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> face;
            for (std::size_t q = 0; q < s.size(); ++q)
                if (q != i) face.push_back(s[q]);
            m(k.index_of(face), j) += sign;
            sign = -sign;
        }
    }
    return m;
}

}  // namespace detail

inline ChainComplex simplicial_chain_complex(const SimplicialComplex& k) {
    ChainComplex c;
    int top = k.dim();
    if (top < 0) return c;
    c.ranks.resize(top + 1);
    c.boundary.resize(top + 1);
    for (int p = 0; p <= top; ++p) {
        c.ranks[p] = k.count(p);
        c.boundary[p] = p == 0 ? IntMat(0, c.ranks[0]) : detail::boundary_matrix(k, p);
    }
    return c;
}

/// Reduced integer homology of a finite simplicial complex. This is the
/// oracle the rest of the library is tested against.
inline Homology simplicial_homology(const SimplicialComplex& k) {
    return homology(simplicial_chain_complex(k), /*reduced=*/true);
}

/// A generating cycle of reduced H_dim(K) when that group is Z; coefficients
/// are on K.by_dim[dim] in canonical order. Deterministic: the generator is
/// derived from the Smith decomposition and sign-normalized.
inline std::vector<Int> reduced_homology_generator(const SimplicialComplex& k, int dim) {
    const std::size_t n = k.count(dim);
    IntMat below = detail::boundary_matrix(k, dim);                 // C_dim -> C_{dim-1}
    IntMat above = dim + 1 <= k.dim() ? detail::boundary_matrix(k, dim + 1)
                                      : IntMat(n, 0);               // C_{dim+1} -> C_dim
    SmithForm sb = smith_form(below);
    auto kb = kernel_basis(sb);
    const std::size_t kn = kb.size();
    IntMat kmat(n, kn);
    for (std::size_t j = 0; j < kn; ++j)
        for (std::size_t i = 0; i < n; ++i) kmat(i, j) = kb[j][i];
    // express the image of d_{dim+1} in kernel coordinates
    SmithForm sk = smith_form(kmat);
    IntMat y(kn, above.cols());
    for (std::size_t j = 0; j < above.cols(); ++j) {
        std::vector<Int> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = above(i, j);
        auto sol = solve(sk, col);
        if (!sol) throw InvalidArgument("internal: boundary not contained in cycles");
        for (std::size_t i = 0; i < kn; ++i) y(i, j) = (*sol)[i];
    }
    SmithForm sy = smith_form(y);
    // homology = coker(y); demand exactly Z
    bool is_z = (kn == sy.rank + 1);
    for (const auto& d : sy.divisors)
        if (d != 1) is_z = false;
    if (!is_z) throw InvalidArgument("reduced homology in dimension " + std::to_string(dim) +
                                     " is not infinite cyclic");
    std::vector<Int> w(kn);
    for (std::size_t i = 0; i < kn; ++i) w[i] = sy.Linv(i, sy.rank);
    std::vector<Int> gen = kmat.apply(w);
    for (const auto& v : gen) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& g : gen) g = -g;
        break;
    }
    return gen;
}

/// Solves z = mult * gen modulo boundaries in reduced H_dim(K) = Z.
inline Int express_multiple(const SimplicialComplex& k, int dim, const std::vector<Int>& z,
                            const std::vector<Int>& gen) {
    const std::size_t n = k.count(dim);
    IntMat above = dim + 1 <= k.dim() ? detail::boundary_matrix(k, dim + 1) : IntMat(n, 0);
    IntMat m(n, 1 + above.cols());
    for (std::size_t i = 0; i < n; ++i) m(i, 0) = gen[i];
    for (std::size_t j = 0; j < above.cols(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, 1 + j) = above(i, j);
    auto sol = solve(smith_form(m), z);
    if (!sol) throw InvalidArgument("cycle is not a multiple of the generator");
    return (*sol)[0];
}

}  // namespace fintop
