#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

#include "fintop/common.hpp"

namespace fintop {

using Int = boost::multiprecision::cpp_int;

/// Dense row-major matrix over arbitrary-precision integers. Exact
/// arithmetic everywhere; no modular shortcuts.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

    IntMat operator*(const IntMat& o) const {
        IntMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& v = (*this)(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        std::vector<Int> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// Smith normal form D = L * A * R with unimodular L, R. The inverses are
/// kept as well so kernels and cokernels can be pulled back to the original
/// bases. Pivoting is by minimal absolute value with (row, col) tie-break,
/// which makes every downstream generator choice reproducible.
struct SmithForm {
    IntMat D;
    IntMat L, Linv, R, Rinv;
    std::vector<Int> divisors;  // positive diagonal entries, d1 | d2 | ...
    std::size_t rank = 0;
};

namespace detail {

inline void row_swap(IntMat& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}
inline void col_swap(IntMat& m, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}
inline void row_add(IntMat& m, std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}
inline void col_add(IntMat& m, std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += k * m(r, src);
}
inline void row_neg(IntMat& m, std::size_t i) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}
inline void col_neg(IntMat& m, std::size_t i) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) = -m(r, i);
}

}  // namespace detail

inline SmithForm smith_form(const IntMat& input) {
    using namespace detail;
    SmithForm s;
    s.D = input;
    const std::size_t nr = input.rows(), nc = input.cols();
    s.L = IntMat::identity(nr);
    s.Linv = IntMat::identity(nr);
    s.R = IntMat::identity(nc);
    s.Rinv = IntMat::identity(nc);
    IntMat& D = s.D;

    auto do_row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        row_swap(D, i, j);
        row_swap(s.L, i, j);
        col_swap(s.Linv, i, j);
    };
    auto do_col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        col_swap(D, i, j);
        col_swap(s.R, i, j);
        row_swap(s.Rinv, i, j);
    };
    // row[dst] += k*row[src]
    auto do_row_add = [&](std::size_t dst, std::size_t src, const Int& k) {
        row_add(D, dst, src, k);
        row_add(s.L, dst, src, k);
        col_add(s.Linv, src, dst, -k);
    };
    auto do_col_add = [&](std::size_t dst, std::size_t src, const Int& k) {
        col_add(D, dst, src, k);
        col_add(s.R, dst, src, k);
        row_add(s.Rinv, src, dst, -k);
    };
    auto do_row_neg = [&](std::size_t i) {
        row_neg(D, i);
        row_neg(s.L, i);
        col_neg(s.Linv, i);
    };

    const std::size_t steps = std::min(nr, nc);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        // pick the nonzero entry of minimal magnitude in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                if (D(i, j) == 0) continue;
                Int a = abs(D(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        do_row_swap(t, pi);
        do_col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (D(i, t) == 0) continue;
                Int q = D(i, t) / D(t, t);
                do_row_add(i, t, -q);
                if (D(i, t) != 0) {
                    // remainder smaller than pivot: promote it
                    do_row_swap(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (D(t, j) == 0) continue;
                Int q = D(t, j) / D(t, t);
                do_col_add(j, t, -q);
                if (D(t, j) != 0) {
                    do_col_swap(t, j);
                    clean = false;
                }
            }
        }
        if (D(t, t) < 0) do_row_neg(t);
    }
    s.rank = t;

    // rows (i,j) <- [[p,q],[r,s]] * rows, with ps - qr = 1
    auto do_row_transform2 = [&](std::size_t i, std::size_t j, const Int& p, const Int& q,
                                 const Int& r, const Int& rs) {
        auto apply_rows = [&](IntMat& m) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                Int a = m(i, c), b = m(j, c);
                m(i, c) = p * a + q * b;
                m(j, c) = r * a + rs * b;
            }
        };
        apply_rows(D);
        apply_rows(s.L);
        // inverse of [[p,q],[r,s]] is [[s,-q],[-r,p]]
        for (std::size_t rr = 0; rr < s.Linv.rows(); ++rr) {
            Int a = s.Linv(rr, i), b = s.Linv(rr, j);
            s.Linv(rr, i) = rs * a - r * b;
            s.Linv(rr, j) = -q * a + p * b;
        }
    };

    // enforce the divisibility chain d1 | d2 | ...
    // replaces adjacent (a, b) with (gcd, lcm) via an exact 2x2 fix
    for (bool chain_ok = false; !chain_ok;) {
        chain_ok = true;
        for (std::size_t i = 0; i + 1 < s.rank; ++i) {
            Int a = D(i, i), b = D(i + 1, i + 1);
            if (b % a == 0) continue;
            chain_ok = false;
            Int u, v;
            Int g = boost::multiprecision::gcd(a, b);
            // extended gcd: u*a + v*b = g
            {
                Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
                while (r1 != 0) {
                    Int q = r0 / r1;
                    Int tmp = r0 - q * r1; r0 = r1; r1 = tmp;
                    tmp = s0 - q * s1; s0 = s1; s1 = tmp;
                    tmp = t0 - q * t1; t0 = t1; t1 = tmp;
                }
                if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
                u = s0; v = t0;
            }
            do_col_add(i, i + 1, 1);                       // block [[a,0],[b,b]]
            do_row_transform2(i, i + 1, u, v, -b / g, a / g);  // block [[g, v*b],[0, lcm]]
            if (D(i, i + 1) != 0) do_col_add(i + 1, i, -(D(i, i + 1) / g));
            if (D(i, i) < 0) do_row_neg(i);
            if (D(i + 1, i + 1) < 0) do_row_neg(i + 1);
        }
    }

    s.divisors.clear();
    for (std::size_t i = 0; i < s.rank; ++i) s.divisors.push_back(D(i, i));
    return s;
}

/// Basis of the integer kernel of A (viewed as a map Z^cols -> Z^rows),
/// one basis vector per column of the result.
inline std::vector<std::vector<Int>> kernel_basis(const SmithForm& s) {
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = s.rank; j < s.R.cols(); ++j) {
        std::vector<Int> v(s.R.rows());
        for (std::size_t i = 0; i < s.R.rows(); ++i) v[i] = s.R(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve A x = b over the integers; nullopt when no integral solution exists.
inline std::optional<std::vector<Int>> solve(const SmithForm& s, const std::vector<Int>& b) {
    std::vector<Int> lb = s.L.apply(b);
    std::vector<Int> y(s.R.cols());
    for (std::size_t i = 0; i < lb.size(); ++i) {
        if (i < s.rank) {
            if (lb[i] % s.divisors[i] != 0) return std::nullopt;
            y[i] = lb[i] / s.divisors[i];
        } else if (lb[i] != 0) {
            return std::nullopt;
        }
    }
    return s.R.apply(y);
}

inline std::size_t rank(const IntMat& m) { return smith_form(m).rank; }

}  // namespace fintop
