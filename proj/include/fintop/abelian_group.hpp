#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fintop/common.hpp"
#include "fintop/smith.hpp"

namespace fintop {

/// Finitely generated abelian group Z^rank + Z_{d1} + ... + Z_{dk} with
/// d1 | d2 | ... Elements are integer vectors, free coordinates first,
/// torsion coordinates reduced into [0, di).
class FgAbelianGroup {
public:
    using Vec = std::vector<Int>;

    FgAbelianGroup() = default;
    FgAbelianGroup(long rank, std::vector<Int> divisors)
        : rank_(rank), divisors_(std::move(divisors)) {
        if (rank_ < 0) throw InvalidArgument("negative rank");
        for (std::size_t i = 0; i < divisors_.size(); ++i) {
            if (divisors_[i] < 2) throw InvalidArgument("torsion divisors must be >= 2");
            if (i > 0 && divisors_[i] % divisors_[i - 1] != 0)
                throw InvalidArgument("torsion divisors must form a chain d1 | d2 | ...");
        }
    }

    static FgAbelianGroup free(long rank) { return FgAbelianGroup(rank, {}); }

    long rank() const { return rank_; }
    const std::vector<Int>& divisors() const { return divisors_; }
    std::size_t dims() const { return static_cast<std::size_t>(rank_) + divisors_.size(); }

    bool finite() const { return rank_ == 0; }
    std::optional<Int> order() const {
        if (!finite()) return std::nullopt;
        Int n = 1;
        for (const auto& d : divisors_) n *= d;
        return n;
    }

    Vec identity() const { return Vec(dims()); }

    Vec normalize(Vec v) const {
        if (v.size() != dims()) throw InvalidArgument("element has wrong length");
        for (std::size_t i = 0; i < divisors_.size(); ++i) {
            Int& c = v[rank_ + i];
            c %= divisors_[i];
            if (c < 0) c += divisors_[i];
        }
        return v;
    }

    Vec add(const Vec& a, const Vec& b) const {
        Vec r(dims());
        for (std::size_t i = 0; i < dims(); ++i) r[i] = a[i] + b[i];
        return normalize(std::move(r));
    }
    Vec neg(const Vec& a) const {
        Vec r(dims());
        for (std::size_t i = 0; i < dims(); ++i) r[i] = -a[i];
        return normalize(std::move(r));
    }
    bool is_identity(const Vec& a) const {
        for (const auto& c : a)
            if (c != 0) return false;
        return true;
    }
    bool has_free_part(const Vec& a) const {
        for (long i = 0; i < rank_; ++i)
            if (a[i] != 0) return true;
        return false;
    }

    /// Does the given family generate the whole group?
    bool generates(const std::vector<Vec>& family) const {
        // quotient by <family> + torsion relations must be trivial
        const std::size_t n = dims();
        IntMat m(n, family.size() + divisors_.size());
        for (std::size_t j = 0; j < family.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) m(i, j) = family[j][i];
        for (std::size_t t = 0; t < divisors_.size(); ++t)
            m(rank_ + t, family.size() + t) = divisors_[t];
        SmithForm s = smith_form(m);
        if (s.rank != n) return false;
        for (const auto& d : s.divisors)
            if (d != 1) return false;
        return true;
    }

    /// Abstract isomorphism type (rank, divisor chain) of the subgroup
    /// generated by the family.
    std::pair<long, std::vector<Int>> subgroup_invariants(const std::vector<Vec>& family) const {
        // H = Z^m / {x : sum x_i v_i lies in the torsion relation lattice}
        const std::size_t n = dims(), m = family.size();
        IntMat big(n, m + divisors_.size());
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < n; ++i) big(i, j) = family[j][i];
        for (std::size_t t = 0; t < divisors_.size(); ++t)
            big(rank_ + t, m + t) = -divisors_[t];
        auto kb = kernel_basis(smith_form(big));
        IntMat rel(m, kb.size());
        for (std::size_t j = 0; j < kb.size(); ++j)
            for (std::size_t i = 0; i < m; ++i) rel(i, j) = kb[j][i];
        SmithForm s = smith_form(rel);
        std::vector<Int> tor;
        for (const auto& d : s.divisors)
            if (d > 1) tor.push_back(d);
        return {static_cast<long>(m) - static_cast<long>(s.rank), tor};
    }

    std::string to_string() const {
        if (rank_ == 0 && divisors_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        if (rank_ > 0) {
            os << "Z";
            if (rank_ > 1) os << "^" << rank_;
            first = false;
        }
        for (const auto& d : divisors_) {
            if (!first) os << " + ";
            os << "Z_" << d;
            first = false;
        }
        return os.str();
    }

    bool operator==(const FgAbelianGroup& o) const {
        return rank_ == o.rank_ && divisors_ == o.divisors_;
    }

private:
    long rank_ = 0;
    std::vector<Int> divisors_;
};

}  // namespace fintop
