#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "fintop/abelian_group.hpp"
#include "fintop/finite_group.hpp"
#include "fintop/presentation.hpp"

namespace fintop {

using AbVec = FgAbelianGroup::Vec;

/// An element of whichever group kind owns it: index into a multiplication
/// table, integer vector, or word over presentation generators.
using GroupElement = std::variant<int, AbVec, Word>;

/// Uniform handle over the three group kinds used by colorings. Immutable;
/// the presented kind carries its simplification and abelianization, both
/// computed eagerly so all later queries are pure lookups.
class Group {
public:
    enum class Kind { Finite, Abelian, Presented };

    Group() : d_(std::make_shared<Data>()) {}

    static Group finite(FiniteGroup g) {
        auto d = std::make_shared<Data>();
        d->kind = Kind::Finite;
        d->fin = std::move(g);
        Group r;
        r.d_ = std::move(d);
        return r;
    }
    static Group abelian(FgAbelianGroup g) {
        auto d = std::make_shared<Data>();
        d->kind = Kind::Abelian;
        d->ab = std::move(g);
        Group r;
        r.d_ = std::move(d);
        return r;
    }
    static Group presented(GroupPresentation p, long budget = 20000) {
        auto d = std::make_shared<Data>();
        d->kind = Kind::Presented;
        d->pres = std::move(p);
        d->simplified = simplify(d->pres, budget);
        d->ab_original.emplace(d->pres);
        d->ab_simplified.emplace(d->simplified->presentation);
        Group r;
        r.d_ = std::move(d);
        return r;
    }

    Kind kind() const { return d_->kind; }

    const FiniteGroup& finite_group() const {
        require(Kind::Finite);
        return d_->fin;
    }
    const FgAbelianGroup& abelian_group() const {
        require(Kind::Abelian);
        return d_->ab;
    }
    const GroupPresentation& presentation() const {
        require(Kind::Presented);
        return d_->pres;
    }
    const SimplifyResult& simplified() const {
        require(Kind::Presented);
        return *d_->simplified;
    }
    const Abelianization& abelianization() const {
        require(Kind::Presented);
        return *d_->ab_original;
    }

    GroupElement identity() const {
        switch (d_->kind) {
            case Kind::Finite: return d_->fin.identity();
            case Kind::Abelian: return d_->ab.identity();
            default: return Word{};
        }
    }

    GroupElement mul(const GroupElement& a, const GroupElement& b) const {
        switch (d_->kind) {
            case Kind::Finite: return d_->fin.mul(as_int(a), as_int(b));
            case Kind::Abelian: return d_->ab.add(as_vec(a), as_vec(b));
            default: return free_reduce(as_word(a) * as_word(b));
        }
    }

    GroupElement inv(const GroupElement& a) const {
        switch (d_->kind) {
            case Kind::Finite: return d_->fin.inv(as_int(a));
            case Kind::Abelian: return d_->ab.neg(as_vec(a));
            default: return as_word(a).inverse();
        }
    }

    Tri equal(const GroupElement& a, const GroupElement& b) const {
        switch (d_->kind) {
            case Kind::Finite: return as_int(a) == as_int(b) ? Tri::Yes : Tri::No;
            case Kind::Abelian:
                return d_->ab.normalize(as_vec(a)) == d_->ab.normalize(as_vec(b)) ? Tri::Yes
                                                                                  : Tri::No;
            default: return word_equal(as_word(a), as_word(b));
        }
    }

    Tri is_identity(const GroupElement& a) const { return equal(a, identity()); }

    /// Order of the group when it is known to be finite.
    std::optional<std::size_t> finite_order() const {
        switch (d_->kind) {
            case Kind::Finite: return d_->fin.order();
            case Kind::Abelian: {
                auto n = d_->ab.order();
                if (!n) return std::nullopt;
                return static_cast<std::size_t>(*n);
            }
            default: {
                auto r = d_->simplified->finite_realization();
                if (!r) return std::nullopt;
                return r->first.order();
            }
        }
    }

    std::string show(const GroupElement& a) const {
        switch (d_->kind) {
            case Kind::Finite: return std::to_string(as_int(a));
            case Kind::Abelian: {
                std::ostringstream os;
                os << "[";
                const auto& v = as_vec(a);
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
                os << "]";
                return os.str();
            }
            default: return word_to_string(as_word(a), d_->pres.generators);
        }
    }

    /// Canonical hashable form when the word problem is decidable here.
    std::optional<std::string> canonical_key(const GroupElement& a) const {
        switch (d_->kind) {
            case Kind::Finite: return std::to_string(as_int(a));
            case Kind::Abelian: return vec_key(d_->ab.normalize(as_vec(a)));
            default: break;
        }
        const auto& s = *d_->simplified;
        if (!s.known) return std::nullopt;
        Word m = s.map_word(as_word(a));
        switch (s.known->kind) {
            case KnownGroup::Kind::Trivial: return std::string("1");
            case KnownGroup::Kind::Free: {
                std::ostringstream os;
                for (const auto& [g, sg] : m.letters) os << (sg > 0 ? "+" : "-") << g << ".";
                return os.str();
            }
            case KnownGroup::Kind::CyclicFinite: {
                Int e = 0;
                for (const auto& [g, sg] : m.letters) e += sg;
                e %= s.known->cyclic_order;
                if (e < 0) e += s.known->cyclic_order;
                return e.str();
            }
            case KnownGroup::Kind::Abelian:
                return vec_key(d_->ab_simplified->eval(m));
        }
        return std::nullopt;
    }

    bool same_data(const Group& o) const { return d_ == o.d_; }

    std::string describe() const {
        switch (d_->kind) {
            case Kind::Finite: return "table group of order " + std::to_string(d_->fin.order());
            case Kind::Abelian: return d_->ab.to_string();
            default: return d_->pres.to_text();
        }
    }

private:
    struct Data {
        Kind kind = Kind::Finite;
        FiniteGroup fin;
        FgAbelianGroup ab;
        GroupPresentation pres;
        std::optional<SimplifyResult> simplified;
        std::optional<Abelianization> ab_original;
        std::optional<Abelianization> ab_simplified;
    };

    Tri word_equal(const Word& a, const Word& b) const {
        const auto& s = *d_->simplified;
        Word diff = free_reduce(s.map_word(a) * s.map_word(b).inverse());
        if (diff.empty()) return Tri::Yes;
        if (!s.known) {
            if (d_->ab_original->eval(a) != d_->ab_original->eval(b)) return Tri::No;
            return Tri::Unknown;
        }
        switch (s.known->kind) {
            case KnownGroup::Kind::Trivial: return Tri::Yes;
            case KnownGroup::Kind::Free: return Tri::No;  // freely reduced, nonempty
            case KnownGroup::Kind::CyclicFinite: {
                Int e = 0;
                for (const auto& [g, sg] : diff.letters) e += sg;
                return e % s.known->cyclic_order == 0 ? Tri::Yes : Tri::No;
            }
            case KnownGroup::Kind::Abelian:
                return d_->ab_simplified->group().is_identity(d_->ab_simplified->eval(diff))
                           ? Tri::Yes
                           : Tri::No;
        }
        return Tri::Unknown;
    }

    static std::string vec_key(const AbVec& v) {
        std::ostringstream os;
        for (const auto& c : v) os << c << ";";
        return os.str();
    }

    void require(Kind k) const {
        if (d_->kind != k) throw InvalidArgument("group kind mismatch");
    }
    static int as_int(const GroupElement& e) {
        if (const int* p = std::get_if<int>(&e)) return *p;
        throw InvalidArgument("expected a table-group element");
    }
    static const AbVec& as_vec(const GroupElement& e) {
        if (const AbVec* p = std::get_if<AbVec>(&e)) return *p;
        throw InvalidArgument("expected an abelian-group element");
    }
    static const Word& as_word(const GroupElement& e) {
        if (const Word* p = std::get_if<Word>(&e)) return *p;
        throw InvalidArgument("expected a word element");
    }

    std::shared_ptr<const Data> d_;
};

}  // namespace fintop
