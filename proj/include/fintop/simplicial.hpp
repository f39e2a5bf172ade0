#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fintop/poset.hpp"

namespace fintop {

/// Finite abstract simplicial complex. Simplices are stored closed under
/// subsets, grouped by dimension and lexicographically sorted, so indices
/// are canonical.
struct SimplicialComplex {
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<int>> facets;                  // sorted vertex indices
    std::vector<std::vector<std::vector<int>>> by_dim;     // by_dim[d] sorted lex

    static SimplicialComplex from_facets(std::vector<std::string> vertex_labels,
                                         std::vector<std::vector<int>> facets) {
        SimplicialComplex k;
        k.vertex_labels = std::move(vertex_labels);
        std::set<std::vector<int>> all;
        for (auto& f : facets) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            if (f.empty()) throw InvalidArgument("empty facet");
            for (int v : f)
                if (v < 0 || static_cast<std::size_t>(v) >= k.vertex_labels.size())
                    throw UnknownLabel("facet vertex out of range");
            // every nonempty subset is a simplex
            const std::size_t m = f.size();
            for (std::size_t mask = 1; mask < (1u << m); ++mask) {
                std::vector<int> s;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask & (1u << i)) s.push_back(f[i]);
                all.insert(std::move(s));
            }
        }
        k.facets = std::move(facets);
        std::sort(k.facets.begin(), k.facets.end());
        k.facets.erase(std::unique(k.facets.begin(), k.facets.end()), k.facets.end());
        for (const auto& s : all) {
            std::size_t d = s.size() - 1;
            if (k.by_dim.size() <= d) k.by_dim.resize(d + 1);
            k.by_dim[d].push_back(s);
        }
        for (auto& v : k.by_dim) std::sort(v.begin(), v.end());
        return k;
    }

    int dim() const { return static_cast<int>(by_dim.size()) - 1; }
    std::size_t simplex_count() const {
        std::size_t n = 0;
        for (const auto& v : by_dim) n += v.size();
        return n;
    }
    std::size_t count(int d) const {
        return (d < 0 || d > dim()) ? 0 : by_dim[d].size();
    }

    /// Canonical index of a simplex within its dimension; -1 when absent.
    int index_of(const std::vector<int>& sorted_simplex) const {
        int d = static_cast<int>(sorted_simplex.size()) - 1;
        if (d < 0 || d > dim()) return -1;
        auto it = std::lower_bound(by_dim[d].begin(), by_dim[d].end(), sorted_simplex);
        if (it == by_dim[d].end() || *it != sorted_simplex) return -1;
        return static_cast<int>(it - by_dim[d].begin());
    }
    bool has_simplex(const std::vector<int>& sorted_simplex) const {
        return index_of(sorted_simplex) >= 0;
    }

    std::string simplex_label(const std::vector<int>& s) const {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ",";
            out += vertex_labels[s[i]];
        }
        return out + "}";
    }

    std::vector<long> f_vector() const {
        std::vector<long> f;
        for (const auto& v : by_dim) f.push_back(static_cast<long>(v.size()));
        return f;
    }
    long euler_characteristic() const {
        long chi = 0;
        int sign = 1;
        for (const auto& v : by_dim) {
            chi += sign * static_cast<long>(v.size());
            sign = -sign;
        }
        return chi;
    }
};

/// Order complex K(X): simplices are the nonempty chains of X. The facets
/// are the maximal chains, i.e. saturated chains from a minimal to a
/// maximal element; every other chain is one of their subsets.
inline SimplicialComplex order_complex(const Poset& x) {
    std::vector<std::vector<int>> facets;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int v) -> void {
        cur.push_back(v);
        if (x.up_covers(v).empty()) {
            auto f = cur;
            std::sort(f.begin(), f.end());
            facets.push_back(std::move(f));
        } else {
            for (int w : x.up_covers(v)) self(self, w);
        }
        cur.pop_back();
    };
    for (int m : x.minimal_elements()) dfs(dfs, m);
    return SimplicialComplex::from_facets(x.labels(), std::move(facets));
}

/// Face poset X(K): elements are the simplices ordered by inclusion.
inline Poset face_poset(const SimplicialComplex& k) {
    std::vector<std::vector<int>> all;
    for (const auto& v : k.by_dim) all.insert(all.end(), v.begin(), v.end());
    std::map<std::vector<int>, int> idx;
    std::vector<std::string> labels;
    for (const auto& s : all) {
        idx[s] = static_cast<int>(labels.size());
        labels.push_back(k.simplex_label(s));
    }
    std::vector<std::pair<int, int>> covers;
    for (const auto& s : all) {
        if (s.size() < 2) continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            covers.emplace_back(idx.at(face), idx.at(s));
        }
    }
    return Poset::from_cover_indices(std::move(labels), covers);
}

/// Simplicial map given by a vertex assignment. Validated: images of
/// simplices must be simplices.
struct SimplicialMap {
    SimplicialComplex source, target;
    std::vector<int> vertex_map;

    SimplicialMap() = default;
    SimplicialMap(SimplicialComplex src, SimplicialComplex tgt, std::vector<int> vm)
        : source(std::move(src)), target(std::move(tgt)), vertex_map(std::move(vm)) {
        if (vertex_map.size() != source.vertex_labels.size())
            throw InvalidArgument("vertex map must cover all vertices");
        for (const auto& dimv : source.by_dim)
            for (const auto& s : dimv)
                if (!target.has_simplex(image_simplex(s)))
                    throw InvalidArgument("vertex map is not simplicial");
    }

    std::vector<int> image_simplex(const std::vector<int>& s) const {
        std::vector<int> img;
        img.reserve(s.size());
        for (int v : s) img.push_back(vertex_map.at(v));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        return img;
    }
};

/// K(f) for a monotone map f: the induced simplicial map on order complexes.
inline SimplicialMap order_complex_map(const MonotoneMap& f, const SimplicialComplex& ksrc,
                                       const SimplicialComplex& ktgt) {
    return SimplicialMap(ksrc, ktgt, f.assignment);
}

/// X(phi) for a simplicial map: the induced monotone map on face posets.
inline MonotoneMap face_poset_map(const SimplicialMap& phi, const Poset& xsrc,
                                  const Poset& xtgt) {
    std::vector<int> assignment(xsrc.size());
    for (const auto& dimv : phi.source.by_dim)
        for (const auto& s : dimv) {
            int from = xsrc.index_of(phi.source.simplex_label(s));
            int to = xtgt.index_of(phi.target.simplex_label(phi.image_simplex(s)));
            assignment[from] = to;
        }
    return MonotoneMap(xsrc, xtgt, std::move(assignment));
}

}  // namespace fintop
