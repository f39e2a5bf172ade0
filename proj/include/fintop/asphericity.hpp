#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fintop/cellular.hpp"
#include "fintop/presentation.hpp"

namespace fintop {

/// Directed multigraph on the generators that occur exactly twice across
/// the relators, with word-valued edge colors. Loops and parallel edges
/// are allowed.
struct ColoredDigraph {
    struct Edge {
        int from = -1, to = -1;
        Word color;
    };
    std::vector<std::string> vertices;   // generator names
    std::vector<int> vertex_generator;   // vertex -> generator index
    std::vector<Edge> edges;

    int vertex_of(int generator) const {
        for (std::size_t i = 0; i < vertex_generator.size(); ++i)
            if (vertex_generator[i] == generator) return static_cast<int>(i);
        return -1;
    }
};

/// The letter digraph of a presentation: one vertex per generator with
/// exactly two occurrences, one edge per consecutive pair of vertex
/// occurrences along each relator read cyclically. The color collects the
/// letters strictly between them, with the endpoint letters folded in when
/// their exponents point away from the gap.
inline ColoredDigraph build_DP(const GroupPresentation& p) {
    ColoredDigraph d;
    std::vector<int> occurrences(p.generators.size(), 0);
    for (const auto& r : p.relators)
        for (const auto& [g, s] : r.letters) ++occurrences[g];
    for (std::size_t g = 0; g < p.generators.size(); ++g)
        if (occurrences[g] == 2) {
            d.vertices.push_back(p.generators[g]);
            d.vertex_generator.push_back(static_cast<int>(g));
        }
    for (const auto& r : p.relators) {
        const std::size_t t = r.letters.size();
        std::vector<std::size_t> hits;
        for (std::size_t l = 0; l < t; ++l)
            if (d.vertex_of(r.letters[l].first) >= 0) hits.push_back(l);
        for (std::size_t hi = 0; hi < hits.size(); ++hi) {
            std::size_t l = hits[hi];
            std::size_t next = hits[(hi + 1) % hits.size()];
            std::size_t m = (next + t - l) % t;
            if (m == 0) m = t;  // single occurrence in this relator: wrap fully
            ColoredDigraph::Edge e;
            e.from = d.vertex_of(r.letters[l].first);
            e.to = d.vertex_of(r.letters[(l + m) % t].first);
            Word color;
            if (r.letters[l].second == -1) color.append(r.letters[l].first, -1);
            for (std::size_t i = 1; i < m; ++i) {
                auto [g, s] = r.letters[(l + i) % t];
                color.append(g, s);
            }
            if (r.letters[(l + m) % t].second == 1)
                color.append(r.letters[(l + m) % t].first, 1);
            e.color = color;
            d.edges.push_back(std::move(e));
        }
    }
    return d;
}

struct AsphericityCertificate {
    int component = -1;
    Word weight;                   // word over the presentation's generators
    std::vector<Int> abelianized;  // raw exponent vector of the weight
};

struct AsphericityReport {
    Tri verdict = Tri::Unknown;  // Yes = aspherical; never No
    std::vector<AsphericityCertificate> certificates;
    std::string detail;
};

namespace detail {

/// Loops through each non-tree edge of each component, conjugated to the
/// component root, plus signed sums of up to three of them.
template <typename Weigher>
std::vector<std::vector<Word>> component_cycle_weights(int nvertices,
                                                       const std::vector<std::pair<int, int>>& ends,
                                                       Weigher&& edge_weight,
                                                       std::vector<int>& comp_out) {
    comp_out.assign(nvertices, -1);
    int nc = 0;
    std::vector<std::vector<int>> incident(nvertices);
    for (std::size_t e = 0; e < ends.size(); ++e) {
        incident[ends[e].first].push_back(static_cast<int>(e));
        incident[ends[e].second].push_back(static_cast<int>(e));
    }
    for (int v = 0; v < nvertices; ++v) {
        if (comp_out[v] != -1) continue;
        std::vector<int> stack{v};
        comp_out[v] = nc;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e : incident[u]) {
                int o = ends[e].first == u ? ends[e].second : ends[e].first;
                if (comp_out[o] == -1) {
                    comp_out[o] = nc;
                    stack.push_back(o);
                }
            }
        }
        ++nc;
    }

    std::vector<std::vector<Word>> fundamental(nc);
    // BFS forest with path words back to each component root
    std::vector<std::optional<Word>> to_root(nvertices);
    std::vector<char> edge_in_tree(ends.size(), 0);
    for (int root = 0; root < nvertices; ++root) {
        if (to_root[root]) continue;
        bool is_root = true;
        for (int v = 0; v < root; ++v)
            if (comp_out[v] == comp_out[root]) is_root = false;
        if (!is_root) continue;
        to_root[root] = Word{};
        std::vector<int> queue{root};
        std::size_t qi = 0;
        while (qi < queue.size()) {
            int u = queue[qi++];
            for (int e : incident[u]) {
                int o = ends[e].first == u ? ends[e].second : ends[e].first;
                if (to_root[o] || o == u) continue;
                edge_in_tree[e] = 1;
                Word w = *to_root[u];
                Word c = edge_weight(e);
                w.append(ends[e].first == u ? c : c.inverse());
                to_root[o] = std::move(w);
                queue.push_back(o);
            }
        }
    }
    for (std::size_t e = 0; e < ends.size(); ++e) {
        if (edge_in_tree[e]) continue;
        auto [a, b] = ends[e];
        Word loop = *to_root[a];
        loop.append(edge_weight(static_cast<int>(e)));
        loop.append(to_root[b]->inverse());
        fundamental[comp_out[a]].push_back(free_reduce(loop));
    }
    return fundamental;
}

inline std::vector<Word> bounded_cycle_sums(const std::vector<Word>& fundamental) {
    std::vector<Word> out = fundamental;
    const std::size_t k = fundamental.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    Word w = si > 0 ? fundamental[i] : fundamental[i].inverse();
                    w.append(sj > 0 ? fundamental[j] : fundamental[j].inverse());
                    out.push_back(free_reduce(w));
                }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l)
                for (int si : {1, -1})
                    for (int sj : {1, -1})
                        for (int sl : {1, -1}) {
                            Word w = si > 0 ? fundamental[i] : fundamental[i].inverse();
                            w.append(sj > 0 ? fundamental[j] : fundamental[j].inverse());
                            w.append(sl > 0 ? fundamental[l] : fundamental[l].inverse());
                            out.push_back(free_reduce(w));
                        }
    return out;
}

}  // namespace detail

/// Sufficient asphericity test for a presentation: every relator must meet
/// the letter digraph, and every component of the digraph must contain a
/// cycle whose weight has an infinite-order abelianization certificate.
inline AsphericityReport aspherical_presentation(const GroupPresentation& p) {
    AsphericityReport rep;
    ColoredDigraph d = build_DP(p);
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        bool has_vertex = false;
        for (const auto& [g, s] : p.relators[ri].letters)
            if (d.vertex_of(g) >= 0) has_vertex = true;
        if (!has_vertex) {
            rep.detail = "relator " + std::to_string(ri) + " contains no digraph vertex";
            return rep;
        }
    }
    if (d.vertices.empty()) {
        rep.detail = "letter digraph is empty";
        return rep;
    }
    std::vector<std::pair<int, int>> ends;
    for (const auto& e : d.edges) ends.emplace_back(e.from, e.to);
    std::vector<int> comp;
    auto fundamental = detail::component_cycle_weights(
        static_cast<int>(d.vertices.size()), ends,
        [&](int e) { return d.edges[e].color; }, comp);
    Abelianization ab(p);
    for (std::size_t ci = 0; ci < fundamental.size(); ++ci) {
        bool found = false;
        for (const auto& w : detail::bounded_cycle_sums(fundamental[ci])) {
            if (!ab.group().has_free_part(ab.eval(w))) continue;
            AsphericityCertificate cert;
            cert.component = static_cast<int>(ci);
            cert.weight = w;
            cert.abelianized = ab.raw(w);
            rep.certificates.push_back(std::move(cert));
            found = true;
        }
        if (!found) {
            rep.detail = "component " + std::to_string(ci) +
                         " has no cycle with an infinite-order certificate";
            rep.certificates.clear();
            return rep;
        }
    }
    rep.verdict = Tri::Yes;
    return rep;
}

/// Sufficient asphericity test for a height-2 cellular poset flagged as the
/// face poset of a regular CW-complex. Builds the subdiagram of 2-cells and
/// the 1-cells with exactly two cofaces, and hunts for component cycles of
/// infinite-order weight in pi1.
inline AsphericityReport aspherical_2complex(const Poset& x, bool certified_regular, int base = 0,
                                             long budget = 20000) {
    if (!certified_regular)
        throw InvalidArgument("caller must certify the poset as a regular CW face poset");
    AsphericityReport rep;
    CellularStructure s = cellular_structure(x);
    if (x.height() != 2) throw NotHeight2("test applies to height-2 posets");
    for (std::size_t e = 0; e < x.covers().size(); ++e)
        if (s.incidence[e] != 1 && s.incidence[e] != -1)
            throw EpsilonNotUnit("incidence number of edge " + std::to_string(e) + " is " +
                                 s.incidence[e].str());

    std::vector<char> in_y(x.size(), 0);
    for (int c2 : s.by_degree[2]) in_y[c2] = 1;
    for (int c1 : s.by_degree.size() > 1 ? s.by_degree[1] : std::vector<int>{})
        if (x.up_covers(c1).size() == 2) in_y[c1] = 1;
    std::vector<int> yverts;
    std::vector<std::pair<int, int>> yedges;     // endpoints as y-vertex ids
    std::vector<int> yedge_cover;
    std::vector<int> to_local(x.size(), -1);
    for (std::size_t v = 0; v < x.size(); ++v)
        if (in_y[v]) {
            to_local[v] = static_cast<int>(yverts.size());
            yverts.push_back(static_cast<int>(v));
        }
    for (std::size_t e = 0; e < x.covers().size(); ++e) {
        auto [a, b] = x.covers()[e];
        if (in_y[a] && in_y[b]) {
            yedges.emplace_back(to_local[a], to_local[b]);
            yedge_cover.push_back(static_cast<int>(e));
        }
    }
    if (yverts.empty()) {
        rep.detail = "no 2-cells";
        return rep;
    }

    Pi1Presentation p = pi1_presentation(x, base, std::nullopt, budget);
    auto edge_word = [&](int ye) {
        int cover = yedge_cover[ye];
        auto [a, b] = x.covers()[cover];
        // class of gamma_a (a,b) gamma_b^-1; these telescope along paths in Y
        Word w = cycle_word(p.base_paths[a] * EdgePath(x, {{a, b}}) * p.base_paths[b].reversed(), p);
        return free_reduce(w);
    };
    std::vector<int> comp;
    auto fundamental = detail::component_cycle_weights(static_cast<int>(yverts.size()), yedges,
                                                       edge_word, comp);
    const Abelianization& ab = p.group.abelianization();
    for (std::size_t ci = 0; ci < fundamental.size(); ++ci) {
        bool found = false;
        for (const auto& w : detail::bounded_cycle_sums(fundamental[ci])) {
            if (!ab.group().has_free_part(ab.eval(w))) continue;
            AsphericityCertificate cert;
            cert.component = static_cast<int>(ci);
            cert.weight = w;
            cert.abelianized = ab.raw(w);
            rep.certificates.push_back(std::move(cert));
            found = true;
            break;
        }
        if (!found) {
            rep.detail = "component " + std::to_string(ci) +
                         " has no cycle with an infinite-order certificate";
            rep.certificates.clear();
            return rep;
        }
    }
    rep.verdict = Tri::Yes;
    return rep;
}

}  // namespace fintop
