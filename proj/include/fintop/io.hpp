#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fintop/board.hpp"
#include "fintop/coloring.hpp"
#include "fintop/homology.hpp"
#include "fintop/poset.hpp"
#include "fintop/simplicial.hpp"

namespace fintop {

using Json = nlohmann::json;

inline Json poset_to_json(const Poset& p) {
    Json j;
    j["elements"] = p.labels();
    Json covers = Json::array();
    for (const auto& [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
    j["covers"] = covers;
    return j;
}

inline Poset poset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw FormatError("poset document needs 'elements' and 'covers'");
    std::vector<std::string> labels = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& e : j.at("covers")) {
        if (!e.is_array() || e.size() != 2) throw FormatError("cover entries are [lower, upper]");
        pairs.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    return Poset::from_covers(std::move(labels), pairs);
}

inline Json complex_to_json(const SimplicialComplex& k) {
    Json j;
    j["vertices"] = k.vertex_labels;
    Json facets = Json::array();
    for (const auto& f : k.facets) {
        Json facet = Json::array();
        for (int v : f) facet.push_back(k.vertex_labels[v]);
        facets.push_back(facet);
    }
    j["facets"] = facets;
    return j;
}

inline SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw FormatError("complex document needs 'vertices' and 'facets'");
    std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::vector<int>> facets;
    auto index = [&](const std::string& name) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) return static_cast<int>(i);
        throw FormatError("facet vertex '" + name + "' not among the vertices");
    };
    for (const auto& f : j.at("facets")) {
        std::vector<int> facet;
        for (const auto& v : f) facet.push_back(index(v.get<std::string>()));
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

/// Group literals: "Z", "ZxZ", ... (free abelian), "Z_n" (cyclic table),
/// "S_n", "D_n", a presentation "<a, b | ...>", or {"table": [[...]]}.
inline Group group_from_literal(const Json& j, long budget = 20000) {
    if (j.is_object()) {
        if (!j.contains("table")) throw FormatError("group object needs a 'table'");
        return Group::finite(FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<int>>>()));
    }
    if (!j.is_string()) throw FormatError("group literal must be a string or a table object");
    std::string s = j.get<std::string>();
    if (s.empty()) throw FormatError("empty group literal");
    if (s.front() == '<') return Group::presented(parse_presentation(s), budget);
    auto parse_n = [&](const std::string& txt) {
        try {
            std::size_t pos = 0;
            long n = std::stol(txt, &pos);
            if (pos != txt.size() || n < 1) throw FormatError("bad group order in literal");
            return n;
        } catch (const FormatError&) {
            throw;
        } catch (...) {
            throw FormatError("bad group order in literal '" + s + "'");
        }
    };
    if (s.rfind("Z_", 0) == 0) return Group::finite(FiniteGroup::cyclic(parse_n(s.substr(2))));
    if (s.rfind("S_", 0) == 0) return Group::finite(FiniteGroup::symmetric(parse_n(s.substr(2))));
    if (s.rfind("D_", 0) == 0) return Group::finite(FiniteGroup::dihedral(parse_n(s.substr(2))));
    // "Z", "ZxZ", "ZxZxZ", ...
    long rank = 0;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        if (part != "Z") throw FormatError("unknown group literal '" + s + "'");
        ++rank;
    }
    return Group::abelian(FgAbelianGroup::free(rank));
}

inline Json group_to_literal(const Group& g) {
    switch (g.kind()) {
        case Group::Kind::Finite: {
            Json j;
            j["table"] = g.finite_group().table();
            return j;
        }
        case Group::Kind::Abelian: {
            const auto& a = g.abelian_group();
            if (a.divisors().empty() && a.rank() >= 1) {
                std::string s = "Z";
                for (long i = 1; i < a.rank(); ++i) s += "xZ";
                return Json(s);
            }
            if (a.rank() == 0 && a.divisors().size() == 1)
                return Json("Z_" + a.divisors()[0].str());
            throw FormatError("abelian group has no literal form: " + a.to_string());
        }
        default: return Json(g.presentation().to_text());
    }
}

inline GroupElement element_from_json(const Group& g, const Json& j) {
    switch (g.kind()) {
        case Group::Kind::Finite: {
            if (!j.is_number_integer()) throw FormatError("table-group element literal is an index");
            int v = j.get<int>();
            if (v < 0 || static_cast<std::size_t>(v) >= g.finite_group().order())
                throw FormatError("element index out of range");
            return v;
        }
        case Group::Kind::Abelian: {
            if (!j.is_array()) throw FormatError("abelian element literal is an integer vector");
            AbVec v;
            for (const auto& c : j) v.push_back(Int(c.get<long>()));
            if (v.size() != g.abelian_group().dims())
                throw FormatError("abelian element vector has wrong length");
            return g.abelian_group().normalize(std::move(v));
        }
        default: {
            if (!j.is_string()) throw FormatError("presented-group element literal is a word");
            return parse_word_text(j.get<std::string>(), g.presentation());
        }
    }
}

inline Json element_to_json(const Group& g, const GroupElement& e) {
    switch (g.kind()) {
        case Group::Kind::Finite: return Json(std::get<int>(e));
        case Group::Kind::Abelian: {
            Json arr = Json::array();
            for (const auto& c : std::get<AbVec>(e)) arr.push_back(static_cast<long>(c));
            return arr;
        }
        default: return Json(word_to_string(std::get<Word>(e), g.presentation().generators));
    }
}

inline Json coloring_to_json(const Coloring& c) {
    Json j = poset_to_json(c.poset());
    j["group"] = group_to_literal(c.group());
    Json colors = Json::array();
    for (std::size_t e = 0; e < c.poset().covers().size(); ++e) {
        auto [a, b] = c.poset().covers()[e];
        colors.push_back({c.poset().label(a), c.poset().label(b),
                          element_to_json(c.group(), c.color(static_cast<int>(e)))});
    }
    j["colors"] = colors;
    return j;
}

inline Coloring coloring_from_json(const Json& j, long budget = 20000) {
    Poset p = poset_from_json(j);
    if (!j.contains("group") || !j.contains("colors"))
        throw FormatError("coloring document needs 'group' and 'colors'");
    Group g = group_from_literal(j.at("group"), budget);
    // unlisted edges default to the identity
    std::vector<GroupElement> colors(p.covers().size(), g.identity());
    for (const auto& entry : j.at("colors")) {
        if (!entry.is_array() || entry.size() != 3)
            throw FormatError("color entries are [lower, upper, literal]");
        int a = p.index_of(entry.at(0).get<std::string>());
        int b = p.index_of(entry.at(1).get<std::string>());
        int e = p.edge_index(a, b);
        if (e < 0) throw FormatError("color entry does not name a Hasse edge");
        colors[e] = element_from_json(g, entry.at(2));
    }
    return Coloring(p, g, std::move(colors));
}

inline Json monotone_map_to_json(const MonotoneMap& f) {
    Json j;
    j["source"] = poset_to_json(f.source);
    j["target"] = poset_to_json(f.target);
    Json m = Json::array();
    for (std::size_t x = 0; x < f.source.size(); ++x)
        m.push_back({f.source.label(static_cast<int>(x)), f.target.label(f(static_cast<int>(x)))});
    j["map"] = m;
    return j;
}

inline MonotoneMap monotone_map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("map"))
        throw FormatError("map document needs 'source', 'target' and 'map'");
    Poset src = poset_from_json(j.at("source"));
    Poset tgt = poset_from_json(j.at("target"));
    std::vector<int> assignment(src.size(), -1);
    for (const auto& e : j.at("map")) {
        if (!e.is_array() || e.size() != 2) throw FormatError("map entries are [from, to]");
        assignment[src.index_of(e.at(0).get<std::string>())] =
            tgt.index_of(e.at(1).get<std::string>());
    }
    for (int v : assignment)
        if (v < 0) throw FormatError("map does not cover every source element");
    try {
        return MonotoneMap(std::move(src), std::move(tgt), std::move(assignment));
    } catch (const InvalidArgument& e) {
        throw FormatError(e.what());
    }
}

/// Board coloring text: one 'r' or 'b' per edge in canonical cover order;
/// whitespace is ignored.
inline BoardColoring board_coloring_from_text(const Board& b, const std::string& text) {
    BoardColoring c = BoardColoring::all_blue(b);
    std::size_t at = 0;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (at >= b.edge_count()) throw FormatError("more colors than board edges");
        if (ch == 'r')
            c.red[at] = true;
        else if (ch != 'b')
            throw FormatError(std::string("bad color character '") + ch + "'");
        ++at;
    }
    if (at != b.edge_count())
        throw FormatError("expected " + std::to_string(b.edge_count()) + " colors, got " +
                          std::to_string(at));
    return c;
}

inline std::string board_coloring_to_text(const BoardColoring& c) {
    std::string s;
    for (std::size_t e = 0; e < c.red.size(); ++e) s += c.red[e] ? 'r' : 'b';
    return s;
}

inline Json homology_to_json(const Homology& h) {
    Json arr = Json::array();
    for (std::size_t d = 0; d < h.size(); ++d) {
        Json g;
        g["dim"] = d;
        g["rank"] = h[d].rank;
        Json tor = Json::array();
        for (const auto& t : h[d].torsion) tor.push_back(t.str());
        g["torsion"] = tor;
        arr.push_back(g);
    }
    return arr;
}

}  // namespace fintop
