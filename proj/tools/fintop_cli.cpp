// Command-line front end: reads the document formats on files or stdin,
// dispatches to the library, and prints deterministic JSON reports.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fintop/asphericity.hpp"
#include "fintop/cellular.hpp"
#include "fintop/corpus.hpp"
#include "fintop/io.hpp"

namespace {

using fintop::Json;

std::string slurp(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw fintop::FormatError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json load_json(const std::string& path) {
    try {
        return Json::parse(slurp(path));
    } catch (const Json::parse_error& e) {
        throw fintop::FormatError(std::string("malformed JSON: ") + e.what());
    }
}

fintop::Poset load_poset(const std::string& path) {
    try {
        return fintop::poset_from_json(load_json(path));
    } catch (const fintop::FormatError&) {
        throw;
    } catch (const fintop::DomainError& e) {
        throw fintop::FormatError(e.what());
    }
}

fintop::Coloring load_coloring(const std::string& path, long budget) {
    try {
        return fintop::coloring_from_json(load_json(path), budget);
    } catch (const fintop::FormatError&) {
        throw;
    } catch (const fintop::DomainError& e) {
        throw fintop::FormatError(e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int base_index(const fintop::Poset& p, const std::string& base) {
    return base.empty() ? 0 : p.index_of(base);
}

Json abelian_to_json(const fintop::FgAbelianGroup& g) {
    Json j;
    j["rank"] = g.rank();
    Json tor = Json::array();
    for (const auto& d : g.divisors()) tor.push_back(d.str());
    j["torsion"] = tor;
    j["pretty"] = g.to_string();
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational homotopy of finite posets"};
    app.require_subcommand(1);
    long budget = 20000;
    std::uint64_t seed = 20240;
    app.add_option("--budget", budget, "simplification step budget");
    app.add_option("--seed", seed, "seed for randomized suites");

    std::string input = "-", input2, base, group_literal, kind = "rect", presentation_text;
    int n = 1, m = 1;
    bool cellular = false, cw2 = false, full = false;

    auto* cmd_pi1 = app.add_subcommand("pi1", "fundamental group presentation of a poset");
    cmd_pi1->add_option("input", input);
    cmd_pi1->add_option("--base", base, "base point label");

    auto* cmd_hom = app.add_subcommand("homology", "reduced integer homology");
    cmd_hom->add_option("input", input);
    cmd_hom->add_flag("--cellular", cellular, "use the cellular chain complex");

    auto* cmd_pi2 = app.add_subcommand("pi2", "second homotopy group of a cellular poset");
    cmd_pi2->add_option("input", input);
    cmd_pi2->add_option("--base", base);

    auto* cmd_core = app.add_subcommand("core", "remove beat points until none remain");
    cmd_core->add_option("input", input);

    auto* cmd_cover = app.add_subcommand("cover", "build the covering E(c) of a coloring");
    cmd_cover->add_option("input", input);

    auto* cmd_deck = app.add_subcommand("deck", "deck transformations of E(c)");
    cmd_deck->add_option("input", input);

    auto* cmd_check = app.add_subcommand("coloring-check", "admissibility and connectedness");
    cmd_check->add_option("input", input);
    cmd_check->add_option("--base", base);

    auto* cmd_equiv = app.add_subcommand("equiv", "equivalence of two colorings");
    cmd_equiv->add_option("first", input)->required();
    cmd_equiv->add_option("second", input2)->required();

    auto* cmd_asph = app.add_subcommand("aspherical", "asphericity certificates");
    cmd_asph->add_option("input", input, "poset document (with --cw2)");
    cmd_asph->add_option("--presentation", presentation_text, "presentation literal");
    cmd_asph->add_flag("--cw2", cw2, "input is the face poset of a regular CW-complex");

    auto* cmd_board = app.add_subcommand("board", "board colorings and moves");
    cmd_board->add_option("--kind", kind, "rect | cylinder | torus");
    cmd_board->add_option("--n", n)->required();
    cmd_board->add_option("--m", m)->required();
    auto* board_classes = cmd_board->add_subcommand("classes", "count move-equivalence classes");
    auto* board_equiv = cmd_board->add_subcommand("equiv", "decide move-equivalence");
    board_equiv->add_option("first", input)->required();
    board_equiv->add_option("second", input2)->required();

    auto* cmd_milnor = app.add_subcommand("milnor", "poset with prescribed fundamental group");
    cmd_milnor->add_option("--group", group_literal)->required();
    cmd_milnor->add_flag("--full", full, "also emit the total space and projection");

    auto* cmd_verify = app.add_subcommand("verify", "verify a covering map document");
    cmd_verify->add_option("input", input);

    auto* cmd_corpus = app.add_subcommand("corpus", "run the acceptance corpus");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_pi1->parsed()) {
            fintop::Poset p = load_poset(input);
            auto pres = fintop::pi1_presentation(p, base_index(p, base), std::nullopt, budget);
            Json j;
            j["elements"] = p.size();
            j["presentation"] = pres.presentation.to_text();
            j["generators"] = Json::array();
            for (std::size_t g = 0; g < pres.generator_edge.size(); ++g) {
                auto [a, b] = p.covers()[pres.generator_edge[g]];
                j["generators"].push_back({pres.presentation.generators[g],
                                           {p.label(a), p.label(b)}});
            }
            j["verdict"] = pres.group.simplified().verdict;
            j["abelianization"] = abelian_to_json(pres.group.abelianization().group());
            emit(j);
        } else if (cmd_hom->parsed()) {
            fintop::Poset p = load_poset(input);
            fintop::Homology h;
            if (cellular)
                h = fintop::cellular_homology(fintop::cellular_structure(p));
            else
                h = fintop::simplicial_homology(fintop::order_complex(p));
            Json j;
            j["reduced_homology"] = fintop::homology_to_json(h);
            j["route"] = cellular ? "cellular" : "order-complex";
            emit(j);
        } else if (cmd_pi2->parsed()) {
            fintop::Poset p = load_poset(input);
            auto r = fintop::pi2(p, base_index(p, base), budget);
            Json j;
            switch (r.kind) {
                case fintop::Pi2Result::Kind::FreeModule:
                    j["kind"] = "free-module";
                    j["rank"] = r.free_rank;
                    break;
                case fintop::Pi2Result::Kind::Abelian: {
                    j["kind"] = "abelian";
                    j["rank"] = r.abelian.rank;
                    Json tor = Json::array();
                    for (const auto& t : r.abelian.torsion) tor.push_back(t.str());
                    j["torsion"] = tor;
                    break;
                }
                default:
                    j["kind"] = "unknown";
                    j["reason"] = r.reason;
            }
            j["pretty"] = r.to_string();
            emit(j);
        } else if (cmd_core->parsed()) {
            fintop::Poset p = load_poset(input);
            Json j = fintop::poset_to_json(fintop::core(p));
            emit(j);
        } else if (cmd_cover->parsed()) {
            fintop::Coloring c = load_coloring(input, budget);
            auto cm = fintop::build_cover(c);
            Json j;
            j["total"] = fintop::poset_to_json(cm.total);
            Json proj = Json::array();
            for (std::size_t x = 0; x < cm.total.size(); ++x)
                proj.push_back({cm.total.label(static_cast<int>(x)),
                                cm.base.label(cm.projection(static_cast<int>(x)))});
            j["projection"] = proj;
            emit(j);
        } else if (cmd_deck->parsed()) {
            fintop::Coloring c = load_coloring(input, budget);
            auto cm = fintop::build_cover(c);
            auto decks = fintop::deck_transformations(cm);
            Json j;
            j["order"] = decks.size();
            Json ts = Json::array();
            for (const auto& h : decks) {
                Json perm = Json::array();
                for (std::size_t x = 0; x < h.size(); ++x)
                    perm.push_back(cm.total.label(h[x]));
                ts.push_back(perm);
            }
            j["transformations"] = ts;
            emit(j);
        } else if (cmd_check->parsed()) {
            fintop::Coloring c = load_coloring(input, budget);
            auto adm = fintop::is_admissible(c);
            Json j;
            j["admissible"] = fintop::to_string(adm.verdict);
            if (adm.counterexample)
                j["counterexample"] = adm.counterexample->describe(c.poset());
            if (adm.verdict == fintop::Tri::Yes && c.poset().connected())
                j["connected"] = fintop::to_string(
                    fintop::is_connected_coloring(c, base_index(c.poset(), base)));
            emit(j);
        } else if (cmd_equiv->parsed()) {
            fintop::Coloring c1 = load_coloring(input, budget);
            fintop::Coloring c2 = load_coloring(input2, budget);
            auto rep = fintop::are_equivalent(c1, c2);
            Json j;
            j["equivalent"] = fintop::to_string(rep.verdict);
            if (!rep.detail.empty()) j["detail"] = rep.detail;
            if (rep.witness) {
                Json w;
                w["automorphism"] = rep.witness->automorphism;
                Json gs = Json::array();
                for (std::size_t v = 0; v < rep.witness->g.size(); ++v)
                    gs.push_back(fintop::element_to_json(c1.group(), rep.witness->g[v]));
                w["g"] = gs;
                j["witness"] = w;
            }
            emit(j);
        } else if (cmd_asph->parsed()) {
            fintop::AsphericityReport rep;
            std::vector<std::string> names;
            if (!presentation_text.empty()) {
                auto pres = fintop::parse_presentation(presentation_text);
                names = pres.generators;
                rep = fintop::aspherical_presentation(pres);
            } else if (cw2) {
                fintop::Poset p = load_poset(input);
                rep = fintop::aspherical_2complex(p, true, 0, budget);
                auto pi1 = fintop::pi1_presentation(p, 0, std::nullopt, budget);
                names = pi1.presentation.generators;
            } else {
                throw fintop::FormatError("need --presentation or a poset with --cw2");
            }
            Json j;
            j["verdict"] = rep.verdict == fintop::Tri::Yes ? "aspherical" : "unknown";
            if (!rep.detail.empty()) j["detail"] = rep.detail;
            Json certs = Json::array();
            for (const auto& cert : rep.certificates) {
                Json cj;
                cj["component"] = cert.component;
                cj["weight"] = fintop::word_to_string(cert.weight, names);
                Json ab = Json::array();
                for (const auto& v : cert.abelianized) ab.push_back(v.str());
                cj["abelianized"] = ab;
                certs.push_back(cj);
            }
            j["certificates"] = certs;
            emit(j);
        } else if (cmd_board->parsed()) {
            fintop::BoardKind bk;
            if (kind == "rect" || kind == "rectangle")
                bk = fintop::BoardKind::Rectangle;
            else if (kind == "cylinder")
                bk = fintop::BoardKind::Cylinder;
            else if (kind == "torus")
                bk = fintop::BoardKind::Torus;
            else
                throw fintop::FormatError("unknown board kind '" + kind + "'");
            fintop::Board b = fintop::Board::make(bk, n, m);
            if (board_classes->parsed()) {
                Json j;
                j["classes"] = fintop::count_classes(b).str();
                j["edges"] = b.edge_count();
                j["squares"] = b.squares.size();
                emit(j);
            } else if (board_equiv->parsed()) {
                auto c1 = fintop::board_coloring_from_text(b, slurp(input));
                auto c2 = fintop::board_coloring_from_text(b, slurp(input2));
                if (!fintop::is_valid(b, c1) || !fintop::is_valid(b, c2))
                    throw fintop::InvalidArgument("both colorings must be valid");
                auto rep = fintop::moves_equivalent(b, c1, c2);
                Json j;
                j["equivalent"] = rep.equivalent;
                if (rep.equivalent) {
                    Json vs = Json::array();
                    for (int v : rep.vertices) vs.push_back(b.poset.label(v));
                    j["moves"] = vs;
                }
                emit(j);
            } else {
                throw fintop::FormatError("board needs a 'classes' or 'equiv' subcommand");
            }
        } else if (cmd_milnor->parsed()) {
            fintop::Group g = fintop::group_from_literal(Json(group_literal), budget);
            if (g.kind() != fintop::Group::Kind::Finite)
                throw fintop::InfiniteGroup("construction needs a finite table group");
            auto mc = fintop::milnor_poset(g.finite_group());
            if (full) {
                Json j;
                j["quotient"] = fintop::poset_to_json(mc.quotient);
                j["total"] = fintop::poset_to_json(mc.total);
                j["projection"] = fintop::monotone_map_to_json(mc.projection.projection)["map"];
                emit(j);
            } else {
                emit(fintop::poset_to_json(mc.quotient));
            }
        } else if (cmd_verify->parsed()) {
            fintop::MonotoneMap f = [&] {
                try {
                    return fintop::monotone_map_from_json(load_json(input));
                } catch (const fintop::FormatError&) {
                    throw;
                } catch (const fintop::DomainError& e) {
                    throw fintop::FormatError(e.what());
                }
            }();
            auto v = fintop::verify_covering(f);
            Json j;
            j["covering"] = v.ok;
            if (!v.ok) {
                j["reason"] = v.reason;
                if (v.witness >= 0) j["witness"] = f.source.label(v.witness);
                emit(j);
                std::cerr << "error: NotCovering: " << v.reason << "\n";
                return 1;
            }
            emit(j);
        } else if (cmd_corpus->parsed()) {
            auto results = fintop::corpus::run(seed, budget);
            std::cout << fintop::corpus::report(results);
            for (const auto& r : results)
                if (!r.pass) return 1;
        }
    } catch (const fintop::FormatError& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const fintop::DomainError& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << "error: FormatError: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
