// symgame: exact-arithmetic command-line toolkit for finite normal-form
// games. Subcommands: classify, aut, iso, nash, matchings, paramgame, hasse.
//
// Exit codes: 0 success (affirmative for iso), 1 negative answer (iso only),
// 2 parse error / malformed invocation, 3 validation error, 4 precondition
// error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symgame/bijection.hpp"
#include "symgame/classifier.hpp"
#include "symgame/error.hpp"
#include "symgame/game.hpp"
#include "symgame/json_io.hpp"
#include "symgame/matching.hpp"
#include "symgame/param_games.hpp"
#include "symgame/rational.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw symgame::ParseError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

symgame::Game load_game(const std::string& path) {
    return symgame::game_from_json_text(read_file(path));
}

// A generator-set source is, in order of precedence: a readable file in the
// textual generator-set format; the alias "example_5_6" for the largest
// two-player partition; a single-set family name; or "family/set".
symgame::GeneratorSet resolve_generator_set(const std::string& spec) {
    if (fs::exists(spec) && fs::is_regular_file(spec))
        return symgame::parse_generator_set(read_file(spec), fs::path(spec).stem().string());
    if (spec == "example_5_6")
        return symgame::family_generator_set(symgame::GeneratorFamily::two_player_2s, "G_11");
    const std::size_t slash = spec.find('/');
    if (slash != std::string::npos) {
        const auto family = symgame::generator_family_from_string(spec.substr(0, slash));
        return symgame::family_generator_set(family, spec.substr(slash + 1));
    }
    const auto family = symgame::generator_family_from_string(spec);
    auto sets = symgame::family_generator_sets(family);
    if (sets.size() != 1)
        throw symgame::ParseError("family " + spec + " has " + std::to_string(sets.size()) +
                                  " generator sets; name one with " + spec + "/<set>");
    return std::move(sets.front());
}

std::map<std::string, symgame::Rational> parse_params(const std::vector<std::string>& args) {
    std::map<std::string, symgame::Rational> values;
    for (const std::string& arg : args) {
        std::size_t start = 0;
        while (start <= arg.size()) {
            const std::size_t comma = arg.find(',', start);
            const std::string item =
                arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            start = comma == std::string::npos ? arg.size() + 1 : comma + 1;
            if (item.empty()) continue;
            const std::size_t eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw symgame::ParseError("parameter assignments use name=value, got: " + item);
            const std::string name = item.substr(0, eq);
            if (values.count(name)) throw symgame::ParseError("duplicate parameter: " + name);
            values.emplace(name, symgame::parse_rational(item.substr(eq + 1)));
        }
    }
    return values;
}

int cmd_classify(const std::string& path, bool json_out) {
    const symgame::Game game = load_game(path);
    const symgame::ClassificationReport report = symgame::classify(game);
    if (json_out) {
        json doc;
        doc["class"] = report.class_phrase();
        doc["symmetric"] = report.symmetric;
        doc["n_transitive"] = report.n_transitive;
        doc["only_transitive"] = report.only_transitive;
        doc["uniform_strategies"] = report.uniform_strategies;
        doc["standard"] = report.uniform_strategies ? json(report.standard) : json();
        doc["fully"] = report.uniform_strategies ? json(report.fully) : json();
        doc["automorphism_group_order"] = report.aut_order;
        doc["witness_matching"] =
            report.witness_matching ? json(report.witness_matching->text()) : json();
        doc["witness_subgroup"] = report.witness_subgroup ? json(*report.witness_subgroup) : json();
        doc["n_transitivity_certificate"] = report.n_transitivity_certificate.empty()
                                                ? json()
                                                : json(report.n_transitivity_certificate);
        std::cout << symgame::canonical_json_text(doc) << "\n";
    } else {
        std::cout << "class: " << report.class_phrase() << "\n"
                  << report.flags_line() << "\n"
                  << "automorphism group order: " << report.aut_order << "\n";
        if (report.witness_matching)
            std::cout << "witness matching: " << report.witness_matching->text() << "\n";
        if (report.witness_subgroup)
            for (const std::string& text : *report.witness_subgroup)
                std::cout << "witness subgroup generator: " << text << "\n";
        if (!report.n_transitivity_certificate.empty())
            std::cout << "n-transitivity certificate: " << report.n_transitivity_certificate
                      << "\n";
    }
    return 0;
}

int cmd_aut(const std::string& path, bool json_out) {
    const symgame::BijectionGroup aut = symgame::automorphism_group(load_game(path));
    if (json_out) {
        json doc;
        doc["order"] = aut.order();
        json elements = json::array();
        for (const symgame::GameBijection& g : aut.elements()) elements.push_back(g.text());
        doc["elements"] = std::move(elements);
        std::cout << symgame::canonical_json_text(doc) << "\n";
    } else {
        for (const symgame::GameBijection& g : aut.elements()) std::cout << g.text() << "\n";
    }
    return 0;
}

int cmd_iso(const std::string& path1, const std::string& path2, bool json_out) {
    const symgame::Game game1 = load_game(path1);
    const symgame::Game game2 = load_game(path2);
    const std::vector<symgame::GameBijection> isos = symgame::isomorphisms_between(game1, game2);
    if (json_out) {
        json doc;
        doc["isomorphic"] = !isos.empty();
        doc["witness"] = isos.empty() ? json() : json(isos.front().text());
        std::cout << symgame::canonical_json_text(doc) << "\n";
    } else if (isos.empty()) {
        std::cout << "not isomorphic\n";
    } else {
        std::cout << isos.front().text() << "\n";
    }
    return isos.empty() ? 1 : 0;
}

int cmd_nash(const std::string& path, bool json_out) {
    const symgame::Game game = load_game(path);
    const std::vector<symgame::Profile> equilibria = game.pure_nash_equilibria();
    if (json_out) {
        json list = json::array();
        for (const symgame::Profile& p : equilibria) {
            json labels = json::array();
            for (int i = 0; i < game.players(); ++i)
                labels.push_back(game.shape().label(i, p[static_cast<std::size_t>(i)]));
            list.push_back(std::move(labels));
        }
        json doc;
        doc["equilibria"] = std::move(list);
        std::cout << symgame::canonical_json_text(doc) << "\n";
    } else {
        for (const symgame::Profile& p : equilibria)
            std::cout << game.shape().profile_text(p) << "\n";
    }
    return 0;
}

int cmd_matchings(const std::string& path, bool json_out) {
    const symgame::Game game = load_game(path);
    const std::vector<symgame::Matching> matchings = symgame::enumerate_matchings(game.shape());
    if (json_out) {
        json list = json::array();
        for (const symgame::Matching& m : matchings) list.push_back(m.text());
        json doc;
        doc["count"] = matchings.size();
        doc["matchings"] = std::move(list);
        std::cout << symgame::canonical_json_text(doc) << "\n";
    } else {
        for (const symgame::Matching& m : matchings) std::cout << m.text() << "\n";
    }
    return 0;
}

int cmd_paramgame(const std::string& source, const std::vector<std::string>& params) {
    const symgame::GeneratorSet set = resolve_generator_set(source);
    const symgame::CellPartition partition(set.shape, set.generators);
    const symgame::Game game = partition.instantiate(parse_params(params));
    std::cout << symgame::canonical_json_text(symgame::game_to_json(game)) << "\n";
    return 0;
}

int cmd_hasse(const std::string& source, bool json_out) {
    std::vector<symgame::GeneratorSet> sets;
    if (fs::is_directory(source)) {
        std::vector<fs::path> files;
        for (const fs::directory_entry& entry : fs::directory_iterator(source))
            if (entry.is_regular_file() && entry.path().extension() == ".gens")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        if (files.empty())
            throw symgame::ParseError("no .gens files in directory: " + source);
        for (const fs::path& file : files)
            sets.push_back(symgame::parse_generator_set(read_file(file.string()),
                                                        file.stem().string()));
    } else {
        const auto family = symgame::generator_family_from_string(source);
        sets = symgame::family_generator_sets(family);
    }

    std::vector<symgame::CellPartition> partitions;
    std::vector<std::string> names;
    for (const symgame::GeneratorSet& set : sets) {
        partitions.emplace_back(set.shape, set.generators);
        names.push_back(set.name);
    }
    const symgame::HasseDiagram diagram = symgame::hasse_diagram(partitions, names);

    if (json_out) {
        json nodes = json::array();
        for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
            json node;
            node["label"] = diagram.nodes[i].label;
            node["height"] = diagram.heights[i];
            nodes.push_back(std::move(node));
        }
        json edges = json::array();
        for (const auto& [lower, upper] : diagram.cover_edges)
            edges.push_back(json::array({lower, upper}));
        json doc;
        doc["nodes"] = std::move(nodes);
        doc["cover_edges"] = std::move(edges);
        doc["dot"] = diagram.to_dot();
        std::cout << symgame::canonical_json_text(doc) << "\n";
    } else {
        std::cout << diagram.to_dot();
    }
    std::cerr << "nodes: " << diagram.nodes.size() << ", edges: " << diagram.cover_edges.size()
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for finite normal-form games"};
    app.require_subcommand(1);

    std::string path1;
    std::string path2;
    std::string source;
    std::vector<std::string> params;
    bool json_classify = false;
    bool json_aut = false;
    bool json_iso = false;
    bool json_nash = false;
    bool json_matchings = false;
    bool json_hasse = false;

    CLI::App* classify =
        app.add_subcommand("classify", "classify a game document by its symmetry class");
    classify->add_option("path", path1, "game document (JSON)")->required();
    classify->add_flag("--json", json_classify, "machine-readable output");
    classify->add_flag("--text", "human-readable output (the default)");

    CLI::App* aut = app.add_subcommand("aut", "list the automorphism group of a game document");
    aut->add_option("path", path1, "game document (JSON)")->required();
    aut->add_flag("--json", json_aut, "machine-readable output");

    CLI::App* iso = app.add_subcommand(
        "iso", "test two game documents for isomorphism (exit 0 yes, 1 no)");
    iso->add_option("path1", path1, "first game document")->required();
    iso->add_option("path2", path2, "second game document")->required();
    iso->add_flag("--json", json_iso, "machine-readable output");

    CLI::App* nash = app.add_subcommand("nash", "list the pure Nash equilibria of a game document");
    nash->add_option("path", path1, "game document (JSON)")->required();
    nash->add_flag("--json", json_nash, "machine-readable output");

    CLI::App* matchings =
        app.add_subcommand("matchings", "list every matching of a game document's shape");
    matchings->add_option("path", path1, "game document (JSON)")->required();
    matchings->add_flag("--json", json_matchings, "machine-readable output");

    CLI::App* paramgame = app.add_subcommand(
        "paramgame", "instantiate a parameterised game from a generator set");
    paramgame
        ->add_option("source", source,
                     "generator-set file, family name, or family/set (e.g. two_player_2s/G_21)")
        ->required();
    paramgame->add_option("--params", params,
                          "comma-separated name=value assignments (values are exact rationals)");
    paramgame->add_flag("--json", "accepted for uniformity; the output is already JSON");

    CLI::App* hasse = app.add_subcommand(
        "hasse", "emit the Hasse diagram of a generator-set family as Graphviz DOT");
    hasse
        ->add_option("source", source,
                     "family name or a directory of .gens files (nodes named by file stem)")
        ->required();
    hasse->add_flag("--json", json_hasse, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(classify)) return cmd_classify(path1, json_classify);
        if (app.got_subcommand(aut)) return cmd_aut(path1, json_aut);
        if (app.got_subcommand(iso)) return cmd_iso(path1, path2, json_iso);
        if (app.got_subcommand(nash)) return cmd_nash(path1, json_nash);
        if (app.got_subcommand(matchings)) return cmd_matchings(path1, json_matchings);
        if (app.got_subcommand(paramgame)) return cmd_paramgame(source, params);
        if (app.got_subcommand(hasse)) return cmd_hasse(source, json_hasse);
    } catch (const symgame::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const symgame::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const symgame::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
