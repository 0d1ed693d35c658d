#include "symgame/param_games.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "symgame/error.hpp"

namespace symgame {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

// Union by least root, so every class's root is its first cell.
void unite(std::vector<int>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

} // namespace

std::string param_name(int k) {
    static const char* greek[] = {"α", "β", "γ", "δ", "ε", "ζ", "η", "θ",
                                  "ι", "κ", "λ", "μ", "ν", "ξ", "ο", "π",
                                  "ρ", "σ", "τ", "υ", "φ", "χ", "ψ", "ω"};
    constexpr int count = 24;
    std::string name = greek[k % count];
    if (k >= count) name += std::to_string(k / count + 1);
    return name;
}

CellPartition::CellPartition(GameShape shape, std::vector<GameBijection> generators)
    : shape_(std::move(shape)), generators_(std::move(generators)) {
    const int players = shape_.players();
    const int profiles = static_cast<int>(shape_.profile_count());
    for (const GameBijection& g : generators_)
        if (g.source() != shape_ || g.target() != shape_)
            throw ValidationError("cell-partition generators must be self-bijections of the shape");

    const int cells = players * profiles;
    std::vector<int> parent(static_cast<std::size_t>(cells));
    std::iota(parent.begin(), parent.end(), 0);

    // Orbits of the generated group are the connected components under the
    // generators alone, since each generator is invertible.
    for (const GameBijection& g : generators_) {
        for (int idx = 0; idx < profiles; ++idx) {
            const Profile s = shape_.profile_of_index(idx);
            const int image_idx = static_cast<int>(shape_.profile_index(g.apply(s)));
            for (int i = 0; i < players; ++i)
                unite(parent, i * profiles + idx, g.map_player(i) * profiles + image_idx);
        }
    }

    class_of_.assign(static_cast<std::size_t>(cells), -1);
    std::vector<int> root_class(static_cast<std::size_t>(cells), -1);
    for (int c = 0; c < cells; ++c) {
        const int r = find_root(parent, c);
        if (root_class[static_cast<std::size_t>(r)] < 0) {
            root_class[static_cast<std::size_t>(r)] = static_cast<int>(names_.size());
            names_.push_back(param_name(static_cast<int>(names_.size())));
        }
        class_of_[static_cast<std::size_t>(c)] = root_class[static_cast<std::size_t>(r)];
    }
}

int CellPartition::class_of(int player, int profile_index) const {
    const int profiles = static_cast<int>(shape_.profile_count());
    return class_of_[static_cast<std::size_t>(player * profiles + profile_index)];
}

const std::string& CellPartition::name_of(int player, int profile_index) const {
    return names_[static_cast<std::size_t>(class_of(player, profile_index))];
}

std::vector<std::vector<std::pair<int, int>>> CellPartition::classes() const {
    const int profiles = static_cast<int>(shape_.profile_count());
    std::vector<std::vector<std::pair<int, int>>> out(names_.size());
    for (std::size_t c = 0; c < class_of_.size(); ++c) {
        const int player = static_cast<int>(c) / profiles;
        const int idx = static_cast<int>(c) % profiles;
        out[static_cast<std::size_t>(class_of_[c])].emplace_back(player, idx);
    }
    return out;
}

Game CellPartition::instantiate(const std::map<std::string, Rational>& values) const {
    std::vector<std::string> missing;
    std::vector<std::string> unknown;
    for (const std::string& name : names_)
        if (!values.contains(name)) missing.push_back(name);
    for (const auto& [key, value] : values)
        if (std::find(names_.begin(), names_.end(), key) == names_.end()) unknown.push_back(key);
    if (!missing.empty() || !unknown.empty()) {
        std::string msg = "parameter assignment does not match the partition";
        if (!missing.empty()) msg += "; missing: " + join(missing, ", ");
        if (!unknown.empty()) msg += "; unknown: " + join(unknown, ", ");
        throw PreconditionError(msg);
    }

    std::vector<Rational> class_value(names_.size());
    for (std::size_t k = 0; k < names_.size(); ++k) class_value[k] = values.at(names_[k]);

    const int players = shape_.players();
    const int profiles = static_cast<int>(shape_.profile_count());
    std::vector<std::vector<Rational>> payoffs(
        static_cast<std::size_t>(profiles), std::vector<Rational>(static_cast<std::size_t>(players)));
    for (int idx = 0; idx < profiles; ++idx)
        for (int i = 0; i < players; ++i)
            payoffs[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)] =
                class_value[static_cast<std::size_t>(class_of(i, idx))];
    return Game(shape_, std::move(payoffs));
}

bool param_leq(const CellPartition& lower, const CellPartition& upper) {
    const GameShape& s1 = lower.shape();
    const GameShape& s2 = upper.shape();
    const bool compatible = s1.players() == s2.players() && s1.uniform_strategy_count() &&
                            s2.uniform_strategy_count() &&
                            s1.num_strategies(0) == s2.num_strategies(0);
    if (!compatible)
        throw PreconditionError(
            "the parameter order compares partitions with equal player and strategy counts");

    const int players = s1.players();
    const int profiles = static_cast<int>(s1.profile_count());
    for (const GameBijection& h : all_shape_bijections(s1, s2)) {
        std::vector<int> profile_image(static_cast<std::size_t>(profiles));
        for (int idx = 0; idx < profiles; ++idx)
            profile_image[static_cast<std::size_t>(idx)] =
                static_cast<int>(s2.profile_index(h.apply(s1.profile_of_index(idx))));

        std::vector<int> image_class(static_cast<std::size_t>(lower.class_count()), -1);
        bool ok = true;
        for (int i = 0; i < players && ok; ++i) {
            const int target_player = h.map_player(i);
            for (int idx = 0; idx < profiles && ok; ++idx) {
                const int c = lower.class_of(i, idx);
                const int d = upper.class_of(target_player, profile_image[static_cast<std::size_t>(idx)]);
                int& seen = image_class[static_cast<std::size_t>(c)];
                if (seen < 0)
                    seen = d;
                else if (seen != d)
                    ok = false;
            }
        }
        if (ok) return true;
    }
    return false;
}

namespace {

std::string escape_label(const std::string& raw) {
    std::string out;
    for (char ch : raw) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

} // namespace

std::string HasseDiagram::to_dot() const {
    std::string out = "digraph hasse {\n  rankdir=BT;\n  edge [dir=none];\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + escape_label(nodes[i].label) + "\"];\n";

    std::map<int, std::vector<std::size_t>> by_height;
    for (std::size_t i = 0; i < nodes.size(); ++i) by_height[heights[i]].push_back(i);
    for (const auto& [height, ids] : by_height) {
        out += "  { rank=same;";
        for (std::size_t id : ids) out += " n" + std::to_string(id) + ";";
        out += " }\n";
    }

    std::vector<std::pair<int, int>> edges = cover_edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [lower, upper] : edges)
        out += "  n" + std::to_string(lower) + " -> n" + std::to_string(upper) + ";\n";
    out += "}\n";
    return out;
}

HasseDiagram hasse_diagram(const std::vector<CellPartition>& partitions,
                           const std::vector<std::string>& names) {
    if (partitions.size() != names.size())
        throw PreconditionError("every partition in a diagram needs exactly one name");
    const int count = static_cast<int>(partitions.size());

    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(count),
                                       std::vector<bool>(static_cast<std::size_t>(count)));
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                param_leq(partitions[static_cast<std::size_t>(i)], partitions[static_cast<std::size_t>(j)]);

    HasseDiagram diagram;
    std::vector<int> node_of(static_cast<std::size_t>(count), -1);
    for (int i = 0; i < count; ++i) {
        if (node_of[static_cast<std::size_t>(i)] >= 0) continue;
        HasseNode node;
        const int id = static_cast<int>(diagram.nodes.size());
        std::vector<std::string> labels;
        for (int j = i; j < count; ++j)
            if (node_of[static_cast<std::size_t>(j)] < 0 && leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
                node_of[static_cast<std::size_t>(j)] = id;
                node.members.push_back(j);
                labels.push_back(names[static_cast<std::size_t>(j)]);
            }
        node.label = join(labels, "=");
        diagram.nodes.push_back(std::move(node));
    }

    const int n = static_cast<int>(diagram.nodes.size());
    auto node_leq = [&](int x, int y) {
        const int rx = diagram.nodes[static_cast<std::size_t>(x)].members.front();
        const int ry = diagram.nodes[static_cast<std::size_t>(y)].members.front();
        return static_cast<bool>(leq[static_cast<std::size_t>(rx)][static_cast<std::size_t>(ry)]);
    };

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !node_leq(x, y)) continue;
            bool covered = true;
            for (int z = 0; z < n && covered; ++z)
                if (z != x && z != y && node_leq(x, z) && node_leq(z, y)) covered = false;
            if (covered) diagram.cover_edges.emplace_back(x, y);
        }

    // Height = longest cover chain up to a maximal node; 0 is the top row.
    std::vector<std::vector<int>> above(static_cast<std::size_t>(n));
    for (const auto& [lower, upper] : diagram.cover_edges)
        above[static_cast<std::size_t>(lower)].push_back(upper);
    diagram.heights.assign(static_cast<std::size_t>(n), -1);
    auto height = [&](auto&& self, int x) -> int {
        int& memo = diagram.heights[static_cast<std::size_t>(x)];
        if (memo >= 0) return memo;
        int best = 0;
        for (int y : above[static_cast<std::size_t>(x)]) best = std::max(best, self(self, y) + 1);
        return memo = best;
    };
    for (int x = 0; x < n; ++x) height(height, x);
    return diagram;
}

namespace {

GameShape uniform_two_strategy_shape(int players) {
    const std::string letters = "abcdefghijkl";
    std::vector<std::vector<std::string>> labels;
    for (int i = 0; i < players; ++i)
        labels.push_back({std::string(1, letters[static_cast<std::size_t>(2 * i)]),
                          std::string(1, letters[static_cast<std::size_t>(2 * i + 1)])});
    return GameShape(std::move(labels));
}

GeneratorSet make_set(const GameShape& shape, std::string name,
                      const std::vector<const char*>& texts) {
    std::vector<GameBijection> gens;
    gens.reserve(texts.size());
    for (const char* text : texts) gens.push_back(GameBijection::parse(text, shape, shape));
    return GeneratorSet{std::move(name), shape, std::move(gens)};
}

// Two-player generator texts.
constexpr const char* k2_t11 = "(1 2); 1:{a->c,b->d}; 2:{c->a,d->b}";
constexpr const char* k2_t21 = "(1 2); 1:{a->d,b->c}; 2:{c->b,d->a}";
constexpr const char* k2_t22 = "(1 2); 1:{a->d,b->c}; 2:{c->a,d->b}";

// Three-player generator texts.
constexpr const char* k3_u11 = "(1 2 3); 1:{a->c,b->d}; 2:{c->e,d->f}; 3:{e->a,f->b}";
constexpr const char* k3_u21 = "(1 2); 1:{a->c,b->d}; 2:{c->a,d->b}; 3:{e->e,f->f}";
constexpr const char* k3_u22 = "(1 2); 1:{a->d,b->c}; 2:{c->b,d->a}; 3:{e->f,f->e}";
constexpr const char* k3_u23 = "(1 2 3); 1:{a->d,b->c}; 2:{c->f,d->e}; 3:{e->b,f->a}";
constexpr const char* k3_u31 = "(1 2 3); 1:{a->d,b->c}; 2:{c->f,d->e}; 3:{e->a,f->b}";

} // namespace

GeneratorFamily generator_family_from_string(std::string_view name) {
    for (GeneratorFamily family : all_generator_families())
        if (to_string(family) == name) return family;
    throw ParseError("unknown family: " + std::string(name));
}

std::string to_string(GeneratorFamily family) {
    switch (family) {
        case GeneratorFamily::two_player_2s: return "two_player_2s";
        case GeneratorFamily::three_player_2s: return "three_player_2s";
        case GeneratorFamily::example_5_5: return "example_5_5";
        case GeneratorFamily::example_5_9a: return "example_5_9a";
        case GeneratorFamily::example_5_9b: return "example_5_9b";
        case GeneratorFamily::example_5_10: return "example_5_10";
        case GeneratorFamily::example_5_11: return "example_5_11";
    }
    throw ValidationError("unhandled generator family");
}

std::vector<GeneratorFamily> all_generator_families() {
    return {GeneratorFamily::two_player_2s, GeneratorFamily::three_player_2s,
            GeneratorFamily::example_5_5,   GeneratorFamily::example_5_9a,
            GeneratorFamily::example_5_9b,  GeneratorFamily::example_5_10,
            GeneratorFamily::example_5_11};
}

std::vector<GeneratorSet> family_generator_sets(GeneratorFamily family) {
    switch (family) {
        case GeneratorFamily::two_player_2s: {
            const GameShape shape = uniform_two_strategy_shape(2);
            return {make_set(shape, "G_11", {k2_t11}),
                    make_set(shape, "G_21", {k2_t11, k2_t21}),
                    make_set(shape, "G_22", {k2_t22}),
                    make_set(shape, "G_31", {k2_t11, k2_t22})};
        }
        case GeneratorFamily::three_player_2s: {
            const GameShape shape = uniform_two_strategy_shape(3);
            // G_32 stands for the union of any two of G_21, G_22, G_23 (all
            // three choices are mutually equivalent in the parameter order);
            // the first union is the shipped representative.
            return {make_set(shape, "G_11", {k3_u11}),
                    make_set(shape, "G_21", {k3_u11, k3_u21}),
                    make_set(shape, "G_22", {k3_u11, k3_u22}),
                    make_set(shape, "G_23", {k3_u23}),
                    make_set(shape, "G_31", {k3_u11, k3_u21, k3_u31}),
                    make_set(shape, "G_32", {k3_u11, k3_u21, k3_u22}),
                    make_set(shape, "G_41", {k3_u11, k3_u21, k3_u31, k3_u22})};
        }
        case GeneratorFamily::example_5_5: {
            const GameShape shape = uniform_two_strategy_shape(3);
            return {make_set(shape, "G", {k3_u11, k3_u22})};
        }
        case GeneratorFamily::example_5_9a: {
            const GameShape shape = uniform_two_strategy_shape(4);
            return {make_set(shape, "G",
                             {"(1 2 3 4); 1:{a->d,b->c}; 2:{c->e,d->f}; 3:{e->g,f->h}; 4:{g->a,h->b}"})};
        }
        case GeneratorFamily::example_5_9b: {
            const GameShape shape = uniform_two_strategy_shape(4);
            return {make_set(
                shape, "G",
                {"(1 2)(3 4); 1:{a->d,b->c}; 2:{c->a,d->b}; 3:{e->h,f->g}; 4:{g->e,h->f}",
                 "(1 3)(2 4); 1:{a->f,b->e}; 2:{c->h,d->g}; 3:{e->a,f->b}; 4:{g->c,h->d}",
                 "(1 4)(2 3); 1:{a->h,b->g}; 2:{c->f,d->e}; 3:{e->c,f->d}; 4:{g->a,h->b}"})};
        }
        case GeneratorFamily::example_5_10: {
            const GameShape shape = uniform_two_strategy_shape(4);
            return {make_set(
                shape, "G",
                {"(1 2 3 4); 1:{a->c,b->d}; 2:{c->e,d->f}; 3:{e->h,f->g}; 4:{g->a,h->b}",
                 "(1 2); 1:{a->c,b->d}; 2:{c->a,d->b}; 3:{e->e,f->f}; 4:{g->h,h->g}"})};
        }
        case GeneratorFamily::example_5_11: {
            const GameShape shape = uniform_two_strategy_shape(6);
            return {make_set(
                shape, "G",
                {"(1 4)(2 5); 1:{a->h,b->g}; 2:{c->i,d->j}; 3:{e->f,f->e}; 4:{g->b,h->a}; "
                 "5:{i->c,j->d}; 6:{k->l,l->k}",
                 "(1 3 5)(2 4 6); 1:{a->e,b->f}; 2:{c->g,d->h}; 3:{e->i,f->j}; 4:{g->k,h->l}; "
                 "5:{i->a,j->b}; 6:{k->c,l->d}"})};
        }
    }
    throw ValidationError("unhandled generator family");
}

GeneratorSet family_generator_set(GeneratorFamily family, std::string_view set_name) {
    for (GeneratorSet& set : family_generator_sets(family))
        if (set.name == set_name) return std::move(set);
    throw ParseError("unknown generator set '" + std::string(set_name) + "' in family " +
                     to_string(family));
}

namespace {

std::string strip(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string(text.substr(begin, end - begin));
}

GameShape parse_shape_line(const std::string& line) {
    std::vector<std::vector<std::string>> labels;
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
            continue;
        }
        if (line[pos] != '{') throw ParseError("shape declaration expects label groups like {a,b}");
        const std::size_t close = line.find('}', pos);
        if (close == std::string::npos) throw ParseError("unterminated label group in shape declaration");
        std::vector<std::string> group;
        std::string current;
        for (std::size_t i = pos + 1; i < close; ++i) {
            if (line[i] == ',') {
                group.push_back(strip(current));
                current.clear();
            } else {
                current += line[i];
            }
        }
        group.push_back(strip(current));
        for (const std::string& label : group)
            if (label.empty()) throw ParseError("empty strategy label in shape declaration");
        labels.push_back(std::move(group));
        pos = close + 1;
    }
    if (labels.empty()) throw ParseError("shape declaration lists no label groups");
    return GameShape(std::move(labels));
}

} // namespace

GeneratorSet parse_generator_set(std::string_view text, std::string name) {
    std::optional<GameShape> shape;
    std::vector<GameBijection> generators;

    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t newline = text.find('\n', start);
        std::string_view raw =
            text.substr(start, newline == std::string_view::npos ? std::string_view::npos : newline - start);
        start = newline == std::string_view::npos ? text.size() + 1 : newline + 1;

        const std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string line = strip(raw);
        if (line.empty()) continue;

        if (!shape) {
            if (!line.starts_with("shape:"))
                throw ParseError("generator set must declare its shape first (\"shape: {a,b} {c,d}\")");
            shape = parse_shape_line(line.substr(6));
            continue;
        }
        generators.push_back(GameBijection::parse(line, *shape, *shape));
    }
    if (!shape) throw ParseError("generator set declares no shape");
    return GeneratorSet{std::move(name), *shape, std::move(generators)};
}

std::string generator_set_text(const GeneratorSet& set) {
    std::string out = "shape:";
    for (int i = 0; i < set.shape.players(); ++i) {
        out += " {";
        const std::vector<std::string>& labels = set.shape.labels(i);
        for (std::size_t s = 0; s < labels.size(); ++s) {
            if (s) out += ",";
            out += labels[s];
        }
        out += "}";
    }
    out += "\n";
    for (const GameBijection& g : set.generators) out += g.text() + "\n";
    return out;
}

} // namespace symgame
