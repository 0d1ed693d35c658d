#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symgame/bijection.hpp"
#include "symgame/error.hpp"
#include "symgame/game.hpp"
#include "symgame/param_games.hpp"
#include "symgame/perm.hpp"
#include "symgame/rational.hpp"
#include "test_support.hpp"

using symgame::CellPartition;
using symgame::Game;
using symgame::GameBijection;
using symgame::GameShape;
using symgame::GeneratorFamily;
using symgame::GeneratorSet;
using symgame::HasseDiagram;
using symgame::ParseError;
using symgame::Perm;
using symgame::PreconditionError;
using symgame::Rational;
using symgame::ValidationError;
using symgame::family_generator_set;
using symgame::family_generator_sets;
using symgame::hasse_diagram;
using symgame::param_leq;
using symgame::param_name;
using testsupport::Rng;

namespace {

// Renumbers arbitrary class ids into first-touch order, so tables written
// with any labelling compare against the canonical numbering.
std::vector<int> first_touch(const std::vector<int>& ids) {
    std::map<int, int> seen;
    std::vector<int> out;
    out.reserve(ids.size());
    for (int id : ids) {
        auto [it, fresh] = seen.emplace(id, static_cast<int>(seen.size()));
        (void)fresh;
        out.push_back(it->second);
    }
    return out;
}

// The partition's classes as a flat player-major vector (already canonical).
std::vector<int> partition_cells(const CellPartition& p) {
    std::vector<int> out;
    for (int player = 0; player < p.shape().players(); ++player) {
        for (std::int64_t s = 0; s < p.shape().profile_count(); ++s) {
            out.push_back(p.class_of(player, static_cast<int>(s)));
        }
    }
    return out;
}

// Expected tables are written per profile (rows) with one entry per player
// (columns); flatten them player-major to line up with partition_cells.
std::vector<int> table_cells(const std::vector<std::vector<int>>& table) {
    std::vector<int> out;
    const std::size_t players = table.front().size();
    for (std::size_t player = 0; player < players; ++player) {
        for (const auto& row : table) {
            REQUIRE(row.size() == players);
            out.push_back(row[player]);
        }
    }
    return first_touch(out);
}

void check_partition_table(const CellPartition& partition,
                           const std::vector<std::vector<int>>& table) {
    REQUIRE(static_cast<std::int64_t>(table.size()) == partition.shape().profile_count());
    CHECK(partition_cells(partition) == table_cells(table));
}

const CellPartition& family_partition(GeneratorFamily family, std::string_view set) {
    static std::map<std::string, CellPartition> cache;
    const std::string key = symgame::to_string(family) + "/" + std::string(set);
    auto it = cache.find(key);
    if (it == cache.end()) {
        const GeneratorSet gs = family_generator_set(family, set);
        it = cache.emplace(key, CellPartition(gs.shape, gs.generators)).first;
    }
    return it->second;
}

std::vector<std::string> two_player_names() { return {"G_11", "G_21", "G_22", "G_31"}; }
std::vector<std::string> three_player_names() {
    return {"G_11", "G_21", "G_22", "G_23", "G_31", "G_32", "G_41"};
}

std::vector<CellPartition> two_player_partitions() {
    std::vector<CellPartition> out;
    for (const auto& name : two_player_names()) {
        out.push_back(family_partition(GeneratorFamily::two_player_2s, name));
    }
    return out;
}

std::vector<CellPartition> three_player_partitions() {
    std::vector<CellPartition> out;
    for (const auto& name : three_player_names()) {
        out.push_back(family_partition(GeneratorFamily::three_player_2s, name));
    }
    return out;
}

// True when every class of `fine` lies inside a single class of `coarse`.
bool refines(const CellPartition& fine, const CellPartition& coarse) {
    if (fine.shape() != coarse.shape()) return false;
    for (const auto& cls : fine.classes()) {
        const int target = coarse.class_of(cls.front().first, cls.front().second);
        for (const auto& [player, profile] : cls) {
            if (coarse.class_of(player, profile) != target) return false;
        }
    }
    return true;
}

// Independent decision of the partial order straight from its definition:
// try every shape bijection, and accept one that sends each lower class
// into a single class of the instantiated upper game across many sampled
// assignments.
bool leq_by_instantiation(const CellPartition& lower, const CellPartition& upper, Rng& rng,
                          int samples = 200) {
    std::uniform_int_distribution<int> dist(0, 1000000);
    std::vector<Game> games;
    games.reserve(samples);
    for (int t = 0; t < samples; ++t) {
        std::map<std::string, Rational> values;
        for (const std::string& name : upper.names()) values[name] = Rational(dist(rng));
        games.push_back(upper.instantiate(values));
    }
    const auto classes = lower.classes();
    for (const GameBijection& h :
         symgame::all_shape_bijections(lower.shape(), upper.shape())) {
        bool works = true;
        for (const Game& instantiated : games) {
            for (const auto& cls : classes) {
                std::optional<Rational> first;
                for (const auto& [player, profile] : cls) {
                    const auto [tp, ts] = h.apply_cell(
                        player, lower.shape().profile_of_index(profile));
                    const Rational& value = instantiated.payoff(tp, ts);
                    if (!first) {
                        first = value;
                    } else if (*first != value) {
                        works = false;
                        break;
                    }
                }
                if (!works) break;
            }
            if (!works) break;
        }
        if (works) return true;
    }
    return false;
}

GameShape three_player_shape() {
    return GameShape({{"a", "b"}, {"c", "d"}, {"e", "f"}});
}

// All set partitions of {0, ..., n-1} as restricted growth strings.
std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> rgs(n, 0);
    while (true) {
        out.push_back(rgs);
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = 0;
            for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
            if (rgs[i] <= cap) break;
        }
        if (i == 0) break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return out;
}

} // namespace

TEST_CASE("parameter names walk the greek alphabet then numbered repeats") {
    const std::vector<std::string> head = {"α", "β", "γ", "δ", "ε", "ζ", "η", "θ"};
    for (int k = 0; k < 8; ++k) CHECK(param_name(k) == head[k]);
    CHECK(param_name(23) == "ω");
    CHECK(param_name(24) == "α2");
    CHECK(param_name(25) == "β2");
}

TEST_CASE("two-player generator sets induce the expected cell classes") {
    const std::map<std::string, std::vector<std::vector<int>>> tables = {
        {"G_11", {{1, 1}, {2, 3}, {3, 2}, {4, 4}}},
        {"G_21", {{1, 1}, {2, 2}, {2, 2}, {1, 1}}},
        {"G_22", {{1, 2}, {2, 1}, {2, 1}, {1, 2}}},
        {"G_31", {{1, 1}, {1, 1}, {1, 1}, {1, 1}}},
    };
    for (const auto& [name, table] : tables) {
        const CellPartition& p = family_partition(GeneratorFamily::two_player_2s, name);
        check_partition_table(p, table);
    }
    const CellPartition& g11 = family_partition(GeneratorFamily::two_player_2s, "G_11");
    CHECK(g11.class_count() == 4);
    CHECK(g11.name_of(0, 0) == "α");
    CHECK(g11.name_of(0, 1) == "β");
    CHECK(g11.name_of(1, 1) == "γ");
    CHECK(g11.name_of(0, 3) == "δ");
    CHECK(g11.name_of(1, 3) == "δ");
    CHECK(family_partition(GeneratorFamily::two_player_2s, "G_31").class_count() == 1);
}

TEST_CASE("three-player generator sets induce the expected cell classes") {
    const std::map<std::string, std::vector<std::vector<int>>> tables = {
        {"G_11",
         {{1, 1, 1}, {2, 3, 5}, {3, 5, 2}, {4, 7, 6}, {5, 2, 3}, {6, 4, 7}, {7, 6, 4}, {8, 8, 8}}},
        {"G_21",
         {{1, 1, 1}, {2, 2, 4}, {2, 4, 2}, {3, 5, 5}, {4, 2, 2}, {5, 3, 5}, {5, 5, 3}, {6, 6, 6}}},
        {"G_22",
         {{1, 1, 1}, {2, 3, 4}, {3, 4, 2}, {4, 3, 2}, {4, 2, 3}, {2, 4, 3}, {3, 2, 4}, {1, 1, 1}}},
        {"G_23",
         {{1, 1, 1}, {2, 3, 4}, {3, 4, 2}, {4, 2, 3}, {4, 2, 3}, {3, 4, 2}, {2, 3, 4}, {1, 1, 1}}},
        {"G_31",
         {{1, 1, 1}, {2, 2, 2}, {2, 2, 2}, {1, 1, 1}, {2, 2, 2}, {1, 1, 1}, {1, 1, 1}, {2, 2, 2}}},
        {"G_32",
         {{1, 1, 1}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}, {3, 2, 2}, {2, 3, 2}, {2, 2, 3}, {1, 1, 1}}},
        {"G_41",
         {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}}},
    };
    const std::map<std::string, int> class_counts = {
        {"G_11", 8}, {"G_21", 6}, {"G_22", 4}, {"G_23", 4},
        {"G_31", 2}, {"G_32", 3}, {"G_41", 1}};
    for (const auto& [name, table] : tables) {
        const CellPartition& p = family_partition(GeneratorFamily::three_player_2s, name);
        check_partition_table(p, table);
        CHECK(p.class_count() == class_counts.at(name));
    }
    // The four-class diagonal-action partition carries canonical names
    // straight down the alphabet.
    const CellPartition& g22 = family_partition(GeneratorFamily::three_player_2s, "G_22");
    CHECK(g22.name_of(0, 0) == "α");
    CHECK(g22.name_of(0, 1) == "β");
    CHECK(g22.name_of(1, 1) == "γ");
    CHECK(g22.name_of(2, 1) == "δ");
    CHECK(g22.name_of(0, 7) == "α");
}

TEST_CASE("the flagship three-player family equals the matching diagonal-action set") {
    const CellPartition& flagship = family_partition(GeneratorFamily::example_5_5, "G");
    const CellPartition& g22 = family_partition(GeneratorFamily::three_player_2s, "G_22");
    CHECK(flagship == g22);
    CHECK(flagship.names() == std::vector<std::string>{"α", "β", "γ", "δ"});
}

TEST_CASE("four-player single-cycle family: eight classes in a cyclic layout") {
    const CellPartition& p = family_partition(GeneratorFamily::example_5_9a, "G");
    CHECK(p.class_count() == 8);
    const std::vector<std::vector<int>> table = {
        {1, 2, 3, 4}, {5, 6, 7, 8}, {7, 8, 5, 6}, {8, 5, 6, 7},
        {4, 1, 2, 3}, {6, 7, 8, 5}, {3, 4, 1, 2}, {2, 3, 4, 1},
        {2, 3, 4, 1}, {3, 4, 1, 2}, {6, 7, 8, 5}, {4, 1, 2, 3},
        {8, 5, 6, 7}, {7, 8, 5, 6}, {5, 6, 7, 8}, {1, 2, 3, 4},
    };
    check_partition_table(p, table);
    REQUIRE(family_generator_sets(GeneratorFamily::example_5_9a).size() == 1);
    CHECK(family_generator_set(GeneratorFamily::example_5_9a, "G").generators.size() == 1);
}

TEST_CASE("four-player double-transposition family: four classes of sixteen cells") {
    const CellPartition& p = family_partition(GeneratorFamily::example_5_9b, "G");
    CHECK(p.class_count() == 4);
    const std::vector<std::vector<int>> table = {
        {1, 1, 2, 2}, {3, 4, 4, 3}, {4, 3, 3, 4}, {2, 2, 1, 1},
        {3, 4, 4, 3}, {1, 1, 2, 2}, {2, 2, 1, 1}, {4, 3, 3, 4},
        {4, 3, 3, 4}, {2, 2, 1, 1}, {1, 1, 2, 2}, {3, 4, 4, 3},
        {2, 2, 1, 1}, {4, 3, 3, 4}, {3, 4, 4, 3}, {1, 1, 2, 2},
    };
    check_partition_table(p, table);
    for (const auto& cls : p.classes()) CHECK(cls.size() == 16);
    CHECK(family_generator_set(GeneratorFamily::example_5_9b, "G").generators.size() == 3);
}

TEST_CASE("four-player two-generator family: one marked cell per profile") {
    const CellPartition& p = family_partition(GeneratorFamily::example_5_10, "G");
    CHECK(p.class_count() == 2);
    const std::vector<std::vector<int>> table = {
        {1, 2, 2, 2}, {2, 1, 2, 2}, {2, 2, 2, 1}, {2, 2, 2, 1},
        {2, 2, 1, 2}, {2, 1, 2, 2}, {2, 2, 1, 2}, {1, 2, 2, 2},
        {1, 2, 2, 2}, {2, 2, 1, 2}, {2, 1, 2, 2}, {2, 2, 1, 2},
        {2, 2, 2, 1}, {2, 2, 2, 1}, {2, 1, 2, 2}, {1, 2, 2, 2},
    };
    check_partition_table(p, table);
    CHECK(p.names() == std::vector<std::string>{"α", "β"});
    for (std::int64_t s = 0; s < 16; ++s) {
        int marked = 0;
        for (int player = 0; player < 4; ++player) {
            if (p.class_of(player, static_cast<int>(s)) == 0) ++marked;
        }
        CHECK(marked == 1);
    }
    CHECK(family_generator_set(GeneratorFamily::example_5_10, "G").generators.size() == 2);
}

TEST_CASE("six-player family: thirty-two classes of twelve cells") {
    const GeneratorSet gs = family_generator_set(GeneratorFamily::example_5_11, "G");
    REQUIRE(gs.generators.size() == 2);
    std::set<Perm> player_parts;
    for (const auto& g : gs.generators) player_parts.insert(g.player_map());
    const std::set<Perm> expected = {Perm::from_cycles("(1 4)(2 5)", 6),
                                     Perm::from_cycles("(1 3 5)(2 4 6)", 6)};
    CHECK(player_parts == expected);

    const CellPartition& p = family_partition(GeneratorFamily::example_5_11, "G");
    CHECK(p.class_count() == 32);
    const std::vector<std::vector<int>> table = {
        {1, 2, 1, 2, 1, 2},       {3, 4, 5, 6, 7, 8},       {9, 10, 11, 12, 13, 14},
        {15, 16, 17, 18, 19, 20}, {5, 6, 7, 8, 3, 4},       {20, 15, 19, 17, 18, 16},
        {21, 22, 23, 24, 25, 26}, {27, 27, 28, 28, 28, 27}, {11, 12, 13, 14, 9, 10},
        {29, 29, 30, 30, 30, 29}, {26, 24, 22, 23, 21, 25}, {4, 8, 6, 7, 5, 3},
        {17, 18, 19, 20, 15, 16}, {8, 3, 7, 5, 6, 4},       {31, 32, 32, 32, 31, 31},
        {16, 20, 18, 19, 17, 15}, {7, 8, 3, 4, 5, 6},       {18, 16, 20, 15, 19, 17},
        {30, 29, 29, 29, 30, 30}, {6, 4, 8, 3, 7, 5},       {19, 17, 18, 16, 20, 15},
        {32, 31, 32, 31, 32, 31}, {13, 11, 12, 10, 14, 9},  {22, 26, 24, 25, 23, 21},
        {23, 24, 25, 26, 21, 22}, {12, 10, 14, 9, 13, 11},  {14, 12, 10, 11, 9, 13},
        {2, 2, 2, 1, 1, 1},       {28, 28, 28, 27, 27, 27}, {24, 25, 23, 21, 22, 26},
        {25, 23, 24, 22, 26, 21}, {10, 14, 12, 13, 11, 9},  {13, 14, 9, 10, 11, 12},
        {25, 26, 21, 22, 23, 24}, {21, 25, 26, 24, 22, 23}, {31, 31, 31, 32, 32, 32},
        {30, 30, 30, 29, 29, 29}, {14, 9, 13, 11, 12, 10},  {9, 13, 14, 12, 10, 11},
        {26, 21, 25, 23, 24, 22}, {22, 23, 21, 25, 26, 24}, {10, 11, 9, 13, 14, 12},
        {27, 28, 27, 28, 27, 28}, {16, 17, 15, 19, 20, 18}, {6, 7, 5, 3, 4, 8},
        {2, 1, 1, 1, 2, 2},       {15, 19, 20, 18, 16, 17}, {4, 5, 3, 7, 8, 6},
        {19, 20, 15, 16, 17, 18}, {28, 27, 27, 27, 28, 28}, {5, 3, 4, 8, 6, 7},
        {17, 15, 16, 20, 18, 19}, {7, 5, 6, 4, 8, 3},       {23, 21, 22, 26, 24, 25},
        {1, 1, 2, 2, 2, 1},       {11, 9, 10, 14, 12, 13},  {32, 32, 31, 31, 31, 32},
        {24, 22, 26, 21, 25, 23}, {20, 18, 16, 17, 15, 19}, {8, 6, 4, 5, 3, 7},
        {18, 19, 17, 15, 16, 20}, {12, 13, 11, 9, 10, 14},  {3, 7, 8, 6, 4, 5},
        {29, 30, 29, 30, 29, 30},
    };
    // Self-check of the table before using it: 64 profiles of 6 entries,
    // every class holding exactly twelve cells.
    REQUIRE(table.size() == 64);
    std::map<int, int> tally;
    for (const auto& row : table) {
        REQUIRE(row.size() == 6);
        for (int v : row) ++tally[v];
    }
    REQUIRE(tally.size() == 32);
    for (const auto& [value, count] : tally) {
        (void)value;
        REQUIRE(count == 12);
    }
    check_partition_table(p, table);
    for (const auto& cls : p.classes()) CHECK(cls.size() == 12);
}

TEST_CASE("two rotations over distinct strategy maps fuse all cells into one class") {
    const GameShape shape = three_player_shape();
    const std::vector<GameBijection> gens = {
        GameBijection::parse("(1 2 3); 1:{a->d,b->c}; 2:{c->e,d->f}; 3:{e->a,f->b}", shape,
                             shape),
        GameBijection::parse("(1 2 3); 1:{a->c,b->d}; 2:{c->f,d->e}; 3:{e->a,f->b}", shape,
                             shape),
    };
    const CellPartition p(shape, gens);
    CHECK(p.class_count() == 1);
    CHECK(p.names() == std::vector<std::string>{"α"});
    const Game zero = p.instantiate({{"α", Rational(0)}});
    for (std::int64_t s = 0; s < zero.profile_count(); ++s) {
        for (const Rational& v : zero.payoff_vector(s)) CHECK(v == Rational(0));
    }
}

TEST_CASE("no generators leave every cell in its own class") {
    const GameShape shape({{"a", "b"}, {"c", "d"}});
    const CellPartition p(shape, {});
    CHECK(p.class_count() == p.cell_count());
    CHECK(p.cell_count() == 8);
    std::set<std::string> names(p.names().begin(), p.names().end());
    CHECK(names.size() == 8);
}

TEST_CASE("generators must be self-bijections of the declared shape") {
    const GameShape shape({{"a", "b"}, {"c", "d"}});
    const GameShape other({{"x", "y"}, {"z", "w"}});
    const GameBijection cross =
        GameBijection::parse("(); 1:{a->x,b->y}; 2:{c->z,d->w}", shape, other);
    CHECK_THROWS_AS(CellPartition(shape, {cross}), ValidationError);
}

TEST_CASE("instantiation fills each class with its assigned value") {
    const CellPartition& g11 = family_partition(GeneratorFamily::two_player_2s, "G_11");
    const Game game = g11.instantiate({{"α", Rational(1)},
                                       {"β", Rational(2)},
                                       {"γ", Rational(3)},
                                       {"δ", Rational(4)}});
    const std::vector<std::vector<Rational>> expected = {
        {Rational(1), Rational(1)},
        {Rational(2), Rational(3)},
        {Rational(3), Rational(2)},
        {Rational(4), Rational(4)},
    };
    for (std::int64_t s = 0; s < 4; ++s) CHECK(game.payoff_vector(s) == expected[s]);

    const CellPartition& g41 = family_partition(GeneratorFamily::three_player_2s, "G_41");
    const Game constant = g41.instantiate({{"α", Rational(5)}});
    for (std::int64_t s = 0; s < constant.profile_count(); ++s) {
        for (const Rational& v : constant.payoff_vector(s)) CHECK(v == Rational(5));
    }
}

TEST_CASE("instantiation reports missing and unknown parameters") {
    const CellPartition& g11 = family_partition(GeneratorFamily::two_player_2s, "G_11");
    CHECK_THROWS_WITH_AS(g11.instantiate({{"α", Rational(1)}}),
                         doctest::Contains("missing: β, γ, δ"), PreconditionError);
    CHECK_THROWS_WITH_AS(g11.instantiate({{"α", Rational(1)},
                                          {"β", Rational(2)},
                                          {"γ", Rational(3)},
                                          {"δ", Rational(4)},
                                          {"x", Rational(9)}}),
                         doctest::Contains("unknown: x"), PreconditionError);
}

TEST_CASE("every generator is an automorphism of every instantiation") {
    Rng rng(424242);
    std::uniform_int_distribution<int> dist(-50, 50);
    for (GeneratorFamily family : symgame::all_generator_families()) {
        for (const GeneratorSet& gs : family_generator_sets(family)) {
            const CellPartition p(gs.shape, gs.generators);
            for (int trial = 0; trial < 3; ++trial) {
                std::map<std::string, Rational> values;
                for (const std::string& name : p.names()) {
                    values[name] = Rational(dist(rng), 1 + (trial % 3));
                }
                const Game game = p.instantiate(values);
                for (const GameBijection& g : gs.generators) {
                    CHECK(symgame::is_isomorphism(g, game, game));
                }
            }
        }
    }
}

TEST_CASE("the partial order matches the expected two-player ordering") {
    const auto parts = two_player_partitions(); // G_11, G_21, G_22, G_31
    const auto leq = [&](int lo, int hi) { return param_leq(parts[lo], parts[hi]); };
    for (int i = 0; i < 4; ++i) CHECK(leq(i, i));

    CHECK(leq(0, 1));  // G_11 <= G_21
    CHECK(leq(0, 3));  // G_11 <= G_31 (via G_21)
    CHECK(leq(1, 3));  // G_21 <= G_31
    CHECK(leq(2, 3));  // G_22 <= G_31

    CHECK_FALSE(leq(1, 0));
    CHECK_FALSE(leq(3, 0));
    CHECK_FALSE(leq(1, 2));  // G_21 and G_22 are incomparable
    CHECK_FALSE(leq(2, 1));
    CHECK_FALSE(leq(0, 2));  // G_11 is not below G_22
    CHECK_FALSE(leq(2, 0));
}

TEST_CASE("the partial order is transitive and antisymmetric on the three-player family") {
    const auto parts = three_player_partitions();
    const int n = static_cast<int>(parts.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) leq[i][j] = param_leq(parts[i], parts[j]);
    }
    for (int i = 0; i < n; ++i) {
        CHECK(leq[i][i]);
        for (int j = 0; j < n; ++j) {
            if (i != j) CHECK_FALSE((leq[i][j] && leq[j][i])); // all seven are distinct
            for (int k = 0; k < n; ++k) {
                if (leq[i][j] && leq[j][k]) CHECK(leq[i][k]);
            }
        }
    }
    // Refinement by the identity is one sufficient reason for the order.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (refines(parts[i], parts[j])) CHECK(leq[i][j]);
        }
    }
}

TEST_CASE("the partial order rejects mismatched player or strategy counts") {
    const CellPartition& two = family_partition(GeneratorFamily::two_player_2s, "G_11");
    const CellPartition& three = family_partition(GeneratorFamily::three_player_2s, "G_11");
    CHECK_THROWS_AS(param_leq(two, three), PreconditionError);
}

TEST_CASE("the generic-value criterion agrees with instantiation-based comparison") {
    Rng rng(20250819);
    const auto parts = two_player_partitions();
    for (const auto& lower : parts) {
        for (const auto& upper : parts) {
            CHECK(param_leq(lower, upper) == leq_by_instantiation(lower, upper, rng));
        }
    }
}

TEST_CASE("the two-player diagram has four nodes and three cover edges") {
    const HasseDiagram diagram = hasse_diagram(two_player_partitions(), two_player_names());
    REQUIRE(diagram.nodes.size() == 4);
    std::map<std::string, int> index;
    for (int i = 0; i < 4; ++i) index[diagram.nodes[i].label] = i;
    REQUIRE(index.count("G_11") == 1);
    REQUIRE(index.count("G_21") == 1);
    REQUIRE(index.count("G_22") == 1);
    REQUIRE(index.count("G_31") == 1);

    std::set<std::pair<int, int>> edges(diagram.cover_edges.begin(),
                                        diagram.cover_edges.end());
    const std::set<std::pair<int, int>> expected = {
        {index["G_11"], index["G_21"]},
        {index["G_21"], index["G_31"]},
        {index["G_22"], index["G_31"]},
    };
    CHECK(edges == expected);

    CHECK(diagram.heights[index["G_31"]] == 0);
    CHECK(diagram.heights[index["G_21"]] == 1);
    CHECK(diagram.heights[index["G_22"]] == 1);
    CHECK(diagram.heights[index["G_11"]] == 2);

    const std::string dot = diagram.to_dot();
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    for (const auto& name : two_player_names()) {
        CHECK(dot.find(name) != std::string::npos);
    }
}

TEST_CASE("the three-player diagram has seven nodes and nine cover edges") {
    const HasseDiagram diagram =
        hasse_diagram(three_player_partitions(), three_player_names());
    REQUIRE(diagram.nodes.size() == 7);
    std::map<std::string, int> index;
    for (int i = 0; i < 7; ++i) index[diagram.nodes[i].label] = i;
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& [lo, hi] : diagram.cover_edges) {
        edges.emplace(diagram.nodes[lo].label, diagram.nodes[hi].label);
    }
    const std::set<std::pair<std::string, std::string>> expected = {
        {"G_11", "G_21"}, {"G_11", "G_22"}, {"G_11", "G_23"},
        {"G_21", "G_31"}, {"G_21", "G_32"}, {"G_22", "G_32"},
        {"G_23", "G_32"}, {"G_31", "G_41"}, {"G_32", "G_41"},
    };
    CHECK(edges == expected);
    CHECK(diagram.heights[index["G_41"]] == 0);
    CHECK(diagram.heights[index["G_11"]] == 3);
}

TEST_CASE("a single partition forms a one-node diagram") {
    const HasseDiagram diagram = hasse_diagram(
        {family_partition(GeneratorFamily::example_5_5, "G")}, {"G"});
    REQUIRE(diagram.nodes.size() == 1);
    CHECK(diagram.nodes[0].label == "G");
    CHECK(diagram.cover_edges.empty());
    CHECK(diagram.heights == std::vector<int>{0});
}

TEST_CASE("equivalent inputs merge into one labelled node") {
    const GameShape shape = three_player_shape();
    const auto parse_all = [&](const std::vector<std::string>& texts) {
        std::vector<GameBijection> out;
        for (const auto& t : texts) out.push_back(GameBijection::parse(t, shape, shape));
        return out;
    };
    const std::string u11 = "(1 2 3); 1:{a->c,b->d}; 2:{c->e,d->f}; 3:{e->a,f->b}";
    const std::string u21 = "(1 2); 1:{a->c,b->d}; 2:{c->a,d->b}; 3:{e->e,f->f}";
    const std::string u22 = "(1 2); 1:{a->d,b->c}; 2:{c->b,d->a}; 3:{e->f,f->e}";
    const std::string u23 = "(1 2 3); 1:{a->d,b->c}; 2:{c->f,d->e}; 3:{e->b,f->a}";
    const CellPartition a(shape, parse_all({u11, u21, u22}));
    const CellPartition b(shape, parse_all({u11, u21, u23}));
    const CellPartition c(shape, parse_all({u11, u22, u23}));

    CHECK(param_leq(a, b));
    CHECK(param_leq(b, a));
    CHECK(param_leq(b, c));
    CHECK(param_leq(c, b));

    const HasseDiagram diagram = hasse_diagram({a, b, c}, {"G_32a", "G_32b", "G_32c"});
    REQUIRE(diagram.nodes.size() == 1);
    CHECK(diagram.nodes[0].label == "G_32a=G_32b=G_32c");
    CHECK(diagram.nodes[0].members == std::vector<int>{0, 1, 2});
    CHECK(diagram.cover_edges.empty());

    // They are also the family's coarse three-class partition.
    CHECK(param_leq(a, family_partition(GeneratorFamily::three_player_2s, "G_32")));
    CHECK(param_leq(family_partition(GeneratorFamily::three_player_2s, "G_32"), a));
}

TEST_CASE("family catalogue: names, shapes, and set listings") {
    const auto families = symgame::all_generator_families();
    CHECK(families.size() == 7);

    const auto two = family_generator_sets(GeneratorFamily::two_player_2s);
    REQUIRE(two.size() == 4);
    std::vector<std::string> two_names;
    for (const auto& gs : two) two_names.push_back(gs.name);
    CHECK(two_names == two_player_names());
    for (const auto& gs : two) CHECK(gs.shape == GameShape({{"a", "b"}, {"c", "d"}}));

    const auto three = family_generator_sets(GeneratorFamily::three_player_2s);
    REQUIRE(three.size() == 7);
    std::vector<std::string> three_names;
    for (const auto& gs : three) three_names.push_back(gs.name);
    CHECK(three_names == three_player_names());

    for (GeneratorFamily single :
         {GeneratorFamily::example_5_5, GeneratorFamily::example_5_9a,
          GeneratorFamily::example_5_9b, GeneratorFamily::example_5_10,
          GeneratorFamily::example_5_11}) {
        const auto sets = family_generator_sets(single);
        REQUIRE(sets.size() == 1);
        CHECK(sets[0].name == "G");
    }

    CHECK(symgame::generator_family_from_string("two_player_2s") ==
          GeneratorFamily::two_player_2s);
    CHECK(symgame::to_string(GeneratorFamily::example_5_10) == "example_5_10");
    CHECK_THROWS_AS(symgame::generator_family_from_string("no_such_family"), ParseError);
    CHECK_THROWS_AS(family_generator_set(GeneratorFamily::two_player_2s, "G_99"),
                    ParseError);
}

TEST_CASE("generator-set text round trips through the parser") {
    for (GeneratorFamily family : symgame::all_generator_families()) {
        for (const GeneratorSet& gs : family_generator_sets(family)) {
            const std::string text = symgame::generator_set_text(gs);
            const GeneratorSet back = symgame::parse_generator_set(text, gs.name);
            CHECK(back.name == gs.name);
            CHECK(back.shape == gs.shape);
            REQUIRE(back.generators.size() == gs.generators.size());
            for (std::size_t i = 0; i < gs.generators.size(); ++i) {
                CHECK(back.generators[i] == gs.generators[i]);
            }
        }
    }

    const GeneratorSet parsed = symgame::parse_generator_set(
        "# a comment line\n"
        "\n"
        "shape: {a,b} {c,d}\n"
        "(1 2); 1:{a->c,b->d}; 2:{c->a,d->b}\n",
        "demo");
    CHECK(parsed.shape == GameShape({{"a", "b"}, {"c", "d"}}));
    REQUIRE(parsed.generators.size() == 1);
    CHECK(parsed.generators[0].text() == "(1 2); 1:{a->c,b->d}; 2:{c->a,d->b}");

    CHECK_THROWS_AS(
        symgame::parse_generator_set("(1 2); 1:{a->c,b->d}; 2:{c->a,d->b}\n", "bad"),
        ParseError);
    CHECK_THROWS_AS(symgame::parse_generator_set("shape: {a,b} {c,d}\nnonsense\n", "bad"),
                    ParseError);
}

TEST_CASE("every instantiation of the flagship family has a pure equilibrium") {
    const CellPartition& p = family_partition(GeneratorFamily::example_5_5, "G");
    REQUIRE(p.names() == std::vector<std::string>{"α", "β", "γ", "δ"});

    Rng rng(5150);
    std::uniform_int_distribution<long long> num(-30, 30);
    std::uniform_int_distribution<long long> den(1, 12);
    for (int trial = 0; trial < 500; ++trial) {
        std::map<std::string, Rational> values;
        for (const std::string& name : p.names()) {
            values[name] = Rational(num(rng), den(rng));
        }
        const Game game = p.instantiate(values);
        CHECK(!game.pure_nash_equilibria().empty());
    }

    // Every tie pattern over the four parameters, with distinct values per
    // block so the ties are exactly the pattern.
    const auto patterns = set_partitions(4);
    REQUIRE(patterns.size() == 15);
    for (const auto& blocks : patterns) {
        std::map<std::string, Rational> values;
        for (int k = 0; k < 4; ++k) values[param_name(k)] = Rational(blocks[k]);
        const Game game = p.instantiate(values);
        CHECK(!game.pure_nash_equilibria().empty());
    }
}
