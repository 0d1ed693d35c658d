#pragma once

// Parameterised games: a set of shape self-bijections partitions the cells
// (player, profile) into orbit classes; assigning one value per class yields
// a game for which every generator is an automorphism. Partitions over a
// common player/strategy count are partially ordered, and families of them
// form Hasse diagrams.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symgame/bijection.hpp"
#include "symgame/game.hpp"
#include "symgame/rational.hpp"

namespace symgame {

// Canonical parameter name for class index k: the Greek alphabet, then
// numbered repeats (α, β, ..., ω, α2, β2, ...).
std::string param_name(int k);

// The orbit partition of a shape's cells under a set of self-bijections,
// acting by (i, s) -> (g(i), g(s)). Cells are ordered player-major (all of
// player 1's profiles by index, then player 2's, ...), classes are numbered
// by first touch in that order, and class k is named param_name(k); two
// structurally equal partitions therefore carry identical names.
class CellPartition {
public:
    CellPartition(GameShape shape, std::vector<GameBijection> generators);

    const GameShape& shape() const { return shape_; }
    const std::vector<GameBijection>& generators() const { return generators_; }

    int cell_count() const { return static_cast<int>(class_of_.size()); }
    int class_count() const { return static_cast<int>(names_.size()); }
    int class_of(int player, int profile_index) const;
    const std::string& name_of(int player, int profile_index) const;
    const std::vector<std::string>& names() const { return names_; }

    // Cells of each class, as (player, profile-index) pairs in cell order.
    std::vector<std::vector<std::pair<int, int>>> classes() const;

    // The game whose cell (i, s) carries the value assigned to the cell's
    // class. Throws PreconditionError naming any missing or unknown
    // parameters.
    Game instantiate(const std::map<std::string, Rational>& values) const;

    // Structural comparison: same shape and same cell classes (names are
    // canonical, so they agree automatically).
    friend bool operator==(const CellPartition&, const CellPartition&) = default;

private:
    GameShape shape_;
    std::vector<GameBijection> generators_;
    std::vector<int> class_of_; // cell id = player * profile_count + profile index
    std::vector<std::string> names_;
};

// Partial order on parameterised games over a common player and strategy
// count: lower <= upper when for every assignment of values to upper there
// is an assignment to lower making the two games isomorphic. Decided by the
// generic-value criterion — some shape bijection h maps every lower-class
// into a single upper-class:
//   - If such an h exists, pull any assignment of upper back along h (give
//     each lower class the value of the upper class its h-image lies in);
//     h is then an isomorphism between the instantiations, so every
//     assignment of upper is matched.
//   - Conversely, instantiate upper with pairwise-distinct values. Any
//     isomorphism g from a matching instantiation of lower carries a lower
//     class (constant value) onto cells of equal value, which by
//     distinctness lie in one upper class; so g is such an h. Assignments
//     with collisions only merge upper classes, making them easier to
//     match, so the generic case decides the universal quantifier.
// Throws PreconditionError unless both shapes are uniform with the same
// player and strategy counts.
bool param_leq(const CellPartition& lower, const CellPartition& upper);

struct HasseNode {
    std::string label;        // input names joined with "=" when equivalent
    std::vector<int> members; // indices into the input list
};

struct HasseDiagram {
    std::vector<HasseNode> nodes;
    // (lower, upper) node indices; upper covers lower.
    std::vector<std::pair<int, int>> cover_edges;
    // Per node: length of the longest cover chain up to a maximal node, so
    // 0 marks the top row and larger values sit further down.
    std::vector<int> heights;

    // Graphviz source: bottom-to-top layout, undirected-styled cover edges,
    // one rank per height, nodes and edges emitted in sorted order.
    std::string to_dot() const;
};

// Deduplicates mutually-comparable inputs into single nodes (labelled by
// their names joined in input order) and keeps only cover edges.
HasseDiagram hasse_diagram(const std::vector<CellPartition>& partitions,
                           const std::vector<std::string>& names);

// Built-in generator-set families from the worked examples.
enum class GeneratorFamily {
    two_player_2s,   // G_11, G_21, G_22, G_31 on {a,b} x {c,d}
    three_player_2s, // G_11, G_21, G_22, G_23, G_31, G_32, G_41 on {a,b} x {c,d} x {e,f}
    example_5_5,     // the 3-player set equal to three_player_2s/G_22
    example_5_9a,    // one 4-cycle generator on four players
    example_5_9b,    // three double-transposition generators on four players
    example_5_10,    // 4-cycle plus transposition on four players
    example_5_11,    // six players, player image of order 12
};

GeneratorFamily generator_family_from_string(std::string_view name); // ParseError on unknown
std::string to_string(GeneratorFamily family);
std::vector<GeneratorFamily> all_generator_families();

struct GeneratorSet {
    std::string name;
    GameShape shape;
    std::vector<GameBijection> generators;
};

// The family's generator sets in display order (single-set families expose
// one set named "G").
std::vector<GeneratorSet> family_generator_sets(GeneratorFamily family);

// Convenience lookup; throws ParseError when the set name is absent.
GeneratorSet family_generator_set(GeneratorFamily family, std::string_view set_name);

// Textual generator-set format: '#' starts a comment, blank lines are
// skipped, the first content line declares the shape as label groups
// ("shape: {a,b} {c,d}"), and each further line is one bijection in text
// form over that shape. Throws ParseError on malformed input.
GeneratorSet parse_generator_set(std::string_view text, std::string name);
std::string generator_set_text(const GeneratorSet& set);

} // namespace symgame
