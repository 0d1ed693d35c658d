#pragma once

#include "symgame/game.hpp"
#include "symgame/perm.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symgame {

// A bijection between two game shapes: a player permutation pi together
// with one strategy bijection per source player, tau_i : A_i -> B_{pi(i)}.
// Acting on a profile, entry s_i lands at position pi(i) as tau_i(s_i).
class GameBijection {
public:
    GameBijection(GameShape source, GameShape target, Perm player_map,
                  std::vector<std::vector<int>> strategy_maps);
    static GameBijection identity(const GameShape& shape);

    const GameShape& source() const { return source_; }
    const GameShape& target() const { return target_; }
    const Perm& player_map() const { return player_map_; }
    int map_player(int i) const { return player_map_(i); }
    int map_strategy(int player, int strategy) const;
    const std::vector<std::vector<int>>& strategy_maps() const { return strategy_maps_; }

    Profile apply(const Profile& s) const;
    // Image of a (player, profile) pair under the simultaneous action.
    std::pair<int, Profile> apply_cell(int player, const Profile& s) const;

    GameBijection inverse() const;
    bool is_identity() const;

    // "(1 2); 1:{a->c,b->d}; 2:{c->a,d->b}" — player cycles first, then each
    // source player's strategy map in label-list order.
    std::string text() const;
    // Parses the same form against the given shapes.
    static GameBijection parse(std::string_view text, const GameShape& source,
                               const GameShape& target);

    friend bool operator==(const GameBijection&, const GameBijection&) = default;
    friend auto operator<=>(const GameBijection&, const GameBijection&) = default;

private:
    // Member order drives operator<=>: shapes first, then maps, so within a
    // fixed shape elements sort by (player image, strategy tables).
    GameShape source_;
    GameShape target_;
    Perm player_map_;
    std::vector<std::vector<int>> strategy_maps_;
};

// h after g; requires g's target shape to equal h's source shape.
GameBijection compose(const GameBijection& h, const GameBijection& g);

// u_i(s) = v_{g(i)}(g(s)) for every player and profile.
bool is_isomorphism(const GameBijection& g, const Game& source, const Game& target);

// Every shape bijection, ordered lexicographically by (player image,
// strategy tables). Intended for small shapes; the count is a product of
// factorials.
std::vector<GameBijection> all_shape_bijections(const GameShape& source, const GameShape& target);

// All isomorphisms from source to target in the same deterministic order,
// found by backtracking with payoff-multiset pruning. Honours the
// SYMGAME_THREADS cap for internal parallelism; output order is unaffected.
std::vector<GameBijection> isomorphisms_between(const Game& source, const Game& target);

// A group of shape self-bijections with deterministic element order.
class BijectionGroup {
public:
    static BijectionGroup closure(const GameShape& shape, std::vector<GameBijection> generators);
    // Wraps an already-closed element set (for example an automorphism
    // search result); generators are taken to be the elements themselves.
    static BijectionGroup from_elements(GameShape shape, std::vector<GameBijection> elements);

    const GameShape& shape() const { return shape_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<GameBijection>& elements() const { return elements_; }
    const std::vector<GameBijection>& generators() const { return generators_; }
    bool contains(const GameBijection& g) const;

    // The permutation group of player maps appearing in the elements.
    PermGroup player_image() const;
    // Elements whose player map is the identity.
    BijectionGroup player_stabiliser() const;
    bool is_player_transitive() const;

    // Every subgroup, found by breadth-first extension over the
    // multiplication table. Deterministic order (by size, then elements).
    // Throws PreconditionError above the given order bound.
    std::vector<std::vector<int>> subgroups(std::size_t order_bound = 512) const;
    BijectionGroup subgroup_from_indices(const std::vector<int>& indices) const;

    bool satisfies_group_axioms() const;

private:
    BijectionGroup(GameShape shape, std::vector<GameBijection> elements,
                   std::vector<GameBijection> generators);

    GameShape shape_;
    std::vector<GameBijection> elements_;
    std::vector<GameBijection> generators_;
};

// Aut(game): all isomorphisms of the game with itself.
BijectionGroup automorphism_group(const Game& game);

} // namespace symgame
