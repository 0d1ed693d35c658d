#pragma once

#include "symgame/bijection.hpp"
#include "symgame/game.hpp"
#include "symgame/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace symgame {

// A matching on a shape with a uniform strategy count m: a set of m
// profiles that uses every strategy of every player exactly once. Rows are
// kept sorted by player 1's strategy, which fixes the text form.
class Matching {
public:
    Matching(GameShape shape, std::vector<Profile> rows);

    const GameShape& shape() const { return shape_; }
    const std::vector<Profile>& rows() const { return rows_; }
    int size() const { return static_cast<int>(rows_.size()); }

    // The bijection A_i -> A_j that pairs strategies lying in a common row.
    std::vector<int> strategy_bijection(int player_i, int player_j) const;

    // The shape self-bijection with player map pi whose strategy maps are
    // the paired-row bijections tau_i = M_{i, pi(i)}.
    GameBijection induced_bijection(const Perm& pi) const;

    std::string text() const; // "{(a,d,f),(b,c,e)}"

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching&, const Matching&) = default;

private:
    GameShape shape_;
    std::vector<Profile> rows_;
};

// Validity test behind the Matching constructor: every strategy of every
// player appears in exactly one row.
bool is_matching(const GameShape& shape, const std::vector<Profile>& rows);

// Number of matchings on an n-player m-strategy shape: (m!)^(n-1).
Integer matching_count(int players, int strategies);

// Visit every matching in a deterministic order (lexicographic in the
// pairing bijections from player 1 to each later player). The visitor
// returns false to stop early.
void for_each_matching(const GameShape& shape, const std::function<bool(const Matching&)>& visit);

std::vector<Matching> enumerate_matchings(const GameShape& shape);

// Matchings all of whose rows give every player the same payoff. Any group
// of induced bijections inside Aut fixes its matching's rows, so only these
// can witness the matching-based symmetry classes.
std::vector<Matching> equal_payoff_matchings(const Game& game);

// Whenever an element keeps player i in place, its strategy map on player i
// is the identity; equivalently any two elements sending player i to the
// same player j agree on A_i, so the player-map fibres are single
// bijections.
bool is_strategy_trivial(const BijectionGroup& group);

// Rebuilds the matching from a player-transitive, strategy-trivial group:
// row(a) pairs strategy a of player 1 with its image under the unique
// fibre bijections onto every other player. Throws PreconditionError if
// either hypothesis fails, naming the one that does.
Matching matching_from_group(const BijectionGroup& group);

} // namespace symgame
