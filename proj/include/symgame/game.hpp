#pragma once

#include "symgame/perm.hpp"
#include "symgame/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symgame {

// A pure strategy profile: one strategy index per player.
using Profile = std::vector<int>;

// Player strategy sets, identified by ordered label lists. Players are
// indexed 0..n-1 internally; all text forms are 1-based.
class GameShape {
public:
    explicit GameShape(std::vector<std::vector<std::string>> strategy_labels);

    int players() const { return static_cast<int>(labels_.size()); }
    int num_strategies(int player) const;
    const std::vector<std::string>& labels(int player) const;
    const std::string& label(int player, int strategy) const;
    // Index of `label` in player's list; throws ValidationError if absent.
    int label_index(int player, std::string_view label) const;

    std::int64_t profile_count() const;
    // True when every player has the same number of strategies.
    bool uniform_strategy_count() const;
    // True when every player has the identical ordered label list.
    bool shared_labels() const;

    // Mixed-radix profile index with player 1 most significant.
    std::int64_t profile_index(const Profile& p) const;
    Profile profile_of_index(std::int64_t index) const;

    std::string profile_text(const Profile& p) const; // "(a,b,a)"
    Profile profile_from_labels(const std::vector<std::string>& labels) const;

    friend bool operator==(const GameShape&, const GameShape&) = default;
    friend auto operator<=>(const GameShape&, const GameShape&) = default;

private:
    std::vector<std::vector<std::string>> labels_;
};

// A finite normal-form game: a shape plus one exact payoff per
// (profile, player) pair.
class Game {
public:
    // payoffs[profile_index][player]; dimensions must match the shape.
    Game(GameShape shape, std::vector<std::vector<Rational>> payoffs);

    const GameShape& shape() const { return shape_; }
    int players() const { return shape_.players(); }
    std::int64_t profile_count() const { return shape_.profile_count(); }

    std::int64_t profile_index(const Profile& p) const { return shape_.profile_index(p); }
    Profile profile_of_index(std::int64_t index) const { return shape_.profile_of_index(index); }

    const Rational& payoff(int player, const Profile& p) const;
    const Rational& payoff_by_index(int player, std::int64_t profile_idx) const;
    // Payoff vector (u_1(s), ..., u_n(s)).
    const std::vector<Rational>& payoff_vector(std::int64_t profile_idx) const;

    // All pure Nash equilibria, ordered by profile index. Computed from
    // per-player best-response values memoised over opponent slices.
    std::vector<Profile> pure_nash_equilibria() const;

    friend bool operator==(const Game&, const Game&) = default;

private:
    GameShape shape_;
    std::vector<std::vector<Rational>> payoffs_;
};

} // namespace symgame
