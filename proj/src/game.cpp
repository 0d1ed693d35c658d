#include "symgame/game.hpp"

#include "symgame/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symgame {

GameShape::GameShape(std::vector<std::vector<std::string>> strategy_labels)
    : labels_(std::move(strategy_labels)) {
    if (labels_.size() < 2)
        throw ValidationError("a game needs at least two players");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty())
            throw ValidationError("player " + std::to_string(i + 1) + " has no strategies");
        std::set<std::string> distinct(labels_[i].begin(), labels_[i].end());
        if (distinct.size() != labels_[i].size())
            throw ValidationError("player " + std::to_string(i + 1) + " has duplicate strategy labels");
    }
}

int GameShape::num_strategies(int player) const {
    if (player < 0 || player >= players())
        throw ValidationError("player index out of range");
    return static_cast<int>(labels_[player].size());
}

const std::vector<std::string>& GameShape::labels(int player) const {
    if (player < 0 || player >= players())
        throw ValidationError("player index out of range");
    return labels_[player];
}

const std::string& GameShape::label(int player, int strategy) const {
    const auto& list = labels(player);
    if (strategy < 0 || strategy >= static_cast<int>(list.size()))
        throw ValidationError("strategy index out of range");
    return list[strategy];
}

int GameShape::label_index(int player, std::string_view label) const {
    const auto& list = labels(player);
    for (std::size_t k = 0; k < list.size(); ++k)
        if (list[k] == label) return static_cast<int>(k);
    throw ValidationError("player " + std::to_string(player + 1) + " has no strategy '" +
                          std::string(label) + "'");
}

std::int64_t GameShape::profile_count() const {
    std::int64_t total = 1;
    for (const auto& list : labels_) total *= static_cast<std::int64_t>(list.size());
    return total;
}

bool GameShape::uniform_strategy_count() const {
    for (const auto& list : labels_)
        if (list.size() != labels_.front().size()) return false;
    return true;
}

bool GameShape::shared_labels() const {
    for (const auto& list : labels_)
        if (list != labels_.front()) return false;
    return true;
}

std::int64_t GameShape::profile_index(const Profile& p) const {
    if (static_cast<int>(p.size()) != players())
        throw ValidationError("profile has wrong number of entries");
    std::int64_t index = 0;
    for (int i = 0; i < players(); ++i) {
        if (p[i] < 0 || p[i] >= num_strategies(i))
            throw ValidationError("profile entry for player " + std::to_string(i + 1) +
                                  " is out of range");
        index = index * num_strategies(i) + p[i];
    }
    return index;
}

Profile GameShape::profile_of_index(std::int64_t index) const {
    if (index < 0 || index >= profile_count())
        throw ValidationError("profile index out of range");
    Profile p(players());
    for (int i = players() - 1; i >= 0; --i) {
        p[i] = static_cast<int>(index % num_strategies(i));
        index /= num_strategies(i);
    }
    return p;
}

std::string GameShape::profile_text(const Profile& p) const {
    if (static_cast<int>(p.size()) != players())
        throw ValidationError("profile has wrong number of entries");
    std::ostringstream out;
    out << '(';
    for (int i = 0; i < players(); ++i) {
        if (i) out << ',';
        out << label(i, p[i]);
    }
    out << ')';
    return out.str();
}

Profile GameShape::profile_from_labels(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != players())
        throw ValidationError("profile has wrong number of entries");
    Profile p(players());
    for (int i = 0; i < players(); ++i) p[i] = label_index(i, names[i]);
    return p;
}

Game::Game(GameShape shape, std::vector<std::vector<Rational>> payoffs)
    : shape_(std::move(shape)), payoffs_(std::move(payoffs)) {
    if (static_cast<std::int64_t>(payoffs_.size()) != shape_.profile_count())
        throw ValidationError("payoff table does not cover every profile exactly once");
    for (const auto& row : payoffs_)
        if (static_cast<int>(row.size()) != shape_.players())
            throw ValidationError("payoff entry does not list one value per player");
}

const Rational& Game::payoff(int player, const Profile& p) const {
    return payoff_by_index(player, shape_.profile_index(p));
}

const Rational& Game::payoff_by_index(int player, std::int64_t profile_idx) const {
    if (player < 0 || player >= players())
        throw ValidationError("player index out of range");
    if (profile_idx < 0 || profile_idx >= profile_count())
        throw ValidationError("profile index out of range");
    return payoffs_[static_cast<std::size_t>(profile_idx)][static_cast<std::size_t>(player)];
}

const std::vector<Rational>& Game::payoff_vector(std::int64_t profile_idx) const {
    if (profile_idx < 0 || profile_idx >= profile_count())
        throw ValidationError("profile index out of range");
    return payoffs_[static_cast<std::size_t>(profile_idx)];
}

std::vector<Profile> Game::pure_nash_equilibria() const {
    const int n = players();
    const std::int64_t total = profile_count();

    // For each player, the index of the profile with that player's entry
    // removed ("opponent slice"), then the best payoff per slice.
    std::vector<std::vector<Rational>> best(n);
    std::vector<std::vector<bool>> filled(n);
    std::vector<std::int64_t> slice_counts(n);
    for (int i = 0; i < n; ++i) {
        slice_counts[i] = total / shape_.num_strategies(i);
        best[i].resize(static_cast<std::size_t>(slice_counts[i]));
        filled[i].assign(static_cast<std::size_t>(slice_counts[i]), false);
    }

    auto slice_index = [&](int player, const Profile& p) {
        std::int64_t index = 0;
        for (int j = 0; j < n; ++j) {
            if (j == player) continue;
            index = index * shape_.num_strategies(j) + p[j];
        }
        return index;
    };

    for (std::int64_t idx = 0; idx < total; ++idx) {
        Profile p = profile_of_index(idx);
        for (int i = 0; i < n; ++i) {
            std::int64_t s = slice_index(i, p);
            const Rational& value = payoffs_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)];
            auto us = static_cast<std::size_t>(s);
            if (!filled[i][us] || value > best[i][us]) {
                best[i][us] = value;
                filled[i][us] = true;
            }
        }
    }

    std::vector<Profile> result;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        Profile p = profile_of_index(idx);
        bool equilibrium = true;
        for (int i = 0; i < n && equilibrium; ++i) {
            std::int64_t s = slice_index(i, p);
            equilibrium = payoffs_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)] ==
                          best[i][static_cast<std::size_t>(s)];
        }
        if (equilibrium) result.push_back(std::move(p));
    }
    return result;
}

} // namespace symgame
