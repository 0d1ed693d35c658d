#include "symgame/matching.hpp"

#include "symgame/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symgame {

namespace {

std::vector<std::vector<int>> index_perms(int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace

Matching::Matching(GameShape shape, std::vector<Profile> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (!is_matching(shape_, rows_))
        throw ValidationError("rows do not use every strategy of every player exactly once");
    std::sort(rows_.begin(), rows_.end(),
              [](const Profile& a, const Profile& b) { return a[0] < b[0]; });
}

bool is_matching(const GameShape& shape, const std::vector<Profile>& rows) {
    if (!shape.uniform_strategy_count()) return false;
    const int n = shape.players();
    const int m = shape.num_strategies(0);
    if (static_cast<int>(rows.size()) != m) return false;
    for (int i = 0; i < n; ++i) {
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        for (const Profile& row : rows) {
            if (static_cast<int>(row.size()) != n) return false;
            int s = row[static_cast<std::size_t>(i)];
            if (s < 0 || s >= m || used[static_cast<std::size_t>(s)]) return false;
            used[static_cast<std::size_t>(s)] = true;
        }
    }
    return true;
}

std::vector<int> Matching::strategy_bijection(int player_i, int player_j) const {
    const int n = shape_.players();
    if (player_i < 0 || player_i >= n || player_j < 0 || player_j >= n)
        throw ValidationError("player index out of range");
    std::vector<int> map(rows_.size());
    for (const Profile& row : rows_)
        map[static_cast<std::size_t>(row[static_cast<std::size_t>(player_i)])] =
            row[static_cast<std::size_t>(player_j)];
    return map;
}

GameBijection Matching::induced_bijection(const Perm& pi) const {
    if (pi.size() != shape_.players())
        throw PreconditionError("permutation degree does not match the number of players");
    std::vector<std::vector<int>> maps(static_cast<std::size_t>(shape_.players()));
    for (int i = 0; i < shape_.players(); ++i)
        maps[static_cast<std::size_t>(i)] = strategy_bijection(i, pi(i));
    return GameBijection(shape_, shape_, pi, std::move(maps));
}

std::string Matching::text() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (k) out << ',';
        out << shape_.profile_text(rows_[k]);
    }
    out << '}';
    return out.str();
}

Integer matching_count(int players, int strategies) {
    if (players < 2 || strategies < 1)
        throw ValidationError("matching count needs at least two players and one strategy");
    Integer per_player = 1;
    for (int k = 2; k <= strategies; ++k) per_player *= k;
    Integer total = 1;
    for (int i = 1; i < players; ++i) total *= per_player;
    return total;
}

void for_each_matching(const GameShape& shape, const std::function<bool(const Matching&)>& visit) {
    if (!shape.uniform_strategy_count())
        throw PreconditionError("matchings require every player to have the same number "
                                "of strategies");
    const int n = shape.players();
    const int m = shape.num_strategies(0);
    const auto perms = index_perms(m);

    // One pairing bijection from player 1 to each later player; iterate the
    // tuple (sigma_2, ..., sigma_n) as an odometer in lexicographic order.
    std::vector<std::size_t> pick(static_cast<std::size_t>(n - 1), 0);
    while (true) {
        std::vector<Profile> rows(static_cast<std::size_t>(m), Profile(static_cast<std::size_t>(n)));
        for (int a = 0; a < m; ++a) {
            rows[static_cast<std::size_t>(a)][0] = a;
            for (int j = 1; j < n; ++j)
                rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] =
                    perms[pick[static_cast<std::size_t>(j - 1)]][static_cast<std::size_t>(a)];
        }
        if (!visit(Matching(shape, std::move(rows)))) return;

        int pos = n - 2;
        while (pos >= 0) {
            if (++pick[static_cast<std::size_t>(pos)] < perms.size()) break;
            pick[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return;
    }
}

std::vector<Matching> enumerate_matchings(const GameShape& shape) {
    std::vector<Matching> out;
    for_each_matching(shape, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::vector<Matching> equal_payoff_matchings(const Game& game) {
    if (!game.shape().uniform_strategy_count())
        throw PreconditionError("matchings require every player to have the same number "
                                "of strategies");
    // A profile qualifies when all players receive the same payoff there.
    std::vector<bool> equal_here(static_cast<std::size_t>(game.profile_count()), false);
    for (std::int64_t idx = 0; idx < game.profile_count(); ++idx) {
        const auto& values = game.payoff_vector(idx);
        equal_here[static_cast<std::size_t>(idx)] =
            std::all_of(values.begin(), values.end(),
                        [&](const Rational& v) { return v == values.front(); });
    }
    std::vector<Matching> out;
    for_each_matching(game.shape(), [&](const Matching& m) {
        for (const Profile& row : m.rows())
            if (!equal_here[static_cast<std::size_t>(game.profile_index(row))]) return true;
        out.push_back(m);
        return true;
    });
    return out;
}

bool is_strategy_trivial(const BijectionGroup& group) {
    for (const GameBijection& g : group.elements())
        for (int i = 0; i < group.shape().players(); ++i)
            if (g.map_player(i) == i)
                for (int a = 0; a < group.shape().num_strategies(i); ++a)
                    if (g.map_strategy(i, a) != a) return false;
    return true;
}

Matching matching_from_group(const BijectionGroup& group) {
    if (!group.is_player_transitive())
        throw PreconditionError("matching extraction requires a player-transitive group");
    if (!is_strategy_trivial(group))
        throw PreconditionError("matching extraction requires a strategy-trivial group");
    const GameShape& shape = group.shape();
    const int n = shape.players();
    const int m = shape.num_strategies(0);

    // By strategy triviality the map A_1 -> A_j is the same for every
    // element sending player 1 to j; transitivity provides one for each j.
    std::vector<std::vector<int>> pairing(static_cast<std::size_t>(n));
    for (const GameBijection& g : group.elements()) {
        int j = g.map_player(0);
        if (pairing[static_cast<std::size_t>(j)].empty())
            pairing[static_cast<std::size_t>(j)] = g.strategy_maps()[0];
    }

    std::vector<Profile> rows(static_cast<std::size_t>(m), Profile(static_cast<std::size_t>(n)));
    for (int a = 0; a < m; ++a)
        for (int j = 0; j < n; ++j)
            rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] =
                pairing[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)];
    return Matching(shape, std::move(rows));
}

} // namespace symgame
