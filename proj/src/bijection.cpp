#include "symgame/bijection.hpp"

#include "symgame/error.hpp"
#include "symgame/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace symgame {

GameBijection::GameBijection(GameShape source, GameShape target, Perm player_map,
                             std::vector<std::vector<int>> strategy_maps)
    : source_(std::move(source)),
      target_(std::move(target)),
      player_map_(std::move(player_map)),
      strategy_maps_(std::move(strategy_maps)) {
    const int n = source_.players();
    if (target_.players() != n)
        throw ValidationError("bijection endpoints have different player counts");
    if (player_map_.size() != n)
        throw ValidationError("player map degree does not match the shape");
    if (static_cast<int>(strategy_maps_.size()) != n)
        throw ValidationError("bijection needs one strategy map per player");
    for (int i = 0; i < n; ++i) {
        int from = source_.num_strategies(i);
        int to = target_.num_strategies(player_map_(i));
        if (from != to)
            throw ValidationError("player " + std::to_string(i + 1) + " maps to a player with " +
                                  std::to_string(to) + " strategies, not " + std::to_string(from));
        if (static_cast<int>(strategy_maps_[i].size()) != from)
            throw ValidationError("strategy map for player " + std::to_string(i + 1) +
                                  " has the wrong size");
        std::vector<bool> hit(static_cast<std::size_t>(to), false);
        for (int v : strategy_maps_[i]) {
            if (v < 0 || v >= to || hit[static_cast<std::size_t>(v)])
                throw ValidationError("strategy map for player " + std::to_string(i + 1) +
                                      " is not a bijection");
            hit[static_cast<std::size_t>(v)] = true;
        }
    }
}

GameBijection GameBijection::identity(const GameShape& shape) {
    std::vector<std::vector<int>> maps(static_cast<std::size_t>(shape.players()));
    for (int i = 0; i < shape.players(); ++i) {
        maps[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(shape.num_strategies(i)));
        std::iota(maps[static_cast<std::size_t>(i)].begin(), maps[static_cast<std::size_t>(i)].end(), 0);
    }
    return GameBijection(shape, shape, Perm::identity(shape.players()), std::move(maps));
}

int GameBijection::map_strategy(int player, int strategy) const {
    if (player < 0 || player >= source_.players())
        throw ValidationError("player index out of range");
    if (strategy < 0 || strategy >= source_.num_strategies(player))
        throw ValidationError("strategy index out of range");
    return strategy_maps_[static_cast<std::size_t>(player)][static_cast<std::size_t>(strategy)];
}

Profile GameBijection::apply(const Profile& s) const {
    if (static_cast<int>(s.size()) != source_.players())
        throw ValidationError("profile has wrong number of entries");
    Profile out(s.size());
    for (int i = 0; i < source_.players(); ++i) {
        if (s[i] < 0 || s[i] >= source_.num_strategies(i))
            throw ValidationError("profile entry for player " + std::to_string(i + 1) +
                                  " is out of range");
        out[static_cast<std::size_t>(player_map_(i))] =
            strategy_maps_[static_cast<std::size_t>(i)][static_cast<std::size_t>(s[i])];
    }
    return out;
}

std::pair<int, Profile> GameBijection::apply_cell(int player, const Profile& s) const {
    if (player < 0 || player >= source_.players())
        throw ValidationError("player index out of range");
    return {player_map_(player), apply(s)};
}

GameBijection GameBijection::inverse() const {
    Perm inv_players = player_map_.inverse();
    std::vector<std::vector<int>> inv_maps(static_cast<std::size_t>(target_.players()));
    for (int j = 0; j < target_.players(); ++j) {
        int i = inv_players(j); // the source player that lands on j
        const auto& forward = strategy_maps_[static_cast<std::size_t>(i)];
        std::vector<int> back(forward.size());
        for (std::size_t a = 0; a < forward.size(); ++a)
            back[static_cast<std::size_t>(forward[a])] = static_cast<int>(a);
        inv_maps[static_cast<std::size_t>(j)] = std::move(back);
    }
    return GameBijection(target_, source_, std::move(inv_players), std::move(inv_maps));
}

bool GameBijection::is_identity() const {
    if (source_ != target_) return false;
    if (!player_map_.is_identity()) return false;
    for (const auto& map : strategy_maps_)
        for (std::size_t a = 0; a < map.size(); ++a)
            if (map[a] != static_cast<int>(a)) return false;
    return true;
}

std::string GameBijection::text() const {
    std::ostringstream out;
    out << player_map_.cycle_string();
    for (int i = 0; i < source_.players(); ++i) {
        out << "; " << (i + 1) << ":{";
        for (int a = 0; a < source_.num_strategies(i); ++a) {
            if (a) out << ',';
            out << source_.label(i, a) << "->"
                << target_.label(player_map_(i), strategy_maps_[static_cast<std::size_t>(i)]
                                                               [static_cast<std::size_t>(a)]);
        }
        out << '}';
    }
    return out.str();
}

GameBijection GameBijection::parse(std::string_view text, const GameShape& source,
                                   const GameShape& target) {
    // Split on top-level ';'.
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ';') {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    auto trim = [](std::string s) {
        auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
        while (!s.empty() && issp(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && issp(static_cast<unsigned char>(s.back()))) s.pop_back();
        return s;
    };
    if (parts.empty()) throw ParseError("empty bijection text");

    const int n = source.players();
    if (target.players() != n)
        throw PreconditionError("bijection endpoints have different player counts");
    Perm players = Perm::from_cycles(trim(parts[0]), n);

    if (static_cast<int>(parts.size()) != n + 1)
        throw ParseError("bijection text must list exactly one strategy map per player");

    std::vector<std::vector<int>> maps(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::size_t k = 1; k < parts.size(); ++k) {
        std::string part = trim(parts[k]);
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw ParseError("strategy map '" + part + "' is missing ':'");
        int player = 0;
        try {
            std::size_t used = 0;
            player = std::stoi(part.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("bad player number in strategy map '" + part + "'");
        }
        if (player < 1 || player > n)
            throw ValidationError("strategy map for unknown player " + std::to_string(player));
        if (seen[static_cast<std::size_t>(player - 1)])
            throw ValidationError("strategy map for player " + std::to_string(player) + " repeated");
        seen[static_cast<std::size_t>(player - 1)] = true;

        std::string body = trim(part.substr(colon + 1));
        if (body.size() < 2 || body.front() != '{' || body.back() != '}')
            throw ParseError("strategy map '" + part + "' must be wrapped in braces");
        body = body.substr(1, body.size() - 2);

        int src_player = player - 1;
        int dst_player = players(src_player);
        std::vector<int> map(static_cast<std::size_t>(source.num_strategies(src_player)), -1);
        std::string entry;
        std::vector<std::string> entries;
        for (char c : body) {
            if (c == ',') {
                entries.push_back(entry);
                entry.clear();
            } else {
                entry += c;
            }
        }
        entries.push_back(entry);
        for (const std::string& raw : entries) {
            std::string pair = trim(raw);
            auto arrow = pair.find("->");
            if (arrow == std::string::npos)
                throw ParseError("strategy pair '" + pair + "' is missing '->'");
            std::string from = trim(pair.substr(0, arrow));
            std::string to = trim(pair.substr(arrow + 2));
            int a = source.label_index(src_player, from);
            int b = target.label_index(dst_player, to);
            if (map[static_cast<std::size_t>(a)] != -1)
                throw ValidationError("strategy '" + from + "' mapped twice for player " +
                                      std::to_string(player));
            map[static_cast<std::size_t>(a)] = b;
        }
        for (int v : map)
            if (v == -1)
                throw ValidationError("strategy map for player " + std::to_string(player) +
                                      " does not cover every strategy");
        maps[static_cast<std::size_t>(src_player)] = std::move(map);
    }
    return GameBijection(source, target, std::move(players), std::move(maps));
}

GameBijection compose(const GameBijection& h, const GameBijection& g) {
    if (g.target() != h.source())
        throw PreconditionError("composition requires the first map's target shape to equal "
                                "the second map's source shape");
    Perm players = compose(h.player_map(), g.player_map());
    const int n = g.source().players();
    std::vector<std::vector<int>> maps(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int mid = g.map_player(i);
        int m = g.source().num_strategies(i);
        std::vector<int> composed(static_cast<std::size_t>(m));
        for (int a = 0; a < m; ++a)
            composed[static_cast<std::size_t>(a)] = h.map_strategy(mid, g.map_strategy(i, a));
        maps[static_cast<std::size_t>(i)] = std::move(composed);
    }
    return GameBijection(g.source(), h.target(), std::move(players), std::move(maps));
}

bool is_isomorphism(const GameBijection& g, const Game& source, const Game& target) {
    if (g.source() != source.shape() || g.target() != target.shape())
        throw PreconditionError("bijection endpoints do not match the given games");
    const int n = source.players();
    const std::int64_t total = source.profile_count();
    for (std::int64_t idx = 0; idx < total; ++idx) {
        Profile s = source.profile_of_index(idx);
        std::int64_t moved = target.profile_index(g.apply(s));
        for (int i = 0; i < n; ++i)
            if (source.payoff_by_index(i, idx) != target.payoff_by_index(g.map_player(i), moved))
                return false;
    }
    return true;
}

namespace {

// Permutations of {0..m-1} in lexicographic image order.
std::vector<std::vector<int>> index_perms(int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Valid player maps: preserve strategy counts, and when payoff multisets are
// supplied, map each player to one with the same multiset.
std::vector<Perm> candidate_player_maps(const GameShape& source, const GameShape& target,
                                        const std::vector<std::vector<Rational>>* src_multisets,
                                        const std::vector<std::vector<Rational>>* dst_multisets) {
    std::vector<Perm> out;
    for (const Perm& pi : all_perms(source.players())) {
        bool ok = true;
        for (int i = 0; i < source.players() && ok; ++i) {
            if (source.num_strategies(i) != target.num_strategies(pi(i))) ok = false;
            else if (src_multisets &&
                     (*src_multisets)[static_cast<std::size_t>(i)] !=
                         (*dst_multisets)[static_cast<std::size_t>(pi(i))])
                ok = false;
        }
        if (ok) out.push_back(pi);
    }
    return out;
}

void enumerate_strategy_maps(const GameShape& source, const GameShape& target, const Perm& pi,
                             const std::vector<std::vector<std::vector<bool>>>* allowed,
                             const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    const int n = source.players();
    std::vector<std::vector<int>> chosen(static_cast<std::size_t>(n));
    std::vector<std::vector<std::vector<int>>> options(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) options[static_cast<std::size_t>(i)] = index_perms(source.num_strategies(i));

    std::function<void(int)> descend = [&](int depth) {
        if (depth == n) {
            emit(chosen);
            return;
        }
        for (const auto& map : options[static_cast<std::size_t>(depth)]) {
            bool ok = true;
            if (allowed) {
                const auto& table = (*allowed)[static_cast<std::size_t>(depth)];
                for (std::size_t a = 0; a < map.size() && ok; ++a)
                    ok = table[a][static_cast<std::size_t>(map[a])];
            }
            if (!ok) continue;
            chosen[static_cast<std::size_t>(depth)] = map;
            descend(depth + 1);
        }
    };
    descend(0);
}

} // namespace

std::vector<GameBijection> all_shape_bijections(const GameShape& source, const GameShape& target) {
    if (source.players() != target.players()) return {};
    std::vector<GameBijection> out;
    for (const Perm& pi : candidate_player_maps(source, target, nullptr, nullptr)) {
        enumerate_strategy_maps(source, target, pi, nullptr,
                                [&](const std::vector<std::vector<int>>& maps) {
                                    out.emplace_back(source, target, pi, maps);
                                });
    }
    return out;
}

std::vector<GameBijection> isomorphisms_between(const Game& source, const Game& target) {
    if (source.players() != target.players()) return {};
    const GameShape& src = source.shape();
    const GameShape& dst = target.shape();
    const int n = src.players();

    // Per-player payoff multisets, then per-(player, strategy) slice
    // multisets. Both are isomorphism invariants used to prune the search.
    auto player_multisets = [](const Game& game) {
        std::vector<std::vector<Rational>> out(static_cast<std::size_t>(game.players()));
        for (std::int64_t idx = 0; idx < game.profile_count(); ++idx)
            for (int i = 0; i < game.players(); ++i)
                out[static_cast<std::size_t>(i)].push_back(game.payoff_by_index(i, idx));
        for (auto& values : out) std::sort(values.begin(), values.end());
        return out;
    };
    auto slice_multisets = [](const Game& game) {
        std::vector<std::vector<std::vector<Rational>>> out(static_cast<std::size_t>(game.players()));
        for (int i = 0; i < game.players(); ++i)
            out[static_cast<std::size_t>(i)].resize(
                static_cast<std::size_t>(game.shape().num_strategies(i)));
        for (std::int64_t idx = 0; idx < game.profile_count(); ++idx) {
            Profile s = game.profile_of_index(idx);
            for (int i = 0; i < game.players(); ++i)
                out[static_cast<std::size_t>(i)][static_cast<std::size_t>(s[i])].push_back(
                    game.payoff_by_index(i, idx));
        }
        for (auto& per_player : out)
            for (auto& values : per_player) std::sort(values.begin(), values.end());
        return out;
    };

    const auto src_pm = player_multisets(source);
    const auto dst_pm = player_multisets(target);
    const auto src_slices = slice_multisets(source);
    const auto dst_slices = slice_multisets(target);

    std::vector<Perm> roots = candidate_player_maps(src, dst, &src_pm, &dst_pm);
    std::vector<std::vector<GameBijection>> found(roots.size());

    detail::parallel_for(static_cast<int>(roots.size()), [&](int r) {
        const Perm& pi = roots[static_cast<std::size_t>(r)];
        // allowed[i][a][b]: strategy a of source player i may map to
        // strategy b of target player pi(i).
        std::vector<std::vector<std::vector<bool>>> allowed(static_cast<std::size_t>(n));
        bool feasible = true;
        for (int i = 0; i < n && feasible; ++i) {
            int m = src.num_strategies(i);
            auto& table = allowed[static_cast<std::size_t>(i)];
            table.assign(static_cast<std::size_t>(m),
                         std::vector<bool>(static_cast<std::size_t>(m), false));
            for (int a = 0; a < m; ++a) {
                bool any = false;
                for (int b = 0; b < m; ++b) {
                    bool ok = src_slices[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] ==
                              dst_slices[static_cast<std::size_t>(pi(i))][static_cast<std::size_t>(b)];
                    table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ok;
                    any = any || ok;
                }
                if (!any) feasible = false;
            }
        }
        if (!feasible) return;
        enumerate_strategy_maps(src, dst, pi, &allowed,
                                [&](const std::vector<std::vector<int>>& maps) {
                                    GameBijection g(src, dst, pi, maps);
                                    if (is_isomorphism(g, source, target))
                                        found[static_cast<std::size_t>(r)].push_back(std::move(g));
                                });
    });

    std::vector<GameBijection> out;
    for (auto& chunk : found)
        for (auto& g : chunk) out.push_back(std::move(g));
    return out;
}

BijectionGroup::BijectionGroup(GameShape shape, std::vector<GameBijection> elements,
                               std::vector<GameBijection> generators)
    : shape_(std::move(shape)), elements_(std::move(elements)), generators_(std::move(generators)) {}

BijectionGroup BijectionGroup::closure(const GameShape& shape,
                                       std::vector<GameBijection> generators) {
    for (const GameBijection& g : generators)
        if (g.source() != shape || g.target() != shape)
            throw PreconditionError("group generators must map the shape to itself");
    std::set<GameBijection> seen;
    std::vector<GameBijection> frontier;
    GameBijection id = GameBijection::identity(shape);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        GameBijection current = frontier.back();
        frontier.pop_back();
        for (const GameBijection& g : generators) {
            GameBijection next = compose(g, current);
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    std::vector<GameBijection> elements(seen.begin(), seen.end());
    return BijectionGroup(shape, std::move(elements), std::move(generators));
}

BijectionGroup BijectionGroup::from_elements(GameShape shape,
                                             std::vector<GameBijection> elements) {
    for (const GameBijection& g : elements)
        if (g.source() != shape || g.target() != shape)
            throw PreconditionError("group elements must map the shape to itself");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return BijectionGroup(std::move(shape), elements, elements);
}

bool BijectionGroup::contains(const GameBijection& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

PermGroup BijectionGroup::player_image() const {
    std::set<Perm> perms;
    for (const GameBijection& g : elements_) perms.insert(g.player_map());
    return PermGroup::closure(std::vector<Perm>(perms.begin(), perms.end()), shape_.players());
}

BijectionGroup BijectionGroup::player_stabiliser() const {
    std::vector<GameBijection> kept;
    for (const GameBijection& g : elements_)
        if (g.player_map().is_identity()) kept.push_back(g);
    return from_elements(shape_, std::move(kept));
}

bool BijectionGroup::is_player_transitive() const {
    return player_image().is_transitive();
}

std::vector<std::vector<int>> BijectionGroup::subgroups(std::size_t order_bound) const {
    if (order() > order_bound)
        throw PreconditionError("subgroup enumeration requires group order at most " +
                                std::to_string(order_bound));
    const int g = static_cast<int>(order());

    // Multiplication table over element indices.
    std::map<GameBijection, int> index_of;
    for (int i = 0; i < g; ++i) index_of[elements_[static_cast<std::size_t>(i)]] = i;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(g),
                                        std::vector<int>(static_cast<std::size_t>(g)));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            auto it = index_of.find(compose(elements_[static_cast<std::size_t>(i)],
                                            elements_[static_cast<std::size_t>(j)]));
            if (it == index_of.end())
                throw ValidationError("element set is not closed under composition");
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it->second;
        }
    int identity_index = index_of.at(GameBijection::identity(shape_));

    auto close_indices = [&](std::vector<int> seed) {
        std::set<int> members(seed.begin(), seed.end());
        members.insert(identity_index);
        std::vector<int> frontier(members.begin(), members.end());
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            for (int y : std::set<int>(members)) {
                for (int z : {table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)],
                              table[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]}) {
                    if (members.insert(z).second) frontier.push_back(z);
                }
            }
        }
        return std::vector<int>(members.begin(), members.end());
    };

    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> queue;
    std::vector<int> trivial = close_indices({});
    found.insert(trivial);
    queue.push_back(trivial);
    while (!queue.empty()) {
        std::vector<int> current = queue.back();
        queue.pop_back();
        for (int x = 0; x < g; ++x) {
            if (std::binary_search(current.begin(), current.end(), x)) continue;
            std::vector<int> extended = current;
            extended.push_back(x);
            std::vector<int> closed = close_indices(std::move(extended));
            if (found.insert(closed).second) queue.push_back(closed);
        }
    }

    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

BijectionGroup BijectionGroup::subgroup_from_indices(const std::vector<int>& indices) const {
    std::vector<GameBijection> members;
    for (int i : indices) {
        if (i < 0 || i >= static_cast<int>(order()))
            throw ValidationError("subgroup element index out of range");
        members.push_back(elements_[static_cast<std::size_t>(i)]);
    }
    return from_elements(shape_, std::move(members));
}

bool BijectionGroup::satisfies_group_axioms() const {
    if (!contains(GameBijection::identity(shape_))) return false;
    for (const GameBijection& a : elements_) {
        if (!contains(a.inverse())) return false;
        for (const GameBijection& b : elements_)
            if (!contains(compose(a, b))) return false;
    }
    return true;
}

BijectionGroup automorphism_group(const Game& game) {
    return BijectionGroup::from_elements(game.shape(), isomorphisms_between(game, game));
}

} // namespace symgame
