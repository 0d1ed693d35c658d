#include "symgame/shared_label.hpp"

#include "symgame/error.hpp"

namespace symgame {

bool shares_labels(const Game& game) {
    return game.shape().shared_labels();
}

namespace shared_label {

void require(const Game& game) {
    if (!shares_labels(game))
        throw PreconditionError("operation requires every player to have the same strategy labels");
}

namespace {

// Core pointwise check: u_i(s) = u_{pi(i)}(pi(s)) for all i, s.
bool invariant_unchecked(const Game& game, const Perm& pi) {
    const std::int64_t total = game.profile_count();
    const int n = game.players();
    for (std::int64_t idx = 0; idx < total; ++idx) {
        Profile s = game.profile_of_index(idx);
        std::int64_t moved = game.profile_index(act_on_profile(pi, s));
        for (int i = 0; i < n; ++i)
            if (game.payoff_by_index(i, idx) != game.payoff_by_index(pi(i), moved))
                return false;
    }
    return true;
}

} // namespace

bool is_invariant(const Game& game, const Perm& pi) {
    require(game);
    if (pi.size() != game.players())
        throw PreconditionError("permutation degree does not match the number of players");
    return invariant_unchecked(game, pi);
}

PermGroup invariant_group(const Game& game) {
    require(game);
    std::vector<Perm> members;
    for (const Perm& pi : all_perms(game.players()))
        if (invariant_unchecked(game, pi)) members.push_back(pi);
    // Invariant permutations compose and invert to invariant permutations,
    // so the closure adds nothing; it normalises the representation.
    return PermGroup::closure(std::move(members), game.players());
}

AnonymityReport anonymity(const Game& game) {
    require(game);
    const int n = game.players();
    const std::int64_t total = game.profile_count();

    AnonymityReport report;
    report.weakly_anonymous = true;
    report.anonymous = true;
    report.fully_anonymous = true;

    for (const Perm& pi : all_perms(n)) {
        for (std::int64_t idx = 0; idx < total; ++idx) {
            Profile s = game.profile_of_index(idx);
            std::int64_t moved = game.profile_index(act_on_profile(pi, s));
            for (int i = 0; i < n; ++i) {
                // u_i(pi(s)) = u_i(s): the own payoff ignores which
                // opponent plays what.
                bool same = game.payoff_by_index(i, moved) == game.payoff_by_index(i, idx);
                if (pi(i) == i && !same) report.weakly_anonymous = false;
                if (!same) report.anonymous = false;
            }
        }
    }

    // u_i = u_j . pi for every i, j, pi. Taking pi = id shows all players
    // share one utility function, and that function must be anonymous.
    for (const Perm& pi : all_perms(n)) {
        for (std::int64_t idx = 0; idx < total && report.fully_anonymous; ++idx) {
            Profile s = game.profile_of_index(idx);
            std::int64_t moved = game.profile_index(act_on_profile(pi, s));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (game.payoff_by_index(i, idx) != game.payoff_by_index(j, moved)) {
                        report.fully_anonymous = false;
                        break;
                    }
        }
    }

    return report;
}

TransitiveInvarianceResult transitive_invariance(const Game& game) {
    TransitiveInvarianceResult result;
    PermGroup group = invariant_group(game);
    if (group.is_transitive()) {
        result.holds = true;
        result.witness = std::move(group);
    }
    return result;
}

bool full_symmetry(const Game& game, FullSymmetryTest test) {
    require(game);
    const int n = game.players();
    const std::int64_t total = game.profile_count();

    switch (test) {
    case FullSymmetryTest::AllPermutationsInvariant: {
        for (const Perm& pi : all_perms(n))
            if (!invariant_unchecked(game, pi)) return false;
        return true;
    }
    case FullSymmetryTest::TransitiveAndWeaklyAnonymous: {
        return transitive_invariance(game).holds && anonymity(game).weakly_anonymous;
    }
    case FullSymmetryTest::InverseImages: {
        // u_{pi(i)}(s) = u_i(pi^{-1}(s)) for all pi, i, s.
        for (const Perm& pi : all_perms(n)) {
            Perm inv = pi.inverse();
            for (std::int64_t idx = 0; idx < total; ++idx) {
                Profile s = game.profile_of_index(idx);
                std::int64_t pulled = game.profile_index(act_on_profile(inv, s));
                for (int i = 0; i < n; ++i)
                    if (game.payoff_by_index(pi(i), idx) != game.payoff_by_index(i, pulled))
                        return false;
            }
        }
        return true;
    }
    case FullSymmetryTest::Transpositions: {
        for (const Perm& t : transpositions(n))
            if (!invariant_unchecked(game, t)) return false;
        return true;
    }
    case FullSymmetryTest::TranspositionInverses: {
        for (const Perm& t : transpositions(n))
            if (!invariant_unchecked(game, t.inverse())) return false;
        return true;
    }
    }
    throw ValidationError("unknown full-symmetry test");
}

bool full_symmetry(const Game& game) {
    return full_symmetry(game, FullSymmetryTest::Transpositions);
}

bool inverse_action_condition(const Game& game) {
    require(game);
    const int n = game.players();
    const std::int64_t total = game.profile_count();
    for (const Perm& pi : all_perms(n)) {
        Perm inv = pi.inverse();
        for (std::int64_t idx = 0; idx < total; ++idx) {
            Profile s = game.profile_of_index(idx);
            std::int64_t pulled = game.profile_index(act_on_profile(inv, s));
            for (int i = 0; i < n; ++i)
                if (game.payoff_by_index(i, idx) != game.payoff_by_index(pi(i), pulled))
                    return false;
        }
    }
    return true;
}

} // namespace shared_label
} // namespace symgame
