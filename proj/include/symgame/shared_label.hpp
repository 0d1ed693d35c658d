#pragma once

#include "symgame/game.hpp"
#include "symgame/perm.hpp"

namespace symgame {

// True when every player has the identical ordered strategy label list.
bool shares_labels(const Game& game);

// Symmetry notions that compare payoffs across players directly. They are
// only meaningful when strategy sets coincide, so every operation here
// first requires shared labels (PreconditionError otherwise).
namespace shared_label {

void require(const Game& game);

// u_i(s) = u_{pi(i)}(pi(s)) for all players i and profiles s,
// where pi(s) carries entry s_i to position pi(i).
bool is_invariant(const Game& game, const Perm& pi);

// The set of all invariant permutations; always a group.
PermGroup invariant_group(const Game& game);

struct AnonymityReport {
    bool weakly_anonymous = false; // u_i invariant under every pi fixing i
    bool anonymous = false;        // every u_i invariant under every pi
    bool fully_anonymous = false;  // u_i = u_j . pi for all i, j, pi
};

AnonymityReport anonymity(const Game& game);

struct TransitiveInvarianceResult {
    bool holds = false;
    PermGroup witness; // a transitive invariant group when holds
    TransitiveInvarianceResult() : witness(PermGroup::trivial(2)) {}
};

// Some transitive group of invariant permutations exists; equivalently the
// full invariant group is transitive (it contains every invariant subgroup).
TransitiveInvarianceResult transitive_invariance(const Game& game);

// Equivalent tests for invariance under every permutation. They must always
// agree; keeping them separate lets that equivalence be exercised directly.
enum class FullSymmetryTest {
    AllPermutationsInvariant,   // every pi in S_N is invariant
    TransitiveAndWeaklyAnonymous, // transitive invariant group + weak anonymity
    InverseImages,              // u_{pi(i)} = u_i . pi^{-1} for all pi, i
    Transpositions,             // u_i = u_{t(i)} . t over transpositions only
    TranspositionInverses,      // same with t^{-1} (equal: t is an involution)
};

bool full_symmetry(const Game& game, FullSymmetryTest test);
bool full_symmetry(const Game& game); // Transpositions test, the cheapest

// u_i(s) = u_{pi(i)}(pi^{-1}(s)): relabels the player forward while acting
// on the profile backward. Deceptively close to full symmetry, but for three
// or more players it additionally forces all players to share one utility
// function; only for two players does it coincide with full symmetry.
bool inverse_action_condition(const Game& game);

} // namespace shared_label
} // namespace symgame
