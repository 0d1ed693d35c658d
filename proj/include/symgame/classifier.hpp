#pragma once

// Classification of a finite game by the structure of its automorphism group:
// symmetric, n-transitive, only-transitive, standard, and fully symmetric,
// together with the witnesses (matchings and induced subgroups) that certify
// the positive answers.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symgame/bijection.hpp"
#include "symgame/game.hpp"
#include "symgame/matching.hpp"

namespace symgame {

struct ClassificationReport {
    // True when every player has the same number of strategies; the standard
    // and fully-symmetric tests are only defined in that case.
    bool uniform_strategies = false;

    bool symmetric = false;       // player image of Aut is transitive
    bool n_transitive = false;    // player image of Aut is all of S_N
    bool only_transitive = false; // symmetric and not n-transitive
    bool standard = false;        // some equal-payoff matching induces a transitive subgroup of Aut
    bool fully = false;           // some equal-payoff matching induces all of S_N inside Aut

    std::uint64_t aut_order = 0;

    // Equal-payoff matching certifying standardness (fully implies standard,
    // so fully symmetric games also carry one).
    std::optional<Matching> witness_matching;

    // Induced bijections (textual form) generating a player-transitive
    // subgroup of Aut, derived from witness_matching.
    std::optional<std::vector<std::string>> witness_subgroup;

    // How the absence of n-transitivity was certified for a symmetric game:
    // empty when n-transitive (or not symmetric), otherwise either
    // "payoff-witness: swap (i j) at profile (...)" when permuting some
    // profile's payoff vector by a transposition yields a vector no profile
    // attains, or "exhaustive" when only the full search settles it.
    std::string n_transitivity_certificate;

    // "fully symmetric", "n-transitively standard symmetric",
    // "only-transitive non-standard symmetric", ..., or "not symmetric".
    std::string class_phrase() const;

    // "symmetric: yes, n-transitive: yes, standard: no, fully: no"
    // (standard/fully read "n/a" when strategy counts differ).
    std::string flags_line() const;
};

bool is_symmetric(const Game& game);
bool is_n_transitively_symmetric(const Game& game);

// True iff some equal-payoff matching M induces a player-transitive subgroup
// {M_pi : pi in T} of Aut, where T = {pi : M_pi in Aut}; returns the
// witnessing matching. Requires every player to have the same number of
// strategies.
std::pair<bool, std::optional<Matching>> is_standard_symmetric(const Game& game);

// True iff some equal-payoff matching M has M_tau in Aut for every
// transposition tau (equivalently, M_pi in Aut for all pi). Requires every
// player to have the same number of strategies.
std::pair<bool, std::optional<Matching>> is_fully_symmetric(const Game& game);

ClassificationReport classify(const Game& game);

// Alternative formulations running entirely through subgroup enumeration:
// a game is standard symmetric iff Aut has a player-transitive and
// strategy-trivial subgroup, and fully symmetric iff Aut has a
// strategy-trivial subgroup whose player image is all of S_N. These must
// agree with the matching-based tests; both are exposed so the agreement can
// be checked. Requires uniform strategy counts.
bool standard_via_subgroups(const Game& game);
bool fully_via_subgroups(const Game& game);

struct SubgroupPropositionCheck {
    // Some subgroup of Aut has player image S_N and a trivial player
    // stabiliser (only the identity leaves every player fixed).
    bool hypothesis = false;
    // The game classified as both n-transitive and standard.
    bool conclusion = false;
    // hypothesis implies conclusion (vacuously true when hypothesis fails).
    bool holds = true;
};

// Checks that any subgroup of Aut with full player image and trivial player
// stabiliser forces the game to be n-transitively standard symmetric. The
// converse is not claimed.
SubgroupPropositionCheck check_subgroup_proposition_detail(const Game& game);
bool check_subgroup_proposition(const Game& game);

} // namespace symgame
