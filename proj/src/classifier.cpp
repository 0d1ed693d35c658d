#include "symgame/classifier.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "symgame/error.hpp"

namespace symgame {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void require_uniform(const GameShape& shape, const char* what) {
    if (!shape.uniform_strategy_count())
        throw PreconditionError(std::string(what) +
                                " requires every player to have the same number of strategies");
}

// T = {pi : M_pi in Aut}. M_ is a homomorphism into the shape bijections and
// Aut is a group, so T is a subgroup of S_N. For n <= 4 all n! permutations
// are tested; for larger n only permutations realised as player maps of Aut
// are candidates (M_pi in Aut already forces pi into the player image).
std::vector<Perm> induced_subgroup(const Matching& matching, const BijectionGroup& aut) {
    const int n = matching.shape().players();
    std::vector<Perm> candidates =
        n <= 4 ? all_perms(n) : aut.player_image().elements();
    std::vector<Perm> result;
    for (const Perm& pi : candidates)
        if (aut.contains(matching.induced_bijection(pi))) result.push_back(pi);
    return result;
}

// A subgroup of S_N is transitive exactly when the orbit of one player is
// everything; no cycle-structure assumption is made.
bool perms_transitive(const std::vector<Perm>& subgroup, int n) {
    std::set<int> orbit;
    for (const Perm& pi : subgroup) orbit.insert(pi(0));
    return static_cast<int>(orbit.size()) == n;
}

struct StandardSearch {
    bool found = false;
    std::optional<Matching> witness;
    std::vector<Perm> induced; // T for the witnessing matching
};

StandardSearch standard_search(const Game& game, const BijectionGroup& aut) {
    StandardSearch out;
    for (const Matching& m : equal_payoff_matchings(game)) {
        std::vector<Perm> t = induced_subgroup(m, aut);
        if (perms_transitive(t, game.shape().players())) {
            out.found = true;
            out.witness = m;
            out.induced = std::move(t);
            return out;
        }
    }
    return out;
}

std::pair<bool, std::optional<Matching>> fully_search(const Game& game,
                                                      const BijectionGroup& aut) {
    const std::vector<Perm> taus = transpositions(game.shape().players());
    for (const Matching& m : equal_payoff_matchings(game)) {
        bool all = true;
        for (const Perm& tau : taus)
            if (!aut.contains(m.induced_bijection(tau))) {
                all = false;
                break;
            }
        if (all) return {true, m};
    }
    return {false, std::nullopt};
}

// A transposition tau can be ruled out of the player image without any
// search: if tau were the player map of an automorphism g, then for every
// profile s the vector w with w[tau(i)] = u_i(s) would be the payoff vector
// of g(s). A profile whose permuted vector appears nowhere refutes tau.
std::string payoff_witness(const Game& game, const PermGroup& image) {
    const GameShape& shape = game.shape();
    const int n = shape.players();
    const std::int64_t profiles = shape.profile_count();

    std::set<std::vector<Rational>> attained;
    for (std::int64_t idx = 0; idx < profiles; ++idx) attained.insert(game.payoff_vector(idx));

    for (const Perm& tau : transpositions(n)) {
        if (image.contains(tau)) continue;
        for (std::int64_t idx = 0; idx < profiles; ++idx) {
            const std::vector<Rational> v = game.payoff_vector(idx);
            std::vector<Rational> w(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(tau(i))] = v[static_cast<std::size_t>(i)];
            if (!attained.contains(w))
                return "payoff-witness: swap " + tau.cycle_string() + " at profile " +
                       shape.profile_text(shape.profile_of_index(idx));
        }
    }
    return "exhaustive";
}

// Smallest prefix-greedy generating set of the given subgroup (elements are
// scanned in their sorted order).
std::vector<Perm> greedy_generators(const std::vector<Perm>& subgroup, int n) {
    std::vector<Perm> sorted = subgroup;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Perm> gens;
    PermGroup span = PermGroup::trivial(n);
    for (const Perm& pi : sorted) {
        if (pi.is_identity() || span.contains(pi)) continue;
        gens.push_back(pi);
        span = PermGroup::closure(gens, n);
        if (span.order() == subgroup.size()) break;
    }
    return gens;
}

} // namespace

std::string ClassificationReport::class_phrase() const {
    if (!symmetric) return "not symmetric";
    if (fully) return "fully symmetric";
    std::string phrase = n_transitive ? "n-transitively" : "only-transitive";
    phrase += standard ? " standard" : " non-standard";
    phrase += " symmetric";
    return phrase;
}

std::string ClassificationReport::flags_line() const {
    std::string line = "symmetric: ";
    line += yes_no(symmetric);
    line += ", n-transitive: ";
    line += yes_no(n_transitive);
    line += ", standard: ";
    line += uniform_strategies ? yes_no(standard) : "n/a";
    line += ", fully: ";
    line += uniform_strategies ? yes_no(fully) : "n/a";
    return line;
}

bool is_symmetric(const Game& game) {
    return automorphism_group(game).is_player_transitive();
}

bool is_n_transitively_symmetric(const Game& game) {
    return automorphism_group(game).player_image().is_full_symmetric();
}

std::pair<bool, std::optional<Matching>> is_standard_symmetric(const Game& game) {
    require_uniform(game.shape(), "the standard-symmetry test");
    StandardSearch s = standard_search(game, automorphism_group(game));
    return {s.found, s.witness};
}

std::pair<bool, std::optional<Matching>> is_fully_symmetric(const Game& game) {
    require_uniform(game.shape(), "the full-symmetry test");
    return fully_search(game, automorphism_group(game));
}

ClassificationReport classify(const Game& game) {
    ClassificationReport report;
    const GameShape& shape = game.shape();
    report.uniform_strategies = shape.uniform_strategy_count();

    const BijectionGroup aut = automorphism_group(game);
    report.aut_order = aut.order();

    const PermGroup image = aut.player_image();
    report.symmetric = image.is_transitive();
    report.n_transitive = image.is_full_symmetric();
    report.only_transitive = report.symmetric && !report.n_transitive;

    if (report.only_transitive)
        report.n_transitivity_certificate = payoff_witness(game, image);

    if (report.uniform_strategies) {
        StandardSearch s = standard_search(game, aut);
        report.standard = s.found;
        if (s.found) {
            report.witness_matching = s.witness;
            std::vector<std::string> gens;
            for (const Perm& pi : greedy_generators(s.induced, shape.players()))
                gens.push_back(s.witness->induced_bijection(pi).text());
            report.witness_subgroup = std::move(gens);
        }
        report.fully = fully_search(game, aut).first;
    }
    return report;
}

bool standard_via_subgroups(const Game& game) {
    require_uniform(game.shape(), "the standard-symmetry test");
    const BijectionGroup aut = automorphism_group(game);
    for (const std::vector<int>& indices : aut.subgroups()) {
        const BijectionGroup sub = aut.subgroup_from_indices(indices);
        if (sub.is_player_transitive() && is_strategy_trivial(sub)) return true;
    }
    return false;
}

bool fully_via_subgroups(const Game& game) {
    require_uniform(game.shape(), "the full-symmetry test");
    const BijectionGroup aut = automorphism_group(game);
    for (const std::vector<int>& indices : aut.subgroups()) {
        const BijectionGroup sub = aut.subgroup_from_indices(indices);
        if (sub.player_image().is_full_symmetric() && is_strategy_trivial(sub)) return true;
    }
    return false;
}

SubgroupPropositionCheck check_subgroup_proposition_detail(const Game& game) {
    SubgroupPropositionCheck check;
    const BijectionGroup aut = automorphism_group(game);
    for (const std::vector<int>& indices : aut.subgroups()) {
        const BijectionGroup sub = aut.subgroup_from_indices(indices);
        if (sub.player_image().is_full_symmetric() && sub.player_stabiliser().order() == 1) {
            check.hypothesis = true;
            break;
        }
    }
    const ClassificationReport report = classify(game);
    check.conclusion = report.n_transitive && report.standard;
    check.holds = !check.hypothesis || check.conclusion;
    return check;
}

bool check_subgroup_proposition(const Game& game) {
    return check_subgroup_proposition_detail(game).holds;
}

} // namespace symgame
