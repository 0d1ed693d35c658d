#pragma once

// JSON game documents: {"players": n, "strategies": [[labels...]...],
// "payoffs": [[u_1(s), ..., u_n(s)] in profile-index order]}. Payoff entries
// are JSON integers or strings holding integers, fractions ("3/4"), or
// decimals ("0.25"); all are parsed to exact rationals. Serialization is
// canonical: sorted keys, compact separators, rationals in lowest terms,
// integer-valued payoffs emitted as JSON integers when they fit.

#include <string>
#include <string_view>

#include <json.hpp>

#include "symgame/game.hpp"
#include "symgame/rational.hpp"

namespace symgame {

nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& value, const std::string& context);

// Strict: unknown or missing keys and wrong JSON types raise ParseError;
// violations of the game's own invariants (label duplicates, dimension
// mismatches, too few players) raise ValidationError.
Game game_from_json(const nlohmann::json& document);
nlohmann::json game_to_json(const Game& game);

Game game_from_json_text(std::string_view text); // ParseError on syntax errors
std::string canonical_json_text(const nlohmann::json& document);

} // namespace symgame
