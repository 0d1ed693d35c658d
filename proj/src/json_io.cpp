#include "symgame/json_io.hpp"

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "symgame/error.hpp"

namespace symgame {

namespace {

using nlohmann::json;

const json& require_key(const json& document, const char* key) {
    const auto it = document.find(key);
    if (it == document.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

} // namespace

json rational_to_json(const Rational& value) {
    if (boost::multiprecision::denominator(value) == 1) {
        const Integer numer = boost::multiprecision::numerator(value);
        if (numer >= std::numeric_limits<std::int64_t>::min() &&
            numer <= std::numeric_limits<std::int64_t>::max())
            return numer.convert_to<std::int64_t>();
    }
    return format_rational(value);
}

Rational rational_from_json(const json& value, const std::string& context) {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const ParseError& err) {
            throw ParseError(context + ": " + err.what());
        }
    }
    throw ParseError(context + ": payoff must be a JSON integer or a numeric string");
}

Game game_from_json(const json& document) {
    if (!document.is_object()) throw ParseError("game document must be a JSON object");
    for (const auto& [key, value] : document.items())
        if (key != "players" && key != "strategies" && key != "payoffs")
            throw ParseError("unknown field \"" + key + "\"");

    const json& players_json = require_key(document, "players");
    if (!players_json.is_number_integer())
        throw ParseError("field \"players\" must be an integer");
    const std::int64_t players = players_json.get<std::int64_t>();

    const json& strategies_json = require_key(document, "strategies");
    if (!strategies_json.is_array())
        throw ParseError("field \"strategies\" must be an array of arrays of strings");
    std::vector<std::vector<std::string>> labels;
    for (const json& player_labels : strategies_json) {
        if (!player_labels.is_array())
            throw ParseError("field \"strategies\" must be an array of arrays of strings");
        std::vector<std::string> row;
        for (const json& label : player_labels) {
            if (!label.is_string())
                throw ParseError("strategy labels must be strings");
            row.push_back(label.get<std::string>());
        }
        labels.push_back(std::move(row));
    }
    if (static_cast<std::int64_t>(labels.size()) != players)
        throw ValidationError("field \"strategies\" must list one label array per player");

    GameShape shape{std::move(labels)}; // throws ValidationError on its invariants

    const json& payoffs_json = require_key(document, "payoffs");
    if (!payoffs_json.is_array())
        throw ParseError("field \"payoffs\" must be an array of payoff vectors");
    if (static_cast<std::int64_t>(payoffs_json.size()) != shape.profile_count())
        throw ValidationError("field \"payoffs\" must have one entry per strategy profile (" +
                              std::to_string(shape.profile_count()) + ")");
    std::vector<std::vector<Rational>> payoffs;
    payoffs.reserve(payoffs_json.size());
    for (std::size_t idx = 0; idx < payoffs_json.size(); ++idx) {
        const json& row_json = payoffs_json[idx];
        if (!row_json.is_array())
            throw ParseError("payoff entry " + std::to_string(idx) + " must be an array");
        if (static_cast<std::int64_t>(row_json.size()) != players)
            throw ValidationError("payoff entry " + std::to_string(idx) +
                                  " must list one payoff per player");
        std::vector<Rational> row;
        row.reserve(row_json.size());
        for (std::size_t i = 0; i < row_json.size(); ++i)
            row.push_back(rational_from_json(
                row_json[i], "payoff entry " + std::to_string(idx) + ", player " + std::to_string(i + 1)));
        payoffs.push_back(std::move(row));
    }
    return Game(std::move(shape), std::move(payoffs));
}

json game_to_json(const Game& game) {
    const GameShape& shape = game.shape();
    json strategies = json::array();
    for (int i = 0; i < shape.players(); ++i) strategies.push_back(shape.labels(i));

    json payoffs = json::array();
    for (std::int64_t idx = 0; idx < shape.profile_count(); ++idx) {
        json row = json::array();
        for (const Rational& value : game.payoff_vector(idx)) row.push_back(rational_to_json(value));
        payoffs.push_back(std::move(row));
    }

    json document;
    document["players"] = shape.players();
    document["strategies"] = std::move(strategies);
    document["payoffs"] = std::move(payoffs);
    return document;
}

Game game_from_json_text(std::string_view text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("invalid JSON: ") + err.what());
    }
    return game_from_json(document);
}

std::string canonical_json_text(const json& document) {
    // nlohmann::json already stores object keys sorted; a compact dump is
    // therefore canonical.
    return document.dump();
}

} // namespace symgame
