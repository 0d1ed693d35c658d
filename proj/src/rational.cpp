#include "symgame/rational.hpp"

#include "symgame/error.hpp"

#include <cctype>

namespace symgame {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    std::string_view body = text;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) throw ParseError("rational literal '" + std::string(text) + "' has no digits");

    auto slash = body.find('/');
    auto dot = body.find('.');
    Rational magnitude;
    if (slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction '" + std::string(text) + "'");
        Integer d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Integer n{std::string(num)};
        magnitude = Rational(n, d);
    } else if (dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer units = whole.empty() ? Integer(0) : Integer{std::string(whole)};
        Integer rem = frac.empty() ? Integer(0) : Integer{std::string(frac)};
        magnitude = Rational(units * scale + rem, scale);
    } else {
        if (!all_digits(body)) throw ParseError("malformed integer '" + std::string(text) + "'");
        magnitude = Rational(Integer{std::string(body)});
    }
    return negative ? Rational(-magnitude) : magnitude;
}

std::string format_rational(const Rational& value) {
    return value.str();
}

} // namespace symgame
