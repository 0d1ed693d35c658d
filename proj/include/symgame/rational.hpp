#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace symgame {

// Exact rational number. Always held in lowest terms with positive
// denominator; equality is equality of values.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Accepts "42", "-7", "3/4", "-3/9" (reduced on construction) and plain
// decimal strings such as "0.25" or "-1.5". Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

} // namespace symgame
