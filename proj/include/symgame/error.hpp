#pragma once

#include <stdexcept>
#include <string>

namespace symgame {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: unreadable document, bad text form, syntax problems.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Structurally well-formed input that violates an object invariant
// (wrong arity, out-of-range index, duplicate label, non-bijective map, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Valid objects fed to an operation whose precondition they do not meet
// (mismatched shapes, missing parameter value, non-transitive group, ...).
// The message names the precondition that failed.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

} // namespace symgame
