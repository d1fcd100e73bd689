#pragma once

#include <stdexcept>
#include <string>

namespace formwell {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("zero denominator") {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& what) : Error(what) {}
};

struct SingularMetric : Error {
    SingularMetric() : Error("metric matrix is singular") {}
};

struct NotHolomorphicCase : Error {
    explicit NotHolomorphicCase(const std::string& what) : Error(what) {}
};

struct NotConstantLorenz : Error {
    explicit NotConstantLorenz(const std::string& what) : Error(what) {}
};

struct NonFiniteResult : Error {
    NonFiniteResult() : Error("finite-difference result is not finite") {}
};

// Broken internal invariant (CLI exit code 3), never a user input problem.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error("internal error: " + what) {}
};

// Parse errors carry a 1-based source position.
struct ParseError : Error {
    int line;
    int col;

    ParseError(int line_, int col_, const std::string& message)
        : Error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + message),
          line(line_),
          col(col_) {}
};

struct MixedGeneratorUse : ParseError {
    MixedGeneratorUse(int line_, int col_, const std::string& message)
        : ParseError(line_, col_, message) {}
};

struct MissingMetric : ParseError {
    MissingMetric(int line_, int col_)
        : ParseError(line_, col_, "missing required key 'metric'") {}
};

struct DuplicateKey : ParseError {
    DuplicateKey(int line_, int col_, const std::string& key)
        : ParseError(line_, col_, "duplicate key '" + key + "'") {}
};

struct UnknownKey : ParseError {
    UnknownKey(int line_, int col_, const std::string& key)
        : ParseError(line_, col_, "unknown key '" + key + "'") {}
};

}  // namespace formwell
