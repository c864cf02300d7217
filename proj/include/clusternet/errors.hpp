#pragma once

#include <stdexcept>
#include <string>

namespace clusternet {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixed truncation orders or mixed marking-variable arities.
struct ArityError : Error {
    using Error::Error;
};

// Inversion of a series whose constant coefficient is not a nonzero rational
// constant, or an identity-minus inverse fed a matrix with constant terms.
struct UnitError : Error {
    using Error::Error;
};

// Non-divisible or zero denominator in exact series division.
struct DivisionError : Error {
    using Error::Error;
};

// Square root of a series whose constant coefficient is not 1.
struct RootError : Error {
    using Error::Error;
};

// Coefficient index outside the truncation order.
struct RangeError : Error {
    using Error::Error;
};

// Letter image with a nonzero constant term (substitution would not converge).
struct AdmissibilityError : Error {
    using Error::Error;
};

// Exhaustive enumeration would exceed its budget.
struct BudgetError : Error {
    using Error::Error;
};

// Malformed inputs: invalid patterns, missing arc weights, bad height sets,
// non-stochastic weight assignments, unknown CLI selectors.
struct ConfigError : Error {
    using Error::Error;
};

// Continued-fraction evaluation hit a non-unit denominator; carries the level.
struct CfEvalError : Error {
    CfEvalError(const std::string& what, int level) : Error(what), level(level) {}
    int level;
};

// Network or input file failed to parse.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace clusternet
