#pragma once

#include <stdexcept>
#include <string>

namespace confcoh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad genus, index out of range, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A computation was requested beyond a configured size budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Character peeling hit a negative multiplicity or a non-Weyl-invariant input.
class NotACharacter : public Error {
public:
    using Error::Error;
};

/// A highest weight outside the family V(i*w1 + w_j) turned up where a RepLabel is required.
class UnsupportedWeight : public Error {
public:
    using Error::Error;
};

/// Both factors of a series product carried non-scalar representation coefficients.
class BothSidesVirtual : public Error {
public:
    using Error::Error;
};

/// Coefficient extraction past the truncation order of a series.
class OutOfTruncation : public Error {
public:
    using Error::Error;
};

/// The DGA comparison is not valid for genus 0 with a single point.
class Genus0N1Unsupported : public Error {
public:
    using Error::Error;
};

/// Malformed text/JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace confcoh
