#pragma once

#include <stdexcept>
#include <string>

namespace ihsat {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// partition_normalize: input increases somewhere.
class NonMonotoneError : public Error {
public:
    using Error::Error;
};

// partition_normalize: more nonzero rows than the ambient genus allows.
class TooManyRowsError : public Error {
public:
    using Error::Error;
};

// exterior_power_decomposition: q outside [0, 2g].
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

// Subtraction went below zero somewhere.  In the engine this signals an
// inconsistent ledger or dataset, not a recoverable state.
class NegativeMultiplicityError : public Error {
public:
    using Error::Error;
};

// gysin_assemble: a forced cancellation is absent on one side.
class MismatchedDifferentialError : public Error {
public:
    using Error::Error;
};

// resolve_links: one symbol received two unequal values.
class ContradictionError : public Error {
public:
    using Error::Error;
};

// make_stratification: negative fiber dimension.
class BadDimsError : public Error {
public:
    using Error::Error;
};

// Dataset text did not parse; carries a 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A partition in a dataset exceeds the section's ambient genus.
class GenusMismatchError : public ParseError {
public:
    using ParseError::ParseError;
};

// The same degree appears twice within one dataset section.
class DuplicateDegreeError : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace ihsat
