#pragma once

#include <stdexcept>
#include <string>

namespace ordeval {

// Base class for all library errors. Subtypes distinguish caller mistakes
// (bad shapes, out-of-range values) from degenerate inputs that make a
// quantity undefined.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dimension or length mismatch, empty input, fewer than two classes.
class ShapeError : public Error {
public:
    using Error::Error;
};

// A probability outside [0,1] or a label outside 1..M.
class RangeError : public Error {
public:
    using Error::Error;
};

// A probability row deviates from sum 1 beyond the validation tolerance.
class RowSumError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of a function (e.g. x not in [0,1)).
class DomainError : public Error {
public:
    using Error::Error;
};

// A quantity is undefined for this input (empty classification, absent class).
class DegenerateError : public Error {
public:
    using Error::Error;
};

// An operation's stated precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DuplicateNameError : public Error {
public:
    using Error::Error;
};

class LabelMismatchError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class EmptyTrainError : public Error {
public:
    using Error::Error;
};

// A class has too few training points to estimate its distribution.
class DegenerateClassError : public Error {
public:
    using Error::Error;
};

// A cross-validation training fold lacks a class entirely.
class FoldError : public Error {
public:
    using Error::Error;
};

// Malformed input file; message carries file name and line number.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace ordeval
