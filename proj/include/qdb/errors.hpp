// errors.hpp
// Exception types thrown by the simulator. Each maps to a distinct CLI
// exit code (see tools/qdb_main.cpp and README).

#pragma once

#include <stdexcept>
#include <string>

namespace qdb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Register widths out of bounds, or widths of two objects disagree.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A basis value or index outside its register's range.
class DomainError : public Error {
public:
    using Error::Error;
};

// Function-table contents violate the table contract.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Table file could not be parsed; message carries the line number.
class ParseError : public Error {
public:
    using Error::Error;
};

// The searched target value has no preimage (g = 0).
class NoSolutionError : public Error {
public:
    using Error::Error;
};

// A dense-oracle request exceeds the size cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

// State norm drifted too far from 1 to measure.
class StateCorruptionError : public Error {
public:
    using Error::Error;
};

// The selective pulse frequency collides with another target value.
class UnresolvablePulseError : public Error {
public:
    using Error::Error;
};

} // namespace qdb
