#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gl6 {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different generator bases (or different groups).
class BasisMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed literal or input file. Carries a 1-based line number when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Argument outside the domain of an operation (wrong degree, zero value, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A verifier's hypothesis does not hold on the supplied input; distinct from
/// the conclusion failing.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Structured inputs that contradict themselves (descriptor flags, table shapes).
class InconsistentInput : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic left the int64 range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A remote or cached coefficient document does not match the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Transport failure or a non-success HTTP status while fetching.
class NetworkError : public Error {
public:
    using Error::Error;
};

/// Nothing to return without the network: offline mode with a cold cache.
class UnavailableError : public Error {
public:
    using Error::Error;
};

}  // namespace gl6
