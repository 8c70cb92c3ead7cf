#pragma once

#include <stdexcept>
#include <string>

namespace eqlines {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Requested cyclotomic order exceeds the configured maximum.
class UnsupportedOrderError : public Error {
public:
    explicit UnsupportedOrderError(unsigned order, unsigned max)
        : Error("unsupported cyclotomic order " + std::to_string(order) +
                " (maximum " + std::to_string(max) + ")") {}
};

class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero") {}
};

// Operation requires a totally real value.
class NotRealError : public Error {
public:
    NotRealError() : Error("value is not fixed by conjugation (not totally real)") {}
};

// Value outside what the exact backend can represent (e.g. sqrt of a
// scalar that is not a root of unity).
class UnsupportedScalarError : public Error {
public:
    explicit UnsupportedScalarError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Mixing exact and floating-point backends in one operation.
class BackendError : public Error {
public:
    explicit BackendError(const std::string& what) : Error(what) {}
};

// A matrix failed Hadamard certification.
class CertifyError : public Error {
public:
    explicit CertifyError(const std::string& what) : Error(what) {}
};

// Malformed JSON document or field.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(what) {}
};

}  // namespace eqlines
