#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobspec {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range group spec text. `position` is a 0-based offset
/// into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error("spec parse error at offset " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A precondition of a public operation was violated by the caller.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Group closure grew past the configured cap; carries how far it got.
class OrderCapError : public Error {
public:
    OrderCapError(std::size_t cap, std::size_t partial)
        : Error("order cap exceeded: more than " + std::to_string(cap) +
                " elements (stopped after " + std::to_string(partial) + ")"),
          cap_(cap), partial_(partial) {}

    std::size_t cap() const noexcept { return cap_; }
    std::size_t partial_count() const noexcept { return partial_; }

private:
    std::size_t cap_;
    std::size_t partial_;
};

/// An invariant the engine itself guarantees failed to hold. Seeing this
/// means a bug in this library, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace frobspec
