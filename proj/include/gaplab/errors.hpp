#ifndef GAPLAB_ERRORS_HPP_
#define GAPLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gaplab {

// Base class for all gaplab failures, so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside a declared domain (wrong alphabet, too long, missing table key).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A target spec violates its own invariants (zero target, overlapping lists).
struct InvalidSpecError : Error {
  explicit InvalidSpecError(const std::string& msg) : Error(msg) {}
};

// A machine violates the computation model (e.g. re-queries a string on a path).
struct ModelViolationError : Error {
  explicit ModelViolationError(const std::string& msg) : Error(msg) {}
};

// A path queries a string outside the declared universe.
struct EncodingError : Error {
  explicit EncodingError(const std::string& msg) : Error(msg) {}
};

// A deck breaks deck invariants (mixed card sizes).
struct InvalidDeckError : Error {
  explicit InvalidDeckError(const std::string& msg) : Error(msg) {}
};

// An enumeration or search exceeds its configured budget or size bound.
struct ResourceError : Error {
  explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// Malformed DSL or JSON input.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace gaplab

#endif  // GAPLAB_ERRORS_HPP_
