#ifndef BLINDED_ERRORS_HPP_
#define BLINDED_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace blinded {

// Input that failed to parse (file grammar, rationals, CLI values).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input used outside its domain (wrong game, bad profile,
// unknown player, field too small, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Distribution kind incompatible with the requested solution concept.
struct ConceptMismatch : DomainError {
  explicit ConceptMismatch(const std::string& what) : DomainError(what) {}
};

// Operation not defined for this shape (e.g. mixed Nash with >2 players).
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// A solver could not certify a result; never silently substituted.
struct SolveError : std::runtime_error {
  explicit SolveError(const std::string& what) : std::runtime_error(what) {}
};

// Protocol/simulation configuration violates a precondition.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace blinded

#endif  // BLINDED_ERRORS_HPP_
