#pragma once

#include <stdexcept>
#include <string>

namespace lietriple {

/// Base class for every error the engine raises on purpose.
class EngineError : public std::runtime_error {
public:
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

/// Multiplicative inverse of zero, or a zero denominator in input.
class DivisionByZeroError : public EngineError {
public:
  explicit DivisionByZeroError(const std::string& what) : EngineError(what) {}
};

/// Malformed textual input (scalar or algebra file).
class ParseError : public EngineError {
public:
  explicit ParseError(const std::string& what) : EngineError(what) {}
};

/// Two objects that must live on the same labelled space do not.
class SpaceMismatchError : public EngineError {
public:
  explicit SpaceMismatchError(const std::string& what) : EngineError(what) {}
};

/// An operation was called outside its stated domain
/// (non-factorisable input, failed pairing normalisation, bad twist datum).
class PreconditionError : public EngineError {
public:
  explicit PreconditionError(const std::string& what) : EngineError(what) {}
};

/// A constructed object failed its own axiom verification.
/// Carries the violation listing in the message.
class ConstructionError : public EngineError {
public:
  explicit ConstructionError(const std::string& what) : EngineError(what) {}
};

} // namespace lietriple
