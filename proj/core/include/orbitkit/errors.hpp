#pragma once

#include <stdexcept>
#include <string>

namespace orbitkit {

/// Base class of all orbitkit exceptions.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: files, words, state sequences, tile sets.
class ParseError : public Error {
public:
  using Error::Error;
};

/// An operation was invoked outside of its contract.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A mandatory resource budget ran out in a context that has no
/// budget-shaped verdict of its own.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// The backend does not support the requested operation
/// (e.g. whole-automaton analysis of an oracle-backed automaton).
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// A supposedly impossible situation; indicates a bug, not bad input.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace orbitkit
