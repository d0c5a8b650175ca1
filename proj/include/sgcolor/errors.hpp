#pragma once

#include <stdexcept>
#include <string>

namespace sgcolor {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (graph files, coloring documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but outside an operation's domain
/// (negative loop, unbalanced graph passed to the König pipeline, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to run on an instance above its size guard.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace sgcolor
