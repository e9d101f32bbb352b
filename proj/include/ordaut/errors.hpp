#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordaut {

// Malformed textual input (CNF text, automaton files, words).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  // Character offset for CNF text, 1-based line number for automaton files.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An operation was called on an input outside its domain.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The automaton accepts no word; the ordinal of its ordering is 0.
class EmptyLanguageError : public PreconditionError {
 public:
  EmptyLanguageError() : PreconditionError("automaton accepts the empty language") {}
};

// An exhaustive search gave up at its configured state bound.
class SearchBoundExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace ordaut
