#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixbraid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A letter index outside the range allowed by the enclosing word, or a
// parameter outside the range allowed by an operation.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Raised when a word would exceed the configured length cap.
class WordOverflowError : public Error {
 public:
  WordOverflowError(std::size_t length, std::size_t cap)
      : Error("word length " + std::to_string(length) + " exceeds cap " +
              std::to_string(cap)),
        length_(length),
        cap_(cap) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t length_;
  std::size_t cap_;
};

class ParseError : public Error {
 public:
  enum class Kind { syntax, range };

  // For syntax errors `position` is a byte offset into the input text; for
  // range errors it is the 0-based position of the offending letter.
  ParseError(Kind kind, std::size_t position, const std::string& what)
      : Error(what), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

// A move was applied outside its precondition (non-algebraic input, wrong
// kind of manifold, ...).
class MoveError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent manifold description.
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace mixbraid
