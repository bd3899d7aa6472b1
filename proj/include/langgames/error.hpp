#pragma once

#include <stdexcept>
#include <string>

namespace langgames {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or file input (type strings, JSON documents, recipes).
class InputError : public Error {
 public:
  using Error::Error;
};

// A word list that is not in the language, or a word outside the vocabulary.
class UngrammaticalError : public Error {
 public:
  using Error::Error;
};

// Ill-typed diagram construction: boundary mismatch, bad offsets, bad boxes.
class DiagramError : public Error {
 public:
  using Error::Error;
};

// Game construction or evaluation failure: interface mismatch, escaped plays.
class GameError : public Error {
 public:
  using Error::Error;
};

// A library post-condition did not hold. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace langgames
