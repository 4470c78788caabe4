#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dlp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, std::size_t col, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
        line_(line), col_(col), message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return col_; }
  const std::string& message() const noexcept { return message_; }

private:
  std::size_t line_;
  std::size_t col_;
  std::string message_;
};

/// A program predicate shares its name with a concept or role of the ontology.
class VocabularyClash : public Error {
public:
  using Error::Error;
};

class ArityMismatch : public Error {
public:
  using Error::Error;
};

/// A configured resource bound (Herbrand base size, input atoms, loop candidates) was exceeded.
class TooLarge : public Error {
public:
  using Error::Error;
};

class PreconditionViolated : public Error {
public:
  using Error::Error;
};

class NotSupportedModel : public Error {
public:
  using Error::Error;
};

class RoleNegationUnsupported : public Error {
public:
  using Error::Error;
};

class LoopBudgetExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace dlp
