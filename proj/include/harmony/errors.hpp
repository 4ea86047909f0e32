#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace harmony {

// Caller supplied an argument outside an operation's domain. The CLI maps
// this family to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed pitch or number text.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& message, std::string token, std::size_t position)
      : UsageError(message), token_(std::move(token)), position_(position) {}

  const std::string& token() const { return token_; }
  // Zero-based index of the offending token in the input.
  std::size_t position() const { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

// Operation asked for an irrational tuning where fractions are required.
class TuningError : public UsageError {
 public:
  using UsageError::UsageError;
};

// 64-bit integer arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Measure or statistic has no value for the given input (single tone,
// zero variance, ...).
class UndefinedMeasureError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace harmony
