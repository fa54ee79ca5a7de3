// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef REVSIM_ERRORS_HPP
#define REVSIM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revsim {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid arguments or options (unknown metric id, bad generator sizes, ...).
class BadParamsError : public Error {
 public:
  explicit BadParamsError(const std::string& msg) : Error(msg) {}
};

// An operand exceeds a hard size cap (exact three-way LCS oracle).
class InputTooLargeError : public Error {
 public:
  explicit InputTooLargeError(const std::string& msg) : Error(msg) {}
};

// A claimed common subsequence does not embed into its operands.
class InvalidSubsequenceError : public Error {
 public:
  explicit InvalidSubsequenceError(const std::string& msg) : Error(msg) {}
};

// Malformed input data; `line` is 1-based when it refers to a line file.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(const std::string& id)
      : Error("duplicate sample id: " + id) {}
};

class MissingFieldError : public Error {
 public:
  MissingFieldError(const std::string& msg, std::size_t line)
      : Error(msg + " (line " + std::to_string(line) + ")") {}
};

// Statistics cannot be computed (constant list, too few points).
class DegenerateInputError : public Error {
 public:
  explicit DegenerateInputError(const std::string& msg) : Error(msg) {}
};

// Filesystem-level failure; CLI maps this to exit code 2.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace revsim

#endif  // REVSIM_ERRORS_HPP
