// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace predabs {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

class SyntaxError : public Error {
 public:
  SyntaxError(SourcePosition pos, const std::string& found, std::vector<std::string> expected);
  SyntaxError(SourcePosition pos, const std::string& message);

  SourcePosition position() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePosition pos_;
  std::vector<std::string> expected_;
};

class UndeclaredIdentifier : public Error {
 public:
  explicit UndeclaredIdentifier(const std::string& name)
      : Error("undeclared identifier '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ArityMismatch : public Error {
 public:
  ArityMismatch(const std::string& symbol, std::size_t expected, std::size_t got);
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Raised when a limit on enumeration (models, subsets, candidates) would be exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Conditioning at mu = 1 on a formula set no possible model satisfies.
class EmptyPossibleSet : public Error {
 public:
  EmptyPossibleSet()
      : Error("no possible model satisfies the conditioning formulas; "
              "the value is 0/0 at mu = 1 (use --mu limit)") {}
};

class IoError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace predabs
