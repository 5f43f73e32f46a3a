// SPDX-License-Identifier: Apache-2.0
#include "error.hpp"

namespace predabs {

namespace {

std::string located(SourcePosition pos, const std::string& message) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
}

std::string describe_expected(const std::string& found, const std::vector<std::string>& expected) {
  std::string out = "unexpected " + found;
  if (!expected.empty()) {
    out += ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
      out += expected[i];
    }
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(SourcePosition pos, const std::string& found, std::vector<std::string> expected)
    : Error(located(pos, describe_expected(found, expected))), pos_(pos), expected_(std::move(expected)) {}

SyntaxError::SyntaxError(SourcePosition pos, const std::string& message)
    : Error(located(pos, message)), pos_(pos) {}

ArityMismatch::ArityMismatch(const std::string& symbol, std::size_t expected, std::size_t got)
    : Error("symbol '" + symbol + "' takes " + std::to_string(expected) + " argument(s), got " +
            std::to_string(got)) {}

}  // namespace predabs
