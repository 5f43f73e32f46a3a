// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corpus.hpp"
#include "inference.hpp"
#include "logic.hpp"
#include "rational.hpp"

namespace predabs {

struct SearchBudget {
  std::size_t max_operators = 2;
  /// Non-negative integer literals allowed as terms besides the named constants.
  std::vector<std::int64_t> literal_pool;
  /// Enumeration fails rather than truncating when more candidates arise.
  std::size_t candidate_cap = 100000;
};

struct RankedHypothesis {
  Formula formula;
  std::string text;  // canonical text
  Rational score;
  std::size_t complexity = 0;         // operators and connectives
  std::size_t inverse_operators = 0;  // occurrences of - and /
};

inline constexpr std::string_view kArithEquation = "arith-equation";

/// Candidate formulas of a registered template. "arith-equation" yields the
/// equations t1 = t2 over the named constants and the literal pool with at most
/// `max_operators` binary operators in total. The list is canonical (commutative
/// operands and the two sides ordered), duplicate-free and sorted by operator
/// count then text. Equations that hold under every valuation are left out.
/// Throws InvalidArgument for an unknown template, LimitExceeded past the cap.
std::vector<Formula> enumerate_candidates(const Vocabulary& vocab, std::string_view grammar, const SearchBudget& budget);

/// Normal form used to identify candidates: operands of + and * and the sides
/// of = are put in a fixed order.
Term canonicalize(const Term& t);
Formula canonicalize(const Formula& f);

/// Ranks candidates by p(candidate) under `mode` (mu = 1 by default).
/// Order: score descending, then complexity, then inverse operators, then text.
std::vector<RankedHypothesis> hypothesize(const Corpus& c, std::span<const Formula> candidates,
                                          const MuMode& mode = MuMode::one());

/// Ranks candidates by p(candidate | givens) under `mode`, same tie-break.
std::vector<RankedHypothesis> select_answer(const Corpus& c, std::span<const Formula> givens,
                                            std::span<const Formula> candidates, const MuMode& mode = MuMode::one());

}  // namespace predabs
