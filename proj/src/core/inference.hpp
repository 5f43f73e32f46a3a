// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corpus.hpp"
#include "logic.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace predabs {

/// How the Bernoulli parameter mu is treated when a number is required.
class MuMode {
 public:
  enum class Kind { Exact, One, LimitOne };

  /// mu must lie in [1/2, 1].
  static MuMode exact(const Rational& mu);
  static MuMode one() { return MuMode(Kind::One, Rational(1)); }
  static MuMode limit_one() { return MuMode(Kind::LimitOne, Rational(1)); }
  /// "1", "limit" or a rational such as "9/10" or "0.9".
  static MuMode parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// The exact value for Kind::Exact; 1 otherwise.
  const Rational& value() const { return value_; }
  std::string str() const;

  friend bool operator==(const MuMode&, const MuMode&) = default;

 private:
  MuMode(Kind kind, Rational value) : kind_(kind), value_(value) {}
  Kind kind_;
  Rational value_;
};

/// Models of `space` where the closed formula is true.
ModelSet truth_set(const Formula& f, std::span<const Model> space);
ModelSet truth_set(const Formula& f, const Corpus& c);
/// Models of `space` where every formula of delta is true.
ModelSet truth_set(std::span<const Formula> delta, std::span<const Model> space);
ModelSet truth_set(std::span<const Formula> delta, const Corpus& c);

/// Possible models (non-zero marginal) satisfying every formula of delta.
ModelSet possible_truth_set(std::span<const Formula> delta, const Corpus& c);

/// mu if the formula has truth value v in m, 1 - mu otherwise.
Rational formula_likelihood(const Formula& f, bool v, const Model& m, const Rational& mu);

/// p(f) as a polynomial in mu: (T*mu + (K - T)*(1 - mu)) / K, where T counts
/// the data whose supported model satisfies f.
PolyMu prob(const Formula& f, const Corpus& c);
Rational prob(const Formula& f, const Corpus& c, const MuMode& mode);

/// p(a, b) = (1/K) sum over data of p(a | m(d)) p(b | m(d)).
PolyMu prob_joint(const Formula& a, const Formula& b, const Corpus& c);
Rational prob_joint(const Formula& a, const Formula& b, const Corpus& c, const MuMode& mode);

/// p(a | delta). One throws EmptyPossibleSet when no possible model satisfies
/// delta; LimitOne conditions on the possible models with the largest number
/// of satisfied delta formulas; Exact evaluates the ratio at mu directly.
Rational prob_conditional(const Formula& a, std::span<const Formula> delta, const Corpus& c, const MuMode& mode);

/// p(M = m | delta) under the same weighting as prob_conditional.
Rational posterior_model(std::size_t m, std::span<const Formula> delta, const Corpus& c, const MuMode& mode);

/// The full ratio sum_m p(a|m) p(delta|m) p(m) / sum_m p(delta|m) p(m).
RationalFnMu conditional_symbolic(const Formula& a, std::span<const Formula> delta, const Corpus& c);

/// Possible models maximising the number of satisfied delta formulas.
ModelSet max_satisfaction_set(std::span<const Formula> delta, const Corpus& c);

bool logical_consequence(std::span<const Formula> delta, const Formula& a, std::span<const Model> space);
bool logical_consequence(std::span<const Formula> delta, const Formula& a, const Corpus& c);
bool empirical_consequence(std::span<const Formula> delta, const Formula& a, const Corpus& c);

/// Maximal subsets of a formula set, as sorted index lists into `formulas`.
struct SubsetFamily {
  std::vector<Formula> formulas;  // the deduplicated input
  std::vector<std::vector<std::size_t>> maximal;
  std::vector<std::vector<std::size_t>> cardinality_maximal;
  /// Union over the cardinality-maximal subsets of their (possible) truth sets.
  ModelSet union_set;

  std::vector<Formula> subset(const std::vector<std::size_t>& indices) const;
};

inline constexpr std::size_t kDefaultSubsetLimit = 20;

/// Maximal possible subsets of delta; throws LimitExceeded if |delta| > limit.
SubsetFamily mps(std::span<const Formula> delta, const Corpus& c, std::size_t limit = kDefaultSubsetLimit);
/// Maximal consistent subsets of delta over `space`.
SubsetFamily mcs(std::span<const Formula> delta, std::span<const Model> space, std::size_t limit = kDefaultSubsetLimit);
SubsetFamily mcs(std::span<const Formula> delta, const Corpus& c, std::size_t limit = kDefaultSubsetLimit);

/// Removes structurally equal duplicates, keeping first occurrences.
std::vector<Formula> deduplicate(std::span<const Formula> delta);

/// Throws EvaluationError naming a free variable if f is open.
void require_closed(const Formula& f);

std::vector<Model> models_of(const Corpus& c);

}  // namespace predabs
