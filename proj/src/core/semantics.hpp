// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "logic.hpp"
#include "rational.hpp"

namespace predabs {

using Tuple = std::vector<std::size_t>;

/// Interpretation of a function symbol over domain indices; total on domain^arity.
struct FunctionTable {
  std::size_t arity = 0;
  std::map<Tuple, std::size_t> values;
  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
};

struct Relation {
  std::size_t arity = 0;
  std::set<Tuple> tuples;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Finite model given by tables. Entities are indices into `domain`, which
/// holds their display names.
struct ExtensionalModel {
  std::vector<std::string> domain;
  std::map<std::string, std::size_t> constants;
  std::map<std::string, FunctionTable> functions;
  std::map<std::string, Relation> predicates;
  friend bool operator==(const ExtensionalModel&, const ExtensionalModel&) = default;
};

/// Model over the rationals: named constants carry values, numeric literals
/// denote themselves, + - * / and = < > have their usual meaning.
struct ComputedModel {
  std::map<std::string, Rational> values;
  friend bool operator==(const ComputedModel&, const ComputedModel&) = default;
};

using Model = std::variant<ExtensionalModel, ComputedModel>;

/// Denotation of a ground term: a domain index of an extensional model, or a
/// rational for computed models.
struct Entity {
  std::variant<std::size_t, Rational> value;
  friend bool operator==(const Entity&, const Entity&) = default;
};

/// Throws EvaluationError for variables, unknown symbols, or a term that is
/// undefined because of division by zero.
Entity eval_term(const Term& t, const Model& m);

/// Truth value of a closed formula. Quantifiers range over the model's
/// constants (substitutional semantics, sound because constant maps are
/// surjective); they are rejected on computed models. An atom containing an
/// undefined term is false.
bool eval_formula(const Formula& f, const Model& m);

struct Violation {
  enum class Kind { EmptyDomain, UnknownEntity, ConstantMissing, UnknownSymbol, NotSurjective, FunctionNotTotal, ArityMismatch };
  Kind kind;
  std::string message;
};

/// Every violated model invariant; empty means the model is valid for vocab.
std::vector<Violation> validate_model(const ExtensionalModel& m, const Vocabulary& vocab);
std::vector<Violation> validate_model(const ComputedModel& m, const Vocabulary& vocab);
std::vector<Violation> validate_model(const Model& m, const Vocabulary& vocab);

inline constexpr std::size_t kDefaultEnumerationLimit = 100000;

/// All models over the domain {e1..en} whose constant map is surjective.
/// Order: constant maps lexicographically (constants sorted by name), then
/// predicate extensions by ascending bitmask, then function tables.
/// Throws LimitExceeded when more than `limit` models would be produced.
std::vector<ExtensionalModel> enumerate_models(const Vocabulary& vocab, std::size_t domain_size,
                                               std::size_t limit = kDefaultEnumerationLimit);

/// Text identifying a model by its content: entity names, constant map and
/// tables. Absent and empty relations give the same key.
std::string content_key(const Model& m);

}  // namespace predabs
