// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace predabs {

/// Symbol tables of a first-order language. Names are unique across the four
/// kinds; variables are told apart from constants by declaration only.
class Vocabulary {
 public:
  void add_constant(const std::string& name);
  void add_variable(const std::string& name);
  void add_function(const std::string& name, std::size_t arity);
  void add_predicate(const std::string& name, std::size_t arity);

  /// Declares the arithmetic symbols + - * / (arity 2) and = < > (arity 2)
  /// and lets numeric literals such as 18 or 2.5 act as constants.
  void enable_arithmetic();
  bool arithmetic() const { return arithmetic_; }

  bool is_constant(std::string_view name) const;
  bool is_variable(std::string_view name) const { return variables_.count(std::string(name)) > 0; }
  bool is_function(std::string_view name) const { return functions_.count(std::string(name)) > 0; }
  bool is_predicate(std::string_view name) const { return predicates_.count(std::string(name)) > 0; }
  bool is_declared(std::string_view name) const;

  std::size_t function_arity(std::string_view name) const;
  std::size_t predicate_arity(std::string_view name) const;

  /// Declared (named) constants; numeric literals are not listed.
  const std::set<std::string>& constants() const { return constants_; }
  const std::set<std::string>& variables() const { return variables_; }
  const std::map<std::string, std::size_t>& functions() const { return functions_; }
  const std::map<std::string, std::size_t>& predicates() const { return predicates_; }

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  void check_fresh(const std::string& name) const;

  std::set<std::string> constants_;
  std::set<std::string> variables_;
  std::map<std::string, std::size_t> functions_;
  std::map<std::string, std::size_t> predicates_;
  bool arithmetic_ = false;
};

bool is_numeric_literal(std::string_view name);
/// True for the symbols written infix: + - * / = < >.
bool is_infix_symbol(std::string_view name);

class Term {
 public:
  enum class Kind { Constant, Variable, Application };

  static Term constant(std::string name);
  static Term variable(std::string name);
  static Term apply(std::string function, std::vector<Term> args);

  Kind kind() const { return kind_; }
  const std::string& symbol() const { return symbol_; }
  const std::vector<Term>& args() const { return args_; }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Term(Kind kind, std::string symbol, std::vector<Term> args)
      : kind_(kind), symbol_(std::move(symbol)), args_(std::move(args)) {}

  Kind kind_;
  std::string symbol_;
  std::vector<Term> args_;
};

/// Immutable first-order formula AST.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies, Forall, Exists };

  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula forall(std::string variable, Formula body);
  static Formula exists(std::string variable, Formula body);

  Kind kind() const { return kind_; }
  /// Predicate name for atoms, bound variable for quantifiers, empty otherwise.
  const std::string& symbol() const { return symbol_; }
  const std::vector<Term>& args() const { return args_; }
  const std::vector<Formula>& children() const { return children_; }

  const Formula& operand() const { return children_.at(0); }
  const Formula& lhs() const { return children_.at(0); }
  const Formula& rhs() const { return children_.at(1); }
  const Formula& body() const { return children_.at(0); }

  bool is_binary() const { return kind_ == Kind::And || kind_ == Kind::Or || kind_ == Kind::Implies; }
  bool is_quantifier() const { return kind_ == Kind::Forall || kind_ == Kind::Exists; }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Formula(Kind kind, std::string symbol, std::vector<Term> args, std::vector<Formula> children)
      : kind_(kind), symbol_(std::move(symbol)), args_(std::move(args)), children_(std::move(children)) {}

  Kind kind_;
  std::string symbol_;
  std::vector<Term> args_;
  std::vector<Formula> children_;
};

std::string format_term(const Term& t);
/// Canonical text: minimal parentheses under ! > & > | > ->, with -> right
/// associative and quantifier bodies extending as far right as possible.
std::string format_formula(const Formula& f);

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> variables_of(const Term& t);
inline bool is_closed(const Formula& f) { return free_variables(f).empty(); }

/// Replaces every free occurrence of variable x by the constant c.
Term substitute(const Term& t, const std::string& x, const std::string& c);
Formula substitute(const Formula& f, const std::string& x, const std::string& c, const Vocabulary& vocab);

/// Checks declarations, kinds and arities of every symbol; throws
/// UndeclaredIdentifier or ArityMismatch.
void check_well_formed(const Formula& f, const Vocabulary& vocab);
void check_well_formed(const Term& t, const Vocabulary& vocab);

/// Number of function applications in a term. For formulas, connectives and
/// quantifiers are counted as well.
std::size_t operator_count(const Term& t);
std::size_t operator_count(const Formula& f);

}  // namespace predabs
