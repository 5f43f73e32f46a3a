// SPDX-License-Identifier: Apache-2.0
#include "logic.hpp"

#include <algorithm>
#include <cctype>

#include "error.hpp"

namespace predabs {

namespace {

constexpr std::string_view kArithmeticFunctions[] = {"+", "-", "*", "/"};
constexpr std::string_view kArithmeticPredicates[] = {"=", "<", ">"};

}  // namespace

bool is_numeric_literal(std::string_view name) {
  if (name.empty() || !std::isdigit(static_cast<unsigned char>(name.front()))) return false;
  bool seen_dot = false;
  for (std::size_t i = 0; i < name.size(); ++i) {
    char ch = name[i];
    if (ch == '.') {
      if (seen_dot || i + 1 == name.size()) return false;
      seen_dot = true;
    } else if (!std::isdigit(static_cast<unsigned char>(ch))) {
      return false;
    }
  }
  return true;
}

bool is_infix_symbol(std::string_view name) {
  return std::ranges::find(kArithmeticFunctions, name) != std::end(kArithmeticFunctions) ||
         std::ranges::find(kArithmeticPredicates, name) != std::end(kArithmeticPredicates);
}

void Vocabulary::check_fresh(const std::string& name) const {
  if (name.empty()) throw InvalidArgument("empty symbol name");
  if (is_declared(name)) throw InvalidArgument("symbol '" + name + "' declared twice");
  if (name == "forall" || name == "exists") throw InvalidArgument("'" + name + "' is a reserved word");
}

void Vocabulary::add_constant(const std::string& name) {
  check_fresh(name);
  constants_.insert(name);
}

void Vocabulary::add_variable(const std::string& name) {
  check_fresh(name);
  variables_.insert(name);
}

void Vocabulary::add_function(const std::string& name, std::size_t arity) {
  check_fresh(name);
  if (arity == 0) throw InvalidArgument("function '" + name + "' must have arity >= 1");
  functions_.emplace(name, arity);
}

void Vocabulary::add_predicate(const std::string& name, std::size_t arity) {
  check_fresh(name);
  predicates_.emplace(name, arity);
}

void Vocabulary::enable_arithmetic() {
  if (arithmetic_) return;
  for (auto f : kArithmeticFunctions) add_function(std::string(f), 2);
  for (auto p : kArithmeticPredicates) add_predicate(std::string(p), 2);
  arithmetic_ = true;
}

bool Vocabulary::is_constant(std::string_view name) const {
  return constants_.count(std::string(name)) > 0 || (arithmetic_ && is_numeric_literal(name));
}

bool Vocabulary::is_declared(std::string_view name) const {
  return is_constant(name) || is_variable(name) || is_function(name) || is_predicate(name);
}

std::size_t Vocabulary::function_arity(std::string_view name) const {
  auto it = functions_.find(std::string(name));
  if (it == functions_.end()) throw UndeclaredIdentifier(std::string(name));
  return it->second;
}

std::size_t Vocabulary::predicate_arity(std::string_view name) const {
  auto it = predicates_.find(std::string(name));
  if (it == predicates_.end()) throw UndeclaredIdentifier(std::string(name));
  return it->second;
}

Term Term::constant(std::string name) { return Term(Kind::Constant, std::move(name), {}); }
Term Term::variable(std::string name) { return Term(Kind::Variable, std::move(name), {}); }
Term Term::apply(std::string function, std::vector<Term> args) {
  return Term(Kind::Application, std::move(function), std::move(args));
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  return Formula(Kind::Atom, std::move(predicate), std::move(args), {});
}
Formula Formula::negation(Formula operand) { return Formula(Kind::Not, {}, {}, {std::move(operand)}); }
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(Kind::And, {}, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(Kind::Or, {}, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(Kind::Implies, {}, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::forall(std::string variable, Formula body) {
  return Formula(Kind::Forall, std::move(variable), {}, {std::move(body)});
}
Formula Formula::exists(std::string variable, Formula body) {
  return Formula(Kind::Exists, std::move(variable), {}, {std::move(body)});
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength of term operators; primaries bind tightest.
int term_level(const Term& t) {
  if (t.kind() == Term::Kind::Application && t.args().size() == 2) {
    if (t.symbol() == "+" || t.symbol() == "-") return 1;
    if (t.symbol() == "*" || t.symbol() == "/") return 2;
  }
  return 3;
}

void print_term(const Term& t, int required, std::string& out) {
  int level = term_level(t);
  bool parens = level < required;
  if (parens) out += '(';
  if (level < 3) {
    // Left-associative: the right operand of an equal-strength operator needs parentheses.
    print_term(t.args()[0], level, out);
    out += t.symbol();
    print_term(t.args()[1], level + 1, out);
  } else {
    out += t.symbol();
    if (t.kind() == Term::Kind::Application) {
      out += '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i > 0) out += ',';
        print_term(t.args()[i], 0, out);
      }
      out += ')';
    }
  }
  if (parens) out += ')';
}

// 0: quantifier / formula position, 1: ->, 2: |, 3: &, 4: unary and atoms.
int formula_level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return 0;
    case Formula::Kind::Implies:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::And:
      return 3;
    default:
      return 4;
  }
}

void print_formula(const Formula& f, int required, std::string& out) {
  int level = formula_level(f);
  bool parens = level < required;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Atom:
      if (f.args().size() == 2 && is_infix_symbol(f.symbol())) {
        print_term(f.args()[0], 0, out);
        out += ' ';
        out += f.symbol();
        out += ' ';
        print_term(f.args()[1], 0, out);
      } else {
        out += f.symbol();
        if (!f.args().empty()) {
          out += '(';
          for (std::size_t i = 0; i < f.args().size(); ++i) {
            if (i > 0) out += ',';
            print_term(f.args()[i], 0, out);
          }
          out += ')';
        }
      }
      break;
    case Formula::Kind::Not:
      out += '!';
      print_formula(f.operand(), 4, out);
      break;
    case Formula::Kind::And:
      print_formula(f.lhs(), 3, out);
      out += " & ";
      print_formula(f.rhs(), 4, out);
      break;
    case Formula::Kind::Or:
      print_formula(f.lhs(), 2, out);
      out += " | ";
      print_formula(f.rhs(), 3, out);
      break;
    case Formula::Kind::Implies:
      print_formula(f.lhs(), 2, out);
      out += " -> ";
      print_formula(f.rhs(), 1, out);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      out += f.kind() == Formula::Kind::Forall ? "forall " : "exists ";
      out += f.symbol();
      out += ". ";
      print_formula(f.body(), 0, out);
      break;
  }
  if (parens) out += ')';
}

void collect_variables(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Variable) out.insert(t.symbol());
  for (const auto& a : t.args()) collect_variables(a, out);
}

}  // namespace

std::string format_term(const Term& t) {
  std::string out;
  print_term(t, 0, out);
  return out;
}

std::string format_formula(const Formula& f) {
  std::string out;
  print_formula(f, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Variables and substitution

std::set<std::string> variables_of(const Term& t) {
  std::set<std::string> out;
  collect_variables(t, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const auto& a : f.args()) collect_variables(a, out);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      out = free_variables(f.body());
      out.erase(f.symbol());
      break;
    default:
      for (const auto& c : f.children()) out.merge(free_variables(c));
      break;
  }
  return out;
}

Term substitute(const Term& t, const std::string& x, const std::string& c) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t.symbol() == x ? Term::constant(c) : t;
    case Term::Kind::Constant:
      return t;
    case Term::Kind::Application: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute(a, x, c));
      return Term::apply(t.symbol(), std::move(args));
    }
  }
  return t;
}

namespace {

Formula substitute_unchecked(const Formula& f, const std::string& x, const std::string& c) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const auto& a : f.args()) args.push_back(substitute(a, x, c));
      return Formula::atom(f.symbol(), std::move(args));
    }
    case Formula::Kind::Not:
      return Formula::negation(substitute_unchecked(f.operand(), x, c));
    case Formula::Kind::And:
      return Formula::conjunction(substitute_unchecked(f.lhs(), x, c), substitute_unchecked(f.rhs(), x, c));
    case Formula::Kind::Or:
      return Formula::disjunction(substitute_unchecked(f.lhs(), x, c), substitute_unchecked(f.rhs(), x, c));
    case Formula::Kind::Implies:
      return Formula::implication(substitute_unchecked(f.lhs(), x, c), substitute_unchecked(f.rhs(), x, c));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      if (f.symbol() == x) return f;  // x is bound below this point
      return f.kind() == Formula::Kind::Forall ? Formula::forall(f.symbol(), substitute_unchecked(f.body(), x, c))
                                               : Formula::exists(f.symbol(), substitute_unchecked(f.body(), x, c));
  }
  return f;
}

}  // namespace

Formula substitute(const Formula& f, const std::string& x, const std::string& c, const Vocabulary& vocab) {
  if (!vocab.is_constant(c)) throw InvalidArgument("'" + c + "' is not a constant");
  return substitute_unchecked(f, x, c);
}

void check_well_formed(const Term& t, const Vocabulary& vocab) {
  switch (t.kind()) {
    case Term::Kind::Constant:
      if (!vocab.is_constant(t.symbol())) throw UndeclaredIdentifier(t.symbol());
      break;
    case Term::Kind::Variable:
      if (!vocab.is_variable(t.symbol())) throw UndeclaredIdentifier(t.symbol());
      break;
    case Term::Kind::Application: {
      std::size_t arity = vocab.function_arity(t.symbol());
      if (arity != t.args().size()) throw ArityMismatch(t.symbol(), arity, t.args().size());
      for (const auto& a : t.args()) check_well_formed(a, vocab);
      break;
    }
  }
}

void check_well_formed(const Formula& f, const Vocabulary& vocab) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::size_t arity = vocab.predicate_arity(f.symbol());
      if (arity != f.args().size()) throw ArityMismatch(f.symbol(), arity, f.args().size());
      for (const auto& a : f.args()) check_well_formed(a, vocab);
      break;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      if (!vocab.is_variable(f.symbol())) throw UndeclaredIdentifier(f.symbol());
      check_well_formed(f.body(), vocab);
      break;
    default:
      for (const auto& c : f.children()) check_well_formed(c, vocab);
      break;
  }
}

std::size_t operator_count(const Term& t) {
  std::size_t n = t.kind() == Term::Kind::Application ? 1 : 0;
  for (const auto& a : t.args()) n += operator_count(a);
  return n;
}

std::size_t operator_count(const Formula& f) {
  std::size_t n = f.kind() == Formula::Kind::Atom ? 0 : 1;
  for (const auto& a : f.args()) n += operator_count(a);
  for (const auto& c : f.children()) n += operator_count(c);
  return n;
}

}  // namespace predabs
