// SPDX-License-Identifier: Apache-2.0
#include "semantics.hpp"

#include <algorithm>
#include <limits>

#include "error.hpp"

namespace predabs {

namespace {

// Variables bound by enclosing quantifiers, innermost last.
using Bindings = std::vector<std::pair<std::string, std::string>>;

const std::string* lookup_binding(const Bindings& env, const std::string& var) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == var) return &it->second;
  return nullptr;
}

std::size_t entity_of_constant(const ExtensionalModel& m, const std::string& c) {
  auto it = m.constants.find(c);
  if (it == m.constants.end()) throw EvaluationError("constant '" + c + "' is not interpreted by the model");
  return it->second;
}

std::size_t eval_extensional(const Term& t, const ExtensionalModel& m, const Bindings& env) {
  switch (t.kind()) {
    case Term::Kind::Constant:
      return entity_of_constant(m, t.symbol());
    case Term::Kind::Variable: {
      const std::string* c = lookup_binding(env, t.symbol());
      if (c == nullptr) throw EvaluationError("free variable '" + t.symbol() + "' in evaluated term");
      return entity_of_constant(m, *c);
    }
    case Term::Kind::Application: {
      auto it = m.functions.find(t.symbol());
      if (it == m.functions.end())
        throw EvaluationError("function '" + t.symbol() + "' is not interpreted by the model");
      Tuple args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(eval_extensional(a, m, env));
      auto value = it->second.values.find(args);
      if (value == it->second.values.end())
        throw EvaluationError("function '" + t.symbol() + "' is not total in the model");
      return value->second;
    }
  }
  return 0;
}

// nullopt marks a term made undefined by division by zero.
std::optional<Rational> eval_computed(const Term& t, const ComputedModel& m) {
  switch (t.kind()) {
    case Term::Kind::Constant: {
      if (is_numeric_literal(t.symbol())) return Rational::parse(t.symbol());
      auto it = m.values.find(t.symbol());
      if (it == m.values.end()) throw EvaluationError("constant '" + t.symbol() + "' has no value in the model");
      return it->second;
    }
    case Term::Kind::Variable:
      throw EvaluationError("free variable '" + t.symbol() + "' in evaluated term");
    case Term::Kind::Application: {
      if (t.args().size() != 2 || !is_infix_symbol(t.symbol()))
        throw EvaluationError("function '" + t.symbol() + "' is not interpreted by a computed model");
      auto lhs = eval_computed(t.args()[0], m);
      auto rhs = eval_computed(t.args()[1], m);
      if (!lhs || !rhs) return std::nullopt;
      const std::string& op = t.symbol();
      if (op == "+") return *lhs + *rhs;
      if (op == "-") return *lhs - *rhs;
      if (op == "*") return *lhs * *rhs;
      if (op == "/") {
        if (rhs->is_zero()) return std::nullopt;
        return *lhs / *rhs;
      }
      throw EvaluationError("'" + op + "' is a predicate, not a function");
    }
  }
  return std::nullopt;
}

bool eval_atom(const Formula& f, const ExtensionalModel& m, const Bindings& env) {
  Tuple args;
  args.reserve(f.args().size());
  for (const auto& a : f.args()) args.push_back(eval_extensional(a, m, env));
  auto it = m.predicates.find(f.symbol());
  if (it == m.predicates.end()) return false;
  return it->second.tuples.count(args) > 0;
}

bool eval_atom(const Formula& f, const ComputedModel& m) {
  if (f.args().size() != 2 || !is_infix_symbol(f.symbol()))
    throw EvaluationError("predicate '" + f.symbol() + "' is not interpreted by a computed model");
  auto lhs = eval_computed(f.args()[0], m);
  auto rhs = eval_computed(f.args()[1], m);
  if (!lhs || !rhs) return false;
  if (f.symbol() == "=") return *lhs == *rhs;
  if (f.symbol() == "<") return *lhs < *rhs;
  if (f.symbol() == ">") return *lhs > *rhs;
  throw EvaluationError("'" + f.symbol() + "' is a function, not a predicate");
}

template <typename ModelT>
bool eval(const Formula& f, const ModelT& m, Bindings& env) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      if constexpr (std::is_same_v<ModelT, ExtensionalModel>) {
        return eval_atom(f, m, env);
      } else {
        return eval_atom(f, m);
      }
    case Formula::Kind::Not:
      return !eval(f.operand(), m, env);
    case Formula::Kind::And:
      return eval(f.lhs(), m, env) && eval(f.rhs(), m, env);
    case Formula::Kind::Or:
      return eval(f.lhs(), m, env) || eval(f.rhs(), m, env);
    case Formula::Kind::Implies:
      return !eval(f.lhs(), m, env) || eval(f.rhs(), m, env);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if constexpr (std::is_same_v<ModelT, ComputedModel>) {
        throw EvaluationError("quantified formulas cannot be evaluated on a computed model");
      } else {
        // min / max over the constants: binding x to c is evaluation of body[c/x].
        const bool universal = f.kind() == Formula::Kind::Forall;
        for (const auto& [constant, entity] : m.constants) {
          env.emplace_back(f.symbol(), constant);
          bool value = eval(f.body(), m, env);
          env.pop_back();
          if (universal && !value) return false;
          if (!universal && value) return true;
        }
        return universal;
      }
    }
  }
  return false;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

// All tuples over {0..n-1}^arity in lexicographic order.
std::vector<Tuple> all_tuples(std::size_t n, std::size_t arity) {
  std::vector<Tuple> out;
  Tuple t(arity, 0);
  std::size_t count = saturating_pow(n, arity);
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(t);
    for (std::size_t i = arity; i-- > 0;) {
      if (++t[i] < n) break;
      t[i] = 0;
    }
  }
  return out;
}

// Number of surjections from a k-element set onto an n-element set.
std::size_t surjection_count(std::size_t k, std::size_t n) {
  __int128 total = 0;
  __int128 binom = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    __int128 term = binom;
    for (std::size_t i = 0; i < k; ++i) {
      term *= static_cast<__int128>(n - j);
      if (term > static_cast<__int128>(std::numeric_limits<std::size_t>::max()) * 4)
        return std::numeric_limits<std::size_t>::max();
    }
    total += (j % 2 == 0) ? term : -term;
    binom = binom * static_cast<__int128>(n - j) / static_cast<__int128>(j + 1);
  }
  if (total > static_cast<__int128>(std::numeric_limits<std::size_t>::max())) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(total);
}

}  // namespace

Entity eval_term(const Term& t, const Model& m) {
  if (const auto* ext = std::get_if<ExtensionalModel>(&m)) return Entity{eval_extensional(t, *ext, {})};
  auto value = eval_computed(t, std::get<ComputedModel>(m));
  if (!value) throw EvaluationError("term '" + format_term(t) + "' is undefined (division by zero)");
  return Entity{*value};
}

bool eval_formula(const Formula& f, const Model& m) {
  Bindings env;
  return std::visit([&](const auto& model) { return eval(f, model, env); }, m);
}

std::vector<Violation> validate_model(const ExtensionalModel& m, const Vocabulary& vocab) {
  using K = Violation::Kind;
  std::vector<Violation> out;
  const std::size_t n = m.domain.size();
  if (n == 0) out.push_back({K::EmptyDomain, "domain is empty"});

  std::vector<bool> named(n, false);
  for (const auto& [c, e] : m.constants) {
    if (!vocab.constants().count(c)) out.push_back({K::UnknownSymbol, "constant '" + c + "' is not in the vocabulary"});
    if (e >= n) {
      out.push_back({K::UnknownEntity, "constant '" + c + "' denotes an entity outside the domain"});
    } else {
      named[e] = true;
    }
  }
  for (const auto& c : vocab.constants())
    if (!m.constants.count(c)) out.push_back({K::ConstantMissing, "constant '" + c + "' has no denotation"});
  for (std::size_t e = 0; e < n; ++e)
    if (!named[e]) out.push_back({K::NotSurjective, "entity '" + m.domain[e] + "' is not named by any constant (the constant map must be surjective)"});

  for (const auto& [name, rel] : m.predicates) {
    if (!vocab.is_predicate(name)) {
      out.push_back({K::UnknownSymbol, "predicate '" + name + "' is not in the vocabulary"});
      continue;
    }
    std::size_t arity = vocab.predicate_arity(name);
    for (const auto& t : rel.tuples) {
      if (t.size() != arity) {
        out.push_back({K::ArityMismatch, "predicate '" + name + "' has a tuple of length " + std::to_string(t.size()) +
                                             ", expected " + std::to_string(arity)});
      } else if (std::ranges::any_of(t, [n](std::size_t e) { return e >= n; })) {
        out.push_back({K::UnknownEntity, "predicate '" + name + "' mentions an entity outside the domain"});
      }
    }
  }

  for (const auto& [name, arity] : vocab.functions()) {
    auto it = m.functions.find(name);
    if (it == m.functions.end()) {
      out.push_back({K::FunctionNotTotal, "function '" + name + "' has no table"});
      continue;
    }
    for (const auto& t : all_tuples(n, arity)) {
      auto v = it->second.values.find(t);
      if (v == it->second.values.end()) {
        out.push_back({K::FunctionNotTotal, "function '" + name + "' is not total on the domain"});
        break;
      }
    }
    for (const auto& [args, value] : it->second.values) {
      if (args.size() != arity) {
        out.push_back({K::ArityMismatch, "function '" + name + "' has an entry with " + std::to_string(args.size()) +
                                             " argument(s), expected " + std::to_string(arity)});
      } else if (value >= n || std::ranges::any_of(args, [n](std::size_t e) { return e >= n; })) {
        out.push_back({K::UnknownEntity, "function '" + name + "' mentions an entity outside the domain"});
      }
    }
  }
  for (const auto& [name, table] : m.functions)
    if (!vocab.is_function(name)) out.push_back({K::UnknownSymbol, "function '" + name + "' is not in the vocabulary"});
  return out;
}

std::vector<Violation> validate_model(const ComputedModel& m, const Vocabulary& vocab) {
  using K = Violation::Kind;
  std::vector<Violation> out;
  if (!vocab.arithmetic())
    out.push_back({K::UnknownSymbol, "computed models require an arithmetic vocabulary"});
  for (const auto& [name, value] : m.values)
    if (!vocab.constants().count(name))
      out.push_back({K::UnknownSymbol, "constant '" + name + "' is not in the vocabulary"});
  for (const auto& c : vocab.constants())
    if (!m.values.count(c)) out.push_back({K::ConstantMissing, "constant '" + c + "' has no value"});
  return out;
}

std::vector<Violation> validate_model(const Model& m, const Vocabulary& vocab) {
  return std::visit([&](const auto& model) { return validate_model(model, vocab); }, m);
}

std::vector<ExtensionalModel> enumerate_models(const Vocabulary& vocab, std::size_t domain_size, std::size_t limit) {
  if (domain_size == 0) throw InvalidArgument("domain size must be positive");
  const std::vector<std::string> constants(vocab.constants().begin(), vocab.constants().end());
  const std::size_t n = domain_size;
  if (constants.size() < n) return {};  // no surjective constant map exists

  // Predicate slots: (predicate, tuple) pairs, predicates by name, tuples lexicographic.
  std::vector<std::pair<std::string, Tuple>> slots;
  for (const auto& [name, arity] : vocab.predicates())
    for (auto& t : all_tuples(n, arity)) slots.emplace_back(name, std::move(t));

  struct FunctionSlots {
    std::string name;
    std::size_t arity;
    std::vector<Tuple> inputs;
  };
  std::vector<FunctionSlots> fslots;
  std::size_t function_cells = 0;
  for (const auto& [name, arity] : vocab.functions()) {
    fslots.push_back({name, arity, all_tuples(n, arity)});
    function_cells += fslots.back().inputs.size();
  }

  const std::size_t total = saturating_mul(
      surjection_count(constants.size(), n),
      saturating_mul(slots.size() >= 63 ? std::numeric_limits<std::size_t>::max() : (std::size_t{1} << slots.size()),
                     saturating_pow(n, function_cells)));
  if (total > limit)
    throw LimitExceeded("model enumeration would produce " +
                        (total == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                          : std::to_string(total)) +
                        " models, limit is " + std::to_string(limit));

  std::vector<ExtensionalModel> out;
  std::vector<std::string> domain;
  for (std::size_t e = 0; e < n; ++e) domain.push_back("e" + std::to_string(e + 1));

  std::vector<std::size_t> const_map(constants.size(), 0);
  const std::size_t const_maps = saturating_pow(n, constants.size());
  for (std::size_t cm = 0; cm < const_maps; ++cm) {
    if (cm > 0) {
      for (std::size_t i = const_map.size(); i-- > 0;) {
        if (++const_map[i] < n) break;
        const_map[i] = 0;
      }
    }
    std::vector<bool> hit(n, false);
    for (auto e : const_map) hit[e] = true;
    if (std::ranges::find(hit, false) != hit.end()) continue;

    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
      std::vector<std::size_t> outputs(function_cells, 0);
      const std::size_t tables = saturating_pow(n, function_cells);
      for (std::size_t ft = 0; ft < tables; ++ft) {
        if (ft > 0) {
          for (std::size_t i = outputs.size(); i-- > 0;) {
            if (++outputs[i] < n) break;
            outputs[i] = 0;
          }
        }
        ExtensionalModel m;
        m.domain = domain;
        for (std::size_t i = 0; i < constants.size(); ++i) m.constants[constants[i]] = const_map[i];
        for (const auto& [name, arity] : vocab.predicates()) m.predicates[name].arity = arity;
        for (std::size_t s = 0; s < slots.size(); ++s)
          if (mask & (std::size_t{1} << s)) m.predicates[slots[s].first].tuples.insert(slots[s].second);
        std::size_t cell = 0;
        for (const auto& f : fslots) {
          FunctionTable& table = m.functions[f.name];
          table.arity = f.arity;
          for (const auto& in : f.inputs) table.values[in] = outputs[cell++];
        }
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

std::string content_key(const Model& m) {
  if (const auto* c = std::get_if<ComputedModel>(&m)) {
    std::string key = "computed";
    for (const auto& [name, value] : c->values) key += ";" + name + "=" + value.str();
    return key;
  }
  const auto& ext = std::get<ExtensionalModel>(m);
  const std::vector<std::string>& rep = ext.domain;
  auto tuple_text = [&](const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + (t[i] < rep.size() ? rep[t[i]] : "?");
    return s + ")";
  };
  std::string key = "ext|";
  for (const auto& e : ext.domain) key += e + ",";
  for (const auto& [name, e] : ext.constants) key += ";" + name + "=" + (e < rep.size() ? rep[e] : "?");
  for (const auto& [name, rel] : ext.predicates) {
    if (rel.tuples.empty()) continue;
    std::vector<std::string> ts;
    for (const auto& t : rel.tuples) ts.push_back(tuple_text(t));
    std::ranges::sort(ts);
    key += ";" + name + "{";
    for (const auto& t : ts) key += t;
    key += "}";
  }
  for (const auto& [name, table] : ext.functions) {
    std::vector<std::string> ts;
    for (const auto& [args, value] : table.values) ts.push_back(tuple_text(args) + ">" + (value < rep.size() ? rep[value] : "?"));
    std::ranges::sort(ts);
    key += ";" + name + "{";
    for (const auto& t : ts) key += t;
    key += "}";
  }
  return key;
}

}  // namespace predabs
