// SPDX-License-Identifier: Apache-2.0
#include "hypothesis.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "error.hpp"
#include "semantics.hpp"

namespace predabs {

namespace {

constexpr const char* kOperators[] = {"+", "-", "*", "/"};

bool commutative(const std::string& op) { return op == "+" || op == "*"; }

std::size_t inverse_count(const Term& t) {
  std::size_t n = (t.kind() == Term::Kind::Application && (t.symbol() == "-" || t.symbol() == "/")) ? 1 : 0;
  for (const auto& a : t.args()) n += inverse_count(a);
  return n;
}

std::size_t inverse_count(const Formula& f) {
  std::size_t n = 0;
  for (const auto& a : f.args()) n += inverse_count(a);
  for (const auto& c : f.children()) n += inverse_count(c);
  return n;
}

// Sides of an equation: more operators first, literals last, then smaller text.
bool side_precedes(const Term& a, const Term& b) {
  std::size_t oa = operator_count(a), ob = operator_count(b);
  if (oa != ob) return oa > ob;
  bool la = a.kind() == Term::Kind::Constant && is_numeric_literal(a.symbol());
  bool lb = b.kind() == Term::Kind::Constant && is_numeric_literal(b.symbol());
  if (la != lb) return lb;
  return format_term(a) < format_term(b);
}

Formula equation(Term a, Term b) {
  if (side_precedes(b, a)) std::swap(a, b);
  return Formula::atom("=", {std::move(a), std::move(b)});
}

// Fixed probe valuations for recognising identities. Distinct, non-integer and
// away from small coincidences.
std::vector<ComputedModel> probe_models(const Vocabulary& vocab) {
  static const Rational kSeeds[] = {Rational(1031, 7), Rational(-389, 13), Rational(2713, 29),
                                    Rational(557, 11), Rational(-1999, 17), Rational(4253, 31)};
  std::vector<ComputedModel> out;
  for (std::size_t round = 0; round < 3; ++round) {
    ComputedModel m;
    std::size_t i = 0;
    for (const auto& c : vocab.constants()) {
      m.values[c] = kSeeds[(i + 2 * round) % std::size(kSeeds)] * Rational(static_cast<std::int64_t>(round + i + 1));
      ++i;
    }
    out.push_back(std::move(m));
  }
  return out;
}

bool is_identity(const Term& lhs, const Term& rhs, const std::vector<ComputedModel>& probes) {
  for (const auto& p : probes) {
    Model m = p;
    try {
      if (!(eval_term(lhs, m) == eval_term(rhs, m))) return false;
    } catch (const EvaluationError&) {
      return false;
    }
  }
  return true;
}

std::vector<RankedHypothesis> rank(std::vector<RankedHypothesis> hs) {
  std::ranges::sort(hs, [](const RankedHypothesis& a, const RankedHypothesis& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.complexity != b.complexity) return a.complexity < b.complexity;
    if (a.inverse_operators != b.inverse_operators) return a.inverse_operators < b.inverse_operators;
    return a.text < b.text;
  });
  return hs;
}

template <typename Score>
std::vector<RankedHypothesis> score_all(std::span<const Formula> candidates, Score score) {
  if (candidates.empty()) throw InvalidArgument("no candidate formulas to rank");
  std::vector<RankedHypothesis> out;
  std::set<std::string> seen;
  for (const auto& raw : candidates) {
    Formula f = canonicalize(raw);
    std::string text = format_formula(f);
    if (!seen.insert(text).second) continue;
    Rational s = score(f);
    out.push_back({f, std::move(text), s, operator_count(f), inverse_count(f)});
  }
  return rank(std::move(out));
}

}  // namespace

Term canonicalize(const Term& t) {
  if (t.kind() != Term::Kind::Application) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(canonicalize(a));
  if (commutative(t.symbol()) && args.size() == 2 && format_term(args[1]) < format_term(args[0]))
    std::swap(args[0], args[1]);
  return Term::apply(t.symbol(), std::move(args));
}

Formula canonicalize(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<Term> args;
      for (const auto& a : f.args()) args.push_back(canonicalize(a));
      if (f.symbol() == "=" && args.size() == 2) return equation(std::move(args[0]), std::move(args[1]));
      return Formula::atom(f.symbol(), std::move(args));
    }
    case Formula::Kind::Not:
      return Formula::negation(canonicalize(f.operand()));
    case Formula::Kind::And:
      return Formula::conjunction(canonicalize(f.lhs()), canonicalize(f.rhs()));
    case Formula::Kind::Or:
      return Formula::disjunction(canonicalize(f.lhs()), canonicalize(f.rhs()));
    case Formula::Kind::Implies:
      return Formula::implication(canonicalize(f.lhs()), canonicalize(f.rhs()));
    case Formula::Kind::Forall:
      return Formula::forall(f.symbol(), canonicalize(f.body()));
    case Formula::Kind::Exists:
      return Formula::exists(f.symbol(), canonicalize(f.body()));
  }
  return f;
}

std::vector<Formula> enumerate_candidates(const Vocabulary& vocab, std::string_view grammar, const SearchBudget& budget) {
  if (grammar != kArithEquation) throw InvalidArgument("unknown candidate grammar '" + std::string(grammar) + "'");
  if (!vocab.arithmetic()) throw InvalidArgument("the arith-equation grammar needs an arithmetic vocabulary");
  if (budget.candidate_cap == 0) throw InvalidArgument("candidate cap must be positive");

  // Terms by exact operator count, canonical and duplicate-free.
  std::vector<std::vector<Term>> levels(budget.max_operators + 1);
  std::set<std::string> seen_terms;
  auto add_term = [&](std::size_t level, Term t) {
    if (seen_terms.insert(format_term(t)).second) levels[level].push_back(std::move(t));
  };
  for (const auto& c : vocab.constants()) add_term(0, Term::constant(c));
  for (auto lit : budget.literal_pool) {
    if (lit < 0) throw InvalidArgument("literal pool entries must be non-negative");
    add_term(0, Term::constant(std::to_string(lit)));
  }
  for (std::size_t k = 1; k <= budget.max_operators; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      for (const auto& a : levels[i]) {
        for (const auto& b : levels[k - 1 - i]) {
          for (const char* op : kOperators) {
            Term t = canonicalize(Term::apply(op, {a, b}));
            add_term(k, std::move(t));
            if (seen_terms.size() > budget.candidate_cap * 4 + 64)
              throw LimitExceeded("term space exceeds the candidate cap of " + std::to_string(budget.candidate_cap));
          }
        }
      }
    }
  }

  std::vector<Term> terms;
  for (const auto& level : levels) terms.insert(terms.end(), level.begin(), level.end());
  const auto probes = probe_models(vocab);

  std::map<std::string, Formula> equations;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (operator_count(terms[i]) + operator_count(terms[j]) > budget.max_operators) continue;
      if (is_identity(terms[i], terms[j], probes)) continue;
      Formula eq = equation(terms[i], terms[j]);
      equations.emplace(format_formula(eq), std::move(eq));
      if (equations.size() > budget.candidate_cap)
        throw LimitExceeded("candidate space exceeds the cap of " + std::to_string(budget.candidate_cap));
    }
  }

  std::vector<Formula> out;
  out.reserve(equations.size());
  for (auto& [text, f] : equations) out.push_back(std::move(f));
  std::ranges::stable_sort(out, [](const Formula& a, const Formula& b) { return operator_count(a) < operator_count(b); });
  return out;
}

std::vector<RankedHypothesis> hypothesize(const Corpus& c, std::span<const Formula> candidates, const MuMode& mode) {
  return score_all(candidates, [&](const Formula& f) { return prob(f, c, mode); });
}

std::vector<RankedHypothesis> select_answer(const Corpus& c, std::span<const Formula> givens,
                                            std::span<const Formula> candidates, const MuMode& mode) {
  return score_all(candidates, [&](const Formula& f) { return prob_conditional(f, givens, c, mode); });
}

}  // namespace predabs
