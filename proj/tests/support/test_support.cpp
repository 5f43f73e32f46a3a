// SPDX-License-Identifier: Apache-2.0
#include "test_support.hpp"

#include <algorithm>
#include <bit>
#include <set>

#ifndef PREDABS_SCENARIO_DIR
#error "PREDABS_SCENARIO_DIR must be defined"
#endif

namespace predabs::testing {

std::string scenario_path(const std::string& file) { return std::string(PREDABS_SCENARIO_DIR) + "/" + file; }

Scenario load_bundled(const std::string& file) { return load_scenario(scenario_path(file)); }

Formula F(const Vocabulary& v, const std::string& text) { return parse_formula(text, v); }

std::vector<Formula> Fs(const Vocabulary& v, std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse_formula(t, v));
  return out;
}

unsigned blames_mask(const ExtensionalModel& m) {
  std::size_t a = m.constants.at("alice"), b = m.constants.at("bob");
  const auto& rel = m.predicates.at("Blames").tuples;
  unsigned mask = 0;
  if (rel.count({a, a})) mask |= 1;
  if (rel.count({a, b})) mask |= 2;
  if (rel.count({b, a})) mask |= 4;
  if (rel.count({b, b})) mask |= 8;
  return mask;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

const char* kConstants[] = {"a", "b", "c"};
const char* kVariables[] = {"x", "y"};

Formula random_atom(const Vocabulary& v, std::mt19937_64& rng, const std::vector<std::string>& scope) {
  std::vector<std::pair<std::string, std::size_t>> preds(v.predicates().begin(), v.predicates().end());
  const auto& [name, arity] = preds[pick(rng, 0, preds.size() - 1)];
  std::vector<std::string> consts(v.constants().begin(), v.constants().end());
  std::vector<Term> args;
  for (std::size_t i = 0; i < arity; ++i) {
    if (!scope.empty() && pick(rng, 0, 2) > 0) {
      args.push_back(Term::variable(scope[pick(rng, 0, scope.size() - 1)]));
    } else {
      args.push_back(Term::constant(consts[pick(rng, 0, consts.size() - 1)]));
    }
  }
  return Formula::atom(name, std::move(args));
}

Formula random_formula_in(const Vocabulary& v, std::mt19937_64& rng, int depth, std::vector<std::string>& scope) {
  if (depth <= 0 || pick(rng, 0, 3) == 0) return random_atom(v, rng, scope);
  switch (pick(rng, 0, 5)) {
    case 0:
      return Formula::negation(random_formula_in(v, rng, depth - 1, scope));
    case 1:
      return Formula::conjunction(random_formula_in(v, rng, depth - 1, scope), random_formula_in(v, rng, depth - 1, scope));
    case 2:
      return Formula::disjunction(random_formula_in(v, rng, depth - 1, scope), random_formula_in(v, rng, depth - 1, scope));
    case 3:
      return Formula::implication(random_formula_in(v, rng, depth - 1, scope), random_formula_in(v, rng, depth - 1, scope));
    default: {
      std::string var = kVariables[scope.size() % 2];
      if (std::find(scope.begin(), scope.end(), var) != scope.end()) return random_atom(v, rng, scope);
      scope.push_back(var);
      Formula body = random_formula_in(v, rng, depth - 1, scope);
      scope.pop_back();
      return pick(rng, 0, 1) ? Formula::forall(var, std::move(body)) : Formula::exists(var, std::move(body));
    }
  }
}

}  // namespace

Formula random_formula(const Vocabulary& v, std::mt19937_64& rng, int depth) {
  std::vector<std::string> scope;
  return random_formula_in(v, rng, depth, scope);
}

std::vector<Formula> random_delta(const Vocabulary& v, std::mt19937_64& rng, std::size_t max_size) {
  std::size_t n = pick(rng, 0, max_size);
  std::vector<Formula> out;
  for (std::size_t i = 0; i < n; ++i) {
    Formula f = random_formula(v, rng, 2);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  }
  return out;
}

RandomCase random_case(std::mt19937_64& rng, std::size_t max_space) {
  while (true) {
    Vocabulary v;
    std::size_t nc = pick(rng, 1, 3);
    for (std::size_t i = 0; i < nc; ++i) v.add_constant(kConstants[i]);
    for (const char* x : kVariables) v.add_variable(x);
    std::size_t np = pick(rng, 1, 2);
    const char* names[] = {"P", "R"};
    for (std::size_t i = 0; i < np; ++i) v.add_predicate(names[i], pick(rng, 1, 2));
    std::size_t n = pick(rng, 1, nc);
    std::vector<ExtensionalModel> all;
    try {
      all = enumerate_models(v, n, max_space);
    } catch (const LimitExceeded&) {
      continue;
    }
    if (all.empty()) continue;
    std::vector<NamedModel> space;
    for (std::size_t i = 0; i < all.size(); ++i) space.push_back({"E" + std::to_string(i + 1), std::move(all[i])});
    // Some cases draw the data from a few models so that several data share one.
    std::size_t k = pick(rng, 1, 12);
    std::size_t pool = pick(rng, 0, 1) ? space.size() : std::min<std::size_t>(space.size(), pick(rng, 1, 4));
    std::vector<std::size_t> candidates(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) candidates[i] = i;
    std::shuffle(candidates.begin(), candidates.end(), rng);
    candidates.resize(pool);
    std::vector<Corpus::Datum> data;
    // Small spaces are sometimes covered completely, making every model possible.
    if (space.size() <= 12 && pick(rng, 0, 2) == 0) {
      for (std::size_t m = 0; m < space.size(); ++m) data.push_back({"d" + std::to_string(m + 1), m});
      k = std::max(k, space.size());
      candidates.resize(space.size());
      for (std::size_t i = 0; i < space.size(); ++i) candidates[i] = i;
    }
    while (data.size() < k)
      data.push_back({"d" + std::to_string(data.size() + 1), candidates[pick(rng, 0, candidates.size() - 1)]});
    Corpus corpus(std::move(space), std::move(data));
    return RandomCase{Scenario{std::move(v), std::move(corpus), MuMode::one(), max_space}, n};
  }
}

std::vector<std::vector<bool>> truth_table(std::span<const Formula> formulas, const Corpus& c) {
  std::vector<std::vector<bool>> out;
  for (const auto& f : formulas) {
    std::vector<bool> row(c.model_count());
    for (std::size_t m = 0; m < c.model_count(); ++m) row[m] = eval_formula(f, c.model(m));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<bool> oracle_possible(const Corpus& c) {
  std::vector<bool> out(c.model_count(), false);
  for (const auto& d : c.data()) out[d.model] = true;
  return out;
}

OracleSubsets oracle_maximal_subsets(std::span<const Formula> delta, const Corpus& c, const std::vector<bool>& allowed) {
  auto table = truth_table(delta, c);
  std::size_t n = delta.size();
  auto satisfiable = [&](std::uint32_t mask) {
    for (std::size_t m = 0; m < c.model_count(); ++m) {
      if (!allowed[m]) continue;
      bool all = true;
      for (std::size_t i = 0; i < n && all; ++i)
        if ((mask >> i) & 1u) all = table[i][m];
      if (all) return true;
    }
    return false;
  };
  OracleSubsets out;
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!satisfiable(mask)) continue;
    bool is_max = true;
    for (std::size_t i = 0; i < n && is_max; ++i)
      if (!((mask >> i) & 1u) && satisfiable(mask | (1u << i))) is_max = false;
    if (is_max) maximal.push_back(mask);
  }
  auto to_indices = [&](std::uint32_t mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) idx.push_back(i);
    return idx;
  };
  std::size_t best = 0;
  for (auto mask : maximal) best = std::max<std::size_t>(best, std::popcount(mask));
  out.union_set.assign(c.model_count(), false);
  for (auto mask : maximal) {
    out.maximal.push_back(to_indices(mask));
    if (static_cast<std::size_t>(std::popcount(mask)) != best) continue;
    out.cardinality_maximal.push_back(to_indices(mask));
    for (std::size_t m = 0; m < c.model_count(); ++m) {
      if (!allowed[m]) continue;
      bool all = true;
      for (std::size_t i = 0; i < n && all; ++i)
        if ((mask >> i) & 1u) all = table[i][m];
      if (all) out.union_set[m] = true;
    }
  }
  std::sort(out.maximal.begin(), out.maximal.end());
  std::sort(out.cardinality_maximal.begin(), out.cardinality_maximal.end());
  return out;
}

bool oracle_conditional(const Formula& alpha, std::span<const Formula> delta, const Corpus& c, const Rational& mu,
                        Rational& out) {
  Rational num(0), den(0);
  Rational k(static_cast<std::int64_t>(c.size()));
  for (const auto& d : c.data()) {
    const Model& m = c.model(d.model);
    Rational w = Rational(1) / k;
    for (const auto& f : delta) w = w * (eval_formula(f, m) ? mu : Rational(1) - mu);
    den = den + w;
    num = num + w * (eval_formula(alpha, m) ? mu : Rational(1) - mu);
  }
  if (den.is_zero()) return false;
  out = num / den;
  return true;
}

bool oracle_restricted(const Formula& alpha, const Corpus& c, const std::vector<bool>& set, Rational& out) {
  std::int64_t num = 0, den = 0;
  for (const auto& d : c.data()) {
    if (!set[d.model]) continue;
    ++den;
    if (eval_formula(alpha, c.model(d.model))) ++num;
  }
  if (den == 0) return false;
  out = Rational(num, den);
  return true;
}

}  // namespace predabs::testing
