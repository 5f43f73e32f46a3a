// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "error.hpp"
#include "parser.hpp"
#include "semantics.hpp"
#include "test_support.hpp"

using namespace predabs;
using predabs::testing::blames_mask;

namespace {

Vocabulary blames_vocab() {
  Vocabulary v;
  v.add_constant("alice");
  v.add_constant("bob");
  v.add_variable("x");
  v.add_variable("y");
  v.add_predicate("Blames", 2);
  return v;
}

ExtensionalModel blames_model(std::set<Tuple> tuples) {
  ExtensionalModel m;
  m.domain = {"e1", "e2"};
  m.constants = {{"alice", 0}, {"bob", 1}};
  m.predicates["Blames"] = Relation{2, std::move(tuples)};
  return m;
}

bool holds(const char* text, const Model& m) { return eval_formula(parse_formula(text, blames_vocab()), m); }

}  // namespace

TEST_CASE("evaluating quantified formulas on a mutual-blame model") {
  Model m = blames_model({{0, 1}, {1, 0}});
  CHECK(holds("Blames(alice,bob)", m));
  CHECK_FALSE(holds("Blames(alice,alice)", m));
  CHECK(holds("forall x. exists y. Blames(x,y)", m));
  CHECK(holds("forall y. exists x. Blames(x,y)", m));
  CHECK_FALSE(holds("exists x. forall y. Blames(x,y)", m));
  CHECK_FALSE(holds("forall x. (exists y. Blames(x,y)) -> Blames(alice,x)", m));
  CHECK(holds("Blames(alice,bob) | !Blames(alice,bob)", m));
}

TEST_CASE("open formulas cannot be evaluated") {
  Model m = blames_model({});
  CHECK_THROWS_AS(holds("Blames(x,bob)", m), EvaluationError);
}

TEST_CASE("enumeration of the two-person blame space") {
  auto all = enumerate_models(blames_vocab(), 2);
  CHECK(all.size() == 32);
  std::set<std::string> keys;
  for (const auto& m : all) {
    CHECK(validate_model(m, blames_vocab()).empty());
    keys.insert(content_key(m));
  }
  CHECK(keys.size() == 32);
  // Each constant map pairs with every one of the 16 relations.
  std::map<std::pair<std::size_t, std::size_t>, std::set<unsigned>> by_map;
  for (const auto& m : all) by_map[{m.constants.at("alice"), m.constants.at("bob")}].insert(blames_mask(m));
  CHECK(by_map.size() == 2);
  for (const auto& [map, masks] : by_map) CHECK(masks.size() == 16);
  CHECK(enumerate_models(blames_vocab(), 1).size() == 2);
  CHECK(enumerate_models(blames_vocab(), 3).empty());
}

TEST_CASE("truth-set sizes over the 32 models match a mask oracle") {
  auto all = enumerate_models(blames_vocab(), 2);
  auto count = [&](const char* text) {
    return std::count_if(all.begin(), all.end(), [&](const ExtensionalModel& m) { return holds(text, m); });
  };
  CHECK(count("forall x. exists y. Blames(x,y)") == 18);
  for (const char* atom : {"Blames(alice,alice)", "Blames(alice,bob)", "Blames(bob,alice)", "Blames(bob,bob)"})
    CHECK(count(atom) == 16);
  for (const auto& m : all) {
    unsigned r = blames_mask(m);
    bool alice_some = (r & 1) || (r & 2);
    bool bob_some = (r & 4) || (r & 8);
    CHECK(holds("forall x. exists y. Blames(x,y)", m) == (alice_some && bob_some));
    bool alice_all = (r & 1) && (r & 2);
    bool bob_all = (r & 4) && (r & 8);
    CHECK(holds("exists x. forall y. Blames(x,y)", m) == (alice_all || bob_all));
  }
}

TEST_CASE("classical equivalences hold on random models") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    auto rc = testing::random_case(rng, 1024);
    const Vocabulary& v = rc.scenario.vocabulary;
    const Corpus& c = rc.scenario.corpus;
    for (int i = 0; i < 8; ++i) {
      Formula a = testing::random_formula(v, rng, 3);
      Formula b = testing::random_formula(v, rng, 3);
      for (std::size_t k = 0; k < std::min<std::size_t>(c.model_count(), 40); ++k) {
        const Model& m = c.model(k);
        bool ea = eval_formula(a, m), eb = eval_formula(b, m);
        CHECK(eval_formula(Formula::negation(Formula::negation(a)), m) == ea);
        CHECK(eval_formula(Formula::negation(Formula::conjunction(a, b)), m) ==
              eval_formula(Formula::disjunction(Formula::negation(a), Formula::negation(b)), m));
        CHECK(eval_formula(Formula::implication(a, b), m) == (!ea || eb));
      }
    }
  }
}

TEST_CASE("quantifiers agree with substitution over the constants") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 30; ++round) {
    auto rc = testing::random_case(rng, 1024);
    const Vocabulary& v = rc.scenario.vocabulary;
    const Corpus& c = rc.scenario.corpus;
    for (int i = 0; i < 6; ++i) {
      Formula body = testing::random_formula(v, rng, 2);
      if (free_variables(body).size() > 0) continue;
      // Wrap a closed atom-level body around x so the substitution has work to do.
      std::vector<Term> args(v.predicates().begin()->second, Term::variable("x"));
      Formula open = Formula::conjunction(Formula::atom(v.predicates().begin()->first, args), body);
      Formula all = Formula::forall("x", open);
      Formula some = Formula::exists("x", open);
      for (std::size_t k = 0; k < std::min<std::size_t>(c.model_count(), 30); ++k) {
        const Model& m = c.model(k);
        bool conj = true, disj = false;
        for (const auto& name : v.constants()) {
          bool t = eval_formula(substitute(open, "x", name, v), m);
          conj = conj && t;
          disj = disj || t;
        }
        CHECK(eval_formula(all, m) == conj);
        CHECK(eval_formula(some, m) == disj);
        CHECK(eval_formula(Formula::negation(all), m) == eval_formula(Formula::exists("x", Formula::negation(open)), m));
      }
    }
  }
}

TEST_CASE("model validation reports each defect") {
  Vocabulary v = blames_vocab();
  auto kinds = [&](const ExtensionalModel& m) {
    std::set<Violation::Kind> out;
    for (const auto& viol : validate_model(m, v)) out.insert(viol.kind);
    return out;
  };
  ExtensionalModel same = blames_model({});
  same.constants["bob"] = 0;
  CHECK(kinds(same).count(Violation::Kind::NotSurjective));

  ExtensionalModel missing = blames_model({});
  missing.constants.erase("bob");
  CHECK(kinds(missing).count(Violation::Kind::ConstantMissing));

  ExtensionalModel bad_tuple = blames_model({{0, 1, 1}});
  CHECK(kinds(bad_tuple).count(Violation::Kind::ArityMismatch));

  ExtensionalModel stranger = blames_model({});
  stranger.predicates["Loves"] = Relation{2, {}};
  CHECK(kinds(stranger).count(Violation::Kind::UnknownSymbol));

  ExtensionalModel empty;
  CHECK(kinds(empty).count(Violation::Kind::EmptyDomain));

  CHECK(validate_model(blames_model({{0, 0}}), v).empty());
}

TEST_CASE("functions must be total") {
  Vocabulary v = blames_vocab();
  v.add_function("mentor", 1);
  ExtensionalModel m = blames_model({});
  m.functions["mentor"] = FunctionTable{1, {{{0}, 1}}};
  bool found = false;
  for (const auto& viol : validate_model(m, v)) found = found || viol.kind == Violation::Kind::FunctionNotTotal;
  CHECK(found);
  m.functions["mentor"].values[{1}] = 1;
  CHECK(validate_model(m, v).empty());
  CHECK(eval_formula(parse_formula("Blames(mentor(alice),bob)", v), Model(m)) == false);
  auto counted = enumerate_models(v, 2);
  CHECK(counted.size() == 2 * 16 * 4);
}

TEST_CASE("enumeration refuses spaces beyond the limit") {
  Vocabulary v;
  for (const char* c : {"a", "b", "c"}) v.add_constant(c);
  v.add_predicate("R", 2);
  v.add_predicate("S", 2);
  CHECK_THROWS_AS(enumerate_models(v, 3, 1000), LimitExceeded);
  // One entity: each binary relation is either empty or the single pair.
  CHECK(enumerate_models(v, 1, 1000).size() == 4);
}

TEST_CASE("computed models evaluate arithmetic over rationals") {
  Vocabulary v;
  for (const char* c : {"top", "left", "right", "bottom"}) v.add_constant(c);
  v.add_variable("x");
  v.enable_arithmetic();
  ComputedModel m;
  m.values = {{"top", Rational(2)}, {"left", Rational(3)}, {"right", Rational(4)}, {"bottom", Rational(10)}};
  CHECK(eval_formula(parse_formula("top*left+right = bottom", v), Model(m)));
  CHECK(eval_formula(parse_formula("left/top = 1.5", v), Model(m)));
  CHECK(eval_formula(parse_formula("top < left & !(bottom < right)", v), Model(m)));
  CHECK_FALSE(eval_formula(parse_formula("top/(left-3) = top", v), Model(m)));
  CHECK_FALSE(eval_formula(parse_formula("top/(left-3) = top", v), Model(m)) ==
              eval_formula(parse_formula("!(top/(left-3) = top)", v), Model(m)));
  CHECK_THROWS_AS(eval_formula(parse_formula("exists x. x = top", v), Model(m)), EvaluationError);
  ComputedModel partial;
  partial.values = {{"top", Rational(1)}};
  CHECK_FALSE(validate_model(Model(partial), v).empty());
}
