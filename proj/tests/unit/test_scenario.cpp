// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <string>

#include "error.hpp"
#include "scenario.hpp"
#include "test_support.hpp"

using namespace predabs;

namespace {

const char* kHeader = "vocab { const alice bob; pred Blames/2 }\n";

std::string with_header(const std::string& body) { return std::string(kHeader) + body; }

}  // namespace

TEST_CASE("the bundled blame scenario") {
  Scenario s = testing::load_bundled("blames20.pred");
  CHECK(s.corpus.possible_models().count() == 5);
  CHECK(s.corpus.size() == 20);
  CHECK(s.vocabulary.constants().size() == 2);
  CHECK(s.corpus.model_count() == 32);
  CHECK(s.default_mu == MuMode::one());
  CHECK(s.corpus.data().front().id == "d1");
  CHECK(s.corpus.data().back().id == "d20");
}

TEST_CASE("every bundled scenario round-trips through its text form") {
  for (const char* file : {"blames20.pred", "sprinkler.pred", "arith_train.pred", "arith_query.pred"}) {
    INFO(file);
    Scenario s = testing::load_bundled(file);
    std::string text = format_scenario(s);
    Scenario back = parse_scenario(text);
    CHECK(back == s);
    CHECK(format_scenario(back) == text);
  }
}

TEST_CASE("options are read") {
  Scenario s = parse_scenario(with_header(
      "options { mu = limit; max-models = 64 }\n"
      "model A { domain e1 e2; const alice = e1; const bob = e2 }\n"
      "data { A }\n"));
  CHECK(s.default_mu == MuMode::limit_one());
  CHECK(s.enumeration_limit == 64);
  Scenario t = parse_scenario(with_header(
      "options { mu = 3/4 }\n model A { domain e1 e2; const alice = e1; const bob = e2 }\n data { A }\n"));
  CHECK(t.default_mu == MuMode::exact(Rational(3, 4)));
}

TEST_CASE("constants sharing an entity break surjectivity") {
  try {
    parse_scenario(with_header("model A {\n domain e1 e2\n const alice = e1\n const bob = e1\n}\ndata { A }\n"));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    CHECK(msg.find("surjective") != std::string::npos);
    CHECK(msg.find("'A'") != std::string::npos);
    CHECK(msg.rfind("2:", 0) == 0);
  }
}

TEST_CASE("an empty data section is rejected") {
  CHECK_THROWS_AS(parse_scenario(with_header("model A { domain e1 e2; const alice = e1; const bob = e2 }\ndata { }\n")),
                  ValidationError);
  CHECK_THROWS_AS(parse_scenario(with_header("model A { domain e1 e2; const alice = e1; const bob = e2 }\n")),
                  ValidationError);
}

TEST_CASE("syntax errors name line and column") {
  try {
    parse_scenario(with_header("model A {\n  domain e1 e2\n  const alice e1\n}\n"));
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position().line == 4);
    CHECK(e.position().column == 15);
    CHECK(std::string(e.what()).find("'='") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_scenario("vocab { const a }\nmodle A {}\n"), SyntaxError);
  CHECK_THROWS_AS(parse_scenario("model A { domain e1 }\n"), SyntaxError);
  CHECK_THROWS_AS(parse_scenario("vocab { const a; pred P/x }\n"), SyntaxError);
  CHECK_THROWS_AS(parse_scenario("vocab { const a } vocab { const b }"), SyntaxError);
  CHECK_THROWS_AS(parse_scenario("vocab { const a @ }"), SyntaxError);
}

TEST_CASE("unknown names are reported") {
  CHECK_THROWS_AS(
      parse_scenario(with_header("model A { domain e1 e2; const alice = e1; const bob = e2 }\ndata { B }\n")),
      ValidationError);
  CHECK_THROWS_AS(parse_scenario(with_header("model A { domain e1 e2; const alice = e3; const bob = e2 }\ndata { A }\n")),
                  ValidationError);
  CHECK_THROWS_AS(
      parse_scenario(with_header(
          "model A { domain e1 e2; const alice = e1; const bob = e2; pred Loves = {} }\ndata { A }\n")),
      ValidationError);
  CHECK_THROWS_AS(
      parse_scenario(with_header("model A { domain e1 e2; const alice = e1; const bob = e2 }\n"
                                 "model A { domain e1 e2; const alice = e2; const bob = e1 }\ndata { A }\n")),
      ValidationError);
}

TEST_CASE("enumerated spaces skip models already written out") {
  Scenario s = parse_scenario(with_header(
      "model Mutual { domain e1 e2; const alice = e1; const bob = e2; pred Blames = {(e1,e2),(e2,e1)} }\n"
      "space enumerate 2\n"
      "data { Mutual count 3 }\n"));
  CHECK(s.corpus.model_count() == 32);
  CHECK(s.corpus.size() == 3);
  CHECK(s.corpus.models().front().name == "Mutual");
}

TEST_CASE("enumeration respects the model limit") {
  CHECK_THROWS_AS(parse_scenario(with_header("options { max-models = 10 }\nspace enumerate 2\ndata { E1 }\n")),
                  ValidationError);
}

TEST_CASE("computed models and functions parse") {
  Scenario s = parse_scenario(
      "vocab { const top left; arithmetic }\n"
      "computed-model c1 { top=-2 left=3/4 }\n"
      "computed-model c2 { top=0.5; left=1 }\n"
      "data { c1; c2 count 2 }\n");
  CHECK(std::get<ComputedModel>(s.corpus.model(0)).values.at("top") == Rational(-2));
  CHECK(std::get<ComputedModel>(s.corpus.model(0)).values.at("left") == Rational(3, 4));
  CHECK(std::get<ComputedModel>(s.corpus.model(1)).values.at("top") == Rational(1, 2));
  CHECK(s.corpus.size() == 3);

  Scenario f = parse_scenario(
      "vocab { const a b; func f/1; pred P/0 }\n"
      "model M { domain u v; const a = u; const b = v; func f = {(u)->v, (v)->v}; pred P = {()} }\n"
      "data { M }\n");
  const auto& m = std::get<ExtensionalModel>(f.corpus.model(0));
  CHECK(m.functions.at("f").values.at({0}) == 1);
  CHECK(m.predicates.at("P").tuples.count({}) == 1);
  CHECK(parse_scenario(format_scenario(f)) == f);
}

TEST_CASE("missing files raise an I/O error") {
  CHECK_THROWS_AS(load_scenario("/nonexistent/none.pred"), IoError);
}
