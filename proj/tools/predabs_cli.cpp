// SPDX-License-Identifier: Apache-2.0
// Command-line front end over the predabs C API.
#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "predabs/predabs.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUser = 1;
constexpr int kExitInternal = 2;

struct CliFailure {
  pa_status status;
  std::string message;
};

void check(pa_status st) {
  if (st != PA_OK) throw CliFailure{st, pa_last_error()};
}

[[noreturn]] void usage_error(const std::string& message) { throw CliFailure{PA_ERR_INVALID_ARGUMENT, message}; }

std::string text(const pa_rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { pa_string_free(p); }
};

struct ScenarioHandle {
  pa_scenario* p = nullptr;
  ~ScenarioHandle() { pa_scenario_free(p); }
};

struct Options {
  std::string scenario;
  std::vector<std::string> formulas;
  std::vector<std::string> givens;
  std::optional<std::string> mu;
  bool symbolic = false;
  std::string model;
  std::string mode = "logical";
  std::string grammar = "arith-equation";
  std::size_t max_ops = 2;
  std::vector<std::int64_t> literals;
  std::size_t top = 0;
  bool all = false;
  bool possible = false;
  bool count_only = false;
};

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {
    check(pa_scenario_load_file(o.scenario.c_str(), &s_.p));
    if (o.mu) {
      check(pa_mu_parse(o.mu->c_str(), &mu_));
    } else {
      check(pa_scenario_default_mu(s_.p, &mu_));
    }
  }

  const std::string& single_formula(const char* command) const {
    if (o_.formulas.size() != 1) usage_error(std::string(command) + " takes exactly one -f formula");
    return o_.formulas.front();
  }

  std::string model_name(std::size_t i) const {
    const char* name = nullptr;
    check(pa_scenario_model_name(s_.p, i, &name));
    return name;
  }

  void eval() const {
    const auto& f = single_formula("eval");
    std::vector<std::size_t> models;
    if (o_.model.empty()) {
      for (std::size_t i = 0; i < pa_scenario_model_count(s_.p); ++i) models.push_back(i);
    } else {
      std::size_t i = 0;
      check(pa_scenario_model_index(s_.p, o_.model.c_str(), &i));
      models.push_back(i);
    }
    for (std::size_t i : models) {
      int v = 0;
      std::string name = model_name(i);
      check(pa_eval(s_.p, f.c_str(), name.c_str(), &v));
      if (o_.model.empty()) std::cout << name << ' ';
      std::cout << v << '\n';
    }
  }

  void models() const {
    std::vector<std::string> delta = o_.formulas;
    delta.insert(delta.end(), o_.givens.begin(), o_.givens.end());
    if (delta.empty()) usage_error("models needs at least one -f formula");
    auto cs = c_strings(delta);
    std::size_t count = 0;
    check(pa_truth_set(s_.p, cs.data(), cs.size(), o_.possible, nullptr, 0, &count));
    if (o_.count_only) {
      std::cout << count << '\n';
      return;
    }
    std::vector<std::size_t> idx(count);
    check(pa_truth_set(s_.p, cs.data(), cs.size(), o_.possible, idx.data(), idx.size(), &count));
    for (std::size_t i : idx) std::cout << model_name(i) << '\n';
  }

  void prob() const {
    const auto& f = single_formula("prob");
    if (o_.symbolic) {
      OwnedString out;
      check(pa_prob_symbolic(s_.p, f.c_str(), &out.p));
      std::cout << out.p << '\n';
      return;
    }
    pa_rational r;
    check(pa_prob(s_.p, f.c_str(), mu_, &r));
    std::cout << text(r) << '\n';
  }

  void joint() const {
    if (o_.formulas.size() != 2) usage_error("joint takes exactly two -f formulas");
    const char* a = o_.formulas[0].c_str();
    const char* b = o_.formulas[1].c_str();
    if (o_.symbolic) {
      OwnedString out;
      check(pa_joint_symbolic(s_.p, a, b, &out.p));
      std::cout << out.p << '\n';
      return;
    }
    pa_rational r;
    check(pa_joint(s_.p, a, b, mu_, &r));
    std::cout << text(r) << '\n';
  }

  void query() const {
    const auto& f = single_formula("query");
    auto gs = c_strings(o_.givens);
    if (o_.symbolic) {
      OwnedString out;
      check(pa_query_symbolic(s_.p, f.c_str(), gs.data(), gs.size(), &out.p));
      std::cout << out.p << '\n';
      return;
    }
    pa_rational r;
    check(pa_query(s_.p, f.c_str(), gs.data(), gs.size(), mu_, &r));
    std::cout << text(r) << '\n';
  }

  void posterior() const {
    auto gs = c_strings(o_.givens);
    if (!o_.model.empty()) {
      pa_rational r;
      check(pa_posterior(s_.p, o_.model.c_str(), gs.data(), gs.size(), mu_, &r));
      std::cout << text(r) << '\n';
      return;
    }
    for (std::size_t i = 0; i < pa_scenario_model_count(s_.p); ++i) {
      std::string name = model_name(i);
      pa_rational r;
      check(pa_posterior(s_.p, name.c_str(), gs.data(), gs.size(), mu_, &r));
      if (r.num != 0) std::cout << name << ' ' << text(r) << '\n';
    }
  }

  void consequence() const {
    const auto& f = single_formula("consequence");
    auto gs = c_strings(o_.givens);
    pa_consequence_mode mode = o_.mode == "empirical" ? PA_EMPIRICAL : PA_LOGICAL;
    int v = 0;
    check(pa_consequence(s_.p, gs.data(), gs.size(), f.c_str(), mode, &v));
    std::cout << (v ? "true" : "false") << '\n';
  }

  void subsets(bool possible) const {
    std::vector<std::string> delta = o_.givens;
    delta.insert(delta.end(), o_.formulas.begin(), o_.formulas.end());
    auto cs = c_strings(delta);
    pa_subsets* raw = nullptr;
    check(possible ? pa_mps(s_.p, cs.data(), cs.size(), &raw) : pa_mcs(s_.p, cs.data(), cs.size(), &raw));
    std::unique_ptr<pa_subsets, decltype(&pa_subsets_free)> family(raw, &pa_subsets_free);
    for (std::size_t i = 0; i < pa_subsets_count(raw); ++i) {
      if (!o_.all && !pa_subsets_is_cardinality_maximal(raw, i)) continue;
      std::cout << '{';
      for (std::size_t j = 0; j < pa_subsets_size(raw, i); ++j)
        std::cout << (j ? "; " : "") << pa_subsets_formula(raw, pa_subsets_member(raw, i, j));
      std::cout << '}' << '\n';
    }
  }

  void marginal() const {
    if (!o_.model.empty()) {
      pa_rational r;
      check(pa_marginal(s_.p, o_.model.c_str(), &r));
      std::cout << text(r) << '\n';
      return;
    }
    for (std::size_t i = 0; i < pa_scenario_model_count(s_.p); ++i) {
      std::string name = model_name(i);
      pa_rational r;
      check(pa_marginal(s_.p, name.c_str(), &r));
      if (o_.all || r.num != 0) std::cout << name << ' ' << text(r) << '\n';
    }
  }

  void print_ranking(pa_ranking* raw) const {
    std::unique_ptr<pa_ranking, decltype(&pa_ranking_free)> ranking(raw, &pa_ranking_free);
    std::size_t n = pa_ranking_count(raw);
    if (o_.top > 0 && o_.top < n) n = o_.top;
    for (std::size_t i = 0; i < n; ++i) std::cout << text(pa_ranking_score(raw, i)) << '\t' << pa_ranking_text(raw, i) << '\n';
  }

  void hypothesize() const {
    pa_ranking* raw = nullptr;
    check(pa_hypothesize(s_.p, o_.grammar.c_str(), o_.max_ops, o_.literals.data(), o_.literals.size(), mu_, &raw));
    print_ranking(raw);
  }

  void select() const {
    if (o_.formulas.empty()) usage_error("select needs at least one -f candidate");
    auto gs = c_strings(o_.givens);
    auto fs = c_strings(o_.formulas);
    pa_ranking* raw = nullptr;
    check(pa_select(s_.p, gs.data(), gs.size(), fs.data(), fs.size(), mu_, &raw));
    print_ranking(raw);
  }

 private:
  const Options& o_;
  ScenarioHandle s_;
  pa_mu mu_{PA_MU_ONE, {1, 1}};
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilities of predicate formulas induced by data over models"};
  app.set_version_flag("--version", std::string(pa_version()));
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool formulas, bool givens, bool mu) {
    sub->add_option("-s,--scenario", o.scenario, "Scenario file")->required();
    if (formulas) sub->add_option("-f,--formula", o.formulas, "Formula (repeatable where noted)");
    if (givens) sub->add_option("-g,--given", o.givens, "Conditioning formula (repeatable)");
    if (mu) {
      sub->add_option("--mu", o.mu, "1, limit or a rational in [1/2, 1]; default from the scenario");
      sub->add_flag("--symbolic", o.symbolic, "Print the result as a function of mu");
    }
    return sub;
  };

  auto* eval = common(app.add_subcommand("eval", "Truth value (0/1) of a formula in a model"), true, false, false);
  eval->add_option("-m,--model", o.model, "Model name; all models when omitted");
  auto* models = common(app.add_subcommand("models", "Models satisfying every formula"), true, true, false);
  models->add_flag("--possible", o.possible, "Only models supported by some datum");
  models->add_flag("--count", o.count_only, "Print the number of models only");
  auto* prob = common(app.add_subcommand("prob", "Probability of a formula"), true, false, true);
  auto* joint = common(app.add_subcommand("joint", "Joint probability of two formulas (-f twice)"), true, false, true);
  auto* query = common(app.add_subcommand("query", "Probability of a formula given formulas"), true, true, true);
  auto* posterior = common(app.add_subcommand("posterior", "Probability of models given formulas"), false, true, true);
  posterior->add_option("-m,--model", o.model, "Model name; every model with non-zero probability when omitted");
  auto* consequence = common(app.add_subcommand("consequence", "Whether the givens entail the formula"), true, true, false);
  consequence->add_option("--mode", o.mode, "logical: over all models; empirical: over supported models")
      ->check(CLI::IsMember({"logical", "empirical"}));
  auto* mps = common(app.add_subcommand("mps", "Maximal subsets satisfied by a supported model"), true, true, false);
  mps->add_flag("--all", o.all, "Print every inclusion-maximal subset, not only the largest");
  auto* mcs = common(app.add_subcommand("mcs", "Maximal subsets satisfied by some model"), true, true, false);
  mcs->add_flag("--all", o.all, "Print every inclusion-maximal subset, not only the largest");
  auto* marginal = common(app.add_subcommand("marginal", "Probability of models"), false, false, false);
  marginal->add_option("-m,--model", o.model, "Model name; every supported model when omitted");
  marginal->add_flag("--all", o.all, "Include models with probability 0");
  auto* hyp = common(app.add_subcommand("hypothesize", "Rank the formulas of a template by probability"), false, false, true);
  hyp->add_option("--grammar", o.grammar, "Template")->check(CLI::IsMember({"arith-equation"}));
  hyp->add_option("--max-ops", o.max_ops, "Maximum number of operators")->check(CLI::Range(0, 4));
  hyp->add_option("--literal", o.literals, "Integer literal allowed in terms (repeatable)")
      ->check(CLI::NonNegativeNumber);
  hyp->add_option("--top", o.top, "Print only the first N");
  auto* select = common(app.add_subcommand("select", "Rank candidate formulas given formulas"), true, true, true);
  select->add_option("--top", o.top, "Print only the first N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUser;
  }

  try {
    Runner r(o);
    if (*eval) r.eval();
    else if (*models) r.models();
    else if (*prob) r.prob();
    else if (*joint) r.joint();
    else if (*query) r.query();
    else if (*posterior) r.posterior();
    else if (*consequence) r.consequence();
    else if (*mps) r.subsets(true);
    else if (*mcs) r.subsets(false);
    else if (*marginal) r.marginal();
    else if (*hyp) r.hypothesize();
    else if (*select) r.select();
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.status == PA_ERR_INTERNAL ? kExitInternal : kExitUser;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  std::cout.flush();
  return kExitOk;
}
