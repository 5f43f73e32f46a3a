// SPDX-License-Identifier: Apache-2.0
#include "predabs/predabs.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "error.hpp"
#include "hypothesis.hpp"
#include "inference.hpp"
#include "parser.hpp"
#include "scenario.hpp"
#include "semantics.hpp"

struct pa_scenario {
  predabs::Scenario scenario;
};

struct pa_subsets {
  predabs::SubsetFamily family;
  std::vector<std::string> texts;
  std::vector<bool> cardinality_maximal;
};

struct pa_ranking {
  std::vector<predabs::RankedHypothesis> items;
};

namespace {

using namespace predabs;

thread_local std::string last_error;
thread_local SourcePosition last_position{0, 0};

pa_status fail(pa_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
pa_status guarded(Fn&& fn) {
  last_error.clear();
  last_position = {0, 0};
  try {
    fn();
    return PA_OK;
  } catch (const SyntaxError& e) {
    last_position = e.position();
    return fail(PA_ERR_SYNTAX, e.what());
  } catch (const UndeclaredIdentifier& e) {
    return fail(PA_ERR_UNDECLARED, e.what());
  } catch (const ArityMismatch& e) {
    return fail(PA_ERR_ARITY, e.what());
  } catch (const ValidationError& e) {
    return fail(PA_ERR_VALIDATION, e.what());
  } catch (const EvaluationError& e) {
    return fail(PA_ERR_EVALUATION, e.what());
  } catch (const EmptyPossibleSet& e) {
    return fail(PA_ERR_EMPTY_POSSIBLE_SET, e.what());
  } catch (const LimitExceeded& e) {
    return fail(PA_ERR_LIMIT, e.what());
  } catch (const IoError& e) {
    return fail(PA_ERR_IO, e.what());
  } catch (const InvalidArgument& e) {
    return fail(PA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::overflow_error& e) {
    return fail(PA_ERR_OVERFLOW, std::string("arithmetic overflow: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(PA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PA_ERR_INTERNAL, std::string("internal error: ") + e.what());
  } catch (...) {
    return fail(PA_ERR_INTERNAL, "internal error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pa_rational to_c(const Rational& r) { return {r.num(), r.den()}; }

MuMode to_mode(pa_mu mu) {
  switch (mu.kind) {
    case PA_MU_ONE:
      return MuMode::one();
    case PA_MU_LIMIT_ONE:
      return MuMode::limit_one();
    case PA_MU_EXACT: {
      if (mu.value.den == 0) throw InvalidArgument("mu has a zero denominator");
      Rational value(mu.value.num, mu.value.den);
      return value == Rational(1) ? MuMode::one() : MuMode::exact(value);
    }
  }
  throw InvalidArgument("unknown mu kind");
}

pa_mu from_mode(const MuMode& m) {
  switch (m.kind()) {
    case MuMode::Kind::One:
      return {PA_MU_ONE, {1, 1}};
    case MuMode::Kind::LimitOne:
      return {PA_MU_LIMIT_ONE, {1, 1}};
    case MuMode::Kind::Exact:
      break;
  }
  return {PA_MU_EXACT, to_c(m.value())};
}

const Scenario& scen(const pa_scenario* s) {
  require(s, "scenario");
  return s->scenario;
}

Formula formula(const pa_scenario* s, const char* text) {
  require(text, "formula");
  return parse_formula(text, scen(s).vocabulary);
}

std::vector<Formula> formulas(const pa_scenario* s, const char* const* texts, std::size_t n) {
  if (n > 0) require(texts, "formula list");
  std::vector<Formula> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(formula(s, texts[i]));
  return out;
}

std::size_t model_index(const pa_scenario* s, const char* name) {
  require(name, "model name");
  return scen(s).corpus.model_index(name);
}

pa_subsets* wrap(SubsetFamily family) {
  auto* out = new pa_subsets{std::move(family), {}, {}};
  for (const auto& f : out->family.formulas) out->texts.push_back(format_formula(f));
  for (const auto& subset : out->family.maximal) {
    bool top = false;
    for (const auto& c : out->family.cardinality_maximal) top = top || c == subset;
    out->cardinality_maximal.push_back(top);
  }
  return out;
}

}  // namespace

extern "C" {

const char* pa_version(void) { return "0.1.0"; }

const char* pa_last_error(void) { return last_error.c_str(); }
size_t pa_last_error_line(void) { return last_position.line; }
size_t pa_last_error_column(void) { return last_position.column; }

const char* pa_status_name(pa_status status) {
  switch (status) {
    case PA_OK: return "ok";
    case PA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PA_ERR_SYNTAX: return "syntax error";
    case PA_ERR_UNDECLARED: return "undeclared identifier";
    case PA_ERR_ARITY: return "arity mismatch";
    case PA_ERR_VALIDATION: return "validation error";
    case PA_ERR_EVALUATION: return "evaluation error";
    case PA_ERR_EMPTY_POSSIBLE_SET: return "empty possible set";
    case PA_ERR_LIMIT: return "limit exceeded";
    case PA_ERR_IO: return "i/o error";
    case PA_ERR_OVERFLOW: return "overflow";
    case PA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pa_string_free(char* s) { std::free(s); }

pa_status pa_mu_parse(const char* text, pa_mu* out) {
  return guarded([&] {
    require(text, "mu text");
    require(out, "output");
    *out = from_mode(MuMode::parse(text));
  });
}

pa_status pa_scenario_load_file(const char* path, pa_scenario** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new pa_scenario{load_scenario(path)};
  });
}

pa_status pa_scenario_load_text(const char* text, pa_scenario** out) {
  return guarded([&] {
    require(text, "scenario text");
    require(out, "output");
    *out = new pa_scenario{parse_scenario(text)};
  });
}

void pa_scenario_free(pa_scenario* s) { delete s; }

pa_status pa_scenario_format(const pa_scenario* s, char** out) {
  return guarded([&] {
    require(out, "output");
    *out = copy_string(format_scenario(scen(s)));
  });
}

pa_status pa_scenario_default_mu(const pa_scenario* s, pa_mu* out) {
  return guarded([&] {
    require(out, "output");
    *out = from_mode(scen(s).default_mu);
  });
}

size_t pa_scenario_model_count(const pa_scenario* s) { return s ? s->scenario.corpus.model_count() : 0; }
size_t pa_scenario_data_count(const pa_scenario* s) { return s ? s->scenario.corpus.size() : 0; }
size_t pa_scenario_constant_count(const pa_scenario* s) {
  return s ? s->scenario.vocabulary.constants().size() : 0;
}

pa_status pa_scenario_model_name(const pa_scenario* s, size_t index, const char** out) {
  return guarded([&] {
    require(out, "output");
    const auto& models = scen(s).corpus.models();
    if (index >= models.size()) throw InvalidArgument("model index " + std::to_string(index) + " out of range");
    *out = models[index].name.c_str();
  });
}

pa_status pa_scenario_model_index(const pa_scenario* s, const char* name, size_t* out) {
  return guarded([&] {
    require(out, "output");
    *out = model_index(s, name);
  });
}

pa_status pa_formula_normalize(const pa_scenario* s, const char* text, char** out) {
  return guarded([&] {
    require(out, "output");
    scen(s);
    *out = copy_string(format_formula(formula(s, text)));
  });
}

pa_status pa_eval(const pa_scenario* s, const char* text, const char* model, int* out) {
  return guarded([&] {
    require(out, "output");
    std::size_t m = model_index(s, model);
    Formula f = formula(s, text);
    require_closed(f);
    *out = eval_formula(f, s->scenario.corpus.model(m)) ? 1 : 0;
  });
}

pa_status pa_truth_set(const pa_scenario* s, const char* const* texts, size_t n, int possible_only, size_t* indices,
                       size_t capacity, size_t* count) {
  return guarded([&] {
    require(count, "count output");
    if (capacity > 0) require(indices, "index buffer");
    const Corpus& c = scen(s).corpus;
    auto delta = formulas(s, texts, n);
    ModelSet set = possible_only ? possible_truth_set(delta, c) : truth_set(std::span<const Formula>(delta), c);
    auto members = set.indices();
    for (std::size_t i = 0; i < members.size() && i < capacity; ++i) indices[i] = members[i];
    *count = members.size();
  });
}

pa_status pa_marginal(const pa_scenario* s, const char* model, pa_rational* out) {
  return guarded([&] {
    require(out, "output");
    *out = to_c(scen(s).corpus.model_marginal(model_index(s, model)));
  });
}

pa_status pa_prob(const pa_scenario* s, const char* text, pa_mu mu, pa_rational* out) {
  return guarded([&] {
    require(out, "output");
    *out = to_c(prob(formula(s, text), scen(s).corpus, to_mode(mu)));
  });
}

pa_status pa_prob_symbolic(const pa_scenario* s, const char* text, char** out) {
  return guarded([&] {
    require(out, "output");
    *out = copy_string(prob(formula(s, text), scen(s).corpus).str());
  });
}

pa_status pa_joint(const pa_scenario* s, const char* a, const char* b, pa_mu mu, pa_rational* out) {
  return guarded([&] {
    require(out, "output");
    *out = to_c(prob_joint(formula(s, a), formula(s, b), scen(s).corpus, to_mode(mu)));
  });
}

pa_status pa_joint_symbolic(const pa_scenario* s, const char* a, const char* b, char** out) {
  return guarded([&] {
    require(out, "output");
    *out = copy_string(prob_joint(formula(s, a), formula(s, b), scen(s).corpus).str());
  });
}

pa_status pa_query(const pa_scenario* s, const char* a, const char* const* givens, size_t n, pa_mu mu,
                   pa_rational* out) {
  return guarded([&] {
    require(out, "output");
    auto delta = formulas(s, givens, n);
    *out = to_c(prob_conditional(formula(s, a), delta, scen(s).corpus, to_mode(mu)));
  });
}

pa_status pa_query_symbolic(const pa_scenario* s, const char* a, const char* const* givens, size_t n, char** out) {
  return guarded([&] {
    require(out, "output");
    auto delta = formulas(s, givens, n);
    *out = copy_string(conditional_symbolic(formula(s, a), delta, scen(s).corpus).str());
  });
}

pa_status pa_query_symbolic_limit(const pa_scenario* s, const char* a, const char* const* givens, size_t n,
                                  pa_rational* out) {
  return guarded([&] {
    require(out, "output");
    auto delta = formulas(s, givens, n);
    *out = to_c(conditional_symbolic(formula(s, a), delta, scen(s).corpus).limit_at_one());
  });
}

pa_status pa_posterior(const pa_scenario* s, const char* model, const char* const* givens, size_t n, pa_mu mu,
                       pa_rational* out) {
  return guarded([&] {
    require(out, "output");
    std::size_t m = model_index(s, model);
    auto delta = formulas(s, givens, n);
    *out = to_c(posterior_model(m, delta, scen(s).corpus, to_mode(mu)));
  });
}

pa_status pa_consequence(const pa_scenario* s, const char* const* givens, size_t n, const char* a,
                         pa_consequence_mode mode, int* out) {
  return guarded([&] {
    require(out, "output");
    auto delta = formulas(s, givens, n);
    Formula f = formula(s, a);
    const Corpus& c = scen(s).corpus;
    switch (mode) {
      case PA_LOGICAL:
        *out = logical_consequence(delta, f, c) ? 1 : 0;
        return;
      case PA_EMPIRICAL:
        *out = empirical_consequence(delta, f, c) ? 1 : 0;
        return;
    }
    throw InvalidArgument("unknown consequence mode");
  });
}

pa_status pa_mps(const pa_scenario* s, const char* const* texts, size_t n, pa_subsets** out) {
  return guarded([&] {
    require(out, "output");
    auto delta = formulas(s, texts, n);
    *out = wrap(mps(delta, scen(s).corpus));
  });
}

pa_status pa_mcs(const pa_scenario* s, const char* const* texts, size_t n, pa_subsets** out) {
  return guarded([&] {
    require(out, "output");
    auto delta = formulas(s, texts, n);
    *out = wrap(mcs(delta, scen(s).corpus));
  });
}

void pa_subsets_free(pa_subsets* f) { delete f; }
size_t pa_subsets_formula_count(const pa_subsets* f) { return f ? f->texts.size() : 0; }
const char* pa_subsets_formula(const pa_subsets* f, size_t i) {
  return f && i < f->texts.size() ? f->texts[i].c_str() : nullptr;
}
size_t pa_subsets_count(const pa_subsets* f) { return f ? f->family.maximal.size() : 0; }
size_t pa_subsets_size(const pa_subsets* f, size_t subset) {
  return f && subset < f->family.maximal.size() ? f->family.maximal[subset].size() : 0;
}
size_t pa_subsets_member(const pa_subsets* f, size_t subset, size_t j) {
  if (!f || subset >= f->family.maximal.size() || j >= f->family.maximal[subset].size()) return SIZE_MAX;
  return f->family.maximal[subset][j];
}
int pa_subsets_is_cardinality_maximal(const pa_subsets* f, size_t subset) {
  return f && subset < f->cardinality_maximal.size() && f->cardinality_maximal[subset] ? 1 : 0;
}

pa_status pa_hypothesize(const pa_scenario* s, const char* grammar, size_t max_ops, const int64_t* literals,
                         size_t n_literals, pa_mu mu, pa_ranking** out) {
  return guarded([&] {
    require(out, "output");
    require(grammar, "grammar");
    if (n_literals > 0) require(literals, "literal list");
    SearchBudget budget;
    budget.max_operators = max_ops;
    budget.literal_pool.assign(literals, literals + n_literals);
    auto candidates = enumerate_candidates(scen(s).vocabulary, grammar, budget);
    *out = new pa_ranking{hypothesize(s->scenario.corpus, candidates, to_mode(mu))};
  });
}

pa_status pa_select(const pa_scenario* s, const char* const* givens, size_t n_givens, const char* const* candidates,
                    size_t n_candidates, pa_mu mu, pa_ranking** out) {
  return guarded([&] {
    require(out, "output");
    auto delta = formulas(s, givens, n_givens);
    auto cands = formulas(s, candidates, n_candidates);
    *out = new pa_ranking{select_answer(scen(s).corpus, delta, cands, to_mode(mu))};
  });
}

void pa_ranking_free(pa_ranking* r) { delete r; }
size_t pa_ranking_count(const pa_ranking* r) { return r ? r->items.size() : 0; }
const char* pa_ranking_text(const pa_ranking* r, size_t i) {
  return r && i < r->items.size() ? r->items[i].text.c_str() : nullptr;
}
pa_rational pa_ranking_score(const pa_ranking* r, size_t i) {
  return r && i < r->items.size() ? to_c(r->items[i].score) : pa_rational{0, 1};
}
size_t pa_ranking_complexity(const pa_ranking* r, size_t i) {
  return r && i < r->items.size() ? r->items[i].complexity : 0;
}

}  // extern "C"
