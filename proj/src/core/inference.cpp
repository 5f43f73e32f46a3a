// SPDX-License-Identifier: Apache-2.0
#include "inference.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "error.hpp"

namespace predabs {

namespace {

// Uniform read access to a model space held either as models or as a corpus.
class Space {
 public:
  explicit Space(std::span<const Model> models) : models_(models) {}
  explicit Space(const Corpus& c) : corpus_(&c) {}

  std::size_t size() const { return corpus_ ? corpus_->model_count() : models_.size(); }
  const Model& operator[](std::size_t i) const { return corpus_ ? corpus_->model(i) : models_[i]; }

 private:
  std::span<const Model> models_;
  const Corpus* corpus_ = nullptr;
};

ModelSet truth_set_in(const Formula& f, const Space& space) {
  require_closed(f);
  ModelSet s(space.size());
  for (std::size_t i = 0; i < space.size(); ++i)
    if (eval_formula(f, space[i])) s.insert(i);
  return s;
}

ModelSet truth_set_in(std::span<const Formula> delta, const Space& space) {
  ModelSet s = ModelSet::all(space.size());
  for (const auto& f : delta) s &= truth_set_in(f, space);
  return s;
}

// Per possible model: its support count, the number of satisfied delta
// formulas, and whether the query holds.
struct ModelStats {
  std::size_t model;
  std::int64_t weight;
  std::size_t satisfied;
  bool query;
};

std::vector<ModelStats> possible_stats(const Formula* query, std::span<const Formula> delta, const Corpus& c) {
  if (query) require_closed(*query);
  for (const auto& f : delta) require_closed(f);
  std::vector<ModelStats> out;
  for (std::size_t m = 0; m < c.model_count(); ++m) {
    if (c.support_count(m) == 0) continue;
    const Model& model = c.model(m);
    std::size_t sat = 0;
    for (const auto& f : delta) sat += eval_formula(f, model) ? 1 : 0;
    out.push_back({m, static_cast<std::int64_t>(c.support_count(m)), sat, query ? eval_formula(*query, model) : false});
  }
  return out;
}

Rational pow(const Rational& base, std::size_t exp) {
  Rational r(1);
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Conditional ratio sum_m w(m) selected(m) / sum_m w(m) over the conditioning
// weights implied by the mode. `selected` picks the numerator models.
template <typename Selected>
Rational conditional_ratio(const std::vector<ModelStats>& stats, std::size_t delta_size, const MuMode& mode,
                           Selected selected) {
  const bool exact_below_one = mode.kind() == MuMode::Kind::Exact && mode.value() != Rational(1);
  if (exact_below_one) {
    const Rational mu = mode.value();
    const Rational not_mu = Rational(1) - mu;
    Rational num(0), den(0);
    for (const auto& s : stats) {
      Rational w = Rational(s.weight) * pow(mu, s.satisfied) * pow(not_mu, delta_size - s.satisfied);
      den += w;
      num += w * (selected(s) ? mu : not_mu);
    }
    return num / den;
  }

  std::size_t required = delta_size;
  if (mode.kind() == MuMode::Kind::LimitOne) {
    required = 0;
    for (const auto& s : stats) required = std::max(required, s.satisfied);
  }
  std::int64_t num = 0, den = 0;
  for (const auto& s : stats) {
    if (s.satisfied != required) continue;
    den += s.weight;
    if (selected(s)) num += s.weight;
  }
  if (den == 0) throw EmptyPossibleSet();
  return Rational(num, den);
}

// Exact-mode conditional with p(query | m) replaced by the 0/1 indicator, as
// used for the model posterior.
template <typename Selected>
Rational posterior_ratio(const std::vector<ModelStats>& stats, std::size_t delta_size, const MuMode& mode,
                         Selected selected) {
  const bool exact_below_one = mode.kind() == MuMode::Kind::Exact && mode.value() != Rational(1);
  if (!exact_below_one) return conditional_ratio(stats, delta_size, mode, selected);
  const Rational mu = mode.value();
  const Rational not_mu = Rational(1) - mu;
  Rational num(0), den(0);
  for (const auto& s : stats) {
    Rational w = Rational(s.weight) * pow(mu, s.satisfied) * pow(not_mu, delta_size - s.satisfied);
    den += w;
    if (selected(s)) num += w;
  }
  return num / den;
}

PolyMu bernoulli(bool holds) { return holds ? PolyMu::mu() : PolyMu::one_minus_mu(); }

std::uint64_t satisfaction_mask(std::span<const Formula> delta, const Model& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < delta.size(); ++i)
    if (eval_formula(delta[i], m)) mask |= std::uint64_t{1} << i;
  return mask;
}

std::vector<std::size_t> mask_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

// Maximal subsets of delta realised by some model of `candidates`: every such
// subset is contained in the satisfaction mask of a model, so the maximal ones
// are the inclusion-maximal masks.
SubsetFamily maximal_subsets(std::span<const Formula> input, const Space& space, const ModelSet& candidates,
                             std::size_t limit) {
  SubsetFamily out;
  out.formulas = deduplicate(input);
  for (const auto& f : out.formulas) require_closed(f);
  if (out.formulas.size() > limit || out.formulas.size() > 63)
    throw LimitExceeded("formula set of size " + std::to_string(out.formulas.size()) + " exceeds the limit of " +
                        std::to_string(std::min<std::size_t>(limit, 63)));

  std::vector<std::uint64_t> masks(space.size(), 0);
  std::vector<std::uint64_t> distinct;
  for (std::size_t m = 0; m < space.size(); ++m) {
    if (!candidates.contains(m)) continue;
    masks[m] = satisfaction_mask(out.formulas, space[m]);
    if (std::ranges::find(distinct, masks[m]) == distinct.end()) distinct.push_back(masks[m]);
  }
  std::vector<std::uint64_t> maximal;
  for (auto a : distinct) {
    bool dominated = std::ranges::any_of(distinct, [a](std::uint64_t b) { return b != a && (a & b) == a; });
    if (!dominated) maximal.push_back(a);
  }
  // Larger subsets first, then by index lists.
  auto order = [](std::uint64_t a, std::uint64_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) > std::popcount(b);
    return mask_indices(a) < mask_indices(b);
  };
  std::ranges::sort(maximal, order);

  out.union_set = ModelSet(space.size());
  int best = maximal.empty() ? 0 : std::popcount(maximal.front());
  for (auto mask : maximal) {
    out.maximal.push_back(mask_indices(mask));
    if (std::popcount(mask) != best) continue;
    out.cardinality_maximal.push_back(mask_indices(mask));
    for (std::size_t m = 0; m < space.size(); ++m)
      if (candidates.contains(m) && (masks[m] & mask) == mask) out.union_set.insert(m);
  }
  return out;
}

}  // namespace

MuMode MuMode::exact(const Rational& mu) {
  if (mu < Rational(1, 2) || mu > Rational(1)) throw InvalidArgument("mu must lie in [1/2, 1], got " + mu.str());
  return MuMode(Kind::Exact, mu);
}

MuMode MuMode::parse(std::string_view text) {
  if (text == "limit" || text == "1-" || text == "->1") return limit_one();
  if (text == "1") return one();
  Rational mu = Rational::parse(text);
  if (mu == Rational(1)) return one();
  return exact(mu);
}

std::string MuMode::str() const {
  switch (kind_) {
    case Kind::One:
      return "1";
    case Kind::LimitOne:
      return "limit";
    case Kind::Exact:
      return value_.str();
  }
  return "";
}

void require_closed(const Formula& f) {
  auto free = free_variables(f);
  if (!free.empty())
    throw EvaluationError("formula '" + format_formula(f) + "' is not closed (free variable '" + *free.begin() + "')");
}

std::vector<Formula> deduplicate(std::span<const Formula> delta) {
  std::vector<Formula> out;
  for (const auto& f : delta)
    if (std::ranges::find(out, f) == out.end()) out.push_back(f);
  return out;
}

std::vector<Model> models_of(const Corpus& c) {
  std::vector<Model> out;
  out.reserve(c.model_count());
  for (const auto& m : c.models()) out.push_back(m.model);
  return out;
}

ModelSet truth_set(const Formula& f, std::span<const Model> space) { return truth_set_in(f, Space(space)); }
ModelSet truth_set(const Formula& f, const Corpus& c) { return truth_set_in(f, Space(c)); }
ModelSet truth_set(std::span<const Formula> delta, std::span<const Model> space) {
  return truth_set_in(delta, Space(space));
}
ModelSet truth_set(std::span<const Formula> delta, const Corpus& c) { return truth_set_in(delta, Space(c)); }

ModelSet possible_truth_set(std::span<const Formula> delta, const Corpus& c) {
  for (const auto& f : delta) require_closed(f);
  ModelSet s = c.possible_models();
  for (std::size_t m : s.indices())
    for (const auto& f : delta)
      if (!eval_formula(f, c.model(m))) {
        s.erase(m);
        break;
      }
  return s;
}

Rational formula_likelihood(const Formula& f, bool v, const Model& m, const Rational& mu) {
  require_closed(f);
  return eval_formula(f, m) == v ? mu : Rational(1) - mu;
}

PolyMu prob(const Formula& f, const Corpus& c) {
  auto stats = possible_stats(&f, {}, c);
  PolyMu sum;
  for (const auto& s : stats) sum += PolyMu(Rational(s.weight)) * bernoulli(s.query);
  return sum * PolyMu(Rational(1, static_cast<std::int64_t>(c.size())));
}

Rational prob(const Formula& f, const Corpus& c, const MuMode& mode) { return prob(f, c).evaluate(mode.value()); }

PolyMu prob_joint(const Formula& a, const Formula& b, const Corpus& c) {
  require_closed(a);
  require_closed(b);
  PolyMu sum;
  for (std::size_t m = 0; m < c.model_count(); ++m) {
    if (c.support_count(m) == 0) continue;
    const Model& model = c.model(m);
    sum += PolyMu(Rational(static_cast<std::int64_t>(c.support_count(m)))) * bernoulli(eval_formula(a, model)) *
           bernoulli(eval_formula(b, model));
  }
  return sum * PolyMu(Rational(1, static_cast<std::int64_t>(c.size())));
}

Rational prob_joint(const Formula& a, const Formula& b, const Corpus& c, const MuMode& mode) {
  // Polynomials are continuous, so the limit mode agrees with mu = 1.
  return prob_joint(a, b, c).evaluate(mode.value());
}

Rational prob_conditional(const Formula& a, std::span<const Formula> delta, const Corpus& c, const MuMode& mode) {
  auto set = deduplicate(delta);
  auto stats = possible_stats(&a, set, c);
  return conditional_ratio(stats, set.size(), mode, [](const ModelStats& s) { return s.query; });
}

Rational posterior_model(std::size_t m, std::span<const Formula> delta, const Corpus& c, const MuMode& mode) {
  if (m >= c.model_count()) throw InvalidArgument("unknown model index " + std::to_string(m));
  auto set = deduplicate(delta);
  auto stats = possible_stats(nullptr, set, c);
  return posterior_ratio(stats, set.size(), mode, [m](const ModelStats& s) { return s.model == m; });
}

RationalFnMu conditional_symbolic(const Formula& a, std::span<const Formula> delta, const Corpus& c) {
  auto set = deduplicate(delta);
  auto stats = possible_stats(&a, set, c);
  const PolyMu mu = PolyMu::mu();
  const PolyMu not_mu = PolyMu::one_minus_mu();
  const PolyMu inv_k(Rational(1, static_cast<std::int64_t>(c.size())));
  PolyMu num, den;
  for (const auto& s : stats) {
    PolyMu w = PolyMu(Rational(s.weight)) * inv_k * mu.pow(s.satisfied) * not_mu.pow(set.size() - s.satisfied);
    den += w;
    num += w * bernoulli(s.query);
  }
  return RationalFnMu(std::move(num), std::move(den));
}

ModelSet max_satisfaction_set(std::span<const Formula> delta, const Corpus& c) {
  auto set = deduplicate(delta);
  auto stats = possible_stats(nullptr, set, c);
  std::size_t best = 0;
  for (const auto& s : stats) best = std::max(best, s.satisfied);
  ModelSet out(c.model_count());
  for (const auto& s : stats)
    if (s.satisfied == best) out.insert(s.model);
  return out;
}

bool logical_consequence(std::span<const Formula> delta, const Formula& a, std::span<const Model> space) {
  return truth_set(delta, space).is_subset_of(truth_set(a, space));
}

bool logical_consequence(std::span<const Formula> delta, const Formula& a, const Corpus& c) {
  return truth_set(delta, c).is_subset_of(truth_set(a, c));
}

bool empirical_consequence(std::span<const Formula> delta, const Formula& a, const Corpus& c) {
  ModelSet premises = possible_truth_set(delta, c);
  require_closed(a);
  for (std::size_t m : premises.indices())
    if (!eval_formula(a, c.model(m))) return false;
  return true;
}

std::vector<Formula> SubsetFamily::subset(const std::vector<std::size_t>& indices) const {
  std::vector<Formula> out;
  for (auto i : indices) out.push_back(formulas.at(i));
  return out;
}

SubsetFamily mps(std::span<const Formula> delta, const Corpus& c, std::size_t limit) {
  return maximal_subsets(delta, Space(c), c.possible_models(), limit);
}

SubsetFamily mcs(std::span<const Formula> delta, std::span<const Model> space, std::size_t limit) {
  return maximal_subsets(delta, Space(space), ModelSet::all(space.size()), limit);
}

SubsetFamily mcs(std::span<const Formula> delta, const Corpus& c, std::size_t limit) {
  return maximal_subsets(delta, Space(c), ModelSet::all(c.model_count()), limit);
}

}  // namespace predabs
