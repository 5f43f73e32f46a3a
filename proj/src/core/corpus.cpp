// SPDX-License-Identifier: Apache-2.0
#include "corpus.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace predabs {

ModelSet ModelSet::all(std::size_t universe) {
  ModelSet s(universe);
  s.members_.assign(universe, true);
  return s;
}

std::size_t ModelSet::count() const { return static_cast<std::size_t>(std::ranges::count(members_, true)); }

std::vector<std::size_t> ModelSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i]) out.push_back(i);
  return out;
}

bool ModelSet::is_subset_of(const ModelSet& other) const {
  if (other.universe() != universe()) throw InvalidArgument("model sets over different spaces");
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] && !other.members_[i]) return false;
  return true;
}

ModelSet& ModelSet::operator&=(const ModelSet& other) {
  if (other.universe() != universe()) throw InvalidArgument("model sets over different spaces");
  for (std::size_t i = 0; i < members_.size(); ++i) members_[i] = members_[i] && other.members_[i];
  return *this;
}

ModelSet& ModelSet::operator|=(const ModelSet& other) {
  if (other.universe() != universe()) throw InvalidArgument("model sets over different spaces");
  for (std::size_t i = 0; i < members_.size(); ++i) members_[i] = members_[i] || other.members_[i];
  return *this;
}

Corpus::Corpus(std::vector<NamedModel> space, std::vector<Datum> data)
    : space_(std::move(space)), data_(std::move(data)), support_counts_(space_.size(), 0) {
  if (data_.empty()) throw ValidationError("a corpus needs at least one datum");
  std::set<std::string> names;
  for (const auto& m : space_)
    if (!names.insert(m.name).second) throw ValidationError("model '" + m.name + "' registered twice");
  std::set<std::string> ids;
  for (const auto& d : data_) {
    if (!ids.insert(d.id).second) throw ValidationError("datum '" + d.id + "' appears twice");
    if (d.model >= space_.size()) throw ValidationError("datum '" + d.id + "' supports an unregistered model");
    ++support_counts_[d.model];
  }
}

std::optional<std::size_t> Corpus::find_model(std::string_view name) const {
  for (std::size_t i = 0; i < space_.size(); ++i)
    if (space_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Corpus::find_datum(std::string_view id) const {
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i].id == id) return i;
  return std::nullopt;
}

std::size_t Corpus::model_index(std::string_view name) const {
  auto m = find_model(name);
  if (!m) throw InvalidArgument("unknown model '" + std::string(name) + "'");
  return *m;
}

std::size_t Corpus::support(std::string_view datum) const {
  auto d = find_datum(datum);
  if (!d) throw InvalidArgument("unknown datum '" + std::string(datum) + "'");
  return data_[*d].model;
}

Rational Corpus::data_prior(std::string_view datum) const {
  if (!find_datum(datum)) throw InvalidArgument("unknown datum '" + std::string(datum) + "'");
  return Rational(1, static_cast<std::int64_t>(data_.size()));
}

Rational Corpus::model_likelihood(std::size_t m, std::string_view datum) const {
  if (m >= space_.size()) throw InvalidArgument("unknown model index " + std::to_string(m));
  return support(datum) == m ? Rational(1) : Rational(0);
}

Rational Corpus::model_marginal(std::size_t m) const {
  if (m >= space_.size()) throw InvalidArgument("unknown model index " + std::to_string(m));
  return Rational(static_cast<std::int64_t>(support_counts_[m]), static_cast<std::int64_t>(data_.size()));
}

ModelSet Corpus::possible_models() const {
  ModelSet s(space_.size());
  for (const auto& d : data_) s.insert(d.model);
  return s;
}

}  // namespace predabs
