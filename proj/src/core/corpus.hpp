// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"
#include "semantics.hpp"

namespace predabs {

/// Membership set over a model space (indices 0..size-1).
class ModelSet {
 public:
  ModelSet() = default;
  explicit ModelSet(std::size_t universe) : members_(universe, false) {}

  static ModelSet all(std::size_t universe);

  std::size_t universe() const { return members_.size(); }
  bool contains(std::size_t m) const { return members_.at(m); }
  void insert(std::size_t m) { members_.at(m) = true; }
  void erase(std::size_t m) { members_.at(m) = false; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> indices() const;

  bool is_subset_of(const ModelSet& other) const;
  ModelSet& operator&=(const ModelSet& other);
  ModelSet& operator|=(const ModelSet& other);
  friend ModelSet operator&(ModelSet a, const ModelSet& b) { return a &= b; }
  friend ModelSet operator|(ModelSet a, const ModelSet& b) { return a |= b; }
  friend bool operator==(const ModelSet&, const ModelSet&) = default;

 private:
  std::vector<bool> members_;
};

struct NamedModel {
  std::string name;
  Model model;
  friend bool operator==(const NamedModel&, const NamedModel&) = default;
};

/// Data points with their supported models, over a registered model space.
/// p(D) is uniform; p(M = m | D = d) is 1 exactly when m supports d.
class Corpus {
 public:
  struct Datum {
    std::string id;
    std::size_t model;  // index into the model space
    friend bool operator==(const Datum&, const Datum&) = default;
  };

  /// Throws ValidationError for an empty corpus, duplicate names or ids, or a
  /// datum whose model index is outside the space.
  Corpus(std::vector<NamedModel> space, std::vector<Datum> data);

  std::size_t size() const { return data_.size(); }
  const std::vector<Datum>& data() const { return data_; }
  const std::vector<NamedModel>& models() const { return space_; }
  const Model& model(std::size_t m) const { return space_.at(m).model; }
  std::size_t model_count() const { return space_.size(); }

  std::optional<std::size_t> find_model(std::string_view name) const;
  std::optional<std::size_t> find_datum(std::string_view id) const;
  /// Like find_model but throws InvalidArgument for unknown names.
  std::size_t model_index(std::string_view name) const;

  /// Index of the model supported by the datum.
  std::size_t support(std::string_view datum) const;
  /// K_n: number of data supporting model m.
  std::size_t support_count(std::size_t m) const { return support_counts_.at(m); }

  Rational data_prior(std::string_view datum) const;
  Rational model_likelihood(std::size_t m, std::string_view datum) const;
  Rational model_marginal(std::size_t m) const;
  ModelSet possible_models() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  std::vector<NamedModel> space_;
  std::vector<Datum> data_;
  std::vector<std::size_t> support_counts_;
};

}  // namespace predabs
