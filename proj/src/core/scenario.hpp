// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "corpus.hpp"
#include "inference.hpp"
#include "logic.hpp"

namespace predabs {

/// A loaded scenario file: language, registered models, data and defaults.
///
///   vocab { const alice bob; var x y; pred Blames/2; func mentor/1; arithmetic }
///   model M1 { domain e1 e2; const alice = e1; const bob = e2; pred Blames = {(e1,e2),(e2,e1)} }
///   computed-model d1 { top=2 left=3 right=4 bottom=10 }
///   space enumerate 2
///   data { M1 count 4; M2 }
///   options { mu = limit; max-models = 100000 }
///
/// Statements end at a newline or ';'. '#' starts a comment. `space enumerate N`
/// registers every model over the entities e1..eN whose content differs from the
/// models already defined, under the names E<i> where i is the position in
/// enumeration order. It uses the max-models limit in effect at that point, so
/// an options block meant to raise it goes first. Data ids are d1..dK in file order.
struct Scenario {
  Vocabulary vocabulary;
  Corpus corpus;
  MuMode default_mu = MuMode::one();
  std::size_t enumeration_limit = kDefaultEnumerationLimit;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws SyntaxError with line and column, or ValidationError.
Scenario parse_scenario(std::string_view text);
/// As parse_scenario; I/O failures raise IoError.
Scenario load_scenario(const std::string& path);

/// Text that parse_scenario turns back into an equal Scenario. Every model is
/// written out explicitly.
std::string format_scenario(const Scenario& s);

}  // namespace predabs
