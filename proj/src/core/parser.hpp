// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "logic.hpp"

namespace predabs {

/// Parses formula text against a vocabulary.
///
///   formula := quant | impl
///   quant   := ("forall" | "exists") IDENT "." formula
///   impl    := or ("->" impl)?
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := "!" unary | "(" formula ")" | atom
///   atom    := IDENT ("(" term ("," term)* ")")? | term ("=" | "<" | ">") term
///   term    := factor (("+" | "-") factor)*
///   factor  := prim (("*" | "/") prim)*
///   prim    := IDENT | NUMBER | "(" term ")" | IDENT "(" term ("," term)* ")"
///
/// Throws SyntaxError (with position and expected tokens), UndeclaredIdentifier
/// or ArityMismatch. Open formulas are accepted; callers that evaluate check
/// closedness.
Formula parse_formula(std::string_view src, const Vocabulary& vocab);

Term parse_term(std::string_view src, const Vocabulary& vocab);

}  // namespace predabs
