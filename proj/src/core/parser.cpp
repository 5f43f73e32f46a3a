// SPDX-License-Identifier: Apache-2.0
#include "parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "error.hpp"

namespace predabs {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Dot, Bang, Amp, Bar, Arrow, Plus, Minus, Star, Slash, Eq, Lt, Gt, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePosition pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Ident:
      return "identifier '" + t.text + "'";
    case Tok::Number:
      return "number '" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourcePosition pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    SourcePosition start = pos;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", start});
      advance(2);
      continue;
    }
    Tok kind;
    switch (ch) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      case '!': kind = Tok::Bang; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '=': kind = Tok::Eq; break;
      case '<': kind = Tok::Lt; break;
      case '>': kind = Tok::Gt; break;
      default:
        throw SyntaxError(start, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({kind, std::string(1, ch), start});
    advance(1);
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

bool is_relation(Tok k) { return k == Tok::Eq || k == Tok::Lt || k == Tok::Gt; }
bool is_term_operator(Tok k) { return k == Tok::Plus || k == Tok::Minus || k == Tok::Star || k == Tok::Slash; }

class Parser {
 public:
  Parser(std::string_view src, const Vocabulary& vocab) : tokens_(tokenize(src)), vocab_(vocab) {}

  Formula parse_whole_formula() {
    Formula f = formula();
    expect_end();
    return f;
  }

  Term parse_whole_term() {
    Term t = term();
    expect_end();
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError(peek().pos, describe(peek()), std::move(expected));
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail({what});
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail({"end of input"});
  }

  bool at_quantifier() const {
    return peek().kind == Tok::Ident && (peek().text == "forall" || peek().text == "exists");
  }

  Formula formula() {
    if (at_quantifier()) {
      bool universal = next().text == "forall";
      const Token& var = peek();
      if (var.kind != Tok::Ident) fail({"variable"});
      ++pos_;
      if (!vocab_.is_variable(var.text)) {
        if (!vocab_.is_declared(var.text)) throw UndeclaredIdentifier(var.text);
        throw SyntaxError(var.pos, "'" + var.text + "' is not a variable");
      }
      expect(Tok::Dot, "'.'");
      Formula body = formula();
      return universal ? Formula::forall(var.text, std::move(body)) : Formula::exists(var.text, std::move(body));
    }
    return implication();
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::Arrow)) return Formula::implication(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Bar)) f = Formula::disjunction(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::Amp)) f = Formula::conjunction(std::move(f), unary());
    return f;
  }

  // Index just past the parenthesis matching the one at pos_.
  std::size_t matching_paren_end() const {
    int depth = 0;
    for (std::size_t k = pos_; k < tokens_.size(); ++k) {
      if (tokens_[k].kind == Tok::LParen) ++depth;
      if (tokens_[k].kind == Tok::RParen && --depth == 0) return k + 1;
      if (tokens_[k].kind == Tok::End) break;
    }
    return tokens_.size() - 1;
  }

  Formula unary() {
    if (accept(Tok::Bang)) return Formula::negation(unary());
    if (peek().kind == Tok::LParen) {
      // A parenthesised term is followed by an arithmetic operator or relation.
      Tok after = tokens_[matching_paren_end()].kind;
      if (!is_relation(after) && !is_term_operator(after)) {
        ++pos_;
        Formula inner = formula();
        expect(Tok::RParen, "')'");
        return inner;
      }
      return relation_atom();
    }
    if (at_quantifier()) fail({"'('", "'!'", "atom"});
    if (peek().kind == Tok::Ident && vocab_.is_predicate(peek().text) && !is_infix_symbol(peek().text))
      return predicate_atom();
    if (peek().kind == Tok::Ident || peek().kind == Tok::Number) return relation_atom();
    fail({"'('", "'!'", "quantifier", "atom"});
  }

  Formula predicate_atom() {
    Token name = next();
    std::vector<Term> args;
    if (accept(Tok::LParen)) {
      args.push_back(term());
      while (accept(Tok::Comma)) args.push_back(term());
      expect(Tok::RParen, "')'");
    }
    std::size_t arity = vocab_.predicate_arity(name.text);
    if (arity != args.size()) throw ArityMismatch(name.text, arity, args.size());
    return Formula::atom(name.text, std::move(args));
  }

  Formula relation_atom() {
    Term lhs = term();
    if (!is_relation(peek().kind)) fail({"'='", "'<'", "'>'"});
    std::string rel = next().text;
    if (!vocab_.is_predicate(rel)) throw UndeclaredIdentifier(rel);
    std::size_t arity = vocab_.predicate_arity(rel);
    if (arity != 2) throw ArityMismatch(rel, arity, 2);
    Term rhs = term();
    return Formula::atom(rel, {std::move(lhs), std::move(rhs)});
  }

  Term binary(const std::string& op, Term lhs, Term rhs) {
    if (!vocab_.is_function(op)) throw UndeclaredIdentifier(op);
    std::size_t arity = vocab_.function_arity(op);
    if (arity != 2) throw ArityMismatch(op, arity, 2);
    return Term::apply(op, {std::move(lhs), std::move(rhs)});
  }

  Term term() {
    Term t = factor();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      std::string op = next().text;
      t = binary(op, std::move(t), factor());
    }
    return t;
  }

  Term factor() {
    Term t = primary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      std::string op = next().text;
      t = binary(op, std::move(t), primary());
    }
    return t;
  }

  Term primary() {
    if (accept(Tok::LParen)) {
      Term t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (peek().kind == Tok::Number) {
      Token num = next();
      if (!vocab_.is_constant(num.text)) throw UndeclaredIdentifier(num.text);
      return Term::constant(num.text);
    }
    if (peek().kind != Tok::Ident) fail({"term"});
    Token name = next();
    if (vocab_.is_variable(name.text)) return Term::variable(name.text);
    if (vocab_.is_constant(name.text)) return Term::constant(name.text);
    if (vocab_.is_function(name.text)) {
      std::vector<Term> args;
      expect(Tok::LParen, "'('");
      args.push_back(term());
      while (accept(Tok::Comma)) args.push_back(term());
      expect(Tok::RParen, "')'");
      std::size_t arity = vocab_.function_arity(name.text);
      if (arity != args.size()) throw ArityMismatch(name.text, arity, args.size());
      return Term::apply(name.text, std::move(args));
    }
    if (vocab_.is_predicate(name.text))
      throw SyntaxError(name.pos, "predicate '" + name.text + "' used as a term");
    throw UndeclaredIdentifier(name.text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Vocabulary& vocab_;
};

}  // namespace

Formula parse_formula(std::string_view src, const Vocabulary& vocab) {
  return Parser(src, vocab).parse_whole_formula();
}

Term parse_term(std::string_view src, const Vocabulary& vocab) { return Parser(src, vocab).parse_whole_term(); }

}  // namespace predabs
