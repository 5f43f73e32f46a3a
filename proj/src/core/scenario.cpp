// SPDX-License-Identifier: Apache-2.0
#include "scenario.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "error.hpp"
#include "semantics.hpp"

namespace predabs {

namespace {

enum class Tok { Word, LBrace, RBrace, LParen, RParen, Comma, Semi, Eq, Slash, Arrow, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePosition pos;
};

bool word_char(unsigned char ch) {
  return std::isalnum(ch) || ch == '_' || ch == '.' || ch == '-' || ch == '+' || ch == '\'' || ch >= 0x80;
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourcePosition pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++pos.column;  // count code points, not UTF-8 continuation bytes
      }
    }
  };
  while (i < src.size()) {
    char ch = src[i];
    SourcePosition start = pos;
    if (ch == '\n') {
      out.push_back({Tok::Newline, "newline", start});
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", start});
      advance(2);
      continue;
    }
    Tok kind = Tok::End;
    switch (ch) {
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semi; break;
      case '=': kind = Tok::Eq; break;
      case '/': kind = Tok::Slash; break;
      default: break;
    }
    if (kind != Tok::End) {
      out.push_back({kind, std::string(1, ch), start});
      advance(1);
      continue;
    }
    if (!word_char(static_cast<unsigned char>(ch)))
      throw SyntaxError(start, std::string("unexpected character '") + ch + "'");
    std::size_t j = i;
    while (j < src.size() && word_char(static_cast<unsigned char>(src[j]))) {
      if (src[j] == '-' && j + 1 < src.size() && src[j + 1] == '>') break;
      ++j;
    }
    out.push_back({Tok::Word, std::string(src.substr(i, j - i)), start});
    advance(j - i);
  }
  out.push_back({Tok::End, "end of file", pos});
  return out;
}

std::string describe(const Token& t) {
  if (t.kind == Tok::Word) return "'" + t.text + "'";
  if (t.kind == Tok::Newline || t.kind == Tok::End) return t.text;
  return "'" + t.text + "'";
}

std::string at(SourcePosition p) { return std::to_string(p.line) + ":" + std::to_string(p.column) + ": "; }

class ScenarioParser {
 public:
  explicit ScenarioParser(std::string_view src) : tokens_(tokenize(src)) {}

  Scenario parse() {
    bool seen_vocab = false;
    std::optional<SourcePosition> data_pos;
    while (true) {
      skip_separators();
      if (peek().kind == Tok::End) break;
      Token head = expect_word("section keyword");
      if (head.text == "vocab") {
        if (seen_vocab) throw SyntaxError(head.pos, "duplicate vocab section");
        seen_vocab = true;
        parse_vocab();
      } else if (head.text == "model") {
        require_vocab(seen_vocab, head);
        parse_model(head);
      } else if (head.text == "computed-model") {
        require_vocab(seen_vocab, head);
        parse_computed_model(head);
      } else if (head.text == "space") {
        require_vocab(seen_vocab, head);
        parse_space();
      } else if (head.text == "data") {
        require_vocab(seen_vocab, head);
        data_pos = head.pos;
        parse_data();
      } else if (head.text == "options") {
        parse_options();
      } else {
        throw SyntaxError(head.pos, describe(head), {"vocab", "model", "computed-model", "space", "data", "options"});
      }
    }
    if (!seen_vocab) throw ValidationError("scenario has no vocab section");
    if (!data_pos) throw ValidationError("scenario has no data section (at least one datum is required)");

    std::vector<Corpus::Datum> data;
    for (const auto& [name, pos] : data_refs_) {
      auto it = model_index_.find(name);
      if (it == model_index_.end()) throw ValidationError(at(pos) + "data refers to unknown model '" + name + "'");
      data.push_back({"d" + std::to_string(data.size() + 1), it->second});
    }
    if (data.empty()) throw ValidationError(at(*data_pos) + "data section is empty (at least one datum is required)");
    return Scenario{vocab_, Corpus(std::move(models_), std::move(data)), mu_, limit_};
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
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
  Token expect_word(const char* what) {
    if (peek().kind != Tok::Word) fail({what});
    return next();
  }
  void skip_separators() {
    while (peek().kind == Tok::Newline || peek().kind == Tok::Semi) ++pos_;
  }
  bool at_statement_end() const {
    Tok k = peek().kind;
    return k == Tok::Newline || k == Tok::Semi || k == Tok::RBrace || k == Tok::End;
  }
  void end_statement() {
    if (peek().kind == Tok::RBrace) return;
    if (!accept(Tok::Newline) && !accept(Tok::Semi)) fail({"newline", "';'", "'}'"});
  }
  void require_vocab(bool seen, const Token& head) const {
    if (!seen) throw SyntaxError(head.pos, "'" + head.text + "' section before the vocab section");
  }

  std::size_t parse_count(const Token& t) const {
    std::size_t value = 0;
    for (char ch : t.text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw SyntaxError(t.pos, describe(t), {"non-negative integer"});
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      if (value > 1'000'000'000) throw SyntaxError(t.pos, "number too large");
    }
    if (t.text.empty()) throw SyntaxError(t.pos, describe(t), {"non-negative integer"});
    return value;
  }

  Rational parse_rational_value() {
    Token first = expect_word("number");
    std::string text = first.text;
    if (accept(Tok::Slash)) text += "/" + expect_word("denominator").text;
    try {
      return Rational::parse(text);
    } catch (const Error&) {
      throw SyntaxError(first.pos, "'" + text + "'", {"rational number"});
    }
  }

  void declare(const Token& t, auto&& fn) {
    try {
      fn();
    } catch (const InvalidArgument& e) {
      throw SyntaxError(t.pos, e.what());
    }
  }

  // name/arity pairs
  void parse_signature_list(bool predicate) {
    while (!at_statement_end()) {
      Token name = expect_word("symbol name");
      expect(Tok::Slash, "'/'");
      Token arity_tok = expect_word("arity");
      std::size_t arity = parse_count(arity_tok);
      declare(name, [&] {
        if (predicate) {
          vocab_.add_predicate(name.text, arity);
        } else {
          vocab_.add_function(name.text, arity);
        }
      });
      accept(Tok::Comma);
    }
  }

  void parse_vocab() {
    expect(Tok::LBrace, "'{'");
    while (true) {
      skip_separators();
      if (accept(Tok::RBrace)) return;
      Token kw = expect_word("'const', 'var', 'pred', 'func' or 'arithmetic'");
      if (kw.text == "const" || kw.text == "var") {
        while (!at_statement_end()) {
          Token name = expect_word("name");
          declare(name, [&] {
            if (kw.text == "const") {
              vocab_.add_constant(name.text);
            } else {
              vocab_.add_variable(name.text);
            }
          });
          accept(Tok::Comma);
        }
      } else if (kw.text == "pred" || kw.text == "func") {
        parse_signature_list(kw.text == "pred");
      } else if (kw.text == "arithmetic") {
        declare(kw, [&] { vocab_.enable_arithmetic(); });
      } else {
        throw SyntaxError(kw.pos, describe(kw), {"const", "var", "pred", "func", "arithmetic"});
      }
      end_statement();
    }
  }

  Token parse_model_name() {
    Token name = expect_word("model name");
    if (model_index_.count(name.text)) throw ValidationError(at(name.pos) + "model '" + name.text + "' defined twice");
    return name;
  }

  void register_model(const Token& name, Model m) {
    auto violations = validate_model(m, vocab_);
    if (!violations.empty()) {
      std::string msg = at(name.pos) + "model '" + name.text + "' is invalid:";
      for (const auto& v : violations) msg += "\n  " + v.message;
      throw ValidationError(msg);
    }
    model_index_[name.text] = models_.size();
    models_.push_back({name.text, std::move(m)});
  }

  std::size_t entity(const ExtensionalModel& m, const Token& t) const {
    for (std::size_t i = 0; i < m.domain.size(); ++i)
      if (m.domain[i] == t.text) return i;
    throw ValidationError(at(t.pos) + "'" + t.text + "' is not in the model's domain");
  }

  Tuple parse_tuple(const ExtensionalModel& m) {
    Tuple t;
    expect(Tok::LParen, "'('");
    if (accept(Tok::RParen)) return t;
    do {
      t.push_back(entity(m, expect_word("entity")));
    } while (accept(Tok::Comma));
    expect(Tok::RParen, "')'");
    return t;
  }

  void parse_model(const Token&) {
    Token name = parse_model_name();
    ExtensionalModel m;
    bool seen_domain = false;
    expect(Tok::LBrace, "'{'");
    while (true) {
      skip_separators();
      if (accept(Tok::RBrace)) break;
      Token kw = expect_word("'domain', 'const', 'pred' or 'func'");
      if (kw.text == "domain") {
        if (seen_domain) throw SyntaxError(kw.pos, "duplicate domain statement");
        seen_domain = true;
        std::set<std::string> names;
        while (!at_statement_end()) {
          Token e = expect_word("entity name");
          if (!names.insert(e.text).second) throw ValidationError(at(e.pos) + "entity '" + e.text + "' listed twice");
          m.domain.push_back(e.text);
          accept(Tok::Comma);
        }
      } else if (!seen_domain) {
        throw SyntaxError(kw.pos, "'" + kw.text + "' before the domain statement");
      } else if (kw.text == "const") {
        Token c = expect_word("constant");
        expect(Tok::Eq, "'='");
        Token e = expect_word("entity");
        if (!m.constants.emplace(c.text, entity(m, e)).second)
          throw ValidationError(at(c.pos) + "constant '" + c.text + "' assigned twice");
      } else if (kw.text == "pred") {
        Token p = expect_word("predicate");
        expect(Tok::Eq, "'='");
        expect(Tok::LBrace, "'{'");
        Relation rel;
        rel.arity = vocab_.is_predicate(p.text) ? vocab_.predicate_arity(p.text) : 0;
        while (!accept(Tok::RBrace)) {
          rel.tuples.insert(parse_tuple(m));
          if (!accept(Tok::Comma) && peek().kind != Tok::RBrace) fail({"','", "'}'"});
        }
        if (!m.predicates.emplace(p.text, std::move(rel)).second)
          throw ValidationError(at(p.pos) + "predicate '" + p.text + "' assigned twice");
      } else if (kw.text == "func") {
        Token f = expect_word("function");
        expect(Tok::Eq, "'='");
        expect(Tok::LBrace, "'{'");
        FunctionTable table;
        table.arity = vocab_.is_function(f.text) ? vocab_.function_arity(f.text) : 0;
        while (!accept(Tok::RBrace)) {
          Tuple args = parse_tuple(m);
          expect(Tok::Arrow, "'->'");
          std::size_t value = entity(m, expect_word("entity"));
          if (!table.values.emplace(std::move(args), value).second)
            throw ValidationError(at(f.pos) + "function '" + f.text + "' has two entries for the same arguments");
          if (!accept(Tok::Comma) && peek().kind != Tok::RBrace) fail({"','", "'}'"});
        }
        if (!m.functions.emplace(f.text, std::move(table)).second)
          throw ValidationError(at(f.pos) + "function '" + f.text + "' assigned twice");
      } else {
        throw SyntaxError(kw.pos, describe(kw), {"domain", "const", "pred", "func"});
      }
      end_statement();
    }
    for (const auto& [pred, arity] : vocab_.predicates()) m.predicates.try_emplace(pred, Relation{arity, {}});
    register_model(name, std::move(m));
  }

  void parse_computed_model(const Token&) {
    Token name = parse_model_name();
    ComputedModel m;
    expect(Tok::LBrace, "'{'");
    while (true) {
      skip_separators();
      if (accept(Tok::RBrace)) break;
      Token c = expect_word("constant");
      expect(Tok::Eq, "'='");
      if (!m.values.emplace(c.text, parse_rational_value()).second)
        throw ValidationError(at(c.pos) + "constant '" + c.text + "' assigned twice");
      accept(Tok::Comma);
      accept(Tok::Semi);
    }
    register_model(name, std::move(m));
  }

  void parse_space() {
    Token kw = expect_word("'enumerate'");
    if (kw.text != "enumerate") throw SyntaxError(kw.pos, describe(kw), {"enumerate"});
    Token size_tok = expect_word("domain size");
    std::size_t size = parse_count(size_tok);
    if (size == 0) throw SyntaxError(size_tok.pos, "domain size must be positive");
    std::vector<ExtensionalModel> all;
    try {
      all = enumerate_models(vocab_, size, limit_);
    } catch (const LimitExceeded& e) {
      throw ValidationError(at(kw.pos) + e.what());
    }
    std::set<std::string> present;
    for (const auto& m : models_) present.insert(content_key(m.model));
    for (std::size_t i = 0; i < all.size(); ++i) {
      Model m = all[i];
      if (!present.insert(content_key(m)).second) continue;
      std::string name = "E" + std::to_string(i + 1);
      if (model_index_.count(name)) throw ValidationError(at(kw.pos) + "enumerated model name '" + name + "' is taken");
      model_index_[name] = models_.size();
      models_.push_back({name, std::move(m)});
    }
    end_statement();
  }

  void parse_data() {
    expect(Tok::LBrace, "'{'");
    while (true) {
      skip_separators();
      if (accept(Tok::RBrace)) return;
      Token model = expect_word("model name");
      std::size_t count = 1;
      if (peek().kind == Tok::Word && peek().text == "count") {
        next();
        count = parse_count(expect_word("count"));
      }
      for (std::size_t i = 0; i < count; ++i) data_refs_.emplace_back(model.text, model.pos);
      accept(Tok::Comma);
      end_statement();
    }
  }

  void parse_options() {
    expect(Tok::LBrace, "'{'");
    while (true) {
      skip_separators();
      if (accept(Tok::RBrace)) return;
      Token key = expect_word("option name");
      expect(Tok::Eq, "'='");
      if (key.text == "mu") {
        Token value = expect_word("mu value");
        std::string text = value.text;
        if (accept(Tok::Slash)) text += "/" + expect_word("denominator").text;
        try {
          mu_ = MuMode::parse(text);
        } catch (const Error& e) {
          throw SyntaxError(value.pos, e.what());
        }
      } else if (key.text == "max-models") {
        limit_ = parse_count(expect_word("limit"));
      } else {
        throw SyntaxError(key.pos, describe(key), {"mu", "max-models"});
      }
      end_statement();
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Vocabulary vocab_;
  std::vector<NamedModel> models_;
  std::map<std::string, std::size_t> model_index_;
  std::vector<std::pair<std::string, SourcePosition>> data_refs_;
  MuMode mu_ = MuMode::one();
  std::size_t limit_ = kDefaultEnumerationLimit;
};

void write_tuple(std::ostream& os, const Tuple& t, const ExtensionalModel& m) {
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << m.domain.at(t[i]);
  os << ')';
}

}  // namespace

Scenario parse_scenario(std::string_view text) { return ScenarioParser(text).parse(); }

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read scenario file '" + path + "'");
  return parse_scenario(buf.str());
}

std::string format_scenario(const Scenario& s) {
  std::ostringstream os;
  const Vocabulary& v = s.vocabulary;
  os << "vocab {\n";
  if (!v.constants().empty()) {
    os << "  const";
    for (const auto& c : v.constants()) os << ' ' << c;
    os << '\n';
  }
  if (!v.variables().empty()) {
    os << "  var";
    for (const auto& x : v.variables()) os << ' ' << x;
    os << '\n';
  }
  if (v.arithmetic()) os << "  arithmetic\n";
  bool any_pred = false, any_func = false;
  for (const auto& [name, arity] : v.predicates()) {
    if (v.arithmetic() && is_infix_symbol(name)) continue;
    os << (any_pred ? " " : "  pred ") << name << '/' << arity;
    any_pred = true;
  }
  if (any_pred) os << '\n';
  for (const auto& [name, arity] : v.functions()) {
    if (v.arithmetic() && is_infix_symbol(name)) continue;
    os << (any_func ? " " : "  func ") << name << '/' << arity;
    any_func = true;
  }
  if (any_func) os << '\n';
  os << "}\n";

  for (const auto& nm : s.corpus.models()) {
    if (const auto* c = std::get_if<ComputedModel>(&nm.model)) {
      os << "computed-model " << nm.name << " {";
      for (const auto& [name, value] : c->values) os << ' ' << name << '=' << value.str();
      os << " }\n";
      continue;
    }
    const auto& m = std::get<ExtensionalModel>(nm.model);
    os << "model " << nm.name << " {\n  domain";
    for (const auto& e : m.domain) os << ' ' << e;
    os << '\n';
    for (const auto& [c, e] : m.constants) os << "  const " << c << " = " << m.domain.at(e) << '\n';
    for (const auto& [p, rel] : m.predicates) {
      os << "  pred " << p << " = {";
      bool first = true;
      for (const auto& t : rel.tuples) {
        os << (first ? "" : ", ");
        write_tuple(os, t, m);
        first = false;
      }
      os << "}\n";
    }
    for (const auto& [f, table] : m.functions) {
      os << "  func " << f << " = {";
      bool first = true;
      for (const auto& [args, value] : table.values) {
        os << (first ? "" : ", ");
        write_tuple(os, args, m);
        os << "->" << m.domain.at(value);
        first = false;
      }
      os << "}\n";
    }
    os << "}\n";
  }

  os << "data {\n";
  const auto& data = s.corpus.data();
  for (std::size_t i = 0; i < data.size();) {
    std::size_t j = i;
    while (j < data.size() && data[j].model == data[i].model) ++j;
    os << "  " << s.corpus.models()[data[i].model].name;
    if (j - i > 1) os << " count " << (j - i);
    os << '\n';
    i = j;
  }
  os << "}\n";
  os << "options {\n  mu = " << s.default_mu.str() << "\n  max-models = " << s.enumeration_limit << "\n}\n";
  return os.str();
}

}  // namespace predabs
