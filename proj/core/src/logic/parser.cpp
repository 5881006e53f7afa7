#include "toposbench/logic/parser.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "toposbench/error.hpp"

namespace toposbench::logic {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
  static const char* const kSymbols[] = {"<=>", "/\\", "\\/", "=>", "->", "~", "=", "(", ")",
                                         "{",   "}",   "[",   "]",  "|",  ":", ",", ".", "*"};
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (ch >= 0x80) {
      throw SyntaxError(ErrorCode::SyntaxError, i, "non-ASCII input is not accepted");
    }
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    if (std::isalpha(ch) || ch == '_') {
      const std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '\'')) {
        ++i;
      }
      tokens.push_back({Tok::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(ch)) {
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      tokens.push_back({Tok::Number, std::string(text.substr(start, i - start)), start});
      continue;
    }
    bool matched = false;
    for (const char* symbol : kSymbols) {
      const std::string_view s(symbol);
      if (text.substr(i, s.size()) == s) {
        tokens.push_back({Tok::Symbol, std::string(s), i});
        i += s.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw SyntaxError(ErrorCode::SyntaxError, i,
                        std::string("unexpected character '") + text[i] + "'");
    }
  }
  tokens.push_back({Tok::End, "", text.size()});
  return tokens;
}

bool is_keyword(const std::string& s) {
  static const char* const kKeywords[] = {"forall", "exists", "in",    "true", "false", "union",
                                          "inter",  "subset", "empty", "id",   "o"};
  for (const char* k : kKeywords) {
    if (s == k) return true;
  }
  return false;
}

std::optional<std::size_t> projection_index(const std::string& s) {
  if (s.size() < 3 || s.compare(0, 2, "pi") != 0) return std::nullopt;
  std::size_t value = 0;
  for (std::size_t i = 2; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(s[i] - '0');
  }
  if (value == 0) return std::nullopt;
  return value;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  TermRef formula_only() {
    TermRef t = formula();
    expect_end();
    return t;
  }

  TypeRef type_only() {
    TypeRef t = type();
    expect_end();
    return t;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  bool peek_symbol(const char* s) const {
    return peek().kind == Tok::Symbol && peek().text == s;
  }
  bool peek_word(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    if (t.kind == Tok::End) {
      throw SyntaxError(ErrorCode::SyntaxError, t.pos, message + ", found end of input");
    }
    throw SyntaxError(ErrorCode::SyntaxError, t.pos, message + ", found '" + t.text + "'");
  }

  void expect_symbol(const char* s) {
    if (!peek_symbol(s)) fail(std::string("expected '") + s + "'");
    ++at_;
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("expected end of input");
  }

  std::string identifier(const char* what) {
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) fail(std::string("expected ") + what);
    return tokens_[at_++].text;
  }

  // Types.
  TypeRef type() {
    TypeRef left = product_type();
    if (peek_symbol("->")) {
      ++at_;
      return LType::exp(left, type());
    }
    return left;
  }

  TypeRef product_type() {
    std::vector<TypeRef> factors{type_atom()};
    while (peek_symbol("*")) {
      ++at_;
      factors.push_back(type_atom());
    }
    if (factors.size() == 1) return factors.front();
    return LType::product(std::move(factors));
  }

  TypeRef type_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Number && t.text == "1") {
      ++at_;
      return LType::unit();
    }
    if (t.kind == Tok::Symbol && t.text == "(") {
      ++at_;
      TypeRef inner = type();
      expect_symbol(")");
      return inner;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "Omega") {
        ++at_;
        return LType::omega();
      }
      if (t.text == "P") {
        ++at_;
        return LType::power(type_atom());
      }
      if (!is_keyword(t.text)) {
        ++at_;
        return LType::ground(t.text);
      }
    }
    fail("expected a type");
  }

  // Terms.
  TermRef formula() {
    TermRef left = implication();
    if (peek_symbol("<=>")) {
      const std::size_t pos = peek().pos;
      ++at_;
      return make_term(Op::Iff, pos, {left, implication()});
    }
    return left;
  }

  TermRef implication() {
    TermRef left = disjunction();
    if (peek_symbol("=>")) {
      const std::size_t pos = peek().pos;
      ++at_;
      return make_term(Op::Implies, pos, {left, implication()});
    }
    return left;
  }

  TermRef disjunction() {
    TermRef left = conjunction();
    while (peek_symbol("\\/")) {
      const std::size_t pos = peek().pos;
      ++at_;
      left = make_term(Op::Or, pos, {left, conjunction()});
    }
    return left;
  }

  TermRef conjunction() {
    TermRef left = unary();
    while (peek_symbol("/\\")) {
      const std::size_t pos = peek().pos;
      ++at_;
      left = make_term(Op::And, pos, {left, unary()});
    }
    return left;
  }

  TermRef unary() {
    if (peek_symbol("~")) {
      const std::size_t pos = peek().pos;
      ++at_;
      return make_term(Op::Not, pos, {unary()});
    }
    if (peek_word("forall") || peek_word("exists")) return quantifier();
    return relation();
  }

  TermRef quantifier() {
    const Op op = peek().text == "forall" ? Op::Forall : Op::Exists;
    const std::size_t pos = peek().pos;
    ++at_;
    std::vector<std::pair<std::string, TypeRef>> binders;
    do {
      if (!binders.empty()) ++at_;
      std::string name = identifier("a bound variable");
      expect_symbol(":");
      binders.emplace_back(std::move(name), type());
    } while (peek_symbol(","));
    expect_symbol(".");
    TermRef body = formula();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      body = make_binder(op, it->first, it->second, body, pos);
    }
    return body;
  }

  TermRef relation() {
    TermRef left = set_expression();
    const std::size_t pos = peek().pos;
    if (peek_symbol("=")) {
      ++at_;
      return make_term(Op::Eq, pos, {left, set_expression()});
    }
    if (peek_word("in")) {
      ++at_;
      return make_term(Op::Mem, pos, {left, set_expression()});
    }
    if (peek_word("subset")) {
      ++at_;
      return make_term(Op::Subset, pos, {left, set_expression()});
    }
    return left;
  }

  TermRef set_expression() {
    TermRef left = composition();
    while (peek_word("union") || peek_word("inter")) {
      const Op op = peek().text == "union" ? Op::Union : Op::Inter;
      const std::size_t pos = peek().pos;
      ++at_;
      left = make_term(op, pos, {left, composition()});
    }
    return left;
  }

  TermRef composition() {
    TermRef left = postfix();
    while (peek_word("o")) {
      const std::size_t pos = peek().pos;
      ++at_;
      left = make_term(Op::Compose, pos, {left, postfix()});
    }
    return left;
  }

  TermRef postfix() {
    TermRef t = primary();
    while (peek_symbol("(")) {
      const std::size_t pos = peek().pos;
      ++at_;
      std::vector<TermRef> args{formula()};
      while (peek_symbol(",")) {
        ++at_;
        args.push_back(formula());
      }
      expect_symbol(")");
      TermRef arg = args.size() == 1 ? args.front() : make_term(Op::Tuple, pos, std::move(args));
      t = make_term(Op::Call, pos, {t, arg});
    }
    return t;
  }

  TermRef primary() {
    const Token& t = peek();
    const std::size_t pos = t.pos;
    if (t.kind == Tok::Symbol) {
      if (t.text == "*") {
        ++at_;
        return make_term(Op::Star, pos);
      }
      if (t.text == "(") {
        ++at_;
        std::vector<TermRef> items{formula()};
        while (peek_symbol(",")) {
          ++at_;
          items.push_back(formula());
        }
        expect_symbol(")");
        if (items.size() == 1) return items.front();
        return make_term(Op::Tuple, pos, std::move(items));
      }
      if (t.text == "{") {
        ++at_;
        std::string name = identifier("a bound variable");
        expect_symbol(":");
        TypeRef binder_type = type();
        expect_symbol("|");
        TermRef body = formula();
        expect_symbol("}");
        return make_binder(Op::Comprehension, std::move(name), std::move(binder_type), body, pos);
      }
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "true" || t.text == "false") {
        ++at_;
        return make_term(t.text == "true" ? Op::True : Op::False, pos);
      }
      if (t.text == "forall" || t.text == "exists") return quantifier();
      if (t.text == "empty" || t.text == "id") {
        const Op op = t.text == "empty" ? Op::Empty : Op::Identity;
        ++at_;
        expect_symbol("[");
        TypeRef arg = type();
        expect_symbol("]");
        auto term = std::make_shared<Term>();
        term->op = op;
        term->pos = pos;
        term->binder_type = std::move(arg);
        return term;
      }
      if (const auto index = projection_index(t.text)) {
        ++at_;
        auto term = std::make_shared<Term>();
        term->op = Op::Proj;
        term->pos = pos;
        term->index = *index;
        term->args = {postfix()};
        return term;
      }
      if (!is_keyword(t.text)) {
        ++at_;
        return make_var(t.text, pos);
      }
    }
    fail("expected a term");
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

}  // namespace

TermRef parse_formula(std::string_view text) { return Parser(text).formula_only(); }

TypeRef parse_type(std::string_view text) { return Parser(text).type_only(); }

}  // namespace toposbench::logic
