// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lingtuple/fcl.hpp"

#include <cctype>
#include <cstdlib>
#include <unordered_set>

#include "lingtuple/format.hpp"

namespace lingtuple::fcl {

parse_error::parse_error(DiagKind kind, int line, int column,
                         const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {}

std::string_view density_name(Density density) noexcept {
  return density == Density::middle ? "middle" : "extreme";
}

namespace {

enum class TokenKind {
  identifier,
  number,
  lparen,
  rparen,
  comma,
  colon,
  semicolon,
  assign,  // :=
  pipe,
  end_of_input,
};

struct Token {
  TokenKind kind;
  std::string text;
  double number = 0.0;
  int line = 1;
  int column = 1;
};

[[noreturn]] void fail_syntax(const Token& at, const std::string& message) {
  throw parse_error(DiagKind::syntax, at.line, at.column, message);
}

[[noreturn]] void fail_semantic(const Token& at, const std::string& message) {
  throw parse_error(DiagKind::semantic, at.line, at.column, message);
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_blank();
      Token token = next();
      const bool done = token.kind == TokenKind::end_of_input;
      tokens.push_back(std::move(token));
      if (done) return tokens;
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, std::string text, int line, int column) const {
    return Token{kind, std::move(text), 0.0, line, column};
  }

  Token next() {
    const int line = line_;
    const int column = column_;
    if (pos_ >= text_.size()) {
      return make(TokenKind::end_of_input, "<end of input>", line, column);
    }
    const char c = peek();
    switch (c) {
      case '(': advance(); return make(TokenKind::lparen, "(", line, column);
      case ')': advance(); return make(TokenKind::rparen, ")", line, column);
      case ',': advance(); return make(TokenKind::comma, ",", line, column);
      case ';': advance(); return make(TokenKind::semicolon, ";", line, column);
      case '|': advance(); return make(TokenKind::pipe, "|", line, column);
      case ':':
        advance();
        if (peek() == '=') {
          advance();
          return make(TokenKind::assign, ":=", line, column);
        }
        return make(TokenKind::colon, ":", line, column);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return identifier(line, column);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '+' ||
        c == '-') {
      return number(line, column);
    }
    throw parse_error(DiagKind::syntax, line, column,
                      std::string("unexpected character '") + c + "'");
  }

  Token identifier(int line, int column) {
    std::string text;
    while (pos_ < text_.size()) {
      const char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        text.push_back(advance());
      } else {
        break;
      }
    }
    return make(TokenKind::identifier, std::move(text), line, column);
  }

  Token number(int line, int column) {
    std::string text;
    if (peek() == '+' || peek() == '-') text.push_back(advance());
    std::size_t integer_digits = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      text.push_back(advance());
      ++integer_digits;
    }
    std::size_t fraction_digits = 0;
    if (peek() == '.') {
      text.push_back(advance());
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        text.push_back(advance());
        ++fraction_digits;
      }
    }
    if (integer_digits + fraction_digits == 0) {
      throw parse_error(DiagKind::syntax, line, column,
                        "malformed number '" + text + "'");
    }
    if (peek() == 'e' || peek() == 'E') {
      text.push_back(advance());
      if (peek() == '+' || peek() == '-') text.push_back(advance());
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        throw parse_error(DiagKind::syntax, line, column,
                          "malformed exponent in '" + text + "'");
      }
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        text.push_back(advance());
      }
    }
    Token token = make(TokenKind::number, text, line, column);
    token.number = std::strtod(text.c_str(), nullptr);
    return token;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  FclModel run() {
    FclModel model;
    while (!at_end()) {
      const Token& token = peek();
      if (is_word(token, "VAR_INPUT")) {
        parse_var_block(model);
      } else if (is_word(token, "FUZZIFY")) {
        parse_fuzzify_block(model);
      } else {
        fail_syntax(token, "expected VAR_INPUT or FUZZIFY, got '" +
                               token.text + "'");
      }
    }
    return model;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  const Token& advance() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  bool at_end() const { return peek().kind == TokenKind::end_of_input; }

  static bool is_word(const Token& token, std::string_view word) {
    return token.kind == TokenKind::identifier && token.text == word;
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    const Token& token = peek();
    if (token.kind != kind) {
      fail_syntax(token, "expected " + what + ", got '" + token.text + "'");
    }
    return advance();
  }

  const Token& expect_word(std::string_view word) {
    const Token& token = peek();
    if (!is_word(token, word)) {
      fail_syntax(token, "expected '" + std::string(word) + "', got '" +
                             token.text + "'");
    }
    return advance();
  }

  const Token& expect_identifier(const std::string& what) {
    const Token& token = peek();
    if (token.kind != TokenKind::identifier) {
      fail_syntax(token, "expected " + what + ", got '" + token.text + "'");
    }
    if (is_reserved(token.text)) {
      fail_syntax(token, "keyword '" + token.text + "' cannot be used as " + what);
    }
    return advance();
  }

  static bool is_reserved(std::string_view word) {
    return word == "VAR_INPUT" || word == "END_VAR" || word == "FUZZIFY" ||
           word == "END_FUZZIFY" || word == "TERM" || word == "LING" ||
           word == "ling";
  }

  void parse_var_block(FclModel& model) {
    expect_word("VAR_INPUT");
    while (!is_word(peek(), "END_VAR")) {
      if (at_end()) {
        fail_syntax(peek(), "unterminated VAR_INPUT block");
      }
      const Token& name = expect_identifier("a variable name");
      expect(TokenKind::colon, "':'");
      expect_word("LING");
      expect(TokenKind::semicolon, "';'");
      for (const VarDecl& existing : model.inputs) {
        if (existing.name == name.text) {
          fail_semantic(name, "variable '" + name.text + "' already declared");
        }
      }
      model.inputs.push_back({name.text, "LING"});
    }
    expect_word("END_VAR");
  }

  void parse_fuzzify_block(FclModel& model) {
    expect_word("FUZZIFY");
    const Token& variable = expect_identifier("a variable name");

    bool declared = false;
    for (const VarDecl& input : model.inputs) {
      declared = declared || input.name == variable.text;
    }
    if (!declared) {
      fail_semantic(variable,
                    "FUZZIFY references undeclared variable '" + variable.text +
                        "'");
    }
    for (const FuzzifyBlock& block : model.fuzzify_blocks) {
      if (block.variable == variable.text) {
        fail_semantic(variable, "duplicate FUZZIFY block for variable '" +
                                    variable.text + "'");
      }
    }

    FuzzifyBlock block;
    block.variable = variable.text;
    while (!is_word(peek(), "END_FUZZIFY")) {
      if (at_end()) {
        fail_syntax(peek(), "unterminated FUZZIFY block");
      }
      const Token& keyword = peek();
      if (!is_word(keyword, "TERM")) {
        fail_syntax(keyword, "expected TERM or END_FUZZIFY, got '" +
                                 keyword.text + "'");
      }
      if (!block.terms.empty()) {
        fail_semantic(keyword, "variable '" + block.variable +
                                   "' already has a ling declaration");
      }
      block.terms.push_back(parse_term_decl());
    }
    const Token& end = expect_word("END_FUZZIFY");
    if (block.terms.empty()) {
      fail_semantic(end, "FUZZIFY block for '" + block.variable +
                             "' declares no TERM");
    }
    model.fuzzify_blocks.push_back(std::move(block));
  }

  TermDecl parse_term_decl() {
    expect_word("TERM");
    const Token& name = expect_identifier("a term name");
    expect(TokenKind::assign, "':='");
    expect_word("ling");

    TermDecl decl;
    decl.name = name.text;
    if (peek().kind == TokenKind::lparen) {
      decl.body = parse_pairs_body();
    } else if (peek().kind == TokenKind::identifier ||
               peek().kind == TokenKind::pipe) {
      decl.body = parse_density_body();
    } else {
      fail_syntax(peek(), "expected '(' or a term name after 'ling', got '" +
                              peek().text + "'");
    }
    expect(TokenKind::semicolon, "';'");
    return decl;
  }

  LingPairsDecl parse_pairs_body() {
    LingPairsDecl body;
    while (peek().kind == TokenKind::lparen) {
      advance();
      const Token& term = expect_identifier("a term name");
      expect(TokenKind::comma, "','");
      const Token& value = expect(TokenKind::number, "a number");
      expect(TokenKind::rparen, "')'");
      body.pairs.push_back({term.text, value.number});
    }
    return body;
  }

  LingDensityDecl parse_density_body() {
    // idents '|' ident '|' idents ',' density density
    std::vector<std::vector<Token>> groups(1);
    int pipes = 0;
    while (true) {
      const Token& token = peek();
      if (token.kind == TokenKind::identifier && !is_reserved(token.text)) {
        groups.back().push_back(advance());
      } else if (token.kind == TokenKind::pipe) {
        advance();
        groups.emplace_back();
        ++pipes;
      } else if (token.kind == TokenKind::comma) {
        break;
      } else {
        fail_syntax(token, "expected a term name, '|' or ',' in the density "
                           "declaration, got '" + token.text + "'");
      }
    }
    const Token& comma = expect(TokenKind::comma, "','");
    if (pipes != 2) {
      fail_syntax(comma, "density declaration needs exactly two '|' "
                         "separators, got " + std::to_string(pipes));
    }
    if (groups[1].size() != 1) {
      fail_semantic(groups[1].empty() ? comma : groups[1][1],
                    "density declaration needs exactly one center term, got " +
                        std::to_string(groups[1].size()));
    }

    LingDensityDecl body;
    for (const Token& token : groups[0]) body.left_terms.push_back(token.text);
    body.center_term = groups[1][0].text;
    for (const Token& token : groups[2]) body.right_terms.push_back(token.text);
    body.left_density = parse_density_word();
    body.right_density = parse_density_word();
    return body;
  }

  Density parse_density_word() {
    const Token& token = peek();
    if (is_word(token, "middle")) {
      advance();
      return Density::middle;
    }
    if (is_word(token, "extreme")) {
      advance();
      return Density::extreme;
    }
    fail_syntax(token, "expected 'middle' or 'extreme', got '" + token.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

FclModel parse(std::string_view text) { return Parser(text).run(); }

std::string serialize(const FclModel& model) {
  std::string out;
  if (!model.inputs.empty()) {
    out += "VAR_INPUT\n";
    for (const VarDecl& input : model.inputs) {
      out += "    " + input.name + " : " + input.type + ";\n";
    }
    out += "END_VAR\n";
  }
  for (const FuzzifyBlock& block : model.fuzzify_blocks) {
    if (!out.empty()) out += "\n";
    out += "FUZZIFY " + block.variable + "\n";
    for (const TermDecl& term : block.terms) {
      out += "    TERM " + term.name + " := ling";
      if (const auto* pairs = std::get_if<LingPairsDecl>(&term.body)) {
        for (const TermPair& pair : pairs->pairs) {
          out += " (" + pair.name + "," + format_roundtrip(pair.v) + ")";
        }
      } else {
        const auto& density = std::get<LingDensityDecl>(term.body);
        for (const std::string& name : density.left_terms) out += " " + name;
        out += " | " + density.center_term + " |";
        for (const std::string& name : density.right_terms) out += " " + name;
        out += ", " + std::string(density_name(density.left_density)) + " " +
               std::string(density_name(density.right_density));
      }
      out += ";\n";
    }
    out += "END_FUZZIFY\n";
  }
  return out;
}

UnbalancedPartition to_partition(const FclModel& model,
                                 std::string_view variable) {
  for (const FuzzifyBlock& block : model.fuzzify_blocks) {
    if (block.variable != variable) continue;
    const TermDecl& decl = block.terms.front();
    if (const auto* pairs = std::get_if<LingPairsDecl>(&decl.body)) {
      return build_partition(pairs->pairs);
    }
    throw domain_error(
        errc::not_supported,
        "density-form declarations need the Herrera-Martinez representation "
        "algorithm; declare (term,value) pairs instead");
  }
  throw domain_error(errc::unknown_variable,
                     "no ling declaration for variable '" +
                         std::string(variable) + "'");
}

}  // namespace lingtuple::fcl
