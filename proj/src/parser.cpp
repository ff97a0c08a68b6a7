/* Copyright 2026 The modarith Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "modarith/parser.hpp"

#include <cctype>
#include <exception>
#include <utility>

namespace modarith {

//------------------------------------------------------------------------------
// Lexer

namespace {

struct UnicodeAlias {
  const char* utf8;
  const char* ascii;
  TokenKind kind;
};

const UnicodeAlias kAliases[] = {
    {"∀", "forall", TokenKind::Ident}, {"∃", "exists", TokenKind::Ident},
    {"⇒", "=>", TokenKind::Symbol},    {"→", "->", TokenKind::Symbol},
    {"∧", "/\\", TokenKind::Symbol},   {"∨", "\\/", TokenKind::Symbol},
    {"¬", "~", TokenKind::Symbol},     {"⊤", "true", TokenKind::Ident},
    {"⊥", "false", TokenKind::Ident},  {"∈", "in", TokenKind::Ident},
    {"ε", "eps", TokenKind::Ident},    {"×", "*", TokenKind::Symbol},
    {"λ", "lam", TokenKind::Ident},    {"⟨", "<", TokenKind::Symbol},
    {"⟩", ">", TokenKind::Symbol},     {"⟶", "-->", TokenKind::Symbol},
    {"≡", "==", TokenKind::Symbol},   {"⇔", "<=>", TokenKind::Symbol},
};

const char* const kSymbols[] = {"<=>", "-->", ":=", "=>", "->", "/\\", "\\/", "==",
                                "(",   ")",  "[",  "]",  "{",   "}",   ",",
                                ".",   ":",  ";",  "|",  "<",   ">",   "=",
                                "+",   "*",  "~"};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xc0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (ident_start(c)) {
      std::size_t j = i;
      // Inner hyphens join words: prop-rule, ha-mod.
      while (j < text.size() &&
             (ident_char(text[j]) ||
              (text[j] == '-' && j + 1 < text.size() && ident_start(text[j + 1]))))
        ++j;
      out.push_back({TokenKind::Ident, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({TokenKind::Number, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '"')
        throw ParseError("unterminated string", tl, tc);
      out.push_back({TokenKind::String, std::string(text.substr(i + 1, j - i - 1)),
                     tl, tc});
      advance(j + 1 - i);
      continue;
    }
    bool matched = false;
    if (static_cast<unsigned char>(c) >= 0x80) {
      for (const auto& alias : kAliases) {
        std::string_view u(alias.utf8);
        if (text.substr(i, u.size()) == u) {
          out.push_back({alias.kind, alias.ascii, tl, tc});
          advance(u.size());
          matched = true;
          break;
        }
      }
    } else {
      for (const char* sym : kSymbols) {
        std::string_view s(sym);
        if (text.substr(i, s.size()) == s) {
          out.push_back({TokenKind::Symbol, std::string(s), tl, tc});
          advance(s.size());
          matched = true;
          break;
        }
      }
    }
    if (!matched) {
      std::size_t n = 1;
      while (i + n < text.size() &&
             (static_cast<unsigned char>(text[i + n]) & 0xc0) == 0x80)
        ++n;
      throw ParseError("unexpected character '" + std::string(text.substr(i, n)) +
                           "'",
                       tl, tc);
    }
  }
  out.push_back({TokenKind::End, "", line, col});
  return out;
}

//------------------------------------------------------------------------------
// Parser plumbing

struct Parser::Raw {
  enum Kind { Number, Name, App, Class } kind;
  std::string name;
  unsigned number = 0;
  std::vector<RawPtr> args;
  Term term;  // Class: already elaborated
  int line = 0;
  int column = 0;
};

Parser::Parser(std::vector<Token> tokens, ParseContext& ctx)
    : tokens_(std::move(tokens)), ctx_(ctx) {
  if (!ctx_.signature) throw Error("parse context without a signature");
}

Parser::Parser(std::string_view text, ParseContext& ctx)
    : Parser(tokenize(text), ctx) {}

const Token& Parser::peek(std::size_t ahead) const {
  std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[k];
}

bool Parser::is(const std::string& text) const {
  const Token& t = peek();
  return (t.kind == TokenKind::Symbol || t.kind == TokenKind::Ident) &&
         t.text == text;
}

Token Parser::advance() {
  Token t = peek();
  if (t.kind != TokenKind::End) ++pos_;
  return t;
}

bool Parser::accept(const std::string& text) {
  if (!is(text)) return false;
  ++pos_;
  return true;
}

void Parser::expect(const std::string& text) {
  if (!accept(text)) fail("expected '" + text + "'");
}

std::string Parser::ident() {
  if (peek().kind != TokenKind::Ident) fail("expected an identifier");
  return tokens_[pos_++].text;
}

void Parser::fail(const std::string& message) const {
  const Token& t = peek();
  std::string near = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
  throw ParseError(message + " near " + near, t.line, t.column);
}

void Parser::push_scope(std::string name, std::string sort) {
  scope_.emplace_back(std::move(name), std::move(sort));
}

void Parser::pop_scope() { scope_.pop_back(); }

const std::string* Parser::scoped_sort(const std::string& name) const {
  for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

const Rank* Parser::function_rank(const std::string& name) const {
  if (const Rank* r = ctx_.signature->function(name)) return r;
  if (ctx_.comprehension) return ctx_.comprehension->rank(name);
  return nullptr;
}

std::string Parser::sort_name() {
  const Token& t = peek();
  std::string s = ident();
  if (!ctx_.signature->has_sort(s)) {
    if (!ctx_.declare_unknown)
      throw ParseError("unknown sort '" + s + "'", t.line, t.column);
    ctx_.signature->add_sort(s);
  }
  return s;
}

//------------------------------------------------------------------------------
// Propositions

Prop Parser::prop() { return implication(); }

Prop Parser::implication() {
  if (is("forall") || is("exists")) return quantifier();
  Prop left = disjunction();
  if (accept("=>")) return mk_implies(left, implication());
  if (accept("<=>")) return mk_iff(left, implication());
  return left;
}

Prop Parser::disjunction() {
  Prop left = conjunction();
  if (accept("\\/")) return mk_or(left, disjunction());
  return left;
}

Prop Parser::conjunction() {
  Prop left = unary();
  if (accept("/\\")) return mk_and(left, conjunction());
  return left;
}

Prop Parser::unary() {
  if (accept("~")) return mk_not(unary());
  if (is("forall") || is("exists")) return quantifier();
  if (accept("true")) return mk_top();
  if (accept("false")) return mk_bottom();
  if (is("(")) {
    std::size_t saved = pos_;
    auto saved_vars = ctx_.var_sorts;
    Signature saved_sig = *ctx_.signature;
    std::exception_ptr prop_error;
    try {
      ++pos_;
      Prop p = prop();
      expect(")");
      if (!(is("=") || is("in") || is("+") || is("*") || is("->"))) return p;
    } catch (const Error&) {
      prop_error = std::current_exception();
    }
    // Maybe a parenthesized term instead.
    pos_ = saved;
    ctx_.var_sorts = std::move(saved_vars);
    *ctx_.signature = std::move(saved_sig);
    try {
      return atom();
    } catch (const Error&) {
      if (prop_error) std::rethrow_exception(prop_error);
      throw;
    }
  }
  return atom();
}

Prop Parser::quantifier() {
  PropKind kind = PropKind::ForAll;
  if (accept("exists")) kind = PropKind::Exists;
  else if (!accept("forall")) fail("expected a quantifier");
  std::vector<std::pair<std::string, std::string>> binders;
  do {
    std::string x = ident();
    std::string s = accept(":") ? sort_name() : ctx_.signature->default_sort();
    binders.emplace_back(x, s);
  } while (!is(".") && peek().kind == TokenKind::Ident);
  expect(".");
  for (const auto& [x, s] : binders) push_scope(x, s);
  Prop body;
  try {
    body = prop();
  } catch (...) {
    for (std::size_t i = 0; i < binders.size(); ++i) pop_scope();
    throw;
  }
  for (std::size_t i = 0; i < binders.size(); ++i) pop_scope();
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    body = mk_binder(kind, it->first, it->second, body);
  return body;
}

Prop Parser::atom() {
  const Token start = peek();
  RawPtr lhs = raw_term();
  std::string binary;
  if (accept("=")) binary = "=";
  else if (accept("in")) binary = "in";

  if (!binary.empty()) {
    RawPtr rhs = raw_term();
    std::vector<Term> args;
    if (const Rank* r = ctx_.signature->predicate(binary)) {
      if (r->args.size() != 2)
        throw ParseError("predicate '" + binary + "' is not binary", start.line,
                         start.column);
      args.push_back(elaborate(lhs, r->args[0]));
      args.push_back(elaborate(rhs, r->args[1]));
    } else if (ctx_.declare_unknown) {
      args.push_back(elaborate(lhs, ""));
      args.push_back(elaborate(rhs, binary == "=" ? args[0]->sort : ""));
      ctx_.signature->add_predicate(binary, {args[0]->sort, args[1]->sort});
    } else {
      throw ParseError("unknown predicate '" + binary + "'", start.line,
                       start.column);
    }
    return mk_atom(binary, std::move(args));
  }

  if ((lhs->kind != Raw::Name && lhs->kind != Raw::App) || lhs->name == "+" ||
      lhs->name == "*" || lhs->name == "->")
    throw ParseError("expected a proposition", start.line, start.column);
  const Rank* r = ctx_.signature->predicate(lhs->name);
  std::vector<Term> args;
  if (!r) {
    if (!ctx_.declare_unknown || function_rank(lhs->name) || scoped_sort(lhs->name) ||
        ctx_.var_sorts.count(lhs->name))
      throw ParseError("unknown predicate '" + lhs->name + "'", start.line,
                       start.column);
    std::vector<std::string> sorts;
    for (const auto& a : lhs->args) {
      args.push_back(elaborate(a, ""));
      sorts.push_back(args.back()->sort);
    }
    ctx_.signature->add_predicate(lhs->name, sorts);
    return mk_atom(lhs->name, std::move(args));
  }
  if (r->args.size() != lhs->args.size())
    throw ParseError("predicate '" + lhs->name + "' expects " +
                         std::to_string(r->args.size()) + " arguments",
                     start.line, start.column);
  for (std::size_t i = 0; i < lhs->args.size(); ++i)
    args.push_back(elaborate(lhs->args[i], r->args[i]));
  return mk_atom(lhs->name, std::move(args));
}

//------------------------------------------------------------------------------
// Terms

Parser::RawPtr Parser::raw_term() {
  RawPtr left = raw_sum();
  if (is("->")) {
    const Token& t = peek();
    ++pos_;
    auto node = std::make_shared<Raw>();
    node->kind = Raw::App;
    node->name = "->";
    node->line = t.line;
    node->column = t.column;
    node->args = {left, raw_term()};
    return node;
  }
  return left;
}

Parser::RawPtr Parser::raw_sum() {
  RawPtr left = raw_product();
  while (is("+")) {
    const Token& t = peek();
    ++pos_;
    auto node = std::make_shared<Raw>();
    node->kind = Raw::App;
    node->name = "+";
    node->line = t.line;
    node->column = t.column;
    node->args = {left, raw_product()};
    left = node;
  }
  return left;
}

Parser::RawPtr Parser::raw_product() {
  RawPtr left = raw_primary();
  while (is("*")) {
    const Token& t = peek();
    ++pos_;
    auto node = std::make_shared<Raw>();
    node->kind = Raw::App;
    node->name = "*";
    node->line = t.line;
    node->column = t.column;
    node->args = {left, raw_primary()};
    left = node;
  }
  return left;
}

Parser::RawPtr Parser::raw_primary() {
  const Token t = peek();
  auto node = std::make_shared<Raw>();
  node->line = t.line;
  node->column = t.column;
  if (t.kind == TokenKind::Number) {
    ++pos_;
    node->kind = Raw::Number;
    try {
      unsigned long v = std::stoul(t.text);
      if (v > 100000) throw std::out_of_range("numeral");
      node->number = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw ParseError("numeral too large", t.line, t.column);
    }
    return node;
  }
  if (accept("(")) {
    RawPtr inner = raw_term();
    expect(")");
    return inner;
  }
  if (accept("{")) {
    std::string x = ident();
    std::string s = accept(":") ? sort_name() : std::string(kIota);
    expect("|");
    push_scope(x, s);
    Prop body;
    try {
      body = prop();
    } catch (...) {
      pop_scope();
      throw;
    }
    pop_scope();
    expect("}");
    if (!ctx_.comprehension)
      throw ParseError("this theory has no comprehension symbols", t.line, t.column);
    auto fvs = free_vars_ordered(body);
    std::vector<std::string> params;
    std::map<std::string, std::string> sorts;
    for (const auto& [name, sort] : fvs) {
      sorts[name] = sort;
      if (name != x) params.push_back(name);
    }
    ComprehensionSymbol sym = ctx_.comprehension->register_key({x, params, body});
    std::vector<Term> args;
    for (const auto& p : sym.argument_order) {
      auto it = sorts.find(p);
      args.push_back(mk_var(p, it == sorts.end() ? kIota : it->second));
    }
    node->kind = Raw::Class;
    node->term = mk_app(sym.name, std::move(args), sym.rank.result);
    return node;
  }
  if (t.kind != TokenKind::Ident) fail("expected a term");
  if (t.text == "forall" || t.text == "exists" || t.text == "in" ||
      t.text == "true" || t.text == "false")
    fail("expected a term");
  ++pos_;
  node->name = t.text;
  node->kind = Raw::Name;
  if (accept("(")) {
    node->kind = Raw::App;
    if (!is(")")) {
      do node->args.push_back(raw_term());
      while (accept(","));
    }
    expect(")");
  }
  return node;
}

Term Parser::elaborate(const RawPtr& raw, const std::string& expected) {
  auto mismatch = [&](const Term& t) {
    if (!expected.empty() && t->sort != expected)
      throw SortError(std::to_string(raw->line) + ":" + std::to_string(raw->column) +
                      ": term " + to_string(t) + " has sort " + t->sort +
                      ", expected " + expected);
    return t;
  };
  switch (raw->kind) {
    case Raw::Number:
      if (!function_rank("0") || !function_rank("S"))
        throw ParseError("numerals need the symbols 0 and S", raw->line, raw->column);
      return mismatch(numeral(raw->number));
    case Raw::Class:
      return mismatch(raw->term);
    case Raw::Name: {
      if (const std::string* s = scoped_sort(raw->name))
        return mismatch(mk_var(raw->name, *s));
      if (const Rank* r = function_rank(raw->name)) {
        if (!r->args.empty())
          throw ParseError("function '" + raw->name + "' expects " +
                               std::to_string(r->args.size()) + " arguments",
                           raw->line, raw->column);
        return mismatch(mk_app(raw->name, {}, r->result));
      }
      auto it = ctx_.var_sorts.find(raw->name);
      if (it != ctx_.var_sorts.end()) return mismatch(mk_var(raw->name, it->second));
      std::string s = expected.empty() ? ctx_.signature->default_sort() : expected;
      ctx_.var_sorts.emplace(raw->name, s);
      return mk_var(raw->name, s);
    }
    case Raw::App: {
      const Rank* r = function_rank(raw->name);
      std::vector<Term> args;
      if (!r) {
        if (!ctx_.declare_unknown)
          throw ParseError("unknown function '" + raw->name + "'", raw->line,
                           raw->column);
        std::vector<std::string> sorts;
        for (const auto& a : raw->args) {
          args.push_back(elaborate(a, ""));
          sorts.push_back(args.back()->sort);
        }
        std::string result = expected.empty() ? ctx_.signature->default_sort() : expected;
        ctx_.signature->add_function(raw->name, sorts, result);
        return mk_app(raw->name, std::move(args), result);
      }
      if (r->args.size() != raw->args.size())
        throw ParseError("function '" + raw->name + "' expects " +
                             std::to_string(r->args.size()) + " arguments",
                         raw->line, raw->column);
      Rank rank = *r;
      for (std::size_t i = 0; i < raw->args.size(); ++i)
        args.push_back(elaborate(raw->args[i], rank.args[i]));
      return mismatch(mk_app(raw->name, std::move(args), rank.result));
    }
  }
  throw ParseError("bad term", raw->line, raw->column);
}

Term Parser::term(const std::string& sort) { return elaborate(raw_term(), sort); }

//------------------------------------------------------------------------------
// Proofs

Proof Parser::proof() {
  if (accept("lam")) {
    expect("(");
    std::string a = ident();
    expect(":");
    Prop domain = prop();
    expect(")");
    expect(".");
    return plam(a, domain, proof());
  }
  if (accept("all")) {
    expect("(");
    std::string x = ident();
    std::string s = accept(":") ? sort_name() : ctx_.signature->default_sort();
    expect(")");
    expect(".");
    push_scope(x, s);
    Proof body;
    try {
      body = proof();
    } catch (...) {
      pop_scope();
      throw;
    }
    pop_scope();
    return ptlam(x, s, body);
  }
  return proof_app();
}

bool Parser::starts_proof_atom() const {
  const Token& t = peek();
  if (t.kind == TokenKind::Ident) return t.text != "lam" && t.text != "all";
  return t.kind == TokenKind::Symbol && (t.text == "(" || t.text == "<");
}

Proof Parser::proof_app() {
  Proof p = proof_atom();
  for (;;) {
    if (accept("[")) {
      Term t = term();
      expect("]");
      p = ptapp(p, t);
    } else if (is("lam") || is("all")) {
      return papp(p, proof());
    } else if (starts_proof_atom()) {
      p = papp(p, proof_atom());
    } else {
      return p;
    }
  }
}

Proof Parser::proof_atom() {
  if (accept("(")) {
    Proof p = proof();
    expect(")");
    return p;
  }
  if (accept("<")) {
    Proof l = proof();
    expect(",");
    Proof r = proof();
    expect(">");
    return ppair(l, r);
  }
  if (peek().kind != TokenKind::Ident) fail("expected a proof term");
  std::string head = peek().text;
  bool call = peek(1).kind == TokenKind::Symbol && peek(1).text == "(";
  if (head == "I") {
    ++pos_;
    return ptruth();
  }
  if (!call) {
    ++pos_;
    return pvar(head);
  }
  if (head == "fst" || head == "snd") {
    pos_ += 2;
    Proof p = proof();
    expect(")");
    return head == "fst" ? pfst(p) : psnd(p);
  }
  if (head == "inl" || head == "inr" || head == "absurd") {
    pos_ += 2;
    Proof p = proof();
    expect(";");
    Prop a = prop();
    expect(")");
    if (head == "inl") return pinl(p, a);
    if (head == "inr") return pinr(p, a);
    return pexfalso(p, a);
  }
  if (head == "case") {
    pos_ += 2;
    Proof scrut = proof();
    expect(";");
    std::string a = ident();
    expect(".");
    Proof left = proof();
    expect(";");
    std::string b = ident();
    expect(".");
    Proof right = proof();
    expect(")");
    return pcase(scrut, a, left, b, right);
  }
  if (head == "pack") {
    pos_ += 2;
    RawPtr witness = raw_term();
    expect(",");
    Proof p = proof();
    expect(";");
    std::string x = ident();
    std::string s = accept(":") ? sort_name() : ctx_.signature->default_sort();
    expect(".");
    push_scope(x, s);
    Prop body;
    try {
      body = prop();
    } catch (...) {
      pop_scope();
      throw;
    }
    pop_scope();
    expect(")");
    return pexintro(elaborate(witness, s), p, x, s, body);
  }
  if (head == "unpack") {
    pos_ += 2;
    Proof scrut = proof();
    expect(";");
    std::string x = ident();
    std::string s = accept(":") ? sort_name() : ctx_.signature->default_sort();
    expect(".");
    std::string a = ident();
    expect(".");
    push_scope(x, s);
    Proof body;
    try {
      body = proof();
    } catch (...) {
      pop_scope();
      throw;
    }
    pop_scope();
    expect(";");
    Prop result = prop();
    expect(")");
    return pexelim(scrut, x, s, a, body, result);
  }
  ++pos_;
  return pvar(head);
}

//------------------------------------------------------------------------------
// Entry points

Prop parse_prop(std::string_view text, ParseContext& ctx) {
  Parser p(text, ctx);
  Prop a = p.prop();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return a;
}

Term parse_term(std::string_view text, ParseContext& ctx, const std::string& sort) {
  Parser p(text, ctx);
  Term t = p.term(sort);
  if (!p.at_end()) p.fail("unexpected trailing input");
  return t;
}

Proof parse_proof(std::string_view text, ParseContext& ctx) {
  Parser p(text, ctx);
  Proof pi = p.proof();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return pi;
}

}  // namespace modarith
