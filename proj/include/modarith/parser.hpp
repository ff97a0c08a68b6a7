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

#ifndef MODARITH_PARSER_HPP
#define MODARITH_PARSER_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "modarith/comprehension.hpp"
#include "modarith/proof.hpp"
#include "modarith/syntax.hpp"

namespace modarith {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Everything the elaborator needs to resolve names. Free variable sorts are
// remembered in `var_sorts` across every parse that shares the context.
struct ParseContext {
  Signature* signature = nullptr;
  ComprehensionRegistry* comprehension = nullptr;
  std::map<std::string, std::string> var_sorts;
  // Undeclared predicates and functions are added to the signature, with
  // ranks taken from their first use.
  bool declare_unknown = false;
};

enum class TokenKind { Ident, Number, String, Symbol, End };

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
};

// Splits UTF-8 input into tokens. The Unicode connectives and quantifiers
// are mapped to their ASCII spellings; `#` starts a line comment.
std::vector<Token> tokenize(std::string_view text);

// Recursive-descent parser over a token stream.
//
//   prop   := ('forall' | 'exists') binder+ '.' prop
//           | disj [('=>' | '<=>') prop]
//   disj   := conj ['\/' disj]        conj := unary ['/\' conj]
//   unary  := '~' unary | 'true' | 'false' | '(' prop ')' | quant | atom
//   atom   := term ('=' | 'in') term | Pred ['(' term, ... ')']
//   term   := sum ['->' term]   sum := prod {'+' prod}   prod := prim {'*' prim}
//   prim   := number | ident ['(' term, ... ')'] | '(' term ')'
//           | '{' ident [':' sort] '|' prop '}'
//
// Proof terms follow the concrete syntax printed by to_string(Proof).
class Parser {
 public:
  Parser(std::vector<Token> tokens, ParseContext& ctx);
  Parser(std::string_view text, ParseContext& ctx);

  Prop prop();
  // `sort` empty means "infer".
  Term term(const std::string& sort = "");
  Proof proof();
  std::string sort_name();

  const Token& peek(std::size_t ahead = 0) const;
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool is(const std::string& text) const;
  bool accept(const std::string& text);
  // Consumes the next token whatever its kind.
  Token advance();
  void expect(const std::string& text);
  std::string ident();
  [[noreturn]] void fail(const std::string& message) const;

  // Term variables bound around the next parse, innermost last.
  void push_scope(std::string name, std::string sort);
  void pop_scope();

 private:
  struct Raw;
  using RawPtr = std::shared_ptr<Raw>;

  Prop implication();
  Prop disjunction();
  Prop conjunction();
  Prop unary();
  Prop quantifier();
  Prop atom();
  RawPtr raw_term();
  RawPtr raw_sum();
  RawPtr raw_product();
  RawPtr raw_primary();
  Term elaborate(const RawPtr& raw, const std::string& expected);
  const Rank* function_rank(const std::string& name) const;
  const std::string* scoped_sort(const std::string& name) const;

  Proof proof_app();
  Proof proof_atom();
  bool starts_proof_atom() const;

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseContext& ctx_;
  std::vector<std::pair<std::string, std::string>> scope_;
};

// Parse a complete input, rejecting trailing tokens.
Prop parse_prop(std::string_view text, ParseContext& ctx);
Term parse_term(std::string_view text, ParseContext& ctx,
                const std::string& sort = "");
Proof parse_proof(std::string_view text, ParseContext& ctx);

}  // namespace modarith

#endif  // MODARITH_PARSER_HPP
