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

#ifndef MODARITH_SYNTAX_HPP
#define MODARITH_SYNTAX_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace modarith {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ill-sorted term or proposition, arity mismatch, undeclared symbol.
class SortError : public Error {
 public:
  using Error::Error;
};

inline constexpr const char* kIota = "iota";
inline constexpr const char* kKappa = "kappa";

//------------------------------------------------------------------------------
// Signatures

struct Rank {
  std::vector<std::string> args;
  std::string result;  // empty for predicates

  bool operator==(const Rank&) const = default;
};

class Signature {
 public:
  void add_sort(const std::string& sort);
  void add_function(const std::string& name, std::vector<std::string> args,
                    std::string result);
  void add_predicate(const std::string& name, std::vector<std::string> args);

  bool has_sort(const std::string& sort) const { return sorts_.count(sort) != 0; }
  const Rank* function(const std::string& name) const;
  const Rank* predicate(const std::string& name) const;

  const std::set<std::string>& sorts() const { return sorts_; }
  const std::map<std::string, Rank>& functions() const { return functions_; }
  const std::map<std::string, Rank>& predicates() const { return predicates_; }

  // First declared sort; the default for unannotated binders.
  const std::string& default_sort() const;

 private:
  std::set<std::string> sorts_;
  std::vector<std::string> sort_order_;
  std::map<std::string, Rank> functions_;
  std::map<std::string, Rank> predicates_;
};

//------------------------------------------------------------------------------
// Terms

enum class TermKind { Var, App };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

// Every node carries its sort; applications carry their result sort.
struct TermNode {
  TermKind kind;
  std::string name;
  std::string sort;
  std::vector<Term> args;
};

Term mk_var(std::string name, std::string sort);
Term mk_app(std::string fn, std::vector<Term> args, std::string sort);
// Builds fn(args) with the result sort taken from the signature.
Term mk_app(const Signature& sig, const std::string& fn, std::vector<Term> args);
// S^n(0) over sort iota.
Term numeral(unsigned n);
// If t is S^n(0), returns n.
std::optional<unsigned> as_numeral(const Term& t);

//------------------------------------------------------------------------------
// Propositions

enum class PropKind { Atom, Top, Bottom, Implies, And, Or, ForAll, Exists };

struct PropNode;
using Prop = std::shared_ptr<const PropNode>;

// Atom: `symbol` is the predicate, `args` its arguments.
// Binary connectives: `left`, `right`.
// Quantifiers: `symbol` is the bound variable, `sort` its sort, `left` the body.
struct PropNode {
  PropKind kind;
  std::string symbol;
  std::string sort;
  std::vector<Term> args;
  Prop left;
  Prop right;

  const Prop& body() const { return left; }
  bool is_atom() const { return kind == PropKind::Atom; }
  bool is_binder() const {
    return kind == PropKind::ForAll || kind == PropKind::Exists;
  }
};

Prop mk_atom(std::string pred, std::vector<Term> args);
Prop mk_top();
Prop mk_bottom();
Prop mk_implies(Prop a, Prop b);
Prop mk_and(Prop a, Prop b);
Prop mk_or(Prop a, Prop b);
Prop mk_not(Prop a);
Prop mk_iff(Prop a, Prop b);
Prop mk_forall(std::string var, std::string sort, Prop body);
Prop mk_exists(std::string var, std::string sort, Prop body);
Prop mk_binary(PropKind kind, Prop a, Prop b);
Prop mk_binder(PropKind kind, std::string var, std::string sort, Prop body);

//------------------------------------------------------------------------------
// Variables and substitution

using VarSet = std::set<std::string>;
using TermSubst = std::map<std::string, Term>;

void free_vars(const Term& t, VarSet& out);
void free_vars(const Prop& a, VarSet& out);
VarSet free_vars(const Term& t);
VarSet free_vars(const Prop& a);
// Free variables with their sorts, in order of first occurrence.
std::vector<std::pair<std::string, std::string>> free_vars_ordered(const Prop& a);
bool occurs_free(const std::string& x, const Prop& a);
bool occurs(const std::string& x, const Term& t);

// Returns a name derived from `base` that is not in `avoid`.
std::string fresh_name(const std::string& base, const VarSet& avoid);

Term substitute(const TermSubst& s, const Term& t);
Prop substitute(const TermSubst& s, const Prop& a);
// (t/x)A, capture-avoiding. Throws SortError when t and x disagree on sort
// and x occurs free in A with a known sort.
Prop substitute(const Term& t, const std::string& x, const Prop& a);
Term substitute(const Term& t, const std::string& x, const Term& in);

// Applies `f` to every term argument of every atom.
Prop map_terms(const Prop& a, const std::function<Term(const Term&)>& f);

bool alpha_eq(const Prop& a, const Prop& b);
bool term_eq(const Term& a, const Term& b);

// A string equal for two propositions iff they are alpha-equivalent. Bound
// variables are printed by binding depth.
std::string canonical_key(const Prop& a);
std::string canonical_key(const Term& t);
// Appends the canonical form under an enclosing stack of bound names.
void append_canonical(const Prop& a, std::vector<std::string>& bound,
                      std::string& out);
void append_canonical(const Term& t, std::vector<std::string>& bound,
                      std::string& out);

std::size_t size(const Prop& a);
std::size_t size(const Term& t);

// Names of predicates occurring in A.
std::set<std::string> predicates_of(const Prop& a);
std::set<std::string> functions_of(const Prop& a);

//------------------------------------------------------------------------------
// Well-sortedness

// Resolves function and predicate ranks; theories extend this with
// comprehension symbols.
class SymbolTable {
 public:
  virtual ~SymbolTable() = default;
  virtual const Rank* function(const std::string& name) const = 0;
  virtual const Rank* predicate(const std::string& name) const = 0;
  virtual bool has_sort(const std::string& sort) const = 0;
};

class SignatureTable : public SymbolTable {
 public:
  explicit SignatureTable(const Signature& sig) : sig_(sig) {}
  const Rank* function(const std::string& name) const override {
    return sig_.function(name);
  }
  const Rank* predicate(const std::string& name) const override {
    return sig_.predicate(name);
  }
  bool has_sort(const std::string& sort) const override {
    return sig_.has_sort(sort);
  }

 private:
  const Signature& sig_;
};

// Both throw SortError with a description of the first problem found.
void check_sorts(const SymbolTable& symbols, const Term& t);
void check_sorts(const SymbolTable& symbols, const Prop& a);

//------------------------------------------------------------------------------
// Printing (ASCII concrete syntax, re-parsable)

std::string to_string(const Term& t);
std::string to_string(const Prop& a);

}  // namespace modarith

#endif  // MODARITH_SYNTAX_HPP
