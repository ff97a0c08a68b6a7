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

#include "modarith/syntax.hpp"

#include <algorithm>
#include <sstream>

namespace modarith {

//------------------------------------------------------------------------------
// Signature

void Signature::add_sort(const std::string& sort) {
  if (sorts_.insert(sort).second) sort_order_.push_back(sort);
}

void Signature::add_function(const std::string& name,
                             std::vector<std::string> args,
                             std::string result) {
  if (predicates_.count(name))
    throw SortError("symbol '" + name + "' is already a predicate");
  for (const auto& s : args)
    if (!has_sort(s))
      throw SortError("function '" + name + "' uses undeclared sort '" + s + "'");
  if (!has_sort(result))
    throw SortError("function '" + name + "' has undeclared result sort '" +
                    result + "'");
  Rank rank{std::move(args), std::move(result)};
  auto it = functions_.find(name);
  if (it != functions_.end() && !(it->second == rank))
    throw SortError("function '" + name + "' redeclared with another rank");
  functions_[name] = std::move(rank);
}

void Signature::add_predicate(const std::string& name,
                              std::vector<std::string> args) {
  if (functions_.count(name))
    throw SortError("symbol '" + name + "' is already a function");
  for (const auto& s : args)
    if (!has_sort(s))
      throw SortError("predicate '" + name + "' uses undeclared sort '" + s +
                      "'");
  Rank rank{std::move(args), ""};
  auto it = predicates_.find(name);
  if (it != predicates_.end() && !(it->second == rank))
    throw SortError("predicate '" + name + "' redeclared with another rank");
  predicates_[name] = std::move(rank);
}

const Rank* Signature::function(const std::string& name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

const Rank* Signature::predicate(const std::string& name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? nullptr : &it->second;
}

const std::string& Signature::default_sort() const {
  static const std::string iota = kIota;
  return sort_order_.empty() ? iota : sort_order_.front();
}

//------------------------------------------------------------------------------
// Constructors

Term mk_var(std::string name, std::string sort) {
  return std::make_shared<const TermNode>(
      TermNode{TermKind::Var, std::move(name), std::move(sort), {}});
}

Term mk_app(std::string fn, std::vector<Term> args, std::string sort) {
  return std::make_shared<const TermNode>(
      TermNode{TermKind::App, std::move(fn), std::move(sort), std::move(args)});
}

Term mk_app(const Signature& sig, const std::string& fn, std::vector<Term> args) {
  const Rank* r = sig.function(fn);
  if (!r) throw SortError("undeclared function symbol '" + fn + "'");
  return mk_app(fn, std::move(args), r->result);
}

Term numeral(unsigned n) {
  Term t = mk_app("0", {}, kIota);
  for (unsigned i = 0; i < n; ++i) t = mk_app("S", {t}, kIota);
  return t;
}

std::optional<unsigned> as_numeral(const Term& t) {
  unsigned n = 0;
  const TermNode* cur = t.get();
  while (cur->kind == TermKind::App && cur->name == "S" && cur->args.size() == 1) {
    ++n;
    cur = cur->args[0].get();
  }
  if (cur->kind == TermKind::App && cur->name == "0" && cur->args.empty())
    return n;
  return std::nullopt;
}

namespace {

Prop make(PropKind kind, std::string symbol, std::string sort,
          std::vector<Term> args, Prop left, Prop right) {
  return std::make_shared<const PropNode>(
      PropNode{kind, std::move(symbol), std::move(sort), std::move(args),
               std::move(left), std::move(right)});
}

}  // namespace

Prop mk_atom(std::string pred, std::vector<Term> args) {
  return make(PropKind::Atom, std::move(pred), "", std::move(args), nullptr,
              nullptr);
}

Prop mk_top() {
  static const Prop top = make(PropKind::Top, "", "", {}, nullptr, nullptr);
  return top;
}

Prop mk_bottom() {
  static const Prop bot = make(PropKind::Bottom, "", "", {}, nullptr, nullptr);
  return bot;
}

Prop mk_binary(PropKind kind, Prop a, Prop b) {
  return make(kind, "", "", {}, std::move(a), std::move(b));
}

Prop mk_implies(Prop a, Prop b) {
  return mk_binary(PropKind::Implies, std::move(a), std::move(b));
}
Prop mk_and(Prop a, Prop b) {
  return mk_binary(PropKind::And, std::move(a), std::move(b));
}
Prop mk_or(Prop a, Prop b) {
  return mk_binary(PropKind::Or, std::move(a), std::move(b));
}
Prop mk_not(Prop a) { return mk_implies(std::move(a), mk_bottom()); }
Prop mk_iff(Prop a, Prop b) {
  return mk_and(mk_implies(a, b), mk_implies(b, a));
}

Prop mk_binder(PropKind kind, std::string var, std::string sort, Prop body) {
  return make(kind, std::move(var), std::move(sort), {}, std::move(body),
              nullptr);
}
Prop mk_forall(std::string var, std::string sort, Prop body) {
  return mk_binder(PropKind::ForAll, std::move(var), std::move(sort),
                   std::move(body));
}
Prop mk_exists(std::string var, std::string sort, Prop body) {
  return mk_binder(PropKind::Exists, std::move(var), std::move(sort),
                   std::move(body));
}

//------------------------------------------------------------------------------
// Free variables

void free_vars(const Term& t, VarSet& out) {
  if (t->kind == TermKind::Var) {
    out.insert(t->name);
    return;
  }
  for (const auto& a : t->args) free_vars(a, out);
}

namespace {

void free_vars_rec(const Prop& a, VarSet& bound, VarSet& out) {
  switch (a->kind) {
    case PropKind::Atom: {
      VarSet tmp;
      for (const auto& t : a->args) free_vars(t, tmp);
      for (const auto& v : tmp)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case PropKind::Top:
    case PropKind::Bottom:
      return;
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or:
      free_vars_rec(a->left, bound, out);
      free_vars_rec(a->right, bound, out);
      return;
    case PropKind::ForAll:
    case PropKind::Exists: {
      bool inserted = bound.insert(a->symbol).second;
      free_vars_rec(a->left, bound, out);
      if (inserted) bound.erase(a->symbol);
      return;
    }
  }
}

void term_vars_ordered(const Term& t, const VarSet& bound,
                       std::vector<std::pair<std::string, std::string>>& out,
                       VarSet& seen) {
  if (t->kind == TermKind::Var) {
    if (!bound.count(t->name) && seen.insert(t->name).second)
      out.emplace_back(t->name, t->sort);
    return;
  }
  for (const auto& a : t->args) term_vars_ordered(a, bound, out, seen);
}

void free_vars_ordered_rec(const Prop& a, VarSet& bound,
                           std::vector<std::pair<std::string, std::string>>& out,
                           VarSet& seen) {
  switch (a->kind) {
    case PropKind::Atom:
      for (const auto& t : a->args) term_vars_ordered(t, bound, out, seen);
      return;
    case PropKind::Top:
    case PropKind::Bottom:
      return;
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or:
      free_vars_ordered_rec(a->left, bound, out, seen);
      free_vars_ordered_rec(a->right, bound, out, seen);
      return;
    case PropKind::ForAll:
    case PropKind::Exists: {
      bool inserted = bound.insert(a->symbol).second;
      free_vars_ordered_rec(a->left, bound, out, seen);
      if (inserted) bound.erase(a->symbol);
      return;
    }
  }
}

}  // namespace

void free_vars(const Prop& a, VarSet& out) {
  VarSet bound;
  free_vars_rec(a, bound, out);
}

VarSet free_vars(const Term& t) {
  VarSet out;
  free_vars(t, out);
  return out;
}

VarSet free_vars(const Prop& a) {
  VarSet out;
  free_vars(a, out);
  return out;
}

std::vector<std::pair<std::string, std::string>> free_vars_ordered(const Prop& a) {
  std::vector<std::pair<std::string, std::string>> out;
  VarSet bound, seen;
  free_vars_ordered_rec(a, bound, out, seen);
  return out;
}

bool occurs(const std::string& x, const Term& t) {
  if (t->kind == TermKind::Var) return t->name == x;
  return std::any_of(t->args.begin(), t->args.end(),
                     [&](const Term& a) { return occurs(x, a); });
}

bool occurs_free(const std::string& x, const Prop& a) {
  switch (a->kind) {
    case PropKind::Atom:
      return std::any_of(a->args.begin(), a->args.end(),
                         [&](const Term& t) { return occurs(x, t); });
    case PropKind::Top:
    case PropKind::Bottom:
      return false;
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or:
      return occurs_free(x, a->left) || occurs_free(x, a->right);
    case PropKind::ForAll:
    case PropKind::Exists:
      return a->symbol != x && occurs_free(x, a->left);
  }
  return false;
}

std::string fresh_name(const std::string& base, const VarSet& avoid) {
  if (!avoid.count(base)) return base;
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back())))
    stem.pop_back();
  if (stem.empty()) stem = "v";
  for (unsigned i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

//------------------------------------------------------------------------------
// Substitution

Term substitute(const TermSubst& s, const Term& t) {
  if (t->kind == TermKind::Var) {
    auto it = s.find(t->name);
    return it == s.end() ? t : it->second;
  }
  bool changed = false;
  std::vector<Term> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) {
    args.push_back(substitute(s, a));
    changed |= args.back() != a;
  }
  if (!changed) return t;
  return mk_app(t->name, std::move(args), t->sort);
}

Prop substitute(const TermSubst& s, const Prop& a) {
  if (s.empty()) return a;
  switch (a->kind) {
    case PropKind::Atom: {
      bool changed = false;
      std::vector<Term> args;
      args.reserve(a->args.size());
      for (const auto& t : a->args) {
        args.push_back(substitute(s, t));
        changed |= args.back() != t;
      }
      if (!changed) return a;
      return mk_atom(a->symbol, std::move(args));
    }
    case PropKind::Top:
    case PropKind::Bottom:
      return a;
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or: {
      Prop l = substitute(s, a->left);
      Prop r = substitute(s, a->right);
      if (l == a->left && r == a->right) return a;
      return mk_binary(a->kind, std::move(l), std::move(r));
    }
    case PropKind::ForAll:
    case PropKind::Exists: {
      VarSet body_fv = free_vars(a->left);
      TermSubst inner;
      for (const auto& [v, t] : s)
        if (v != a->symbol && body_fv.count(v)) inner.emplace(v, t);
      if (inner.empty()) return a;
      VarSet range_fv;
      for (const auto& [v, t] : inner) free_vars(t, range_fv);
      if (!range_fv.count(a->symbol)) {
        Prop body = substitute(inner, a->left);
        return mk_binder(a->kind, a->symbol, a->sort, std::move(body));
      }
      VarSet avoid = range_fv;
      avoid.insert(body_fv.begin(), body_fv.end());
      std::string renamed = fresh_name(a->symbol, avoid);
      inner[a->symbol] = mk_var(renamed, a->sort);
      Prop body = substitute(inner, a->left);
      return mk_binder(a->kind, renamed, a->sort, std::move(body));
    }
  }
  return a;
}

namespace {

const std::string* sort_of_free(const std::string& x, const Prop& a,
                                std::vector<std::pair<std::string, std::string>>& fvs) {
  fvs = free_vars_ordered(a);
  for (const auto& [name, sort] : fvs)
    if (name == x) return &sort;
  return nullptr;
}

}  // namespace

Prop substitute(const Term& t, const std::string& x, const Prop& a) {
  std::vector<std::pair<std::string, std::string>> fvs;
  const std::string* xs = sort_of_free(x, a, fvs);
  if (!xs) return a;
  if (!xs->empty() && !t->sort.empty() && *xs != t->sort)
    throw SortError("cannot substitute " + to_string(t) + " of sort " + t->sort +
                    " for variable " + x + " of sort " + *xs);
  return substitute(TermSubst{{x, t}}, a);
}

Term substitute(const Term& t, const std::string& x, const Term& in) {
  return substitute(TermSubst{{x, t}}, in);
}

Prop map_terms(const Prop& a, const std::function<Term(const Term&)>& f) {
  switch (a->kind) {
    case PropKind::Atom: {
      bool changed = false;
      std::vector<Term> args;
      args.reserve(a->args.size());
      for (const auto& t : a->args) {
        args.push_back(f(t));
        changed |= args.back() != t;
      }
      if (!changed) return a;
      return mk_atom(a->symbol, std::move(args));
    }
    case PropKind::Top:
    case PropKind::Bottom:
      return a;
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or: {
      Prop l = map_terms(a->left, f);
      Prop r = map_terms(a->right, f);
      if (l == a->left && r == a->right) return a;
      return mk_binary(a->kind, std::move(l), std::move(r));
    }
    case PropKind::ForAll:
    case PropKind::Exists: {
      Prop body = map_terms(a->left, f);
      if (body == a->left) return a;
      return mk_binder(a->kind, a->symbol, a->sort, std::move(body));
    }
  }
  return a;
}

//------------------------------------------------------------------------------
// Alpha-equivalence

namespace {

using Binders = std::vector<std::pair<std::string, std::string>>;

// Index of the innermost binder for `name` on one side, or -1.
int lookup(const Binders& env, const std::string& name, bool left) {
  for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i) {
    const auto& n = left ? env[i].first : env[i].second;
    if (n == name) return i;
  }
  return -1;
}

bool term_alpha(const Term& a, const Term& b, const Binders& env) {
  if (a->kind != b->kind) return false;
  if (a->kind == TermKind::Var) {
    int ia = lookup(env, a->name, true);
    int ib = lookup(env, b->name, false);
    if (ia != ib) return false;
    return ia >= 0 || a->name == b->name;
  }
  if (a->name != b->name || a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!term_alpha(a->args[i], b->args[i], env)) return false;
  return true;
}

bool prop_alpha(const Prop& a, const Prop& b, Binders& env) {
  if (a == b && env.empty()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case PropKind::Atom:
      if (a->symbol != b->symbol || a->args.size() != b->args.size())
        return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!term_alpha(a->args[i], b->args[i], env)) return false;
      return true;
    case PropKind::Top:
    case PropKind::Bottom:
      return true;
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or:
      return prop_alpha(a->left, b->left, env) &&
             prop_alpha(a->right, b->right, env);
    case PropKind::ForAll:
    case PropKind::Exists: {
      if (a->sort != b->sort) return false;
      env.emplace_back(a->symbol, b->symbol);
      bool r = prop_alpha(a->left, b->left, env);
      env.pop_back();
      return r;
    }
  }
  return false;
}

void key_term(const Term& t, std::vector<std::string>& bound, std::string& out) {
  if (t->kind == TermKind::Var) {
    for (int i = static_cast<int>(bound.size()) - 1; i >= 0; --i) {
      if (bound[i] == t->name) {
        out += '#';
        out += std::to_string(i);
        return;
      }
    }
    out += t->name;
    out += ':';
    out += t->sort;
    return;
  }
  out += t->name;
  if (t->args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t->args.size(); ++i) {
    if (i) out += ',';
    key_term(t->args[i], bound, out);
  }
  out += ')';
}

void key_prop(const Prop& a, std::vector<std::string>& bound, std::string& out) {
  switch (a->kind) {
    case PropKind::Atom:
      out += '[';
      out += a->symbol;
      for (const auto& t : a->args) {
        out += ' ';
        key_term(t, bound, out);
      }
      out += ']';
      return;
    case PropKind::Top:
      out += 'T';
      return;
    case PropKind::Bottom:
      out += 'F';
      return;
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or:
      out += a->kind == PropKind::Implies ? "I(" : a->kind == PropKind::And ? "A(" : "O(";
      key_prop(a->left, bound, out);
      out += ',';
      key_prop(a->right, bound, out);
      out += ')';
      return;
    case PropKind::ForAll:
    case PropKind::Exists:
      out += a->kind == PropKind::ForAll ? "!" : "?";
      out += a->sort;
      out += '.';
      bound.push_back(a->symbol);
      key_prop(a->left, bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

bool alpha_eq(const Prop& a, const Prop& b) {
  Binders env;
  return prop_alpha(a, b, env);
}

bool term_eq(const Term& a, const Term& b) {
  return term_alpha(a, b, Binders{});
}

std::string canonical_key(const Prop& a) {
  std::string out;
  std::vector<std::string> bound;
  key_prop(a, bound, out);
  return out;
}

std::string canonical_key(const Term& t) {
  std::string out;
  std::vector<std::string> bound;
  key_term(t, bound, out);
  return out;
}

void append_canonical(const Prop& a, std::vector<std::string>& bound,
                      std::string& out) {
  key_prop(a, bound, out);
}

void append_canonical(const Term& t, std::vector<std::string>& bound,
                      std::string& out) {
  key_term(t, bound, out);
}

std::size_t size(const Term& t) {
  std::size_t n = 1;
  for (const auto& a : t->args) n += size(a);
  return n;
}

std::size_t size(const Prop& a) {
  switch (a->kind) {
    case PropKind::Atom: {
      std::size_t n = 1;
      for (const auto& t : a->args) n += size(t);
      return n;
    }
    case PropKind::Top:
    case PropKind::Bottom:
      return 1;
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or:
      return 1 + size(a->left) + size(a->right);
    case PropKind::ForAll:
    case PropKind::Exists:
      return 1 + size(a->left);
  }
  return 1;
}

namespace {

void collect_functions(const Term& t, std::set<std::string>& out) {
  if (t->kind == TermKind::App) out.insert(t->name);
  for (const auto& a : t->args) collect_functions(a, out);
}

void collect_symbols(const Prop& a, std::set<std::string>* preds,
                     std::set<std::string>* fns) {
  switch (a->kind) {
    case PropKind::Atom:
      if (preds) preds->insert(a->symbol);
      if (fns)
        for (const auto& t : a->args) collect_functions(t, *fns);
      return;
    case PropKind::Top:
    case PropKind::Bottom:
      return;
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or:
      collect_symbols(a->left, preds, fns);
      collect_symbols(a->right, preds, fns);
      return;
    case PropKind::ForAll:
    case PropKind::Exists:
      collect_symbols(a->left, preds, fns);
      return;
  }
}

}  // namespace

std::set<std::string> predicates_of(const Prop& a) {
  std::set<std::string> out;
  collect_symbols(a, &out, nullptr);
  return out;
}

std::set<std::string> functions_of(const Prop& a) {
  std::set<std::string> out;
  collect_symbols(a, nullptr, &out);
  return out;
}

//------------------------------------------------------------------------------
// Sort checking

namespace {

void check_term(const SymbolTable& symbols, const Term& t,
                std::map<std::string, std::string>& var_sorts) {
  if (t->kind == TermKind::Var) {
    if (!symbols.has_sort(t->sort))
      throw SortError("variable " + t->name + " has undeclared sort '" +
                      t->sort + "'");
    auto [it, inserted] = var_sorts.emplace(t->name, t->sort);
    if (!inserted && it->second != t->sort)
      throw SortError("variable " + t->name + " used at sorts " + it->second +
                      " and " + t->sort);
    return;
  }
  const Rank* r = symbols.function(t->name);
  if (!r) throw SortError("undeclared function symbol '" + t->name + "'");
  if (r->args.size() != t->args.size())
    throw SortError("function '" + t->name + "' expects " +
                    std::to_string(r->args.size()) + " arguments, got " +
                    std::to_string(t->args.size()));
  if (r->result != t->sort)
    throw SortError("term " + to_string(t) + " annotated with sort " + t->sort +
                    " but '" + t->name + "' returns " + r->result);
  for (std::size_t i = 0; i < t->args.size(); ++i) {
    check_term(symbols, t->args[i], var_sorts);
    if (t->args[i]->sort != r->args[i])
      throw SortError("argument " + std::to_string(i + 1) + " of '" + t->name +
                      "' has sort " + t->args[i]->sort + ", expected " +
                      r->args[i]);
  }
}

void check_prop(const SymbolTable& symbols, const Prop& a,
                std::map<std::string, std::string>& var_sorts) {
  switch (a->kind) {
    case PropKind::Atom: {
      const Rank* r = symbols.predicate(a->symbol);
      if (!r) throw SortError("undeclared predicate symbol '" + a->symbol + "'");
      if (r->args.size() != a->args.size())
        throw SortError("predicate '" + a->symbol + "' expects " +
                        std::to_string(r->args.size()) + " arguments, got " +
                        std::to_string(a->args.size()));
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        check_term(symbols, a->args[i], var_sorts);
        if (a->args[i]->sort != r->args[i])
          throw SortError("argument " + std::to_string(i + 1) + " of '" +
                          a->symbol + "' has sort " + a->args[i]->sort +
                          ", expected " + r->args[i]);
      }
      return;
    }
    case PropKind::Top:
    case PropKind::Bottom:
      return;
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or:
      check_prop(symbols, a->left, var_sorts);
      check_prop(symbols, a->right, var_sorts);
      return;
    case PropKind::ForAll:
    case PropKind::Exists: {
      if (!symbols.has_sort(a->sort))
        throw SortError("binder " + a->symbol + " has undeclared sort '" +
                        a->sort + "'");
      auto saved = var_sorts.find(a->symbol);
      std::optional<std::string> outer;
      if (saved != var_sorts.end()) {
        outer = saved->second;
        var_sorts.erase(saved);
      }
      var_sorts.emplace(a->symbol, a->sort);
      check_prop(symbols, a->left, var_sorts);
      var_sorts.erase(a->symbol);
      if (outer) var_sorts.emplace(a->symbol, *outer);
      return;
    }
  }
}

}  // namespace

void check_sorts(const SymbolTable& symbols, const Term& t) {
  std::map<std::string, std::string> var_sorts;
  check_term(symbols, t, var_sorts);
}

void check_sorts(const SymbolTable& symbols, const Prop& a) {
  std::map<std::string, std::string> var_sorts;
  check_prop(symbols, a, var_sorts);
}

//------------------------------------------------------------------------------
// Printing

namespace {

bool is_infix_function(const std::string& name) {
  return name == "+" || name == "*" || name == "->";
}

int term_level(const Term& t) {
  if (t->kind == TermKind::App && t->args.size() == 2) {
    if (t->name == "->") return 1;
    if (t->name == "+") return 2;
    if (t->name == "*") return 3;
  }
  return 4;
}

void print_term(const Term& t, int prec, std::ostream& os) {
  if (t->kind == TermKind::Var) {
    os << t->name;
    return;
  }
  if (auto n = as_numeral(t)) {
    os << *n;
    return;
  }
  if (is_infix_function(t->name) && t->args.size() == 2) {
    int level = term_level(t);
    bool paren = level < prec;
    if (paren) os << '(';
    if (t->name == "->") {
      print_term(t->args[0], level + 1, os);
      os << " -> ";
      print_term(t->args[1], level, os);
    } else {
      print_term(t->args[0], level, os);
      os << ' ' << t->name << ' ';
      print_term(t->args[1], level + 1, os);
    }
    if (paren) os << ')';
    return;
  }
  os << t->name;
  if (t->args.empty()) return;
  os << '(';
  for (std::size_t i = 0; i < t->args.size(); ++i) {
    if (i) os << ", ";
    print_term(t->args[i], 0, os);
  }
  os << ')';
}

// Levels: 0 anything, 1 implication, 2 disjunction, 3 conjunction, 4 atomic.
// A quantifier extends as far right as possible, so it needs parentheses
// unless nothing follows it.
void print_prop(const Prop& a, int prec, bool tail, std::ostream& os) {
  switch (a->kind) {
    case PropKind::Atom:
      if ((a->symbol == "=" || a->symbol == "in") && a->args.size() == 2) {
        print_term(a->args[0], 0, os);
        os << ' ' << a->symbol << ' ';
        print_term(a->args[1], 0, os);
        return;
      }
      os << a->symbol;
      if (!a->args.empty()) {
        os << '(';
        for (std::size_t i = 0; i < a->args.size(); ++i) {
          if (i) os << ", ";
          print_term(a->args[i], 0, os);
        }
        os << ')';
      }
      return;
    case PropKind::Top:
      os << "true";
      return;
    case PropKind::Bottom:
      os << "false";
      return;
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or: {
      int level = a->kind == PropKind::Implies ? 1 : a->kind == PropKind::Or ? 2 : 3;
      const char* op = a->kind == PropKind::Implies ? " => "
                       : a->kind == PropKind::Or   ? " \\/ "
                                                   : " /\\ ";
      bool paren = level < prec;
      if (paren) os << '(';
      print_prop(a->left, level + 1, false, os);
      os << op;
      print_prop(a->right, level, paren || tail, os);
      if (paren) os << ')';
      return;
    }
    case PropKind::ForAll:
    case PropKind::Exists: {
      bool paren = prec > 0 && !tail;
      if (paren) os << '(';
      os << (a->kind == PropKind::ForAll ? "forall " : "exists ") << a->symbol
         << ':' << a->sort << ". ";
      print_prop(a->left, 0, true, os);
      if (paren) os << ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print_term(t, 0, os);
  return os.str();
}

std::string to_string(const Prop& a) {
  std::ostringstream os;
  print_prop(a, 0, true, os);
  return os.str();
}

}  // namespace modarith
