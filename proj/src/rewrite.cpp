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

#include "modarith/rewrite.hpp"

#include <algorithm>

namespace modarith {

namespace {

Term rename_apart(const Term& t, const std::string& suffix) {
  if (t->kind == TermKind::Var) return mk_var(t->name + suffix, t->sort);
  std::vector<Term> args;
  for (const auto& a : t->args) args.push_back(rename_apart(a, suffix));
  return mk_app(t->name, std::move(args), t->sort);
}

Term resolve(const Term& t, const TermSubst& s) {
  if (t->kind == TermKind::Var) {
    auto it = s.find(t->name);
    return it == s.end() ? t : resolve(it->second, s);
  }
  std::vector<Term> args;
  for (const auto& a : t->args) args.push_back(resolve(a, s));
  return mk_app(t->name, std::move(args), t->sort);
}

bool unify(const Term& a, const Term& b, TermSubst& s) {
  Term x = a->kind == TermKind::Var && s.count(a->name) ? resolve(a, s) : a;
  Term y = b->kind == TermKind::Var && s.count(b->name) ? resolve(b, s) : b;
  if (x->kind == TermKind::Var) {
    if (y->kind == TermKind::Var && y->name == x->name) return true;
    if (occurs(x->name, resolve(y, s))) return false;
    s[x->name] = y;
    return true;
  }
  if (y->kind == TermKind::Var) return unify(y, x, s);
  if (x->name != y->name || x->args.size() != y->args.size()) return false;
  for (std::size_t i = 0; i < x->args.size(); ++i)
    if (!unify(x->args[i], y->args[i], s)) return false;
  return true;
}

bool atoms_unify(const Prop& a, const Prop& b) {
  if (a->symbol != b->symbol || a->args.size() != b->args.size()) return false;
  TermSubst s;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!unify(rename_apart(a->args[i], "#1"), rename_apart(b->args[i], "#2"), s))
      return false;
  return true;
}

}  // namespace

void RuleSet::add_term_rule(TermRule rule) {
  if (rule.lhs->kind == TermKind::Var)
    throw SortError("term rule " + rule.name + " has a variable left-hand side");
  if (rule.lhs->sort != rule.rhs->sort)
    throw SortError("term rule " + rule.name + " relates sorts " +
                    rule.lhs->sort + " and " + rule.rhs->sort);
  VarSet lhs_fv = free_vars(rule.lhs);
  for (const auto& v : free_vars(rule.rhs))
    if (!lhs_fv.count(v))
      throw SortError("term rule " + rule.name + " introduces variable " + v);
  for (const auto& other : term_rules) {
    TermSubst s;
    if (unify(rename_apart(other.lhs, "#1"), rename_apart(rule.lhs, "#2"), s))
      throw SortError("term rules " + other.name + " and " + rule.name +
                      " overlap");
  }
  term_rules.push_back(std::move(rule));
}

void RuleSet::add_prop_rule(PropRule rule) {
  if (!rule.lhs->is_atom())
    throw SortError("proposition rule " + rule.name + " must rewrite an atom");
  VarSet lhs_fv = free_vars(rule.lhs);
  for (const auto& v : free_vars(rule.rhs))
    if (!lhs_fv.count(v))
      throw SortError("proposition rule " + rule.name + " introduces variable " + v);
  for (const auto& other : prop_rules)
    if (atoms_unify(other.lhs, rule.lhs))
      throw SortError("proposition rules " + other.name + " and " + rule.name +
                      " overlap");
  if (predicates_of(rule.rhs).count(rule.lhs->symbol))
    contains_nonterminating = true;
  prop_rules.push_back(std::move(rule));
}

bool match(const Term& pattern, const Term& t, TermSubst& s) {
  if (pattern->kind == TermKind::Var) {
    if (pattern->sort != t->sort) return false;
    auto it = s.find(pattern->name);
    if (it != s.end()) return term_eq(it->second, t);
    s.emplace(pattern->name, t);
    return true;
  }
  if (t->kind != TermKind::App || t->name != pattern->name ||
      t->args.size() != pattern->args.size())
    return false;
  for (std::size_t i = 0; i < t->args.size(); ++i)
    if (!match(pattern->args[i], t->args[i], s)) return false;
  return true;
}

namespace {

class TermNormalizer {
 public:
  explicit TermNormalizer(const RuleSet& rules) : rules_(rules) {}

  Term innermost(const Term& t) {
    if (t->kind == TermKind::Var) return t;
    bool changed = false;
    std::vector<Term> args;
    args.reserve(t->args.size());
    for (const auto& a : t->args) {
      args.push_back(innermost(a));
      changed |= args.back() != a;
    }
    Term cur = changed ? mk_app(t->name, std::move(args), t->sort) : t;
    if (Term next = root_step(cur)) return innermost(next);
    return cur;
  }

  Term outermost(Term t) {
    while (Term next = outer_step(t)) t = next;
    return t;
  }

 private:
  Term root_step(const Term& t) {
    for (const auto& rule : rules_.term_rules) {
      TermSubst s;
      if (match(rule.lhs, t, s)) {
        if (++steps_ > rules_.term_step_limit)
          throw FuelExhausted("term rewriting exceeded " +
                              std::to_string(rules_.term_step_limit) + " steps");
        return substitute(s, rule.rhs);
      }
    }
    return nullptr;
  }

  Term outer_step(const Term& t) {
    if (t->kind == TermKind::Var) return nullptr;
    if (Term r = root_step(t)) return r;
    for (std::size_t i = 0; i < t->args.size(); ++i) {
      if (Term r = outer_step(t->args[i])) {
        std::vector<Term> args = t->args;
        args[i] = r;
        return mk_app(t->name, std::move(args), t->sort);
      }
    }
    return nullptr;
  }

  const RuleSet& rules_;
  std::size_t steps_ = 0;
};

}  // namespace

Term normalize_term(const Term& t, const RuleSet& rules, Strategy strategy) {
  if (rules.term_rules.empty()) return t;
  TermNormalizer n(rules);
  return strategy == Strategy::Innermost ? n.innermost(t) : n.outermost(t);
}

Prop normalize_terms(const Prop& a, const RuleSet& rules) {
  if (rules.term_rules.empty()) return a;
  return map_terms(a, [&](const Term& t) { return normalize_term(t, rules); });
}

namespace {

struct Unfolding {
  Prop result;
  std::string rule;
};

Unfolding unfold_root(const Prop& atom, const RuleSet& rules) {
  if (!atom->is_atom()) return {};
  for (const auto& rule : rules.prop_rules) {
    if (rule.lhs->symbol != atom->symbol ||
        rule.lhs->args.size() != atom->args.size())
      continue;
    TermSubst s;
    bool ok = true;
    for (std::size_t i = 0; ok && i < atom->args.size(); ++i)
      ok = match(rule.lhs->args[i], atom->args[i], s);
    if (ok) return {substitute(s, rule.rhs), rule.name};
  }
  if (rules.comprehension && atom->symbol == "in" && atom->args.size() == 2) {
    const Term& cls = atom->args[1];
    if (cls->kind == TermKind::App) {
      if (Prop p = rules.comprehension->unfold(cls->name, atom->args[0], cls->args))
        return {p, "comprehension"};
    }
  }
  return {};
}

}  // namespace

Prop unfold_atom(const Prop& atom, const RuleSet& rules) {
  return unfold_root(atom, rules).result;
}

std::string unfolding_rule(const Prop& atom, const RuleSet& rules) {
  return unfold_root(atom, rules).rule;
}

Prop whnf_prop(const Prop& a, const RuleSet& rules, Fuel& fuel) {
  Prop cur = a;
  while (cur->is_atom()) {
    cur = normalize_terms(cur, rules);
    Prop next = unfold_atom(cur, rules);
    if (!next) return cur;
    if (!fuel.consume())
      throw FuelExhausted("fuel exhausted while unfolding " + to_string(cur));
    cur = next;
  }
  return cur;
}

const char* to_string(Congruence c) {
  switch (c) {
    case Congruence::Yes:
      return "congruent";
    case Congruence::No:
      return "not congruent";
    case Congruence::Undecided:
      return "undecided";
  }
  return "?";
}

Congruence CongruenceChecker::check(const Prop& a, const Prop& b) {
  return compare(normalize_terms(a, rules_), normalize_terms(b, rules_));
}

Congruence CongruenceChecker::compare(const Prop& a, const Prop& b) {
  if (alpha_eq(a, b)) return Congruence::Yes;

  std::string ka = canonical_key(a);
  std::string kb = canonical_key(b);
  std::string key = ka < kb ? ka + "\x1f" + kb : kb + "\x1f" + ka;
  if (auto it = memo_.find(key); it != memo_.end())
    return it->second ? Congruence::Yes : Congruence::No;

  Congruence result = Congruence::No;
  if (a->kind == b->kind && !a->is_atom()) {
    switch (a->kind) {
      case PropKind::Top:
      case PropKind::Bottom:
        result = Congruence::Yes;
        break;
      case PropKind::Implies:
      case PropKind::And:
      case PropKind::Or: {
        Congruence l = compare(a->left, b->left);
        if (l == Congruence::No) {
          result = Congruence::No;
          break;
        }
        Congruence r = compare(a->right, b->right);
        if (r == Congruence::No)
          result = Congruence::No;
        else if (l == Congruence::Undecided || r == Congruence::Undecided)
          result = Congruence::Undecided;
        else
          result = Congruence::Yes;
        break;
      }
      case PropKind::ForAll:
      case PropKind::Exists: {
        if (a->sort != b->sort) {
          result = Congruence::No;
          break;
        }
        VarSet avoid = free_vars(a);
        free_vars(b, avoid);
        std::string z = fresh_name(a->symbol, avoid);
        Term zv = mk_var(z, a->sort);
        result = compare(substitute(zv, a->symbol, a->left),
                         substitute(zv, b->symbol, b->left));
        break;
      }
      case PropKind::Atom:
        break;
    }
  } else {
    // Heads disagree, or the same predicate with different arguments.
    const Prop* side = nullptr;
    Prop unfolded;
    if (a->is_atom() && (unfolded = unfold_atom(a, rules_))) side = &a;
    else if (b->is_atom() && (unfolded = unfold_atom(b, rules_))) side = &b;

    if (!side) {
      result = Congruence::No;
    } else if (!fuel_.consume()) {
      result = Congruence::Undecided;
    } else {
      Prop next = normalize_terms(unfolded, rules_);
      result = side == &a ? compare(next, b) : compare(a, next);
    }
  }

  if (result != Congruence::Undecided)
    memo_.emplace(std::move(key), result == Congruence::Yes);
  return result;
}

Congruence congruent(const Prop& a, const Prop& b, const RuleSet& rules,
                     Fuel& fuel) {
  CongruenceChecker checker(rules, fuel);
  return checker.check(a, b);
}

}  // namespace modarith
