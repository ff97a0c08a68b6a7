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

#include "modarith/theory.hpp"

#include <algorithm>

namespace modarith {

//------------------------------------------------------------------------------
// Theory

const Rank* Theory::function(const std::string& n) const {
  if (const Rank* r = signature.function(n)) return r;
  return comprehension ? comprehension->rank(n) : nullptr;
}

const Rank* Theory::predicate(const std::string& n) const {
  return signature.predicate(n);
}

bool Theory::has_sort(const std::string& s) const { return signature.has_sort(s); }

const Axiom* Theory::find_axiom(const std::string& n) const {
  for (const auto& a : axioms)
    if (a.name == n) return &a;
  return nullptr;
}

Prop Theory::axiom_instance(const std::string& n,
                            const SchemeInstanceRequest* request) const {
  const Axiom* a = find_axiom(n);
  if (!a) throw TheoryError("theory " + name + " has no axiom '" + n + "'");
  if (!a->is_scheme()) {
    if (request && request->P)
      throw TheoryError("axiom '" + n + "' is not a scheme");
    return a->statement;
  }
  if (!request || !request->P)
    throw TheoryError("scheme '" + n + "' needs an instantiating proposition");
  try {
    check_sorts(*this, request->P);
    Prop inst = a->scheme(*request);
    check_sorts(*this, inst);
    return inst;
  } catch (const TheoryError&) {
    throw;
  } catch (const Error& e) {
    throw TheoryError("bad instance of scheme '" + n + "': " + e.what());
  }
}

void Theory::validate() const {
  for (const auto& a : axioms) {
    if (a.is_scheme()) continue;
    check_sorts(*this, a.statement);
    if (!free_vars(a.statement).empty())
      throw SortError("axiom " + a.name + " is not closed");
  }
  for (const auto& r : rules.term_rules) {
    check_sorts(*this, r.lhs);
    check_sorts(*this, r.rhs);
  }
  for (const auto& r : rules.prop_rules) {
    check_sorts(*this, r.lhs);
    check_sorts(*this, r.rhs);
  }
}

ParseContext Theory::parse_context() {
  ParseContext ctx;
  ctx.signature = &signature;
  ctx.comprehension = comprehension.get();
  return ctx;
}

Prop Theory::parse(std::string_view text) {
  ParseContext ctx = parse_context();
  return parse_prop(text, ctx);
}

Prop close_over(const Prop& a, const std::vector<std::string>& first) {
  auto fvs = free_vars_ordered(a);
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& f : first)
    for (const auto& v : fvs)
      if (v.first == f) order.push_back(v);
  std::vector<std::pair<std::string, std::string>> rest;
  for (const auto& v : fvs)
    if (std::find(first.begin(), first.end(), v.first) == first.end())
      rest.push_back(v);
  std::sort(rest.begin(), rest.end());
  order.insert(order.end(), rest.begin(), rest.end());
  Prop out = a;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    out = mk_forall(it->first, it->second, out);
  return out;
}

//------------------------------------------------------------------------------
// Builders

namespace {

void add_term_rule(Theory& th, const std::string& name, const std::string& lhs,
                   const std::string& rhs) {
  ParseContext ctx = th.parse_context();
  Term l = parse_term(lhs, ctx);
  Term r = parse_term(rhs, ctx, l->sort);
  th.rules.add_term_rule({name, l, r});
}

void add_prop_rule(Theory& th, const std::string& name, const std::string& lhs,
                   const std::string& rhs) {
  ParseContext ctx = th.parse_context();
  Prop l = parse_prop(lhs, ctx);
  Prop r = parse_prop(rhs, ctx);
  th.rules.add_prop_rule({name, l, r});
}

void add_axiom(Theory& th, const std::string& name, const std::string& text) {
  th.axioms.push_back({name, close_over(th.parse(text)), nullptr});
}

void add_axiom(Theory& th, const std::string& name, Prop statement) {
  th.axioms.push_back({name, std::move(statement), nullptr});
}

std::string nickname(const std::string& symbol) {
  if (symbol == "+") return "plus";
  if (symbol == "*") return "times";
  if (symbol == "=") return "eq";
  return symbol;
}

// Reflexivity plus one congruence axiom per argument position of every
// listed function and predicate.
void add_equality_axioms(Theory& th, const std::vector<std::string>& functions,
                         const std::vector<std::string>& predicates) {
  add_axiom(th, "eq_refl", "forall x:iota. x = x");
  Term x = mk_var("x", kIota);
  Term y = mk_var("y", kIota);
  Prop same = mk_atom("=", {x, y});
  auto others = [](std::size_t n) {
    std::vector<Term> v;
    for (std::size_t i = 0; i < n; ++i)
      v.push_back(mk_var("z" + std::to_string(i + 1), kIota));
    return v;
  };
  auto with = [](std::vector<Term> args, std::size_t i, const Term& t) {
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(i), t);
    return args;
  };
  for (const auto& f : functions) {
    const Rank* r = th.signature.function(f);
    std::size_t n = r->args.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto rest = others(n - 1);
      Prop body = mk_implies(same, mk_atom("=", {mk_app(f, with(rest, i, x), kIota),
                                                 mk_app(f, with(rest, i, y), kIota)}));
      std::string name = "eq_" + nickname(f) + (n > 1 ? "_" + std::to_string(i + 1) : "");
      add_axiom(th, name, close_over(body, {"x", "y"}));
    }
  }
  for (const auto& p : predicates) {
    const Rank* r = th.signature.predicate(p);
    std::size_t n = r->args.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto rest = others(n - 1);
      Prop body = mk_implies(same, mk_implies(mk_atom(p, with(rest, i, x)),
                                              mk_atom(p, with(rest, i, y))));
      std::string name = "eq_" + nickname(p) + (n > 1 ? "_" + std::to_string(i + 1) : "");
      add_axiom(th, name, close_over(body, {"x", "y"}));
    }
  }
}

Prop instantiate(const Term& t, const std::string& x, const Prop& p) {
  return substitute(t, x, p);
}

// ((0/x)P => forall y ((y/x)P => (S(y)/x)P) => forall n (n/x)P), optionally
// relativized to N.
Axiom induction_scheme(bool relativized, bool weak) {
  return {"induction", nullptr, [relativized, weak](const SchemeInstanceRequest& r) {
            VarSet avoid = free_vars(r.P);
            avoid.insert(r.var);
            std::string y = fresh_name("y", avoid);
            avoid.insert(y);
            std::string n = fresh_name("n", avoid);
            Term yv = mk_var(y, kIota);
            Term nv = mk_var(n, kIota);
            Prop step = mk_implies(instantiate(yv, r.var, r.P),
                                   instantiate(mk_app("S", {yv}, kIota), r.var, r.P));
            if (relativized && !weak) step = mk_implies(mk_atom("N", {yv}), step);
            Prop concl = instantiate(nv, r.var, r.P);
            if (relativized) concl = mk_implies(mk_atom("N", {nv}), concl);
            Prop inst = mk_implies(instantiate(numeral(0), r.var, r.P),
                                   mk_implies(mk_forall(y, kIota, step),
                                              mk_forall(n, kIota, concl)));
            return close_over(inst, r.params);
          }};
}

void arithmetic_signature(Signature& sig, bool pred, bool null_n) {
  sig.add_sort(kIota);
  sig.add_function("0", {}, kIota);
  sig.add_function("S", {kIota}, kIota);
  sig.add_function("+", {kIota, kIota}, kIota);
  sig.add_function("*", {kIota, kIota}, kIota);
  sig.add_predicate("=", {kIota, kIota});
  if (pred) sig.add_function("Pred", {kIota}, kIota);
  if (null_n) {
    sig.add_predicate("Null", {kIota});
    sig.add_predicate("N", {kIota});
  }
}

void add_recursion_axioms(Theory& th) {
  add_axiom(th, "plus_zero", "forall y:iota. 0 + y = y");
  add_axiom(th, "plus_succ", "forall x:iota y:iota. S(x) + y = S(x + y)");
  add_axiom(th, "times_zero", "forall y:iota. 0 * y = 0");
  add_axiom(th, "times_succ", "forall x:iota y:iota. S(x) * y = x * y + y");
}

void add_pred_null_axioms(Theory& th) {
  add_axiom(th, "pred_zero", "Pred(0) = 0");
  add_axiom(th, "pred_succ", "forall x:iota. Pred(S(x)) = x");
  add_axiom(th, "null_zero", "Null(0)");
  add_axiom(th, "null_succ", "forall x:iota. ~Null(S(x))");
}

Signature class_base_signature() {
  Signature base;
  arithmetic_signature(base, true, true);
  return base;
}

void two_sorted_signature(Theory& th) {
  arithmetic_signature(th.signature, true, true);
  th.signature.add_sort(kKappa);
  th.signature.add_predicate("in", {kIota, kKappa});
  th.comprehension = std::make_shared<ComprehensionRegistry>(ComprehensionMode::Class,
                                                             class_base_signature());
}

}  // namespace

Theory theory_ha() {
  Theory th;
  th.name = "ha";
  arithmetic_signature(th.signature, false, false);
  add_equality_axioms(th, {"S", "+", "*"}, {"="});
  add_axiom(th, "succ_inj", "forall x:iota y:iota. S(x) = S(y) => x = y");
  add_axiom(th, "zero_ne_succ", "forall x:iota. ~(0 = S(x))");
  th.axioms.push_back(induction_scheme(false, false));
  add_recursion_axioms(th);
  th.validate();
  return th;
}

Theory theory_ha_pred() {
  Theory th = theory_ha();
  th.name = "ha-pred";
  th.signature.add_function("Pred", {kIota}, kIota);
  add_axiom(th, "pred_zero", "Pred(0) = 0");
  add_axiom(th, "pred_succ", "forall x:iota. Pred(S(x)) = x");
  add_axiom(th, "pred_eq", "forall x:iota y:iota. x = y => Pred(x) = Pred(y)");
  th.validate();
  return th;
}

Theory theory_ha_n(bool weak_induction) {
  Theory th;
  th.name = weak_induction ? "ha-n-weak" : "ha-n";
  th.variant = weak_induction;
  arithmetic_signature(th.signature, true, true);
  add_equality_axioms(th, {"S", "+", "*", "Pred"}, {"=", "Null", "N"});
  th.axioms.push_back(induction_scheme(true, weak_induction));
  add_axiom(th, "n_zero", "N(0)");
  add_axiom(th, "n_succ", "forall x:iota. N(x) => N(S(x))");
  add_pred_null_axioms(th);
  add_recursion_axioms(th);
  th.validate();
  return th;
}

Theory theory_ha_class() {
  Theory th;
  th.name = "ha-class";
  two_sorted_signature(th);
  add_axiom(th, "class_eq",
            "forall y:iota z:iota. y = z <=> (forall p:kappa. y in p => z in p)");
  add_axiom(th, "class_n",
            "forall n:iota. N(n) <=> (forall p:kappa. 0 in p => "
            "(forall y:iota. N(y) => y in p => S(y) in p) => n in p)");
  std::shared_ptr<ComprehensionRegistry> registry = th.comprehension;
  th.axioms.push_back(
      {"comprehension", nullptr, [registry](const SchemeInstanceRequest& r) {
         ComprehensionSymbol sym = registry->register_key({r.var, r.params, r.P});
         std::map<std::string, std::string> sorts;
         for (const auto& [name, sort] : free_vars_ordered(r.P)) sorts[name] = sort;
         std::vector<Term> args;
         for (const auto& p : sym.argument_order)
           args.push_back(mk_var(p, sorts.count(p) ? sorts[p] : std::string(kIota)));
         Term cls = mk_app(sym.name, std::move(args), sym.rank.result);
         Prop body = mk_iff(mk_atom("in", {mk_var(r.var, kIota), cls}), r.P);
         for (auto it = r.params.rbegin(); it != r.params.rend(); ++it)
           body = mk_forall(*it, kIota, body);
         return mk_forall(r.var, kIota, body);
       }});
  add_pred_null_axioms(th);
  add_recursion_axioms(th);
  th.validate();
  return th;
}

Theory theory_ha_mod(bool variant_n) {
  Theory th;
  th.name = variant_n ? "ha-mod-variant" : "ha-mod";
  th.variant = variant_n;
  two_sorted_signature(th);
  th.comprehension->register_key({"x", {}, mk_atom("N", {mk_var("x", kIota)})});

  add_prop_rule(th, "eq", "y = z", "forall p:kappa. y in p => z in p");
  if (variant_n)
    add_prop_rule(th, "N", "N(n)",
                  "forall p:kappa. 0 in p => "
                  "(forall y:iota. y in p => S(y) in p) => n in p");
  else
    add_prop_rule(th, "N", "N(n)",
                  "forall p:kappa. 0 in p => "
                  "(forall y:iota. N(y) => y in p => S(y) in p) => n in p");
  th.rules.comprehension = th.comprehension;
  add_term_rule(th, "pred_zero", "Pred(0)", "0");
  add_term_rule(th, "pred_succ", "Pred(S(x))", "x");
  add_prop_rule(th, "null_zero", "Null(0)", "true");
  add_prop_rule(th, "null_succ", "Null(S(x))", "false");
  add_term_rule(th, "plus_zero", "0 + y", "y");
  add_term_rule(th, "plus_succ", "S(x) + y", "S(x + y)");
  add_term_rule(th, "times_zero", "0 * y", "0");
  add_term_rule(th, "times_succ", "S(x) * y", "x * y + y");
  th.validate();
  return th;
}

Theory theory_t(bool iterator_variant) {
  Theory th;
  th.name = iterator_variant ? "t-iterator" : "t";
  th.variant = iterator_variant;
  th.signature.add_sort(kKappa);
  th.signature.add_function("nat", {}, kKappa);
  th.signature.add_function("->", {kKappa, kKappa}, kKappa);
  th.signature.add_predicate("eps", {kKappa});
  if (iterator_variant)
    add_prop_rule(th, "eps_nat", "eps(nat)",
                  "forall p:kappa. eps(p) => (eps(p) => eps(p)) => eps(p)");
  else
    add_prop_rule(th, "eps_nat", "eps(nat)",
                  "forall p:kappa. eps(p) => (eps(nat) => eps(p) => eps(p)) => eps(p)");
  add_prop_rule(th, "eps_arrow", "eps(y -> z)", "eps(y) => eps(z)");
  th.validate();
  return th;
}

Theory theory_by_name(const std::string& name) {
  if (name == "ha") return theory_ha();
  if (name == "ha-pred") return theory_ha_pred();
  if (name == "ha-n") return theory_ha_n(false);
  if (name == "ha-n-weak") return theory_ha_n(true);
  if (name == "ha-class") return theory_ha_class();
  if (name == "ha-mod") return theory_ha_mod(false);
  if (name == "ha-mod-variant") return theory_ha_mod(true);
  if (name == "t") return theory_t(false);
  if (name == "t-iterator") return theory_t(true);
  throw TheoryError("unknown theory '" + name + "'");
}

std::vector<std::string> theory_names() {
  return {"ha",     "ha-pred", "ha-n",           "ha-n-weak", "ha-class",
          "ha-mod", "ha-mod-variant", "t", "t-iterator"};
}

}  // namespace modarith
