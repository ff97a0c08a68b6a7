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

#include "doctest.h"
#include "modarith/kernel.hpp"
#include "modarith/normalizer.hpp"
#include "modarith/translations.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace modarith;
using namespace modarith::testing;

namespace {

// Drops the N guards that relativization adds.
Prop erase_guards(const Prop& a) {
  switch (a->kind) {
    case PropKind::ForAll:
      REQUIRE(a->body()->kind == PropKind::Implies);
      CHECK(alpha_eq(a->body()->left, mk_atom("N", {mk_var(a->symbol, kIota)})));
      return mk_forall(a->symbol, a->sort, erase_guards(a->body()->right));
    case PropKind::Exists:
      REQUIRE(a->body()->kind == PropKind::And);
      CHECK(alpha_eq(a->body()->left, mk_atom("N", {mk_var(a->symbol, kIota)})));
      return mk_exists(a->symbol, a->sort, erase_guards(a->body()->right));
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or:
      return mk_binary(a->kind, erase_guards(a->left), erase_guards(a->right));
    default:
      return a;
  }
}

// HA_Pred atoms: equations only.
Language pred_language() {
  Language l;
  for (unsigned n = 0; n < 3; ++n) l.closed_terms.push_back(numeral(n));
  l.term = [](Rng& r, const std::vector<std::string>& vars) { return arith_term(r, vars, 2); };
  l.atom = [](Rng& r, const std::vector<std::string>& vars) {
    return mk_atom("=", {arith_term(r, vars, 2), arith_term(r, vars, 2)});
  };
  return l;
}

TTerm nat_var(const std::string& x) { return t_var(x, t_nat()); }

TTerm step_var() { return t_var("f", t_arrow(t_nat(), t_arrow(t_nat(), t_nat()))); }

}  // namespace

TEST_CASE("relativization examples") {
  Theory th = theory_ha_pred();
  Theory n = theory_ha_n();
  CHECK(alpha_eq(relativize(th.parse("forall x:iota. x = x")),
                 n.parse("forall x:iota. N(x) => x = x")));
  CHECK(alpha_eq(relativize(th.parse("exists x:iota. 2 * x = 4")),
                 n.parse("exists x:iota. N(x) /\\ 2 * x = 4")));
  Prop atom = th.parse("Pred(3) = 2");
  CHECK(alpha_eq(relativize(atom), atom));
  CHECK_THROWS_AS(relativize(n.parse("N(0)")), TranslationError);
  CHECK_THROWS_AS(relativize(n.parse("forall x:iota. N(x) => x = x")), TranslationError);
}

TEST_CASE("relativization guards every quantifier and nothing else") {
  ProofGen gen(pred_language(), 61);
  Theory n = theory_ha_n();
  for (int i = 0; i < 300; ++i) {
    Prop a = gen.prop({}, 4);
    Prop r = relativize(a);
    CHECK(alpha_eq(erase_guards(r), a));
    CHECK_NOTHROW(check_sorts(n, r));
    CHECK(free_vars(r) == free_vars(a));
  }
}

TEST_CASE("types as class terms") {
  CHECK(to_string(ttype_to_term(t_nat())) == "nat");
  CHECK(term_eq(ttype_to_term(t_arrow(t_nat(), t_nat())),
                mk_app("->", {mk_app("nat", {}, kKappa), mk_app("nat", {}, kKappa)}, kKappa)));
  TType a = t_arrow(t_arrow(t_nat(), t_nat()), t_nat());
  CHECK(to_string(a) == "(nat -> nat) -> nat");
  CHECK(to_string(ttype_to_term(a)) == "(nat -> nat) -> nat");
}

TEST_CASE("System T reduction examples") {
  TTerm a = nat_var("a"), f = step_var(), b = nat_var("b");
  auto zero = t_step(t_rec(a, f, t_zero(), t_nat()));
  REQUIRE(zero.size() == 1);
  CHECK(alpha_eq(zero[0], a));
  auto succ = t_step(t_rec(a, f, t_succ(b), t_nat()));
  REQUIRE(succ.size() == 1);
  CHECK(alpha_eq(succ[0], t_app(t_app(f, b), t_rec(a, f, b, t_nat()))));
  TTerm u = nat_var("u");
  auto beta = t_step(t_app(t_lam("x", t_nat(), nat_var("x")), u));
  REQUIRE(beta.size() == 1);
  CHECK(alpha_eq(beta[0], u));
  CHECK(t_step(t_numeral(3)).empty());
}

TEST_CASE("ill-typed terms are rejected") {
  CHECK_THROWS_AS(type_of(t_app(t_zero(), t_zero())), TranslationError);
  CHECK_THROWS_AS(type_of(t_succ(t_lam("x", t_nat(), nat_var("x")))), TranslationError);
  CHECK_THROWS_AS(parigot(t_app(t_zero(), t_zero())), TranslationError);
}

TEST_CASE("translation of zero, variables and the recursor") {
  CHECK(alpha_eq(parigot(t_zero()), oracle_parigot_numeral(0)));
  CHECK(alpha_eq(parigot(nat_var("y")), pvar("y")));
  TTerm x = nat_var("x"), f = step_var();
  Proof rec = parigot(t_rec(x, f, t_zero(), t_nat()));
  Proof expected =
      papp(papp(ptapp(parigot(t_zero()), mk_app("nat", {}, kKappa)), pvar("x")), pvar("f"));
  CHECK(alpha_eq(rec, expected));
  Theory th = theory_t();
  TTerm t = t_rec(x, f, t_zero(), t_nat());
  CHECK(check(th, parigot_context(t), rec, t_membership(t_nat())).ok());
}

TEST_CASE("the recursor simulations") {
  Theory th = theory_t();
  TTerm x = nat_var("x"), f = step_var(), n = nat_var("n");
  TTerm r0 = t_rec(x, f, t_zero(), t_nat());
  SimulationResult s0 = simulate_check(th, r0, x);
  CHECK(s0.outcome == Simulation::Simulated);
  CHECK(s0.depth >= 1);

  TTerm rs = t_rec(x, f, t_succ(n), t_nat());
  TTerm target = t_app(t_app(f, n), t_rec(x, f, n, t_nat()));
  SimulationResult s1 = simulate_check(th, rs, target);
  CHECK(s1.outcome == Simulation::Simulated);
  CHECK(s1.depth >= 1);
  // Target written out by hand: f |n| (|n| [nat] x f).
  Proof by_hand = papp(papp(pvar("f"), pvar("n")),
                       papp(papp(ptapp(pvar("n"), mk_app("nat", {}, kKappa)), pvar("x")),
                            pvar("f")));
  CHECK(alpha_eq(parigot(target), by_hand));

  TTerm beta = t_app(t_lam("y", t_nat(), t_succ(nat_var("y"))), x);
  SimulationResult s2 = simulate_check(th, beta, t_succ(x));
  CHECK(s2.outcome == Simulation::Simulated);
  CHECK(s2.depth == 1);
}

TEST_CASE("simulation refuses the iterator variant") {
  TTerm x = nat_var("x");
  CHECK_THROWS_AS(simulate_check(theory_t(true), t_rec(x, step_var(), t_zero(), t_nat()), x),
                  TranslationError);
}

TEST_CASE("non-reducts are not simulated") {
  Theory th = theory_t();
  SimulationResult s = simulate_check(th, t_numeral(1), t_numeral(2), 50);
  CHECK(s.outcome != Simulation::Simulated);
}

TEST_CASE("numerals round trip through proofs") {
  Theory th = theory_t();
  TTerm succ = t_lam("k", t_nat(), t_lam("r", t_nat(), t_succ(nat_var("r"))));
  for (unsigned n = 0; n <= 6; ++n) {
    Proof p = parigot(t_numeral(n));
    CHECK(check(th, {}, p, t_membership(t_nat())).ok());
    CHECK(alpha_eq(normalize(p).normal_form, oracle_parigot_numeral(n)));
    // Rec(0, k r. S(r), n) computes n as well.
    Proof iter = parigot(t_rec(t_zero(), succ, t_numeral(n), t_nat()));
    CHECK(check(th, {}, iter, t_membership(t_nat())).ok());
    CHECK(alpha_eq(normalize(iter).normal_form, oracle_parigot_numeral(n)));
  }
}

TEST_CASE("printing and parsing T terms") {
  TTermGen gen(62);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::pair<std::string, TType>> env;
    TType a = random_ttype(gen.rng(), 2);
    TTerm t = gen.gen(a, 3, env);
    INFO(to_string(t));
    CHECK(type_eq(type_of(t), a));
    CHECK(alpha_eq(parse_tterm(to_string(t)), t));
  }
  CHECK(type_eq(parse_ttype("(nat -> nat) -> nat"),
                t_arrow(t_arrow(t_nat(), t_nat()), t_nat())));
  CHECK_THROWS_AS(parse_tterm("lam (x : nat). y"), Error);
}

TEST_CASE("T substitution avoids capture") {
  TTerm body = t_lam("y", t_nat(), t_app(t_app(step_var(), nat_var("x")), nat_var("y")));
  TTerm s = substitute(body, "x", nat_var("y"));
  REQUIRE(s->kind == TTermKind::Lam);
  CHECK(s->name != "y");
  CHECK(alpha_eq(s, t_lam("z", t_nat(), t_app(t_app(step_var(), nat_var("y")), nat_var("z")))));
}

TEST_CASE("generated T terms: type preservation and simulation") {
  Theory th = theory_t();
  TTermGen gen(63);
  int terms = 0, reductions = 0;
  for (int i = 0; terms < 200 && i < 5000; ++i) {
    std::vector<std::pair<std::string, TType>> env;
    TType a = random_ttype(gen.rng(), 1);
    TTerm t = gen.gen(a, 3, env);
    auto reducts = t_step(t);
    if (reducts.empty()) continue;
    ++terms;
    INFO(to_string(t));
    CheckReport r = check(th, {}, parigot(t), t_membership(a));
    CHECK(r.ok());
    for (const auto& u : reducts) {
      ++reductions;
      CHECK(type_eq(type_of(u), a));
      SimulationResult s = simulate_check(th, t, u);
      INFO(to_string(u), " ", s.message);
      CHECK(s.outcome == Simulation::Simulated);
      CHECK(s.depth >= 1);
    }
  }
  CHECK(terms == 200);
  CHECK(reductions >= terms);
}
