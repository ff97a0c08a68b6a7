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
#include "modarith/rewrite.hpp"
#include "modarith/theory.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace modarith;
using namespace modarith::testing;

namespace {

Term add(Term a, Term b) { return mk_app("+", {std::move(a), std::move(b)}, kIota); }
Term mul(Term a, Term b) { return mk_app("*", {std::move(a), std::move(b)}, kIota); }

Congruence congruent_with(const Prop& a, const Prop& b, const RuleSet& rules,
                          std::size_t fuel = Fuel::kDefault) {
  Fuel f(fuel);
  return congruent(a, b, rules, f);
}

}  // namespace

TEST_CASE("term normalization examples") {
  Theory th = theory_ha_mod();
  Term y = mk_var("y", kIota);
  CHECK(term_eq(normalize_term(add(numeral(0), y), th.rules), y));
  CHECK(term_eq(normalize_term(mul(numeral(2), numeral(2)), th.rules), numeral(4)));
  Term px = mk_app("Pred", {mk_app("S", {mk_var("x", kIota)}, kIota)}, kIota);
  CHECK(term_eq(normalize_term(px, th.rules), mk_var("x", kIota)));
}

TEST_CASE("numeral arithmetic agrees with machine arithmetic") {
  Theory th = theory_ha_mod();
  int agree = 0, total = 0;
  for (unsigned a = 0; a <= 8; ++a)
    for (unsigned b = 0; b <= 8; ++b)
      for (Strategy s : {Strategy::Innermost, Strategy::Outermost}) {
        Term sum = normalize_term(add(oracle_numeral(a), oracle_numeral(b)), th.rules, s);
        Term prod = normalize_term(mul(oracle_numeral(a), oracle_numeral(b)), th.rules, s);
        total += 2;
        agree += term_eq(sum, oracle_numeral(a + b));
        agree += term_eq(prod, oracle_numeral(a * b));
        CHECK(oracle_count_succ(sum) == a + b);
        CHECK(oracle_count_succ(prod) == a * b);
      }
  CHECK(agree == total);
}

TEST_CASE("normal forms are irreducible, idempotent and strategy independent") {
  Theory th = theory_ha_mod();
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    Term t = arith_term(rng, {"x", "y"}, 4);
    Term inner = normalize_term(t, th.rules, Strategy::Innermost);
    Term outer = normalize_term(t, th.rules, Strategy::Outermost);
    INFO(to_string(t));
    CHECK(term_eq(inner, outer));
    CHECK(term_eq(normalize_term(inner, th.rules), inner));
    CHECK(oracle_term_reducts(inner, th.rules).empty());
    CHECK(oracle_reachable(t, th.rules, 100000).count(canonical_key(inner)) == 1);
  }
}

TEST_CASE("overlapping or malformed rules are rejected") {
  Theory th = theory_ha_mod();
  RuleSet rules = th.rules;
  Term x = mk_var("x", kIota);
  CHECK_THROWS_AS(rules.add_term_rule({"dup", add(numeral(0), x), x}), SortError);
  CHECK_THROWS_AS(rules.add_term_rule({"var", x, numeral(0)}), SortError);
  CHECK_THROWS_AS(rules.add_term_rule({"fresh", mk_app("Pred", {numeral(5)}, kIota), x}), SortError);
  CHECK_THROWS_AS(rules.add_prop_rule({"conn", mk_top(), mk_top()}), SortError);
}

TEST_CASE("looping user term rules run out of budget") {
  RuleSet rules;
  Term x = mk_var("x", kIota);
  rules.add_term_rule({"loop", mk_app("f", {x}, kIota), mk_app("f", {mk_app("S", {x}, kIota)}, kIota)});
  rules.term_step_limit = 1000;
  CHECK_THROWS_AS(normalize_term(mk_app("f", {numeral(0)}, kIota), rules), FuelExhausted);
}

TEST_CASE("weak head unfolding examples") {
  Theory th = theory_ha_mod();
  Parsing ps(th);
  Fuel fuel;
  CHECK(whnf_prop(ps.prop("Null(0)"), th.rules, fuel)->kind == PropKind::Top);

  Prop n_unfolded = ps.prop(
      "forall p:kappa. 0 in p => (forall y:iota. N(y) => y in p => S(y) in p) => x in p");
  Fuel f2;
  Prop w = whnf_prop(ps.prop("x in {z | N(z)}"), th.rules, f2);
  CHECK(alpha_eq(w, n_unfolded));
  CHECK(f2.consumed() == 2);

  Fuel f3;
  CHECK(alpha_eq(whnf_prop(ps.prop("y = z"), th.rules, f3),
                 ps.prop("forall p:kappa. y in p => z in p")));

  // Connectives are returned unopened.
  Fuel f4;
  Prop conj = ps.prop("N(0) /\\ Null(1)");
  CHECK(alpha_eq(whnf_prop(conj, th.rules, f4), conj));
  CHECK(f4.consumed() == 0);
}

TEST_CASE("weak head unfolding without fuel throws") {
  Theory th = theory_ha_mod();
  Fuel none(0);
  CHECK_THROWS_AS(whnf_prop(th.parse("Null(0)"), th.rules, none), FuelExhausted);
}

TEST_CASE("congruence examples") {
  Theory th = theory_ha_mod();
  Parsing ps(th);
  CHECK(congruent_with(ps.prop("2 * 2 = 4"), ps.prop("4 = 4"), th.rules) == Congruence::Yes);
  Prop a = ps.prop("N(5) => Null(0)");
  CHECK(congruent_with(a, a, th.rules) == Congruence::Yes);
  CHECK(congruent_with(ps.prop("N(0)"),
                       ps.prop("forall p:kappa. 0 in p => "
                               "(forall y:iota. N(y) => y in p => S(y) in p) => 0 in p"),
                       th.rules) == Congruence::Yes);
  CHECK(congruent_with(ps.prop("0 = 0"), ps.prop("0 = S(0)"), th.rules) == Congruence::No);
}

TEST_CASE("disequality agrees with brute-force joinability") {
  Theory th = theory_ha_mod();
  // Both sides unfold to forall p. 0 in p => _ in p; they differ exactly at
  // the terms 0 and S(0), which have no common reduct.
  CHECK_FALSE(oracle_joinable(numeral(0), numeral(1), th.rules));
  CHECK(oracle_joinable(mul(numeral(2), numeral(2)), numeral(4), th.rules));
  Fuel f;
  Prop l = whnf_prop(th.parse("0 = 0"), th.rules, f);
  Prop r = whnf_prop(th.parse("0 = S(0)"), th.rules, f);
  CHECK_FALSE(alpha_eq(l, r));
}

TEST_CASE("equation congruence matches the joinability oracle") {
  Theory th = theory_ha_mod();
  Rng rng(22);
  int yes = 0;
  for (int i = 0; i < 300; ++i) {
    Term a = arith_term(rng, {}, 2), b = arith_term(rng, {}, 2);
    Term c = arith_term(rng, {}, 2), d = rng.coin() ? a : arith_term(rng, {}, 2);
    Prop e1 = mk_atom("=", {a, b});
    Prop e2 = mk_atom("=", {c, rng.coin() ? b : d});
    bool expected = oracle_joinable(a, c, th.rules) &&
                    oracle_joinable(e1->args[1], e2->args[1], th.rules);
    Congruence got = congruent_with(e1, e2, th.rules);
    INFO(to_string(e1) << " vs " << to_string(e2));
    CHECK(got == (expected ? Congruence::Yes : Congruence::No));
    yes += expected;
  }
  CHECK(yes > 0);
}

TEST_CASE("congruence is reflexive and symmetric") {
  Theory th = theory_ha_mod();
  ProofGen gen(arith_language(th.rules), 23);
  for (int i = 0; i < 300; ++i) {
    Prop a = gen.prop({}, 3), b = gen.prop({}, 3);
    CHECK(congruent_with(a, a, th.rules) == Congruence::Yes);
    CHECK(congruent_with(a, b, th.rules) == congruent_with(b, a, th.rules));
    CHECK(congruent_with(a, normalize_terms(a, th.rules), th.rules) == Congruence::Yes);
  }
}

TEST_CASE("congruence is undecided when fuel runs out") {
  Theory th = theory_ha_mod();
  Parsing ps(th);
  Prop n0 = ps.prop("N(0)");
  Prop unfolded = ps.prop(
      "forall p:kappa. 0 in p => (forall y:iota. N(y) => y in p => S(y) in p) => 0 in p");
  CHECK(congruent_with(n0, unfolded, th.rules, 0) == Congruence::Undecided);
  CHECK(congruent_with(n0, unfolded, th.rules, 1) == Congruence::Yes);
  // More fuel never turns an answer into a different answer.
  for (std::size_t f = 1; f < 6; ++f)
    CHECK(congruent_with(n0, unfolded, th.rules, f) == Congruence::Yes);
}

TEST_CASE("congruence is transitive where decided") {
  Theory th = theory_ha_mod();
  Rng rng(24);
  std::vector<Prop> pool;
  for (int i = 0; i < 12; ++i) {
    Prop e = mk_atom("=", {arith_term(rng, {}, 2), arith_term(rng, {}, 1)});
    pool.push_back(e);
    pool.push_back(normalize_terms(e, th.rules));
    pool.push_back(unfold_atom(normalize_terms(e, th.rules), th.rules));
  }
  int chains = 0;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (congruent_with(a, b, th.rules) != Congruence::Yes) continue;
      for (const auto& c : pool) {
        if (congruent_with(b, c, th.rules) != Congruence::Yes) continue;
        Congruence ac = congruent_with(a, c, th.rules);
        if (ac == Congruence::Undecided) continue;
        ++chains;
        CHECK(ac == Congruence::Yes);
      }
    }
  CHECK(chains > 36);
}
