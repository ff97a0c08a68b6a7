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
#include "modarith/parser.hpp"
#include "modarith/script.hpp"
#include "support/common.hpp"

using namespace modarith;
using namespace modarith::testing;

TEST_CASE("theory scripts declare symbols, rules and axioms") {
  Theory th = parse_theory_script(R"(
    theory tiny.
    sort iota.
    function z : iota.
    function s : iota -> iota.
    function add : iota, iota -> iota.
    predicate even : iota.
    rule add_z : add(z, y) --> y.
    rule add(s(x), y) --> s(add(x, y)).
    prop-rule ev : even(s(s(x))) --> even(x).
    axiom ev0 : even(z).
    axiom all_even : even(x) => even(s(s(x))).
  )");
  CHECK(th.name == "tiny");
  CHECK(th.rules.term_rules.size() == 2);
  CHECK(th.rules.term_rules[0].name == "add_z");
  CHECK(th.rules.prop_rules.size() == 1);
  CHECK(th.rules.contains_nonterminating);
  REQUIRE(th.find_axiom("all_even"));
  CHECK(free_vars(th.find_axiom("all_even")->statement).empty());
  Fuel fuel;
  CHECK(congruent(th.parse("even(add(s(s(z)), s(s(z))))"), th.parse("even(z)"), th.rules,
                  fuel) == Congruence::Yes);
}

TEST_CASE("theory scripts can extend a built-in theory") {
  Theory th = parse_theory_script("extends ha-mod.\npredicate Even : iota.\n", "mine");
  CHECK(th.name == "mine");
  CHECK(th.rules.prop_rules.size() == theory_ha_mod().rules.prop_rules.size());
  CHECK(th.signature.predicate("Even") != nullptr);
}

TEST_CASE("theory script errors carry positions") {
  try {
    parse_theory_script("sort iota.\nbogus thing.\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_theory_script("sort iota.\nfunction z : iota.\nrule z --> z.\nrule z --> z.\n"),
                  SortError);
  CHECK_THROWS_AS(parse_theory_script("sort iota.\npredicate P : kappa.\n"), Error);
  CHECK_THROWS_AS(parse_theory_script("sort iota.\naxiom a : Q.\n"), Error);
}

TEST_CASE("proof scripts bring axioms and earlier theorems into scope") {
  ProofScript s = parse_proof_script(R"(
    theory ha.
    use axiom eq_refl as r.
    use axiom induction as ind with P := x = x, x := x.
    theorem zero_refl : 0 = 0 := r [0].
    theorem all_refl : forall n:iota. n = n :=
      ind zero_refl (all (y : iota). lam (h : y = y). r [S(y)]).
  )");
  REQUIRE(s.theorems.size() == 2);
  CHECK(s.uses.size() == 2);
  CHECK(s.theorems[1].context.size() == 3);
  for (const auto& t : s.theorems) {
    CheckReport r = check(*s.theory, t.context, t.proof, t.statement);
    INFO(t.name, " ", r.describe());
    CHECK(r.ok());
  }
}

TEST_CASE("proof script errors") {
  CHECK_THROWS_AS(parse_proof_script("theorem t : true := I."), ParseError);
  CHECK(parse_proof_script("theorem t : true := I.", {}, "ha-mod").theorems.size() == 1);
  CHECK_THROWS_AS(parse_proof_script("theory ha.\nuse axiom missing.\n"), ParseError);
  CHECK_THROWS_AS(parse_proof_script("theory ha.\ntheorem t : true := I.\ntheorem t : true := I.\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_proof_script("theory nowhere.\n"), TheoryError);
  CHECK_THROWS_AS(parse_proof_script("theory ha.\ntheorem t : true := .\n"), ParseError);
}

TEST_CASE("every golden script checks") {
  for (const char* f : {"logic.prf", "ha_mod.prf", "even4.prf", "even4_axiomatic.prf"}) {
    ProofScript s = load_proof_script(golden(f));
    CHECK_FALSE(s.theorems.empty());
    for (const auto& t : s.theorems) {
      CheckReport r = check(*s.theory, t.context, t.proof, t.statement);
      INFO(f, ": ", t.name, " ", r.describe());
      CHECK(r.ok());
    }
  }
}

TEST_CASE("T scripts") {
  auto defs = parse_t_script(read_file(golden("t_examples.t")));
  REQUIRE(defs.size() >= 5);
  for (const auto& d : defs) {
    CHECK(type_eq(type_of(d.term), d.declared));
    CHECK(free_tvars(d.term).empty());
  }
  CHECK(defs[0].name == "zero");
  CHECK(defs[0].line == 2);

  CHECK_THROWS_AS(parse_t_script("tdef a : nat -> nat := 0."), SortError);
  CHECK_THROWS_AS(parse_t_script("tdef a : nat := 0.\ntdef a : nat := 1."), ParseError);
  CHECK_THROWS_AS(parse_t_script("junk\ntdef a : nat := 0."), ParseError);
  CHECK_THROWS_AS(parse_t_script("tdef a : nat := b."), ParseError);
  auto chained = parse_t_script("tdef one : nat := S(0).\ntdef two : nat := S(one).");
  CHECK(alpha_eq(chained[1].term, t_numeral(2)));
}

TEST_CASE("tokens accept Unicode connectives") {
  Theory th = logic_theory();
  CHECK(alpha_eq(th.parse("∀x:iota. P(x) ⇒ ∃y:iota. P(y) ∧ ⊤"),
                 th.parse("forall x:iota. P(x) => exists y:iota. P(y) /\\ true")));
}
