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

#include <algorithm>

#include "doctest.h"
#include "modarith/kernel.hpp"
#include "modarith/theory.hpp"
#include "support/common.hpp"
#include "support/structure.hpp"

using namespace modarith;
using namespace modarith::testing;

namespace {

std::vector<std::string> axiom_names(const Theory& th) {
  std::vector<std::string> out;
  for (const auto& a : th.axioms) out.push_back(a.name);
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += x + "\n";
  return s;
}

}  // namespace

TEST_CASE("ha-mod matches its rule table") {
  auto d = ha_mod_differences(false);
  INFO(joined(d));
  CHECK(d.empty());
}

TEST_CASE("ha-mod variant matches its rule table") {
  auto d = ha_mod_differences(true);
  INFO(joined(d));
  CHECK(d.empty());
}

TEST_CASE("variant flag changes exactly the N rule") {
  auto d = variant_differences();
  INFO(joined(d));
  CHECK(d.empty());
}

TEST_CASE("theory T has exactly two rules") {
  auto d = t_differences(false);
  INFO(joined(d));
  CHECK(d.empty());
  CHECK(theory_t().rules.prop_rules.size() == 2);
  CHECK(t_differences(true).empty());
}

TEST_CASE("class axioms correspond one to one with ha-mod rules") {
  auto d = class_correspondence();
  INFO(joined(d));
  CHECK(d.empty());
}

TEST_CASE("theory T unfolding examples") {
  Theory th = theory_t();
  Parsing ps(th);
  Fuel f1;
  CHECK(alpha_eq(whnf_prop(ps.prop("eps(nat)"), th.rules, f1),
                 ps.prop("forall p:kappa. eps(p) => (eps(nat) => eps(p) => eps(p)) => eps(p)")));
  Fuel f2;
  CHECK(alpha_eq(whnf_prop(ps.prop("eps(nat -> nat)"), th.rules, f2),
                 ps.prop("eps(nat) => eps(nat)")));
  CHECK(f2.consumed() == 1);
}

TEST_CASE("ha is a plain axiomatic theory") {
  Theory th = theory_ha();
  CHECK(th.rules.term_rules.empty());
  CHECK(th.rules.prop_rules.empty());
  auto names = axiom_names(th);
  int recursion = 0;
  for (const auto* n : {"plus_zero", "plus_succ", "times_zero", "times_succ"})
    recursion += has(names, n);
  CHECK(recursion == 4);
  CHECK(has(names, "succ_inj"));
  CHECK(has(names, "zero_ne_succ"));
  CHECK(has(names, "eq_refl"));

  SchemeInstanceRequest req;
  req.scheme = "induction";
  req.P = th.parse("x = x");
  Prop inst = th.axiom_instance("induction", &req);
  CHECK(free_vars(inst).empty());
  CHECK_NOTHROW(check_sorts(th, inst));
}

TEST_CASE("ha-pred adds three predecessor axioms") {
  auto base = axiom_names(theory_ha());
  auto pred = axiom_names(theory_ha_pred());
  CHECK(pred.size() == base.size() + 3);
  CHECK(has(pred, "pred_zero"));
  CHECK(has(pred, "pred_succ"));
  CHECK(alpha_eq(theory_ha_pred().find_axiom("pred_zero")->statement,
                 theory_ha_pred().parse("Pred(0) = 0")));
}

TEST_CASE("ha-n has the natural number axioms and relativized induction") {
  Theory th = theory_ha_n();
  auto names = axiom_names(th);
  CHECK(has(names, "n_zero"));
  CHECK(has(names, "n_succ"));
  CHECK(alpha_eq(th.find_axiom("n_zero")->statement, th.parse("N(0)")));
  CHECK(alpha_eq(th.find_axiom("n_succ")->statement,
                 th.parse("forall x:iota. N(x) => N(S(x))")));
  SchemeInstanceRequest req;
  req.scheme = "induction";
  req.P = th.parse("x = x");
  Prop inst = th.axiom_instance("induction", &req);
  CHECK(alpha_eq(inst, th.parse("0 = 0 => (forall y:iota. N(y) => y = y => S(y) = S(y)) => "
                                "forall n:iota. N(n) => n = n")));
  Theory weak = theory_ha_n(true);
  CHECK(alpha_eq(weak.axiom_instance("induction", &req),
                 th.parse("0 = 0 => (forall y:iota. y = y => S(y) = S(y)) => "
                          "forall n:iota. N(n) => n = n")));
}

TEST_CASE("class comprehension scheme instance") {
  Theory th = theory_ha_class();
  SchemeInstanceRequest req;
  req.scheme = "comprehension";
  req.P = th.parse("x + y = 0");
  req.params = {"y"};
  Prop inst = th.axiom_instance("comprehension", &req);
  CHECK(free_vars(inst).empty());
  CHECK_NOTHROW(check_sorts(th, inst));
  Prop body = strip_foralls(inst);
  REQUIRE(body->kind == PropKind::And);
  Prop member = body->left->left;
  CHECK(member->symbol == "in");
  CHECK(alpha_eq(body, mk_iff(member, req.P)));

  SchemeInstanceRequest bad = req;
  bad.P = th.parse("forall p:kappa. x in p");
  CHECK_THROWS_AS(th.axiom_instance("comprehension", &bad), Error);
}

TEST_CASE("ha-mod has no axioms and two sorts") {
  Theory th = theory_ha_mod();
  CHECK(th.axioms.empty());
  CHECK(th.signature.has_sort(kIota));
  CHECK(th.signature.has_sort(kKappa));
  CHECK(th.rules.comprehension != nullptr);
}

TEST_CASE("every built-in theory resolves by name and validates") {
  for (const auto& name : theory_names()) {
    Theory th = theory_by_name(name);
    CHECK(th.name == name);
    CHECK_NOTHROW(th.validate());
  }
  CHECK_THROWS_AS(theory_by_name("nope"), TheoryError);
  CHECK_THROWS_AS(theory_ha().axiom_instance("nope"), TheoryError);
}

TEST_CASE("close_over orders requested variables first") {
  Theory th = theory_ha_mod();
  Parsing ps(th);
  Prop a = ps.prop("x + y = z");
  CHECK(alpha_eq(close_over(a), ps.prop("forall x:iota y:iota z:iota. x + y = z")));
  CHECK(alpha_eq(close_over(a, {"z"}), ps.prop("forall z:iota x:iota y:iota. x + y = z")));
}
