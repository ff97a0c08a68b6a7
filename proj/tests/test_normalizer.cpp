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

#include <chrono>

#include "doctest.h"
#include "modarith/normalizer.hpp"
#include "modarith/script.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"

using namespace modarith;
using namespace modarith::testing;

namespace {

Proof refl(const Term& t) {
  return ptlam("p", kKappa, plam("a", mk_atom("in", {t, mk_var("p", kKappa)}), pvar("a")));
}

std::vector<TheoremEntry> golden_theorems(std::vector<std::shared_ptr<Theory>>& theories) {
  std::vector<TheoremEntry> out;
  for (const char* f : {"logic.prf", "ha_mod.prf", "even4.prf", "even4_axiomatic.prf"}) {
    ProofScript s = load_proof_script(golden(f));
    for (auto& t : s.theorems) {
      out.push_back(t);
      theories.push_back(s.theory);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("each redex contracts as expected") {
  Theory th = logic_theory();
  Parsing ps(th);
  Prop a = ps.prop("A"), b = ps.prop("B");
  Proof x = pvar("x"), y = pvar("y");

  CHECK(redex_at_root(pfst(ppair(x, y))) == RedexTag::FstPair);
  CHECK(alpha_eq(contract(pfst(ppair(x, y))), x));
  CHECK(redex_at_root(psnd(ppair(x, y))) == RedexTag::SndPair);
  CHECK(alpha_eq(contract(psnd(ppair(x, y))), y));

  Proof beta = papp(plam("h", a, ppair(pvar("h"), pvar("h"))), x);
  CHECK(redex_at_root(beta) == RedexTag::Beta);
  CHECK(alpha_eq(contract(beta), ppair(x, x)));

  Term c = mk_app("c", {}, kIota);
  Proof body = pexintro(mk_var("v", kIota), pvar("k"), "z", kIota, ps.prop("P(z)"));
  Proof tbeta = ptapp(ptlam("v", kIota, body), c);
  CHECK(redex_at_root(tbeta) == RedexTag::BetaForall);
  CHECK(alpha_eq(contract(tbeta), pexintro(c, pvar("k"), "z", kIota, ps.prop("P(z)"))));

  Proof cl = pcase(pinl(x, b), "l", ppair(pvar("l"), y), "r", ppair(y, pvar("r")));
  CHECK(redex_at_root(cl) == RedexTag::CaseInl);
  CHECK(alpha_eq(contract(cl), ppair(x, y)));
  Proof cr = pcase(pinr(x, a), "l", ppair(pvar("l"), y), "r", ppair(y, pvar("r")));
  CHECK(redex_at_root(cr) == RedexTag::CaseInr);
  CHECK(alpha_eq(contract(cr), ppair(y, x)));

  // unpack(pack(t, p1); v. h. p2) contracts to (t/v, p1/h) p2.
  Proof packed = pexintro(c, x, "z", kIota, ps.prop("P(z)"));
  Proof inner = pexintro(mk_var("v", kIota), pvar("h"), "w", kIota, ps.prop("P(w)"));
  Proof unpack = pexelim(packed, "v", kIota, "h", inner, ps.prop("exists w:iota. P(w)"));
  CHECK(redex_at_root(unpack) == RedexTag::ExistsUnpack);
  CHECK(alpha_eq(contract(unpack), pexintro(c, x, "w", kIota, ps.prop("P(w)"))));

  CHECK_FALSE(redex_at_root(x).has_value());
  CHECK_THROWS_AS(contract(x), Error);
}

TEST_CASE("redex tags print and parse") {
  for (RedexTag t : kAllRedexTags) {
    auto back = parse_redex_tag(to_string(t));
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  CHECK_FALSE(parse_redex_tag("nope").has_value());
}

TEST_CASE("normalization examples") {
  Theory th = logic_theory();
  Parsing ps(th);
  Proof id_a = plam("a", ps.prop("A"), pvar("a"));
  Proof id_b = plam("b", ps.prop("B"), pvar("b"));
  NormalizeResult r = normalize(papp(id_a, id_b));
  CHECK(alpha_eq(r.normal_form, id_b));
  CHECK(r.steps == 1);

  NormalizeResult fixed = normalize(id_a);
  CHECK(fixed.steps == 0);
  CHECK(alpha_eq(fixed.normal_form, id_a));
}

TEST_CASE("a cut around the even proof normalizes away") {
  Theory th = theory_ha_mod();
  Parsing ps(th);
  Prop goal = ps.prop("exists x:iota. 2 * x = 4");
  Proof pi = pexintro(numeral(2), refl(numeral(4)), "x", kIota, ps.prop("2 * x = 4"));
  Proof cut = papp(plam("h", goal, pvar("h")), pi);
  CHECK(check(th, {}, cut, goal).ok());
  NormalizeResult r = normalize(cut);
  CHECK(alpha_eq(r.normal_form, pi));
  SubjectReductionReport sr = check_subject_reduction(th, {}, cut, goal);
  CHECK(sr.ok);
  CHECK(sr.steps == 1);
}

TEST_CASE("subject reduction on an identity cut at truth") {
  Theory th = logic_theory();
  Proof p = papp(plam("a", mk_top(), pvar("a")), ptruth());
  SubjectReductionReport sr = check_subject_reduction(th, {}, p, mk_top());
  CHECK(sr.ok);
  CHECK(sr.reducts_checked >= 1);
}

TEST_CASE("neutral proofs") {
  Theory th = logic_theory();
  Parsing ps(th);
  CHECK(is_neutral(pvar("a")));
  CHECK_FALSE(is_neutral(plam("a", ps.prop("A"), pvar("a"))));
  CHECK(is_neutral(pfst(pvar("a"))));
  CHECK(is_neutral(papp(pvar("a"), pvar("b"))));
  CHECK_FALSE(is_neutral(ppair(pvar("a"), pvar("b"))));
  CHECK_FALSE(is_neutral(ptruth()));
  CHECK(is_neutral(pexfalso(pvar("a"), ps.prop("A"))));
}

TEST_CASE("trace replay and determinism") {
  auto samples = cut_samples(logic_language(), 41, 100, 5);
  for (const auto& s : samples) {
    NormalizeResult a = normalize(s.typed.proof, kDefaultMaxSteps, true);
    NormalizeResult b = normalize(s.typed.proof, kDefaultMaxSteps, true);
    CHECK(canonical_key(a.normal_form) == canonical_key(b.normal_form));
    CHECK(a.trace.size() == a.steps);
    auto parsed = parse_trace(format_trace(a.trace));
    REQUIRE(parsed.size() == a.trace.size());
    CHECK(alpha_eq(replay_trace(s.typed.proof, parsed), a.normal_form));
    CHECK(is_normal(a.normal_form));
    CHECK(step(a.normal_form).empty());
  }
}

TEST_CASE("applying a step at the wrong place throws") {
  Proof p = pfst(ppair(pvar("x"), pvar("y")));
  CHECK_THROWS_AS(apply_step(p, {{0}, RedexTag::FstPair}), Error);
  CHECK_THROWS_AS(apply_step(p, {{}, RedexTag::SndPair}), Error);
  CHECK(alpha_eq(apply_step(p, {{}, RedexTag::FstPair}), pvar("x")));
  CHECK_THROWS_AS(parse_trace("step 1 fst-pair @ banana"), Error);
}

TEST_CASE("the step budget is reported") {
  auto samples = cut_samples(logic_language(), 42, 20, 6);
  for (const auto& s : samples) {
    NormalizeResult full = normalize(s.typed.proof);
    if (full.steps < 2) continue;
    CHECK_THROWS_AS(normalize(s.typed.proof, full.steps - 1), StepBudgetExhausted);
    CHECK_NOTHROW(normalize(s.typed.proof, full.steps));
  }
}

TEST_CASE("every reduct is listed with a replayable step") {
  auto samples = cut_samples(logic_language(), 43, 100, 5);
  for (const auto& s : samples) {
    auto reducts = step(s.typed.proof);
    CHECK_FALSE(reducts.empty());
    CHECK(is_normal(s.typed.proof) == reducts.empty());
    for (const auto& r : reducts)
      CHECK(alpha_eq(apply_step(s.typed.proof, r.step), r.result));
  }
}

TEST_CASE("random pure logic cuts normalize with subject reduction") {
  Theory th = logic_theory();
  auto samples = cut_samples(logic_language(), 44, 300, 5);
  std::size_t steps = 0;
  for (const auto& s : samples) {
    SubjectReductionReport sr =
        check_subject_reduction(th, s.context, s.typed.proof, s.typed.prop);
    INFO(to_string(s.typed.proof), "\n", sr.message);
    REQUIRE(sr.ok);
    steps += sr.steps;
  }
  CHECK(steps >= samples.size());
}

TEST_CASE("random ha-mod cuts normalize with subject reduction") {
  Theory th = theory_ha_mod();
  auto samples = cut_samples(arith_language(th.rules), 45, 100, 5);
  for (const auto& s : samples) {
    SubjectReductionReport sr =
        check_subject_reduction(th, s.context, s.typed.proof, s.typed.prop);
    INFO(to_string(s.typed.proof), "\n", sr.message);
    REQUIRE(sr.ok);
  }
}

TEST_CASE("golden proofs normalize with subject reduction") {
  std::vector<std::shared_ptr<Theory>> theories;
  auto thms = golden_theorems(theories);
  REQUIRE(thms.size() > 20);
  for (std::size_t i = 0; i < thms.size(); ++i) {
    INFO(thms[i].name);
    SubjectReductionReport sr = check_subject_reduction(*theories[i], thms[i].context,
                                                        thms[i].proof, thms[i].statement);
    CHECK(sr.ok);
  }
}

TEST_CASE("closed normal proofs of existentials are packs") {
  std::vector<std::shared_ptr<Theory>> theories;
  auto thms = golden_theorems(theories);
  int seen = 0;
  for (std::size_t i = 0; i < thms.size(); ++i) {
    Fuel fuel;
    Prop head = whnf_prop(thms[i].statement, theories[i]->rules, fuel);
    if (head->kind != PropKind::Exists) continue;
    ++seen;
    INFO(thms[i].name);
    CHECK(normalize(thms[i].proof).normal_form->kind == ProofKind::ExIntro);
  }
  CHECK(seen >= 3);

  // The same holds for generated closed proofs.
  Theory th = logic_theory();
  ProofGen gen(logic_language(), 46);
  int generated = 0;
  for (int i = 0; i < 2000 && generated < 100; ++i) {
    Context none;
    std::vector<std::string> tvars;
    Typed t = gen.gen(none, tvars, 5);
    if (t.prop->kind != PropKind::Exists) continue;
    ++generated;
    CHECK(normalize(t.proof).normal_form->kind == ProofKind::ExIntro);
  }
  CHECK(generated >= 20);
}
