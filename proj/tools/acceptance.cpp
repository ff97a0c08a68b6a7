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

// Runs the six acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failing criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "modarith/heyting.hpp"
#include "modarith/kernel.hpp"
#include "modarith/normalizer.hpp"
#include "modarith/script.hpp"
#include "modarith/translations.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/structure.hpp"

using namespace modarith;
using namespace modarith::testing;

namespace {

// Pinned tolerances.
constexpr std::size_t kEvenFuel = 32;
constexpr double kEvenSeconds = 1.0;
constexpr unsigned kNumeralBound = 8;
constexpr std::size_t kNormalizeSteps = 100000;
constexpr int kLogicCuts = 800;
constexpr int kArithCuts = 200;
constexpr int kCutDepth = 7;
constexpr int kHeytingModels = 20;
constexpr double kHeytingSeconds = 30.0;
constexpr int kMinLaws = 14;
constexpr int kTTerms = 200;
constexpr std::size_t kSimulationBudget = 500;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << why;
  }
};

Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  Theory th = theory_ha_mod();
  Parsing ps(th);
  Proof refl4 = ptlam("p", kKappa, plam("a", ps.prop("4 in p"), pvar("a")));
  Proof even4 = pexintro(numeral(2), refl4, "x", kIota, ps.prop("2 * x = 4"));
  CheckReport r = check(th, {}, even4, ps.prop("exists x:iota. 2 * x = 4"), kEvenFuel);
  double elapsed = seconds_since(t0);
  if (!r.ok()) o.fail("ha-mod: " + r.describe());
  if (r.fuel_consumed > kEvenFuel) o.fail("fuel " + std::to_string(r.fuel_consumed));
  if (elapsed >= kEvenSeconds) o.fail("took " + std::to_string(elapsed) + "s");

  ProofScript s = load_proof_script(golden("even4_axiomatic.prf"));
  const auto& t = s.theorems.at(0);
  CheckReport a = check_with_axioms(*s.theory, s.uses, t.proof, t.statement);
  if (!a.ok()) o.fail("axiomatic: " + a.describe());
  if (o.pass)
    o.detail << "ha-mod fuel " << r.fuel_consumed << "/" << kEvenFuel << " in " << elapsed
             << "s; axiomatic ok";
  return o;
}

Outcome criterion2() {
  Outcome o;
  Theory th = theory_ha_mod();
  Parsing ps(th);
  auto cong = [&](const char* a, const char* b) {
    Fuel f;
    return congruent(ps.prop(a), ps.prop(b), th.rules, f);
  };
  if (cong("2 * 2 = 4", "4 = 4") != Congruence::Yes) o.fail("2*2 = 4 vs 4 = 4");
  if (cong("N(0)", "forall p:kappa. 0 in p => (forall y:iota. N(y) => y in p => S(y) in p) "
                   "=> 0 in p") != Congruence::Yes)
    o.fail("N(0) vs its unfolding");
  if (cong("0 = 0", "0 = S(0)") != Congruence::No) o.fail("0 = 0 vs 0 = S(0)");
  int agree = 0, total = 0;
  for (unsigned a = 0; a <= kNumeralBound; ++a)
    for (unsigned b = 0; b <= kNumeralBound; ++b) {
      Term sum = mk_app("+", {oracle_numeral(a), oracle_numeral(b)}, kIota);
      Term prod = mk_app("*", {oracle_numeral(a), oracle_numeral(b)}, kIota);
      agree += term_eq(normalize_term(sum, th.rules), oracle_numeral(a + b));
      agree += term_eq(normalize_term(prod, th.rules), oracle_numeral(a * b));
      total += 2;
    }
  if (agree != total) o.fail("numeral agreement " + std::to_string(agree) + "/" + std::to_string(total));
  if (o.pass) o.detail << "3 congruence examples; numerals " << agree << "/" << total;
  return o;
}

Outcome criterion3() {
  Outcome o;
  int golden_count = 0, exists_count = 0, exists_packs = 0;
  for (const char* f : {"logic.prf", "ha_mod.prf", "even4.prf", "even4_axiomatic.prf"}) {
    ProofScript s = load_proof_script(golden(f));
    for (const auto& t : s.theorems) {
      ++golden_count;
      SubjectReductionReport sr =
          check_subject_reduction(*s.theory, t.context, t.proof, t.statement, Fuel::kDefault,
                                  kNormalizeSteps);
      if (!sr.ok) o.fail(std::string(f) + ": " + t.name + ": " + sr.message);
      Fuel fuel;
      if (whnf_prop(t.statement, s.theory->rules, fuel)->kind == PropKind::Exists) {
        ++exists_count;
        if (normalize(t.proof, kNormalizeSteps).normal_form->kind == ProofKind::ExIntro)
          ++exists_packs;
        else
          o.fail(t.name + " does not normalize to a pack");
      }
    }
  }
  Theory logic = logic_theory();
  Theory arith = theory_ha_mod();
  int random_ok = 0;
  std::size_t steps = 0;
  auto run = [&](const Theory& th, const std::vector<Sample>& samples) {
    for (const auto& s : samples) {
      SubjectReductionReport sr = check_subject_reduction(
          th, s.context, s.typed.proof, s.typed.prop, Fuel::kDefault, kNormalizeSteps);
      if (sr.ok) {
        ++random_ok;
        steps += sr.steps;
      } else {
        o.fail("random proof " + to_string(s.typed.proof) + ": " + sr.message);
      }
    }
  };
  run(logic, cut_samples(logic_language(), 3001, kLogicCuts, kCutDepth));
  run(arith, cut_samples(arith_language(arith.rules), 3002, kArithCuts, kCutDepth));
  if (exists_count == 0) o.fail("no golden existential");
  if (o.pass)
    o.detail << golden_count << " golden and " << random_ok << " random proofs ("
             << steps << " steps) keep their type; packs " << exists_packs << "/"
             << exists_count;
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto t0 = Clock::now();
  auto algebras = all_algebras(4);
  int law_checks = 0;
  for (const auto& b : algebras) {
    auto laws = b.verify_laws();
    if (static_cast<int>(laws.size()) < kMinLaws) o.fail(b.name() + ": too few laws");
    for (const auto& l : laws) {
      ++law_checks;
      if (!l.holds) o.fail(b.name() + ": " + l.name + " " + l.counterexample);
    }
  }
  HeytingAlgebra chain = chain_algebra(3);
  Signature sig;
  sig.add_sort(kIota);
  sig.add_predicate("P", {});
  IntuitionisticModel m{sig, chain, {{kIota, 1}}, {}, {{"P", {1}}}};
  Prop lem = mk_or(mk_atom("P", {}), mk_not(mk_atom("P", {})));
  int v = eval(lem, m, {});
  if (v == chain.top()) o.fail("excluded middle is max in the 3-chain");

  ProofScript s = load_proof_script(golden("logic.prf"));
  std::mt19937_64 rng(4001);
  int validated = 0;
  for (int i = 0; i < kHeytingModels; ++i) {
    const HeytingAlgebra& b = algebras[rng() % algebras.size()];
    IntuitionisticModel rm =
        random_model(s.theory->signature, b, 1 + static_cast<int>(rng() % 3), rng);
    for (const auto& t : s.theorems) {
      if (is_valid(t.statement, rm)) ++validated;
      else o.fail(t.name + " invalid in\n" + rm.describe());
    }
  }
  double elapsed = seconds_since(t0);
  if (elapsed >= kHeytingSeconds) o.fail("took " + std::to_string(elapsed) + "s");
  if (o.pass)
    o.detail << algebras.size() << " algebras, " << law_checks << " law checks; LEM = " << v
             << " of max " << chain.top() << "; " << validated << " validity checks in "
             << elapsed << "s";
  return o;
}

Outcome criterion5() {
  Outcome o;
  Theory th = theory_t();
  TTermGen gen(5001);
  int terms = 0, reductions = 0, typed = 0;
  std::size_t proof_steps = 0;
  for (int i = 0; terms < kTTerms && i < 100 * kTTerms; ++i) {
    std::vector<std::pair<std::string, TType>> env;
    TType a = random_ttype(gen.rng(), 1);
    TTerm t = gen.gen(a, 4, env);
    auto reducts = t_step(t);
    if (reducts.empty()) continue;
    ++terms;
    if (check(th, {}, parigot(t), t_membership(a)).ok()) ++typed;
    else o.fail("type preservation: " + to_string(t));
    for (const auto& u : reducts) {
      ++reductions;
      SimulationResult r = simulate_check(th, t, u, kSimulationBudget);
      if (r.outcome != Simulation::Simulated || r.depth < 1)
        o.fail(to_string(t) + " -> " + to_string(u) + ": " + to_string(r.outcome) + " " +
               r.message);
      proof_steps += r.depth;
    }
  }
  if (terms < kTTerms) o.fail("only " + std::to_string(terms) + " reducible terms");

  TTerm x = t_var("x", t_nat()), n = t_var("n", t_nat());
  TTerm f = t_var("f", t_arrow(t_nat(), t_arrow(t_nat(), t_nat())));
  if (simulate_check(th, t_rec(x, f, t_zero(), t_nat()), x, kSimulationBudget).outcome !=
      Simulation::Simulated)
    o.fail("|Rec(x,f,0)| does not reach x");
  TTerm target = t_app(t_app(f, n), t_rec(x, f, n, t_nat()));
  if (simulate_check(th, t_rec(x, f, t_succ(n), t_nat()), target, kSimulationBudget).outcome !=
      Simulation::Simulated)
    o.fail("|Rec(x,f,S(n))| does not reach f |n| |Rec(x,f,n)|");
  if (o.pass)
    o.detail << terms << " terms typed " << typed << "/" << terms << "; " << reductions
             << " reductions simulated in " << proof_steps << " proof steps; Rec rules ok";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<std::string> all;
  for (auto& d : ha_mod_differences(false)) all.push_back(d);
  for (auto& d : variant_differences()) all.push_back(d);
  for (auto& d : t_differences(false)) all.push_back(d);
  for (auto& d : class_correspondence()) all.push_back(d);
  for (const auto& d : all) o.fail(d);
  if (o.pass)
    o.detail << "ha-mod rule table, variant N rule, two T rules, class axioms one to one";
  return o;
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3,
                                                 criterion4, criterion5, criterion6};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " ("
              << seconds_since(t0) << "s) " << o.detail.str() << std::endl;
  }
  return failures;
}
