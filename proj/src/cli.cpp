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

#include "modarith/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

#include "modarith/heyting.hpp"
#include "modarith/kernel.hpp"
#include "modarith/normalizer.hpp"
#include "modarith/parser.hpp"
#include "modarith/script.hpp"
#include "modarith/translations.hpp"

namespace modarith {

namespace {

struct Options {
  std::string theory = "ha-mod";
  std::size_t fuel = Fuel::kDefault;
  std::size_t steps = kDefaultMaxSteps;
  std::size_t sim_steps = 500;
  int max_size = 4;
  int max_domain = 2;
  unsigned jobs = 1;
  bool trace = false;
  std::string theorem;
  std::string replay;
  std::string file;
  std::string prop_a;
  std::string prop_b;
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Ok: return kExitOk;
    case Verdict::Fail: return kExitFail;
    case Verdict::Undecided: return kExitUndecided;
  }
  return kExitFail;
}

// Fail outranks undecided: one refuted theorem fails the file.
int combine(int a, int b) {
  if (a == kExitFail || b == kExitFail) return kExitFail;
  return std::max(a, b);
}

int cmd_check(const Options& o, std::ostream& out) {
  ProofScript script = load_proof_script(o.file, o.theory);
  const auto& thms = script.theorems;
  std::vector<CheckReport> reports(thms.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < thms.size();)
      reports[i] = check(*script.theory, thms[i].context, thms[i].proof, thms[i].statement,
                         o.fuel);
  };
  unsigned n = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(thms.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kExitOk;
  for (std::size_t i = 0; i < thms.size(); ++i) {
    const CheckReport& r = reports[i];
    out << "theorem " << thms[i].name << ": " << to_string(r.verdict);
    if (r.ok())
      out << " (fuel " << r.fuel_consumed << ")\n";
    else
      out << "\n  " << r.describe() << '\n';
    code = combine(code, exit_for(r.verdict));
  }
  return code;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  ProofScript script = load_proof_script(o.file, o.theory);
  bool matched = false;
  for (const auto& thm : script.theorems) {
    if (!o.theorem.empty() && thm.name != o.theorem) continue;
    matched = true;
    out << "theorem " << thm.name << ":\n";
    if (!o.replay.empty()) {
      Proof end = replay_trace(thm.proof, parse_trace(read_file(o.replay)));
      out << "  replayed: " << to_string(end) << '\n';
      continue;
    }
    NormalizeResult res;
    try {
      res = normalize(thm.proof, o.steps, o.trace);
    } catch (const StepBudgetExhausted& e) {
      out << "  " << e.what() << '\n';
      return kExitUndecided;
    }
    if (o.trace) out << format_trace(res.trace);
    out << "  steps: " << res.steps << '\n';
    out << "  normal form: " << to_string(res.normal_form) << '\n';
  }
  if (!matched) throw Error("no theorem named " + o.theorem);
  return kExitOk;
}

int cmd_congruent(const Options& o, std::ostream& out) {
  Theory th = resolve_theory(o.theory);
  ParseContext ctx = th.parse_context();
  Prop a = parse_prop(o.prop_a, ctx);
  Prop b = parse_prop(o.prop_b, ctx);
  check_sorts(th, a);
  check_sorts(th, b);
  Fuel fuel(o.fuel);
  Congruence c = congruent(a, b, th.rules, fuel);
  switch (c) {
    case Congruence::Yes: out << "congruent\n"; return kExitOk;
    case Congruence::No: out << "not congruent\n"; return kExitFail;
    case Congruence::Undecided:
      out << "undecided within fuel " << o.fuel << '\n';
      return kExitUndecided;
  }
  return kExitFail;
}

int cmd_countermodel(const Options& o, std::ostream& out) {
  Signature sig;
  sig.add_sort(kIota);
  ParseContext ctx;
  ctx.signature = &sig;
  ctx.declare_unknown = true;
  Prop a = parse_prop(o.prop_a, ctx);
  auto cm = find_countermodel(a, sig, o.max_domain, o.max_size);
  if (!cm) {
    out << "no countermodel with algebras from posets of up to " << o.max_size
        << " points and domains of up to " << o.max_domain << " elements\n";
    return kExitOk;
  }
  out << "countermodel found\n" << cm->model.describe();
  for (const auto& [x, v] : cm->assignment) out << "assignment " << x << " = " << v << '\n';
  out << "value: " << cm->value << " (max is " << cm->model.algebra.top() << ")\n";
  return kExitFail;
}

int cmd_relativize(const Options& o, std::ostream& out) {
  Theory th = theory_ha_pred();
  ParseContext ctx = th.parse_context();
  Prop a = parse_prop(o.prop_a, ctx);
  check_sorts(th, a);
  out << to_string(relativize(a)) << '\n';
  return kExitOk;
}

constexpr std::size_t kTPathLimit = 200;

int cmd_t_check(const Options& o, std::ostream& out) {
  Theory th = resolve_theory(o.theory == "ha-mod" ? "t" : o.theory);
  std::vector<TDefinition> defs = parse_t_script(read_file(o.file));
  int code = kExitOk;
  for (const auto& d : defs) {
    out << "tdef " << d.name << " : " << to_string(d.declared) << '\n';
    CheckReport typed = check(th, parigot_context(d.term), parigot(d.term),
                              t_membership(d.declared), o.fuel);
    out << "  translation: " << to_string(typed.verdict) << '\n';
    if (!typed.ok()) out << "    " << typed.describe() << '\n';
    code = combine(code, exit_for(typed.verdict));
    // Every reduct of every term on the leftmost path to normal form.
    std::size_t simulated = 0, total = 0;
    TTerm cur = d.term;
    for (std::size_t depth = 0; depth < kTPathLimit; ++depth) {
      std::vector<TTerm> reducts = t_step(cur);
      if (reducts.empty()) break;
      for (const auto& u : reducts) {
        ++total;
        SimulationResult s = simulate_check(th, cur, u, o.sim_steps);
        if (s.outcome == Simulation::Simulated) {
          ++simulated;
          continue;
        }
        out << "  " << to_string(cur) << " -> " << to_string(u) << ": "
            << to_string(s.outcome) << " (" << s.message << ")\n";
        code = combine(code, s.outcome == Simulation::NotReached ? kExitFail : kExitUndecided);
      }
      cur = reducts.front();
    }
    out << "  simulated: " << simulated << "/" << total << '\n';
    out << "  value: " << to_string(cur) << '\n';
  }
  return code;
}

int cmd_theory_info(const Options& o, std::ostream& out) {
  Theory th = resolve_theory(o.theory);
  out << "theory " << th.name << '\n';
  out << "sorts:";
  for (const auto& s : th.signature.sorts()) out << ' ' << s;
  out << '\n';
  for (const auto& [f, r] : th.signature.functions()) {
    out << "function " << f << " :";
    for (std::size_t i = 0; i < r.args.size(); ++i) out << (i ? ", " : " ") << r.args[i];
    out << (r.args.empty() ? " " : " -> ") << r.result << '\n';
  }
  for (const auto& [p, r] : th.signature.predicates()) {
    out << "predicate " << p;
    for (std::size_t i = 0; i < r.args.size(); ++i) out << (i ? ", " : " : ") << r.args[i];
    out << '\n';
  }
  for (const auto& r : th.rules.term_rules)
    out << "rule " << r.name << " : " << to_string(r.lhs) << " --> " << to_string(r.rhs) << '\n';
  for (const auto& r : th.rules.prop_rules)
    out << "prop-rule " << r.name << " : " << to_string(r.lhs) << " --> " << to_string(r.rhs)
        << '\n';
  if (th.rules.comprehension) out << "comprehension: x in f(ys) --> P\n";
  for (const auto& a : th.axioms) {
    if (a.is_scheme())
      out << "axiom " << a.name << " : scheme\n";
    else
      out << "axiom " << a.name << " : " << to_string(a.statement) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Proof checker for deduction modulo", "modarith"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--theory", o.theory, "Built-in theory name or .thy file")
      ->envname("MODARITH_THEORY");
  app.add_option("--fuel", o.fuel, "Proposition-rule unfolding budget")
      ->envname("MODARITH_FUEL")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--steps", o.steps, "Normalization step budget")
      ->envname("MODARITH_STEPS")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.jobs, "Theorems checked concurrently")
      ->envname("MODARITH_JOBS")
      ->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("check", "Check every theorem of a .prf script");
  check_cmd->add_option("file", o.file)->required();

  auto* norm = app.add_subcommand("normalize", "Normalize the proofs of a .prf script");
  norm->add_option("file", o.file)->required();
  norm->add_flag("--trace", o.trace, "Print each reduction step");
  norm->add_option("--theorem", o.theorem, "Only this theorem");
  norm->add_option("--replay", o.replay, "Replay a trace file instead of normalizing");

  auto* cong = app.add_subcommand("congruent", "Decide A == B within the fuel");
  cong->add_option("A", o.prop_a)->required();
  cong->add_option("B", o.prop_b)->required();

  auto* cm = app.add_subcommand("countermodel", "Search finite Heyting models refuting A");
  cm->add_option("A", o.prop_a)->required();
  cm->add_option("--max-size", o.max_size, "Largest poset generating an algebra")
      ->envname("MODARITH_MAX_SIZE")
      ->check(CLI::Range(1, 4));
  cm->add_option("--max-domain", o.max_domain, "Largest domain")
      ->envname("MODARITH_MAX_DOMAIN")
      ->check(CLI::PositiveNumber);

  auto* rel = app.add_subcommand("relativize", "Guard the quantifiers of A with N");
  rel->add_option("A", o.prop_a)->required();

  auto* tc = app.add_subcommand("t-check", "Type, translate and simulate a .t file");
  tc->add_option("file", o.file)->required();
  tc->add_option("--sim-steps", o.sim_steps, "Search depth per simulated reduction")
      ->check(CLI::PositiveNumber);

  auto* info = app.add_subcommand("theory-info", "Print a theory");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(o, out);
    if (norm->parsed()) return cmd_normalize(o, out);
    if (cong->parsed()) return cmd_congruent(o, out);
    if (cm->parsed()) return cmd_countermodel(o, out);
    if (rel->parsed()) return cmd_relativize(o, out);
    if (tc->parsed()) return cmd_t_check(o, out);
    if (info->parsed()) return cmd_theory_info(o, out);
  } catch (const FuelExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const StepBudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace modarith
