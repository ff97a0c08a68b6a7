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

#include "modarith/kernel.hpp"

#include <sstream>

namespace modarith {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::Fail: return "fail";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

std::string path_to_string(const std::vector<int>& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

std::string CheckReport::describe() const {
  std::ostringstream os;
  os << to_string(verdict);
  if (verdict == Verdict::Ok) return os.str();
  os << " at " << path_to_string(path) << " (" << rule << "): " << message;
  if (expected) os << "\n  expected: " << to_string(expected);
  if (actual) os << "\n  actual:   " << to_string(actual);
  return os.str();
}

namespace {

struct CheckFailure {
  Verdict verdict;
  std::string rule;
  std::vector<int> path;
  Prop expected;
  Prop actual;
  std::string message;
};

const char* connective_name(PropKind k) {
  switch (k) {
    case PropKind::Implies: return "an implication";
    case PropKind::And: return "a conjunction";
    case PropKind::Or: return "a disjunction";
    case PropKind::ForAll: return "a universal";
    case PropKind::Exists: return "an existential";
    case PropKind::Top: return "true";
    case PropKind::Bottom: return "false";
    case PropKind::Atom: return "an atom";
  }
  return "?";
}

class Checker {
 public:
  Checker(const Theory& theory, Context gamma, std::size_t fuel)
      : theory_(theory), rules_(theory.rules), gamma_(std::move(gamma)),
        fuel_(fuel), cc_(rules_, fuel_) {}

  void check(const Proof& p, const Prop& goal) {
    switch (p->kind) {
      case ProofKind::Lam: {
        Prop g = expose(p, goal, PropKind::Implies);
        annotation(p, p->prop);
        convertible(p, p->prop, g->left, "domain annotation differs from the goal");
        child(0, [&] {
          scoped(p->var, p->prop, [&] { check(p->kids[0], g->right); });
        });
        return;
      }
      case ProofKind::Pair: {
        Prop g = expose(p, goal, PropKind::And);
        child(0, [&] { check(p->kids[0], g->left); });
        child(1, [&] { check(p->kids[1], g->right); });
        return;
      }
      case ProofKind::InL:
      case ProofKind::InR: {
        Prop g = expose(p, goal, PropKind::Or);
        bool left = p->kind == ProofKind::InL;
        annotation(p, p->prop);
        convertible(p, p->prop, left ? g->right : g->left,
                    "disjunct annotation differs from the goal");
        child(0, [&] { check(p->kids[0], left ? g->left : g->right); });
        return;
      }
      case ProofKind::Truth:
        expose(p, goal, PropKind::Top);
        return;
      case ProofKind::TLam: {
        Prop g = expose(p, goal, PropKind::ForAll);
        if (g->sort != p->sort)
          fail(p, "binder sort " + p->sort + " differs from " + g->sort, g, nullptr);
        if (context_vars().count(p->var))
          fail(p, "eigenvariable " + p->var + " is free in the context", nullptr,
               nullptr);
        if (free_vars(g).count(p->var))
          fail(p, "eigenvariable " + p->var + " is free in the goal", g, nullptr);
        Prop body = substitute(mk_var(p->var, p->sort), g->symbol, g->left);
        child(0, [&] { check(p->kids[0], body); });
        return;
      }
      case ProofKind::ExIntro: {
        Prop ex = witness_prop(p);
        convertible(p, ex, goal, "existential annotation differs from the goal");
        Prop inst = substitute(p->term, p->var, p->prop);
        child(0, [&] { check(p->kids[0], inst); });
        return;
      }
      case ProofKind::Case: {
        Prop d = scrutinee(p, PropKind::Or);
        child(1, [&] { scoped(p->var, d->left, [&] { check(p->kids[1], goal); }); });
        child(2, [&] { scoped(p->var2, d->right, [&] { check(p->kids[2], goal); }); });
        return;
      }
      case ProofKind::ExElim: {
        annotation(p, p->prop);
        convertible(p, p->prop, goal, "result annotation differs from the goal");
        unpack(p);
        return;
      }
      case ProofKind::ExFalso: {
        annotation(p, p->prop);
        convertible(p, p->prop, goal, "target annotation differs from the goal");
        child(0, [&] { check(p->kids[0], mk_bottom()); });
        return;
      }
      default: {
        Prop got = infer(p);
        convertible(p, got, goal, "proved proposition differs from the goal");
        return;
      }
    }
  }

  Prop infer(const Proof& p) {
    switch (p->kind) {
      case ProofKind::Var: {
        for (auto it = gamma_.rbegin(); it != gamma_.rend(); ++it)
          if (it->name == p->var) return it->prop;
        fail(p, "unbound proof variable " + p->var, nullptr, nullptr);
      }
      case ProofKind::App: {
        Prop f;
        child(0, [&] { f = infer(p->kids[0]); });
        Prop fn = expose_inferred(p, f, PropKind::Implies);
        child(1, [&] { check(p->kids[1], fn->left); });
        return fn->right;
      }
      case ProofKind::Fst:
      case ProofKind::Snd: {
        Prop c;
        child(0, [&] { c = infer(p->kids[0]); });
        Prop conj = expose_inferred(p, c, PropKind::And);
        return p->kind == ProofKind::Fst ? conj->left : conj->right;
      }
      case ProofKind::TApp: {
        Prop u;
        child(0, [&] { u = infer(p->kids[0]); });
        Prop all = expose_inferred(p, u, PropKind::ForAll);
        try {
          check_sorts(theory_, p->term);
        } catch (const SortError& e) {
          fail(p, e.what(), nullptr, nullptr);
        }
        if (p->term->sort != all->sort)
          fail(p, "instance " + to_string(p->term) + " has sort " + p->term->sort +
                      ", expected " + all->sort,
               all, nullptr);
        return substitute(p->term, all->symbol, all->left);
      }
      case ProofKind::ExFalso:
        annotation(p, p->prop);
        child(0, [&] { check(p->kids[0], mk_bottom()); });
        return p->prop;
      case ProofKind::Case: {
        Prop d = scrutinee(p, PropKind::Or);
        Prop result;
        child(1, [&] { scoped(p->var, d->left, [&] { result = infer(p->kids[1]); }); });
        child(2, [&] { scoped(p->var2, d->right, [&] { check(p->kids[2], result); }); });
        return result;
      }
      case ProofKind::ExElim:
        annotation(p, p->prop);
        unpack(p);
        return p->prop;
      case ProofKind::Lam: {
        annotation(p, p->prop);
        Prop body;
        child(0, [&] { scoped(p->var, p->prop, [&] { body = infer(p->kids[0]); }); });
        return mk_implies(p->prop, body);
      }
      case ProofKind::Pair: {
        Prop l, r;
        child(0, [&] { l = infer(p->kids[0]); });
        child(1, [&] { r = infer(p->kids[1]); });
        return mk_and(l, r);
      }
      case ProofKind::InL:
      case ProofKind::InR: {
        annotation(p, p->prop);
        Prop a;
        child(0, [&] { a = infer(p->kids[0]); });
        return p->kind == ProofKind::InL ? mk_or(a, p->prop) : mk_or(p->prop, a);
      }
      case ProofKind::Truth:
        return mk_top();
      case ProofKind::TLam: {
        if (!theory_.has_sort(p->sort))
          fail(p, "unknown sort " + p->sort, nullptr, nullptr);
        if (context_vars().count(p->var))
          fail(p, "eigenvariable " + p->var + " is free in the context", nullptr,
               nullptr);
        Prop body;
        child(0, [&] { body = infer(p->kids[0]); });
        return mk_forall(p->var, p->sort, body);
      }
      case ProofKind::ExIntro: {
        Prop ex = witness_prop(p);
        Prop inst = substitute(p->term, p->var, p->prop);
        child(0, [&] { check(p->kids[0], inst); });
        return ex;
      }
    }
    fail(p, "unknown proof term", nullptr, nullptr);
  }

  std::vector<int> path;
  Fuel& fuel() { return fuel_; }

 private:
  [[noreturn]] void fail(const Proof& p, const std::string& message, Prop expected,
                         Prop actual, Verdict v = Verdict::Fail) {
    throw CheckFailure{v, kind_name(p->kind), path, std::move(expected),
                       std::move(actual), message};
  }

  template <typename F>
  void child(int index, F&& f) {
    path.push_back(index);
    f();
    path.pop_back();
  }

  template <typename F>
  void scoped(const std::string& name, const Prop& a, F&& f) {
    gamma_.push_back({name, a});
    f();
    gamma_.pop_back();
  }

  VarSet context_vars() const {
    VarSet out;
    for (const auto& h : gamma_) free_vars(h.prop, out);
    return out;
  }

  void annotation(const Proof& p, const Prop& a) {
    try {
      check_sorts(theory_, a);
    } catch (const SortError& e) {
      fail(p, std::string("ill-sorted annotation: ") + e.what(), nullptr, a);
    }
  }

  Prop whnf(const Proof& p, const Prop& a) {
    try {
      return whnf_prop(a, rules_, fuel_);
    } catch (const FuelExhausted& e) {
      fail(p, e.what(), nullptr, a, Verdict::Undecided);
    }
  }

  // Unfolds the goal until `kind` is exposed.
  Prop expose(const Proof& p, const Prop& goal, PropKind kind) {
    Prop g = whnf(p, goal);
    if (g->kind != kind)
      fail(p, std::string("goal is not ") + connective_name(kind), nullptr, goal);
    return g;
  }

  Prop expose_inferred(const Proof& p, const Prop& got, PropKind kind) {
    Prop g = whnf(p, got);
    if (g->kind != kind)
      fail(p, std::string("premise is not ") + connective_name(kind), nullptr, got);
    return g;
  }

  void convertible(const Proof& p, const Prop& got, const Prop& want,
                   const std::string& message) {
    switch (cc_.check(got, want)) {
      case Congruence::Yes:
        return;
      case Congruence::No:
        fail(p, message, want, got);
      case Congruence::Undecided:
        fail(p, "fuel exhausted deciding congruence", want, got, Verdict::Undecided);
    }
  }

  Prop witness_prop(const Proof& p) {
    if (!theory_.has_sort(p->sort))
      fail(p, "unknown sort " + p->sort, nullptr, nullptr);
    Prop ex = mk_exists(p->var, p->sort, p->prop);
    annotation(p, ex);
    try {
      check_sorts(theory_, p->term);
    } catch (const SortError& e) {
      fail(p, e.what(), nullptr, nullptr);
    }
    if (p->term->sort != p->sort)
      fail(p, "witness " + to_string(p->term) + " has sort " + p->term->sort +
                  ", expected " + p->sort,
           ex, nullptr);
    return ex;
  }

  Prop scrutinee(const Proof& p, PropKind kind) {
    Prop d;
    child(0, [&] { d = infer(p->kids[0]); });
    return expose_inferred(p, d, kind);
  }

  // Checks unpack(pi; x:s. alpha. body; B) against its annotation B.
  void unpack(const Proof& p) {
    Prop d = scrutinee(p, PropKind::Exists);
    if (d->sort != p->sort)
      fail(p, "binder sort " + p->sort + " differs from " + d->sort, d, nullptr);
    if (context_vars().count(p->var))
      fail(p, "eigenvariable " + p->var + " is free in the context", nullptr,
           nullptr);
    if (free_vars(p->prop).count(p->var))
      fail(p, "eigenvariable " + p->var + " is free in the result", p->prop,
           nullptr);
    if (free_vars(d).count(p->var))
      fail(p, "eigenvariable " + p->var + " is free in the unpacked proposition", d,
           nullptr);
    Prop hyp = substitute(mk_var(p->var, p->sort), d->symbol, d->left);
    child(1, [&] { scoped(p->var2, hyp, [&] { check(p->kids[1], p->prop); }); });
  }

  const Theory& theory_;
  const RuleSet& rules_;
  Context gamma_;
  Fuel fuel_;
  CongruenceChecker cc_;
};

CheckReport from_failure(const CheckFailure& f, std::size_t consumed) {
  CheckReport r;
  r.verdict = f.verdict;
  r.rule = f.rule;
  r.path = f.path;
  r.expected = f.expected;
  r.actual = f.actual;
  r.message = f.message;
  r.fuel_consumed = consumed;
  return r;
}

}  // namespace

CheckReport check(const Theory& theory, const Context& gamma, const Proof& pi,
                  const Prop& a, std::size_t fuel) {
  check_sorts(theory, a);
  for (const auto& h : gamma) check_sorts(theory, h.prop);
  Checker c(theory, gamma, fuel);
  try {
    c.check(pi, a);
  } catch (const CheckFailure& f) {
    return from_failure(f, c.fuel().consumed());
  } catch (const FuelExhausted& e) {
    // Term rewriting ran past its step cap.
    return from_failure({Verdict::Undecided, kind_name(pi->kind), c.path, nullptr,
                         nullptr, e.what()},
                        c.fuel().consumed());
  }
  CheckReport r;
  r.fuel_consumed = c.fuel().consumed();
  r.proved = a;
  return r;
}

CheckReport infer(const Theory& theory, const Context& gamma, const Proof& pi,
                  std::size_t fuel) {
  for (const auto& h : gamma) check_sorts(theory, h.prop);
  Checker c(theory, gamma, fuel);
  CheckReport r;
  try {
    r.proved = c.infer(pi);
  } catch (const CheckFailure& f) {
    return from_failure(f, c.fuel().consumed());
  } catch (const FuelExhausted& e) {
    return from_failure({Verdict::Undecided, kind_name(pi->kind), c.path, nullptr,
                         nullptr, e.what()},
                        c.fuel().consumed());
  }
  r.fuel_consumed = c.fuel().consumed();
  return r;
}

Context axiom_context(const Theory& theory, const std::vector<AxiomUse>& uses) {
  Context gamma;
  for (const auto& u : uses) {
    const SchemeInstanceRequest* req = u.request ? &*u.request : nullptr;
    gamma.push_back({u.alias.empty() ? u.axiom : u.alias,
                     theory.axiom_instance(u.axiom, req)});
  }
  return gamma;
}

CheckReport check_with_axioms(const Theory& theory, const std::vector<AxiomUse>& uses,
                              const Proof& pi, const Prop& a, std::size_t fuel) {
  return check(theory, axiom_context(theory, uses), pi, a, fuel);
}

}  // namespace modarith
