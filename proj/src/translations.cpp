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

#include "modarith/translations.hpp"

#include <algorithm>
#include <unordered_set>

#include "modarith/normalizer.hpp"
#include "modarith/parser.hpp"

namespace modarith {

Prop relativize(const Prop& a) {
  switch (a->kind) {
    case PropKind::Atom:
      if (a->symbol == "N" || a->symbol == "Null" || a->symbol == "in")
        throw TranslationError("cannot relativize: input already mentions " + a->symbol);
      return a;
    case PropKind::Top:
    case PropKind::Bottom:
      return a;
    case PropKind::Implies:
    case PropKind::And:
    case PropKind::Or:
      return mk_binary(a->kind, relativize(a->left), relativize(a->right));
    case PropKind::ForAll:
    case PropKind::Exists: {
      if (a->sort != kIota)
        throw TranslationError("cannot relativize a quantifier over sort " + a->sort);
      Prop guard = mk_atom("N", {mk_var(a->symbol, kIota)});
      Prop body = relativize(a->body());
      return a->kind == PropKind::ForAll
                 ? mk_forall(a->symbol, kIota, mk_implies(guard, body))
                 : mk_exists(a->symbol, kIota, mk_and(guard, body));
    }
  }
  throw TranslationError("unknown proposition");
}

//------------------------------------------------------------------------------
// Types

TType t_nat() {
  static const TType nat = std::make_shared<TTypeNode>(TTypeNode{TTypeKind::Nat, {}, {}});
  return nat;
}

TType t_arrow(TType a, TType b) {
  return std::make_shared<TTypeNode>(TTypeNode{TTypeKind::Arrow, std::move(a), std::move(b)});
}

bool type_eq(const TType& a, const TType& b) {
  if (a->kind != b->kind) return false;
  if (a->kind == TTypeKind::Nat) return true;
  return type_eq(a->from, b->from) && type_eq(a->to, b->to);
}

std::string to_string(const TType& a) {
  if (a->kind == TTypeKind::Nat) return "nat";
  std::string from = to_string(a->from);
  if (a->from->kind == TTypeKind::Arrow) from = "(" + from + ")";
  return from + " -> " + to_string(a->to);
}

//------------------------------------------------------------------------------
// Terms

namespace {

TTerm make(TTermKind k, std::string name, TType type, std::vector<TTerm> kids) {
  return std::make_shared<TTermNode>(
      TTermNode{k, std::move(name), std::move(type), std::move(kids)});
}

TTerm with_tkids(const TTerm& t, std::vector<TTerm> kids) {
  return make(t->kind, t->name, t->type, std::move(kids));
}

}  // namespace

TTerm t_var(std::string x, TType a) { return make(TTermKind::Var, std::move(x), std::move(a), {}); }
TTerm t_lam(std::string x, TType a, TTerm body) {
  return make(TTermKind::Lam, std::move(x), std::move(a), {std::move(body)});
}
TTerm t_app(TTerm u, TTerm v) { return make(TTermKind::App, "", nullptr, {std::move(u), std::move(v)}); }
TTerm t_zero() { return make(TTermKind::Zero, "", nullptr, {}); }
TTerm t_succ(TTerm n) { return make(TTermKind::Succ, "", nullptr, {std::move(n)}); }
TTerm t_rec(TTerm a, TTerm f, TTerm n, TType result) {
  return make(TTermKind::Rec, "", std::move(result), {std::move(a), std::move(f), std::move(n)});
}

TTerm t_numeral(unsigned n) {
  TTerm t = t_zero();
  for (unsigned i = 0; i < n; ++i) t = t_succ(t);
  return t;
}

namespace {

TType type_in(const TTerm& t, std::map<std::string, TType>& env) {
  auto expect = [&](const TType& got, const TType& want, const char* what) {
    if (!type_eq(got, want))
      throw TranslationError(std::string(what) + " of " + to_string(t) + " has type " +
                             to_string(got) + ", expected " + to_string(want));
  };
  switch (t->kind) {
    case TTermKind::Var: {
      auto it = env.find(t->name);
      if (it != env.end()) {
        expect(t->type, it->second, "variable");
      }
      return t->type;
    }
    case TTermKind::Lam: {
      auto saved = env.find(t->name) == env.end()
                       ? std::optional<TType>{}
                       : std::optional<TType>{env[t->name]};
      env[t->name] = t->type;
      TType body = type_in(t->kids[0], env);
      if (saved) env[t->name] = *saved; else env.erase(t->name);
      return t_arrow(t->type, body);
    }
    case TTermKind::App: {
      TType f = type_in(t->kids[0], env);
      if (f->kind != TTypeKind::Arrow)
        throw TranslationError("applying a non-function in " + to_string(t));
      expect(type_in(t->kids[1], env), f->from, "argument");
      return f->to;
    }
    case TTermKind::Zero:
      return t_nat();
    case TTermKind::Succ:
      expect(type_in(t->kids[0], env), t_nat(), "argument");
      return t_nat();
    case TTermKind::Rec: {
      const TType& a = t->type;
      expect(type_in(t->kids[0], env), a, "base case");
      expect(type_in(t->kids[1], env), t_arrow(t_nat(), t_arrow(a, a)), "step function");
      expect(type_in(t->kids[2], env), t_nat(), "recursion argument");
      return a;
    }
  }
  throw TranslationError("unknown term");
}

void collect_free(const TTerm& t, VarSet& bound, std::map<std::string, TType>& out) {
  switch (t->kind) {
    case TTermKind::Var:
      if (!bound.count(t->name)) out.emplace(t->name, t->type);
      return;
    case TTermKind::Lam: {
      bool fresh = bound.insert(t->name).second;
      collect_free(t->kids[0], bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
    default:
      for (const auto& k : t->kids) collect_free(k, bound, out);
  }
}

VarSet names_in(const TTerm& t) {
  VarSet out;
  std::vector<const TTermNode*> todo{t.get()};
  while (!todo.empty()) {
    const TTermNode* n = todo.back();
    todo.pop_back();
    if (!n->name.empty()) out.insert(n->name);
    for (const auto& k : n->kids) todo.push_back(k.get());
  }
  return out;
}

void key_of(const TTerm& t, std::vector<std::string>& bound, std::string& out) {
  switch (t->kind) {
    case TTermKind::Var: {
      for (std::size_t i = bound.size(); i-- > 0;)
        if (bound[i] == t->name) {
          out += "#" + std::to_string(bound.size() - 1 - i);
          return;
        }
      out += "$" + t->name + ":" + to_string(t->type);
      return;
    }
    case TTermKind::Lam:
      out += "(L " + to_string(t->type) + " ";
      bound.push_back(t->name);
      key_of(t->kids[0], bound, out);
      bound.pop_back();
      out += ")";
      return;
    case TTermKind::App: out += "(A "; break;
    case TTermKind::Zero: out += "0"; return;
    case TTermKind::Succ: out += "(S "; break;
    case TTermKind::Rec: out += "(R " + to_string(t->type) + " "; break;
  }
  for (const auto& k : t->kids) {
    key_of(k, bound, out);
    out += " ";
  }
  out += ")";
}

}  // namespace

TType type_of(const TTerm& t) {
  std::map<std::string, TType> env;
  return type_in(t, env);
}

std::map<std::string, TType> free_tvars(const TTerm& t) {
  VarSet bound;
  std::map<std::string, TType> out;
  collect_free(t, bound, out);
  return out;
}

TTerm substitute(const TTerm& t, const std::string& x, const TTerm& u) {
  switch (t->kind) {
    case TTermKind::Var:
      return t->name == x ? u : t;
    case TTermKind::Lam: {
      if (t->name == x) return t;
      auto fv = free_tvars(u);
      if (fv.count(t->name) && free_tvars(t->kids[0]).count(x)) {
        VarSet avoid = names_in(t->kids[0]);
        for (const auto& [n, ty] : fv) avoid.insert(n);
        avoid.insert(x);
        std::string y = fresh_name(t->name, avoid);
        TTerm body = substitute(t->kids[0], t->name, t_var(y, t->type));
        return t_lam(y, t->type, substitute(body, x, u));
      }
      return t_lam(t->name, t->type, substitute(t->kids[0], x, u));
    }
    default: {
      std::vector<TTerm> kids;
      for (const auto& k : t->kids) kids.push_back(substitute(k, x, u));
      return with_tkids(t, std::move(kids));
    }
  }
}

std::string canonical_key(const TTerm& t) {
  std::vector<std::string> bound;
  std::string out;
  key_of(t, bound, out);
  return out;
}

bool alpha_eq(const TTerm& a, const TTerm& b) { return canonical_key(a) == canonical_key(b); }

namespace {

// prec: 0 anything, 1 application head, 2 argument.
std::string print(const TTerm& t, int prec) {
  switch (t->kind) {
    case TTermKind::Var:
      return t->name;
    case TTermKind::Lam: {
      std::string s = "lam (" + t->name + " : " + to_string(t->type) + "). " + print(t->kids[0], 0);
      return prec > 0 ? "(" + s + ")" : s;
    }
    case TTermKind::App: {
      std::string s = print(t->kids[0], 1) + " " + print(t->kids[1], 2);
      return prec > 1 ? "(" + s + ")" : s;
    }
    case TTermKind::Zero:
      return "0";
    case TTermKind::Succ: {
      unsigned n = 0;
      const TTermNode* cur = t.get();
      while (cur->kind == TTermKind::Succ) {
        ++n;
        cur = cur->kids[0].get();
      }
      if (cur->kind == TTermKind::Zero) return std::to_string(n);
      return "S(" + print(t->kids[0], 0) + ")";
    }
    case TTermKind::Rec:
      return "Rec[" + to_string(t->type) + "](" + print(t->kids[0], 0) + ", " +
             print(t->kids[1], 0) + ", " + print(t->kids[2], 0) + ")";
  }
  return "?";
}

// Reducts of t as a redex itself.
std::vector<TTerm> root_reducts(const TTerm& t) {
  std::vector<TTerm> out;
  if (t->kind == TTermKind::App && t->kids[0]->kind == TTermKind::Lam) {
    const TTerm& lam = t->kids[0];
    out.push_back(substitute(lam->kids[0], lam->name, t->kids[1]));
  }
  if (t->kind == TTermKind::Rec) {
    const TTerm& n = t->kids[2];
    if (n->kind == TTermKind::Zero) out.push_back(t->kids[0]);
    if (n->kind == TTermKind::Succ)
      out.push_back(t_app(t_app(t->kids[1], n->kids[0]),
                          t_rec(t->kids[0], t->kids[1], n->kids[0], t->type)));
  }
  return out;
}

struct TReduct {
  std::vector<int> path;
  TTerm redex;
  TTerm contractum;
  TTerm result;
};

void step_into(const TTerm& t, std::vector<int>& path, std::vector<TReduct>& out) {
  for (auto& r : root_reducts(t)) out.push_back({path, t, r, r});
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    std::vector<TReduct> sub;
    path.push_back(static_cast<int>(i));
    step_into(t->kids[i], path, sub);
    path.pop_back();
    for (auto& r : sub) {
      std::vector<TTerm> kids = t->kids;
      kids[i] = std::move(r.result);
      r.result = with_tkids(t, std::move(kids));
      out.push_back(std::move(r));
    }
  }
}

std::vector<TReduct> t_reducts(const TTerm& t) {
  std::vector<TReduct> out;
  std::vector<int> path;
  step_into(t, path, out);
  return out;
}

}  // namespace

std::string to_string(const TTerm& t) { return print(t, 0); }

std::size_t size(const TTerm& t) {
  std::size_t n = 1;
  for (const auto& k : t->kids) n += size(k);
  return n;
}

std::vector<TTerm> t_step(const TTerm& t) {
  std::vector<TTerm> out;
  for (auto& r : t_reducts(t)) out.push_back(std::move(r.result));
  return out;
}

//------------------------------------------------------------------------------
// Parsing

namespace {

class TParser {
 public:
  TParser(std::string_view text, const std::map<std::string, TTerm>& env)
      : tokens_(tokenize(text)), env_(env) {}

  TType type() {
    TType a;
    if (accept("(")) {
      a = type();
      expect(")");
    } else if (peek().text == "nat") {
      ++pos_;
      a = t_nat();
    } else {
      fail("expected a type");
    }
    if (accept("->")) return t_arrow(a, type());
    return a;
  }

  TTerm term() {
    if (accept("lam")) {
      expect("(");
      std::string x = ident();
      expect(":");
      TType a = type();
      expect(")");
      expect(".");
      scope_.emplace_back(x, a);
      TTerm body = term();
      scope_.pop_back();
      return t_lam(x, a, body);
    }
    TTerm t = prim();
    while (starts_prim()) {
      if (peek().text == "lam") return t_app(t, term());
      t = t_app(t, prim());
    }
    return t;
  }

  void finish() {
    if (peek().kind != TokenKind::End) fail("unexpected '" + peek().text + "'");
  }

 private:
  const Token& peek() const { return tokens_[std::min(pos_, tokens_.size() - 1)]; }
  bool accept(const std::string& s) {
    if (peek().kind == TokenKind::End || peek().text != s) return false;
    ++pos_;
    return true;
  }
  void expect(const std::string& s) {
    if (!accept(s)) fail("expected '" + s + "'");
  }
  std::string ident() {
    if (peek().kind != TokenKind::Ident) fail("expected an identifier");
    return tokens_[pos_++].text;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }
  bool starts_prim() const {
    const Token& t = peek();
    return t.kind == TokenKind::Ident || t.kind == TokenKind::Number || t.text == "(";
  }

  TTerm prim() {
    const Token& tok = peek();
    if (tok.kind == TokenKind::Number) {
      ++pos_;
      return t_numeral(static_cast<unsigned>(std::stoul(tok.text)));
    }
    if (accept("(")) {
      TTerm t = term();
      expect(")");
      return t;
    }
    if (tok.text == "lam") return term();
    std::string name = ident();
    if (name == "S" && accept("(")) {
      TTerm n = term();
      expect(")");
      return t_succ(n);
    }
    if (name == "Rec" && accept("[")) {
      TType a = type();
      expect("]");
      expect("(");
      TTerm base = term();
      expect(",");
      TTerm f = term();
      expect(",");
      TTerm n = term();
      expect(")");
      return t_rec(base, f, n, a);
    }
    for (std::size_t i = scope_.size(); i-- > 0;)
      if (scope_[i].first == name) return t_var(name, scope_[i].second);
    auto it = env_.find(name);
    if (it != env_.end()) return it->second;
    --pos_;
    fail("unbound variable " + name);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::map<std::string, TTerm>& env_;
  std::vector<std::pair<std::string, TType>> scope_;
};

}  // namespace

TType parse_ttype(std::string_view text) {
  TParser p(text, {});
  TType a = p.type();
  p.finish();
  return a;
}

TTerm parse_tterm(std::string_view text, const std::map<std::string, TTerm>& env) {
  TParser p(text, env);
  TTerm t = p.term();
  p.finish();
  return t;
}

//------------------------------------------------------------------------------
// Into theory T

Term ttype_to_term(const TType& a) {
  if (a->kind == TTypeKind::Nat) return mk_app("nat", {}, kKappa);
  return mk_app("->", {ttype_to_term(a->from), ttype_to_term(a->to)}, kKappa);
}

Prop t_membership(const TType& a) { return mk_atom("eps", {ttype_to_term(a)}); }

namespace {

Prop eps(const Term& t) { return mk_atom("eps", {t}); }

// Eigenvariables are fresh across the whole translation, so no numeral
// quantifies over a kappa variable free in an enclosing hypothesis.
Proof translate(const TTerm& t, VarSet& used) {
  switch (t->kind) {
    case TTermKind::Var:
      return pvar(t->name);
    case TTermKind::Lam:
      return plam(t->name, t_membership(t->type), translate(t->kids[0], used));
    case TTermKind::App:
      return papp(translate(t->kids[0], used), translate(t->kids[1], used));
    case TTermKind::Zero: {
      std::string pn = fresh_name("p", used);
      used.insert(pn);
      Term p = mk_var(pn, kKappa);
      Prop step = mk_implies(t_membership(t_nat()), mk_implies(eps(p), eps(p)));
      return ptlam(pn, kKappa, plam("x", eps(p), plam("f", step, pvar("x"))));
    }
    case TTermKind::Succ: {
      std::string pn = fresh_name("p", used);
      used.insert(pn);
      Proof n = translate(t->kids[0], used);
      VarSet avoid = free_proof_vars(n);
      std::string x = fresh_name("x", avoid);
      avoid.insert(x);
      std::string f = fresh_name("f", avoid);
      Term p = mk_var(pn, kKappa);
      Prop step = mk_implies(t_membership(t_nat()), mk_implies(eps(p), eps(p)));
      Proof iter = papp(papp(ptapp(n, p), pvar(x)), pvar(f));
      return ptlam(pn, kKappa,
                   plam(x, eps(p), plam(f, step, papp(papp(pvar(f), n), iter))));
    }
    case TTermKind::Rec: {
      Proof n = translate(t->kids[2], used);
      Proof a = translate(t->kids[0], used);
      Proof f = translate(t->kids[1], used);
      return papp(papp(ptapp(n, ttype_to_term(t->type)), a), f);
    }
  }
  throw TranslationError("unknown term");
}

}  // namespace

Proof parigot(const TTerm& t) {
  type_of(t);
  VarSet used;
  return translate(t, used);
}

Context parigot_context(const TTerm& t) {
  Context gamma;
  for (const auto& [x, a] : free_tvars(t)) gamma.push_back({x, t_membership(a)});
  return gamma;
}

const char* to_string(Simulation s) {
  switch (s) {
    case Simulation::Simulated: return "simulated";
    case Simulation::NotReached: return "not reached";
    case Simulation::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Proof paths at which the translation of the T subterm at `tpath` lands in
// parigot(t). |S(n)| holds |n| twice.
void occurrences(const TTerm& t, const std::vector<int>& tpath, std::size_t i,
                 std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (i == tpath.size()) {
    out.push_back(prefix);
    return;
  }
  auto go = [&](const TTerm& kid, std::initializer_list<int> rel) {
    prefix.insert(prefix.end(), rel);
    occurrences(kid, tpath, i + 1, prefix, out);
    prefix.resize(prefix.size() - rel.size());
  };
  int k = tpath[i];
  switch (t->kind) {
    case TTermKind::Lam:
      go(t->kids[0], {0});
      break;
    case TTermKind::App:
      go(t->kids[static_cast<std::size_t>(k)], {k});
      break;
    case TTermKind::Succ:
      go(t->kids[0], {0, 0, 0, 0, 1});        // f |n| ...
      go(t->kids[0], {0, 0, 0, 1, 0, 0, 0});  // ... (|n| p x f)
      break;
    case TTermKind::Rec:
      if (k == 0) go(t->kids[0], {0, 1});
      if (k == 1) go(t->kids[1], {1});
      if (k == 2) go(t->kids[2], {0, 0, 0});
      break;
    default:
      break;
  }
}

enum class Search { Found, Exhausted, DepthLimit, StateCap };

struct SearchResult {
  Search status = Search::Exhausted;
  std::vector<ReductionStep> steps;
  std::size_t states = 0;
};

// Shortest reduction sequence of length >= 1 from start to a proof whose
// canonical key is `target`.
SearchResult bfs(const Proof& start, const std::string& target, std::size_t max_steps,
                 std::size_t max_states) {
  struct Node {
    Proof proof;
    std::size_t depth;
    std::size_t parent;
    ReductionStep step;
  };
  SearchResult res;
  std::vector<Node> nodes{{start, 0, 0, {}}};
  std::unordered_set<std::string> seen{canonical_key(start)};
  bool truncated = false;
  auto path_to = [&](std::size_t i, ReductionStep last) {
    std::vector<ReductionStep> out{std::move(last)};
    for (; i != 0; i = nodes[i].parent) out.push_back(nodes[i].step);
    std::reverse(out.begin(), out.end());
    return out;
  };
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth == max_steps) {
      truncated = true;
      continue;
    }
    Proof cur = nodes[head].proof;
    std::size_t depth = nodes[head].depth;
    for (auto& r : step(cur)) {
      std::string key = canonical_key(r.result);
      if (key == target) {
        res.status = Search::Found;
        res.steps = path_to(head, r.step);
        res.states = nodes.size();
        return res;
      }
      if (!seen.insert(key).second) continue;
      if (nodes.size() >= max_states) {
        res.status = Search::StateCap;
        res.states = nodes.size();
        return res;
      }
      nodes.push_back({std::move(r.result), depth + 1, head, std::move(r.step)});
    }
  }
  res.states = nodes.size();
  res.status = truncated ? Search::DepthLimit : Search::Exhausted;
  return res;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

SimulationResult simulate_check(const Theory& theory, const TTerm& t, const TTerm& u,
                                std::size_t max_steps, std::size_t max_states) {
  if (theory.variant)
    throw TranslationError(
        "simulation needs the full nat rule; the iterator variant does not type |Rec|");
  SimulationResult res;
  Proof start = parigot(t);
  const std::string target = canonical_key(parigot(u));

  // Search on the translated redex alone, then replay the sequence on every
  // copy of it. The replay result is compared with |u|, so a mismatch only
  // sends us to the global search.
  for (const auto& r : t_reducts(t)) {
    if (!alpha_eq(r.result, u)) continue;
    SearchResult local =
        bfs(parigot(r.redex), canonical_key(parigot(r.contractum)), max_steps, max_states);
    res.states += local.states;
    if (local.status != Search::Found) continue;
    std::vector<std::vector<int>> copies;
    std::vector<int> prefix;
    occurrences(t, r.path, 0, prefix, copies);
    std::size_t total = copies.size() * local.steps.size();
    if (total > max_steps) continue;
    Proof cur = start;
    try {
      for (const auto& q : copies)
        for (const auto& s : local.steps) cur = apply_step(cur, {concat(q, s.path), s.tag});
    } catch (const Error&) {
      continue;
    }
    if (canonical_key(cur) == target) {
      res.outcome = Simulation::Simulated;
      res.depth = total;
      return res;
    }
  }

  SearchResult global = bfs(start, target, max_steps, max_states);
  res.states += global.states;
  switch (global.status) {
    case Search::Found:
      res.outcome = Simulation::Simulated;
      res.depth = global.steps.size();
      break;
    case Search::Exhausted:
      res.outcome = Simulation::NotReached;
      res.message = "every reduction path ends before reaching the target";
      break;
    case Search::DepthLimit:
      res.outcome = Simulation::Inconclusive;
      res.message = "depth limit of " + std::to_string(max_steps) + " reached";
      break;
    case Search::StateCap:
      res.outcome = Simulation::Inconclusive;
      res.message = "state cap of " + std::to_string(max_states) + " reached";
      break;
  }
  return res;
}

}  // namespace modarith
