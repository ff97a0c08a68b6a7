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

#include "modarith/proof.hpp"

#include <sstream>

namespace modarith {

namespace {

Proof make(ProofKind kind, std::string var, std::string var2, std::string sort,
           Prop prop, Term term, std::vector<Proof> kids) {
  return std::make_shared<const ProofNode>(
      ProofNode{kind, std::move(var), std::move(var2), std::move(sort),
                std::move(prop), std::move(term), std::move(kids)});
}

}  // namespace

Proof pvar(std::string alpha) {
  return make(ProofKind::Var, std::move(alpha), "", "", nullptr, nullptr, {});
}
Proof plam(std::string alpha, Prop domain, Proof body) {
  return make(ProofKind::Lam, std::move(alpha), "", "", std::move(domain),
              nullptr, {std::move(body)});
}
Proof papp(Proof fun, Proof arg) {
  return make(ProofKind::App, "", "", "", nullptr, nullptr,
              {std::move(fun), std::move(arg)});
}
Proof ppair(Proof left, Proof right) {
  return make(ProofKind::Pair, "", "", "", nullptr, nullptr,
              {std::move(left), std::move(right)});
}
Proof pfst(Proof p) {
  return make(ProofKind::Fst, "", "", "", nullptr, nullptr, {std::move(p)});
}
Proof psnd(Proof p) {
  return make(ProofKind::Snd, "", "", "", nullptr, nullptr, {std::move(p)});
}
Proof pinl(Proof p, Prop right) {
  return make(ProofKind::InL, "", "", "", std::move(right), nullptr,
              {std::move(p)});
}
Proof pinr(Proof p, Prop left) {
  return make(ProofKind::InR, "", "", "", std::move(left), nullptr,
              {std::move(p)});
}
Proof pcase(Proof scrutinee, std::string alpha, Proof left, std::string beta,
            Proof right) {
  return make(ProofKind::Case, std::move(alpha), std::move(beta), "", nullptr,
              nullptr, {std::move(scrutinee), std::move(left), std::move(right)});
}
Proof ptruth() {
  static const Proof truth =
      make(ProofKind::Truth, "", "", "", nullptr, nullptr, {});
  return truth;
}
Proof pexfalso(Proof p, Prop target) {
  return make(ProofKind::ExFalso, "", "", "", std::move(target), nullptr,
              {std::move(p)});
}
Proof ptlam(std::string x, std::string sort, Proof body) {
  return make(ProofKind::TLam, std::move(x), "", std::move(sort), nullptr,
              nullptr, {std::move(body)});
}
Proof ptapp(Proof p, Term t) {
  return make(ProofKind::TApp, "", "", "", nullptr, std::move(t), {std::move(p)});
}
Proof pexintro(Term witness, Proof p, std::string x, std::string sort,
               Prop body) {
  return make(ProofKind::ExIntro, std::move(x), "", std::move(sort),
              std::move(body), std::move(witness), {std::move(p)});
}
Proof pexelim(Proof scrutinee, std::string x, std::string sort,
              std::string alpha, Proof body, Prop result) {
  return make(ProofKind::ExElim, std::move(x), std::move(alpha), std::move(sort),
              std::move(result), nullptr, {std::move(scrutinee), std::move(body)});
}

Proof with_kids(const Proof& p, std::vector<Proof> kids) {
  return make(p->kind, p->var, p->var2, p->sort, p->prop, p->term,
              std::move(kids));
}

const char* kind_name(ProofKind k) {
  switch (k) {
    case ProofKind::Var: return "axiom";
    case ProofKind::Lam: return "=>-intro";
    case ProofKind::App: return "=>-elim";
    case ProofKind::Pair: return "/\\-intro";
    case ProofKind::Fst: return "/\\-elim-1";
    case ProofKind::Snd: return "/\\-elim-2";
    case ProofKind::InL: return "\\/-intro-1";
    case ProofKind::InR: return "\\/-intro-2";
    case ProofKind::Case: return "\\/-elim";
    case ProofKind::Truth: return "true-intro";
    case ProofKind::ExFalso: return "false-elim";
    case ProofKind::TLam: return "forall-intro";
    case ProofKind::TApp: return "forall-elim";
    case ProofKind::ExIntro: return "exists-intro";
    case ProofKind::ExElim: return "exists-elim";
  }
  return "?";
}

bool is_introduction(ProofKind k) {
  switch (k) {
    case ProofKind::Lam:
    case ProofKind::Pair:
    case ProofKind::InL:
    case ProofKind::InR:
    case ProofKind::Truth:
    case ProofKind::TLam:
    case ProofKind::ExIntro:
      return true;
    default:
      return false;
  }
}

bool is_elimination(ProofKind k) {
  switch (k) {
    case ProofKind::App:
    case ProofKind::Fst:
    case ProofKind::Snd:
    case ProofKind::Case:
    case ProofKind::ExFalso:
    case ProofKind::TApp:
    case ProofKind::ExElim:
      return true;
    default:
      return false;
  }
}

//------------------------------------------------------------------------------
// Free variables

namespace {

void fpv(const Proof& p, VarSet& bound, VarSet& out) {
  auto under = [&](const std::string& b, const Proof& body) {
    bool inserted = bound.insert(b).second;
    fpv(body, bound, out);
    if (inserted) bound.erase(b);
  };
  switch (p->kind) {
    case ProofKind::Var:
      if (!bound.count(p->var)) out.insert(p->var);
      return;
    case ProofKind::Lam:
      under(p->var, p->kids[0]);
      return;
    case ProofKind::Case:
      fpv(p->kids[0], bound, out);
      under(p->var, p->kids[1]);
      under(p->var2, p->kids[2]);
      return;
    case ProofKind::ExElim:
      fpv(p->kids[0], bound, out);
      under(p->var2, p->kids[1]);
      return;
    default:
      for (const auto& k : p->kids) fpv(k, bound, out);
      return;
  }
}

void add_minus(const VarSet& from, const VarSet& bound, VarSet& out) {
  for (const auto& v : from)
    if (!bound.count(v)) out.insert(v);
}

void ftv(const Proof& p, VarSet& bound, VarSet& out) {
  auto under = [&](const std::string& b, auto&& f) {
    bool inserted = bound.insert(b).second;
    f();
    if (inserted) bound.erase(b);
  };
  if (p->term) add_minus(free_vars(p->term), bound, out);
  switch (p->kind) {
    case ProofKind::TLam:
      under(p->var, [&] { ftv(p->kids[0], bound, out); });
      return;
    case ProofKind::ExIntro:
      under(p->var, [&] { add_minus(free_vars(p->prop), bound, out); });
      ftv(p->kids[0], bound, out);
      return;
    case ProofKind::ExElim:
      add_minus(free_vars(p->prop), bound, out);
      ftv(p->kids[0], bound, out);
      under(p->var, [&] { ftv(p->kids[1], bound, out); });
      return;
    default:
      if (p->prop) add_minus(free_vars(p->prop), bound, out);
      for (const auto& k : p->kids) ftv(k, bound, out);
      return;
  }
}

}  // namespace

VarSet free_proof_vars(const Proof& p) {
  VarSet bound, out;
  fpv(p, bound, out);
  return out;
}

VarSet free_term_vars(const Proof& p) {
  VarSet bound, out;
  ftv(p, bound, out);
  return out;
}

//------------------------------------------------------------------------------
// Substitution

namespace {

// Renames proof binder `from` to `to` in `body`.
Proof rename_proof_var(const Proof& body, const std::string& from,
                       const std::string& to) {
  return substitute_proof(body, from, pvar(to));
}

class TermSubstituter {
 public:
  TermSubstituter(std::string x, Term t)
      : x_(std::move(x)), t_(std::move(t)), t_fv_(free_vars(t_)) {}

  Proof run(const Proof& p) {
    switch (p->kind) {
      case ProofKind::Var:
      case ProofKind::Truth:
        return p;
      case ProofKind::TLam: {
        if (p->var == x_) return p;
        std::string y = p->var;
        Proof body = p->kids[0];
        if (t_fv_.count(y) && free_term_vars(body).count(x_)) {
          VarSet avoid = t_fv_;
          VarSet bfv = free_term_vars(body);
          avoid.insert(bfv.begin(), bfv.end());
          avoid.insert(x_);
          y = fresh_name(y, avoid);
          body = substitute_term(body, p->var, mk_var(y, p->sort));
        }
        return ptlam(y, p->sort, run(body));
      }
      case ProofKind::ExIntro: {
        Term w = substitute(TermSubst{{x_, t_}}, p->term);
        Proof inner = run(p->kids[0]);
        Prop wrapped = substitute(TermSubst{{x_, t_}},
                                  mk_exists(p->var, p->sort, p->prop));
        return pexintro(w, inner, wrapped->symbol, wrapped->sort, wrapped->body());
      }
      case ProofKind::ExElim: {
        Proof scrut = run(p->kids[0]);
        Prop result = substitute(TermSubst{{x_, t_}}, p->prop);
        if (p->var == x_)
          return pexelim(scrut, p->var, p->sort, p->var2, p->kids[1], result);
        std::string y = p->var;
        Proof body = p->kids[1];
        if (t_fv_.count(y) && free_term_vars(body).count(x_)) {
          VarSet avoid = t_fv_;
          VarSet bfv = free_term_vars(body);
          avoid.insert(bfv.begin(), bfv.end());
          avoid.insert(x_);
          y = fresh_name(y, avoid);
          body = substitute_term(body, p->var, mk_var(y, p->sort));
        }
        return pexelim(scrut, y, p->sort, p->var2, run(body), result);
      }
      default: {
        std::vector<Proof> kids;
        bool changed = false;
        for (const auto& k : p->kids) {
          kids.push_back(run(k));
          changed |= kids.back() != k;
        }
        Prop prop = p->prop ? substitute(TermSubst{{x_, t_}}, p->prop) : nullptr;
        Term term = p->term ? substitute(TermSubst{{x_, t_}}, p->term) : nullptr;
        changed |= prop != p->prop || term != p->term;
        if (!changed) return p;
        return make(p->kind, p->var, p->var2, p->sort, prop, term, std::move(kids));
      }
    }
  }

 private:
  std::string x_;
  Term t_;
  VarSet t_fv_;
};

class ProofSubstituter {
 public:
  ProofSubstituter(std::string alpha, Proof sigma)
      : alpha_(std::move(alpha)),
        sigma_(std::move(sigma)),
        pfv_(free_proof_vars(sigma_)),
        tfv_(free_term_vars(sigma_)) {}

  Proof run(const Proof& p) {
    switch (p->kind) {
      case ProofKind::Var:
        return p->var == alpha_ ? sigma_ : p;
      case ProofKind::Lam: {
        auto [b, body] = under_proof_binder(p->var, p->kids[0]);
        return plam(b, p->prop, body);
      }
      case ProofKind::Case: {
        Proof scrut = run(p->kids[0]);
        auto [a, left] = under_proof_binder(p->var, p->kids[1]);
        auto [b, right] = under_proof_binder(p->var2, p->kids[2]);
        return pcase(scrut, a, left, b, right);
      }
      case ProofKind::TLam: {
        Proof body = p->kids[0];
        std::string y = p->var;
        if (tfv_.count(y) && free_proof_vars(body).count(alpha_)) {
          VarSet avoid = tfv_;
          VarSet bfv = free_term_vars(body);
          avoid.insert(bfv.begin(), bfv.end());
          y = fresh_name(y, avoid);
          body = substitute_term(body, p->var, mk_var(y, p->sort));
        }
        return ptlam(y, p->sort, run(body));
      }
      case ProofKind::ExElim: {
        Proof scrut = run(p->kids[0]);
        Proof body = p->kids[1];
        std::string y = p->var;
        std::string beta = p->var2;
        if (beta == alpha_)
          return pexelim(scrut, y, p->sort, beta, body, p->prop);
        if (free_proof_vars(body).count(alpha_)) {
          if (tfv_.count(y)) {
            VarSet avoid = tfv_;
            VarSet bfv = free_term_vars(body);
            avoid.insert(bfv.begin(), bfv.end());
            y = fresh_name(y, avoid);
            body = substitute_term(body, p->var, mk_var(y, p->sort));
          }
          if (pfv_.count(beta)) {
            VarSet avoid = pfv_;
            VarSet bfv = free_proof_vars(body);
            avoid.insert(bfv.begin(), bfv.end());
            avoid.insert(alpha_);
            std::string fresh = fresh_name(beta, avoid);
            body = rename_proof_var(body, beta, fresh);
            beta = fresh;
          }
        }
        return pexelim(scrut, y, p->sort, beta, run(body), p->prop);
      }
      default: {
        std::vector<Proof> kids;
        bool changed = false;
        for (const auto& k : p->kids) {
          kids.push_back(run(k));
          changed |= kids.back() != k;
        }
        if (!changed) return p;
        return with_kids(p, std::move(kids));
      }
    }
  }

 private:
  std::pair<std::string, Proof> under_proof_binder(const std::string& b,
                                                   const Proof& body) {
    if (b == alpha_) return {b, body};
    if (!free_proof_vars(body).count(alpha_)) return {b, body};
    if (!pfv_.count(b)) return {b, run(body)};
    VarSet avoid = pfv_;
    VarSet bfv = free_proof_vars(body);
    avoid.insert(bfv.begin(), bfv.end());
    avoid.insert(alpha_);
    std::string fresh = fresh_name(b, avoid);
    return {fresh, run(rename_proof_var(body, b, fresh))};
  }

  std::string alpha_;
  Proof sigma_;
  VarSet pfv_;
  VarSet tfv_;
};

}  // namespace

Proof substitute_proof(const Proof& pi, const std::string& alpha,
                       const Proof& sigma) {
  return ProofSubstituter(alpha, sigma).run(pi);
}

Proof substitute_term(const Proof& pi, const std::string& x, const Term& t) {
  return TermSubstituter(x, t).run(pi);
}

//------------------------------------------------------------------------------
// Alpha-equivalence via canonical keys

namespace {

struct KeyBuilder {
  std::vector<std::string> pbound;
  std::vector<std::string> tbound;
  std::string out;

  void proof_var(const std::string& name) {
    for (int i = static_cast<int>(pbound.size()) - 1; i >= 0; --i)
      if (pbound[i] == name) {
        out += "@" + std::to_string(i);
        return;
      }
    out += name;
  }

  void under_p(const std::string& b, const Proof& body) {
    pbound.push_back(b);
    run(body);
    pbound.pop_back();
  }

  void run(const Proof& p) {
    out += std::to_string(static_cast<int>(p->kind));
    out += '{';
    switch (p->kind) {
      case ProofKind::Var:
        proof_var(p->var);
        break;
      case ProofKind::Lam:
        append_canonical(p->prop, tbound, out);
        out += ';';
        under_p(p->var, p->kids[0]);
        break;
      case ProofKind::Case:
        run(p->kids[0]);
        out += ';';
        under_p(p->var, p->kids[1]);
        out += ';';
        under_p(p->var2, p->kids[2]);
        break;
      case ProofKind::TLam:
        out += p->sort + ';';
        tbound.push_back(p->var);
        run(p->kids[0]);
        tbound.pop_back();
        break;
      case ProofKind::ExIntro:
        append_canonical(p->term, tbound, out);
        out += ';' + p->sort + ';';
        tbound.push_back(p->var);
        append_canonical(p->prop, tbound, out);
        tbound.pop_back();
        out += ';';
        run(p->kids[0]);
        break;
      case ProofKind::ExElim:
        run(p->kids[0]);
        out += ';';
        append_canonical(p->prop, tbound, out);
        out += ';' + p->sort + ';';
        tbound.push_back(p->var);
        under_p(p->var2, p->kids[1]);
        tbound.pop_back();
        break;
      default:
        if (p->prop) {
          append_canonical(p->prop, tbound, out);
          out += ';';
        }
        if (p->term) {
          append_canonical(p->term, tbound, out);
          out += ';';
        }
        for (const auto& k : p->kids) {
          run(k);
          out += ';';
        }
        break;
    }
    out += '}';
  }
};

}  // namespace

std::string canonical_key(const Proof& p) {
  KeyBuilder b;
  b.run(p);
  return std::move(b.out);
}

bool alpha_eq(const Proof& a, const Proof& b) {
  return a == b || canonical_key(a) == canonical_key(b);
}

std::size_t size(const Proof& p) {
  std::size_t n = 1;
  for (const auto& k : p->kids) n += size(k);
  return n;
}

//------------------------------------------------------------------------------
// Printing

namespace {

// Levels: 0 anything, 1 application head, 2 argument.
void print(const Proof& p, int prec, std::ostream& os) {
  switch (p->kind) {
    case ProofKind::Var:
      os << p->var;
      return;
    case ProofKind::Truth:
      os << "I";
      return;
    case ProofKind::Lam:
    case ProofKind::TLam: {
      bool paren = prec > 0;
      if (paren) os << '(';
      if (p->kind == ProofKind::Lam)
        os << "lam (" << p->var << " : " << to_string(p->prop) << "). ";
      else
        os << "all (" << p->var << " : " << p->sort << "). ";
      print(p->kids[0], 0, os);
      if (paren) os << ')';
      return;
    }
    case ProofKind::App:
    case ProofKind::TApp: {
      bool paren = prec > 1;
      if (paren) os << '(';
      print(p->kids[0], 1, os);
      if (p->kind == ProofKind::App) {
        os << ' ';
        print(p->kids[1], 2, os);
      } else {
        os << " [" << to_string(p->term) << ']';
      }
      if (paren) os << ')';
      return;
    }
    case ProofKind::Pair:
      os << '<';
      print(p->kids[0], 0, os);
      os << ", ";
      print(p->kids[1], 0, os);
      os << '>';
      return;
    case ProofKind::Fst:
    case ProofKind::Snd:
      os << (p->kind == ProofKind::Fst ? "fst(" : "snd(");
      print(p->kids[0], 0, os);
      os << ')';
      return;
    case ProofKind::InL:
    case ProofKind::InR:
    case ProofKind::ExFalso:
      os << (p->kind == ProofKind::InL   ? "inl("
             : p->kind == ProofKind::InR ? "inr("
                                         : "absurd(");
      print(p->kids[0], 0, os);
      os << "; " << to_string(p->prop) << ')';
      return;
    case ProofKind::Case:
      os << "case(";
      print(p->kids[0], 0, os);
      os << "; " << p->var << ". ";
      print(p->kids[1], 0, os);
      os << "; " << p->var2 << ". ";
      print(p->kids[2], 0, os);
      os << ')';
      return;
    case ProofKind::ExIntro:
      os << "pack(" << to_string(p->term) << ", ";
      print(p->kids[0], 0, os);
      os << "; " << p->var << ':' << p->sort << ". " << to_string(p->prop) << ')';
      return;
    case ProofKind::ExElim:
      os << "unpack(";
      print(p->kids[0], 0, os);
      os << "; " << p->var << ':' << p->sort << ". " << p->var2 << ". ";
      print(p->kids[1], 0, os);
      os << "; " << to_string(p->prop) << ')';
      return;
  }
}

}  // namespace

std::string to_string(const Proof& p) {
  std::ostringstream os;
  print(p, 0, os);
  return os.str();
}

}  // namespace modarith
