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

#ifndef MODARITH_PROOF_HPP
#define MODARITH_PROOF_HPP

#include <memory>
#include <string>
#include <vector>

#include "modarith/syntax.hpp"

namespace modarith {

enum class ProofKind {
  Var,      // alpha
  Lam,      // lam (alpha : A). pi
  App,      // pi sigma
  Pair,     // <pi, sigma>
  Fst,      // fst(pi)
  Snd,      // snd(pi)
  InL,      // inl(pi; B)
  InR,      // inr(pi; A)
  Case,     // case(pi; alpha. pi2; beta. pi3)
  Truth,    // I
  ExFalso,  // absurd(pi; A)
  TLam,     // all (x : s). pi
  TApp,     // pi [t]
  ExIntro,  // pack(t, pi; x:s. A)
  ExElim,   // unpack(pi; x:s. alpha. pi2; B)
};

struct ProofNode;
using Proof = std::shared_ptr<const ProofNode>;

// Field use per kind:
//   Var      var=alpha
//   Lam      var=alpha, prop=domain, kids={body}
//   App      kids={fun, arg}
//   Pair     kids={left, right}
//   Fst/Snd  kids={pair}
//   InL      prop=right disjunct, kids={pi};  InR: prop=left disjunct
//   Case     var=alpha, var2=beta, kids={scrutinee, left branch, right branch}
//   ExFalso  prop=target, kids={pi}
//   TLam     var=x, sort, kids={body}
//   TApp     term=t, kids={pi}
//   ExIntro  term=witness, var=x, sort, prop=A (binds x), kids={pi}
//   ExElim   var=x, sort, var2=alpha, prop=result, kids={scrutinee, body}
struct ProofNode {
  ProofKind kind;
  std::string var;
  std::string var2;
  std::string sort;
  Prop prop;
  Term term;
  std::vector<Proof> kids;
};

Proof pvar(std::string alpha);
Proof plam(std::string alpha, Prop domain, Proof body);
Proof papp(Proof fun, Proof arg);
Proof ppair(Proof left, Proof right);
Proof pfst(Proof p);
Proof psnd(Proof p);
Proof pinl(Proof p, Prop right);
Proof pinr(Proof p, Prop left);
Proof pcase(Proof scrutinee, std::string alpha, Proof left, std::string beta,
            Proof right);
Proof ptruth();
Proof pexfalso(Proof p, Prop target);
Proof ptlam(std::string x, std::string sort, Proof body);
Proof ptapp(Proof p, Term t);
Proof pexintro(Term witness, Proof p, std::string x, std::string sort, Prop body);
Proof pexelim(Proof scrutinee, std::string x, std::string sort,
              std::string alpha, Proof body, Prop result);

// Rebuilds `p` with new children, keeping every other field.
Proof with_kids(const Proof& p, std::vector<Proof> kids);

const char* kind_name(ProofKind k);
bool is_introduction(ProofKind k);
bool is_elimination(ProofKind k);

VarSet free_proof_vars(const Proof& p);
VarSet free_term_vars(const Proof& p);

// (sigma/alpha)pi and (t/x)pi, both capture-avoiding.
Proof substitute_proof(const Proof& pi, const std::string& alpha,
                       const Proof& sigma);
Proof substitute_term(const Proof& pi, const std::string& x, const Term& t);

bool alpha_eq(const Proof& a, const Proof& b);
std::string canonical_key(const Proof& p);
std::size_t size(const Proof& p);

std::string to_string(const Proof& p);

}  // namespace modarith

#endif  // MODARITH_PROOF_HPP
