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

#ifndef MODARITH_TRANSLATIONS_HPP
#define MODARITH_TRANSLATIONS_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "modarith/kernel.hpp"
#include "modarith/proof.hpp"
#include "modarith/syntax.hpp"
#include "modarith/theory.hpp"

namespace modarith {

class TranslationError : public Error {
 public:
  using Error::Error;
};

// |A|: quantifiers guarded by N. Throws TranslationError if A already
// mentions N, Null or in, or quantifies over a sort other than iota.
Prop relativize(const Prop& a);

//------------------------------------------------------------------------------
// System T

enum class TTypeKind { Nat, Arrow };

struct TTypeNode;
using TType = std::shared_ptr<const TTypeNode>;

struct TTypeNode {
  TTypeKind kind;
  TType from;
  TType to;
};

TType t_nat();
TType t_arrow(TType a, TType b);
bool type_eq(const TType& a, const TType& b);
std::string to_string(const TType& a);

enum class TTermKind { Var, Lam, App, Zero, Succ, Rec };

struct TTermNode;
using TTerm = std::shared_ptr<const TTermNode>;

// Var: name, type.  Lam: name, type (domain), kids={body}.  App: kids={u, v}.
// Succ: kids={n}.  Rec: type = result A, kids={a, f, n}.
struct TTermNode {
  TTermKind kind;
  std::string name;
  TType type;
  std::vector<TTerm> kids;
};

TTerm t_var(std::string x, TType a);
TTerm t_lam(std::string x, TType a, TTerm body);
TTerm t_app(TTerm u, TTerm v);
TTerm t_zero();
TTerm t_succ(TTerm n);
TTerm t_rec(TTerm a, TTerm f, TTerm n, TType result);
TTerm t_numeral(unsigned n);

// Throws TranslationError when ill-typed.
TType type_of(const TTerm& t);
// Free variables with their types.
std::map<std::string, TType> free_tvars(const TTerm& t);
TTerm substitute(const TTerm& t, const std::string& x, const TTerm& u);
std::string canonical_key(const TTerm& t);
bool alpha_eq(const TTerm& a, const TTerm& b);
std::string to_string(const TTerm& t);
std::size_t size(const TTerm& t);

// All one-step reducts: beta and the two recursor rules, anywhere.
std::vector<TTerm> t_step(const TTerm& t);

// Parses `nat`, `A -> B`. Terms: `lam (x : A). t`, `0`, numerals, `S(t)`,
// `Rec[A](a, f, n)`, application by juxtaposition. Identifiers resolve to
// bound variables, then to `env` entries (substituted in place).
TType parse_ttype(std::string_view text);
TTerm parse_tterm(std::string_view text,
                  const std::map<std::string, TTerm>& env = {});

//------------------------------------------------------------------------------
// Into theory T

// nat, A -> B as terms of sort kappa.
Term ttype_to_term(const TType& a);
// eps(ttype_to_term(a)).
Prop t_membership(const TType& a);

// The Parigot translation. Free variables of t become proof variables.
Proof parigot(const TTerm& t);
// Hypotheses x : eps([[A]]) for the free variables of t.
Context parigot_context(const TTerm& t);

enum class Simulation { Simulated, NotReached, Inconclusive };
const char* to_string(Simulation s);

struct SimulationResult {
  Simulation outcome = Simulation::NotReached;
  std::size_t depth = 0;   // proof steps to the target when simulated
  std::size_t states = 0;  // distinct proofs visited
  std::string message;
};

// Breadth-first search from parigot(t) for parigot(u), up to alpha, in at
// least one and at most max_steps proof reductions. Throws TranslationError
// for the iterator variant of theory T.
SimulationResult simulate_check(const Theory& theory, const TTerm& t, const TTerm& u,
                                std::size_t max_steps = 500,
                                std::size_t max_states = 100000);

}  // namespace modarith

#endif  // MODARITH_TRANSLATIONS_HPP
