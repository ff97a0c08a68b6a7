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

#ifndef MODARITH_THEORY_HPP
#define MODARITH_THEORY_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "modarith/comprehension.hpp"
#include "modarith/parser.hpp"
#include "modarith/rewrite.hpp"
#include "modarith/syntax.hpp"

namespace modarith {

class TheoryError : public Error {
 public:
  using Error::Error;
};

// Asks a scheme for one instance: P with distinguished variable `var`.
// For the comprehension scheme `params` lists y1..yn.
struct SchemeInstanceRequest {
  std::string scheme;
  Prop P;
  std::string var = "x";
  std::vector<std::string> params;
};

struct Axiom {
  std::string name;
  Prop statement;  // closed; null for schemes
  std::function<Prop(const SchemeInstanceRequest&)> scheme;

  bool is_scheme() const { return static_cast<bool>(scheme); }
};

class Theory : public SymbolTable {
 public:
  std::string name;
  Signature signature;
  RuleSet rules;
  std::vector<Axiom> axioms;
  std::shared_ptr<ComprehensionRegistry> comprehension;
  // The variant N rule (ha-mod) or the iterator rule for eps(nat) (t).
  bool variant = false;

  const Rank* function(const std::string& n) const override;
  const Rank* predicate(const std::string& n) const override;
  bool has_sort(const std::string& s) const override;

  const Axiom* find_axiom(const std::string& n) const;
  // A closed axiom, or an instance of a scheme. Throws TheoryError for
  // unknown names, a missing request, or an ill-sorted P.
  Prop axiom_instance(const std::string& n,
                      const SchemeInstanceRequest* request = nullptr) const;

  // Sort-checks every axiom and rule. Throws SortError.
  void validate() const;

  // A parse context resolving names in this theory. The signature pointer
  // refers to `signature`, so the theory must outlive the context.
  ParseContext parse_context();
  Prop parse(std::string_view text);
};

Theory theory_ha();
Theory theory_ha_pred();
// `weak_induction` drops the N(y) hypothesis from the induction step.
Theory theory_ha_n(bool weak_induction = false);
Theory theory_ha_class();
Theory theory_ha_mod(bool variant_n = false);
// `iterator_variant` drops eps(nat) from the step case of the nat rule.
Theory theory_t(bool iterator_variant = false);

// ha | ha-pred | ha-n | ha-n-weak | ha-class | ha-mod | ha-mod-variant | t |
// t-iterator. Throws TheoryError.
Theory theory_by_name(const std::string& name);
std::vector<std::string> theory_names();

// Universally closes A over its free variables: `first` in order, then the
// rest sorted by name.
Prop close_over(const Prop& a, const std::vector<std::string>& first = {});

}  // namespace modarith

#endif  // MODARITH_THEORY_HPP
