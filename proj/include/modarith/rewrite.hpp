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

#ifndef MODARITH_REWRITE_HPP
#define MODARITH_REWRITE_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "modarith/comprehension.hpp"
#include "modarith/syntax.hpp"

namespace modarith {

// The congruence could not be decided within the unfolding budget, or a
// term rewrite sequence exceeded its step cap.
class FuelExhausted : public Error {
 public:
  using Error::Error;
};

// lhs --> rhs on terms. lhs is a first-order pattern, not a variable.
struct TermRule {
  std::string name;
  Term lhs;
  Term rhs;
};

// Atomic proposition --> proposition.
struct PropRule {
  std::string name;
  Prop lhs;
  Prop rhs;
};

struct RuleSet {
  std::vector<TermRule> term_rules;
  std::vector<PropRule> prop_rules;
  // When set, `t in f(u1..un)` unfolds to the body of the registered f.
  std::shared_ptr<const ComprehensionRegistry> comprehension;
  // Some rule's right-hand side mentions its own head predicate.
  bool contains_nonterminating = false;
  // Cap on term rewrite steps per normalization.
  std::size_t term_step_limit = 1000000;

  // Both validate the rule invariants and throw SortError on violation.
  void add_term_rule(TermRule rule);
  void add_prop_rule(PropRule rule);

  bool empty() const {
    return term_rules.empty() && prop_rules.empty() && !comprehension;
  }
  // Number of rule schemes, counting the comprehension hook as one.
  std::size_t scheme_count() const {
    return term_rules.size() + prop_rules.size() + (comprehension ? 1 : 0);
  }
};

// Unfolding budget for proposition rules. Term rewriting does not consume it.
class Fuel {
 public:
  static constexpr std::size_t kDefault = 256;

  explicit Fuel(std::size_t budget = kDefault) : remaining_(budget) {}

  bool consume() {
    if (remaining_ == 0) return false;
    --remaining_;
    ++consumed_;
    return true;
  }
  std::size_t remaining() const { return remaining_; }
  std::size_t consumed() const { return consumed_; }

 private:
  std::size_t remaining_;
  std::size_t consumed_ = 0;
};

// First-order matching; extends `s`, returns false on mismatch.
bool match(const Term& pattern, const Term& t, TermSubst& s);

enum class Strategy { Innermost, Outermost };

Term normalize_term(const Term& t, const RuleSet& rules,
                    Strategy strategy = Strategy::Innermost);
// Normalizes every term argument of every atom.
Prop normalize_terms(const Prop& a, const RuleSet& rules);

// One root unfolding of an atom whose arguments are already normal, or
// nullptr when no proposition rule applies.
Prop unfold_atom(const Prop& atom, const RuleSet& rules);
// Name of the rule `unfold_atom` would use, empty if none.
std::string unfolding_rule(const Prop& atom, const RuleSet& rules);

// Unfolds the head of an atomic proposition until it is no longer an atom
// headed by a rule. Connectives are returned unopened. Throws FuelExhausted.
Prop whnf_prop(const Prop& a, const RuleSet& rules, Fuel& fuel);

enum class Congruence { Yes, No, Undecided };

const char* to_string(Congruence c);

// Decides A == B modulo the rules: term arguments normalized, structural
// descent, atoms unfolded only where heads disagree. Results are memoized on
// alpha-classes of pairs for the lifetime of the checker.
class CongruenceChecker {
 public:
  CongruenceChecker(const RuleSet& rules, Fuel& fuel)
      : rules_(rules), fuel_(fuel) {}

  Congruence check(const Prop& a, const Prop& b);
  Fuel& fuel() { return fuel_; }

 private:
  Congruence compare(const Prop& a, const Prop& b);

  const RuleSet& rules_;
  Fuel& fuel_;
  std::unordered_map<std::string, bool> memo_;
};

Congruence congruent(const Prop& a, const Prop& b, const RuleSet& rules,
                     Fuel& fuel);

}  // namespace modarith

#endif  // MODARITH_REWRITE_HPP
