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

#ifndef MODARITH_COMPREHENSION_HPP
#define MODARITH_COMPREHENSION_HPP

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "modarith/syntax.hpp"

namespace modarith {

// Class mode: bodies range over the arithmetic language without the
// membership predicate, and all parameters have sort iota.
// Membership mode additionally admits `in` in bodies and parameters of any
// sort; it is what the class constructors `nat` and `->` of the typed
// theory need.
enum class ComprehensionMode { Class, Membership };

// {x | P} with parameters y1..yn. FV(P) must be within {x, y1..yn}.
struct ComprehensionKey {
  std::string var;
  std::vector<std::string> params;
  Prop body;
};

struct ComprehensionSymbol {
  std::string name;
  // The caller's parameter names in the order the symbol takes them.
  std::vector<std::string> argument_order;
  Rank rank;
};

// A registered symbol; `var` and `params` name the variables of `body`.
struct ComprehensionEntry {
  std::string name;
  std::string var;
  std::vector<std::pair<std::string, std::string>> params;  // name, sort
  Prop body;
  Rank rank;
  std::string canonical;
};

// Registry of the symbols f_{x,y1..yn,P}. Registration is serialized,
// lookups may run concurrently. A symbol's name depends only on the
// alpha-class of its key (with parameters ordered by first occurrence), never
// on registration order.
class ComprehensionRegistry {
 public:
  // `base` is the language bodies may use.
  ComprehensionRegistry(ComprehensionMode mode, Signature base);

  ComprehensionSymbol register_key(const ComprehensionKey& key);

  std::optional<ComprehensionEntry> find(const std::string& name) const;
  const Rank* rank(const std::string& name) const;
  // (t/x, args/ys)P for a registered symbol, nullptr otherwise.
  Prop unfold(const std::string& name, const Term& member,
              const std::vector<Term>& args) const;
  std::vector<ComprehensionEntry> entries() const;

  ComprehensionMode mode() const { return mode_; }
  const Signature& base() const { return base_; }

 private:
  ComprehensionMode mode_;
  Signature base_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, ComprehensionEntry> by_name_;
  std::map<std::string, std::string> by_canonical_;
};

// Registers `key` and returns the symbol together with `sig` extended by it.
std::pair<ComprehensionSymbol, Signature> comprehension_symbol(
    ComprehensionRegistry& registry, const ComprehensionKey& key, Signature sig);

}  // namespace modarith

#endif  // MODARITH_COMPREHENSION_HPP
